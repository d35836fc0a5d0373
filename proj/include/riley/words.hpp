// Words in the free product Z3 * Z3 = <s, t | s^3 = t^3 = 1>, and free
// words in A, B.
#pragma once

#include <string>
#include <vector>

#include "riley/core.hpp"

namespace riley {

struct Letter {
  char gen = 's';  // 's' or 't'
  int exp = 1;
  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word reduce_word(const Word& w);
Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);
Word commutator(const Word& a, const Word& b);
// [u,v][u,v^-1][u^-1,v^-1][u^-1,v]
Word whitehead_relator(const Word& u, const Word& v);
// parses e.g. "s t^2 s^-1" or "stts"
Word parse_word(const std::string& text);
std::string to_string(const Word& w);

Mat3 eval_word(const Word& w, const Mat3& S, const Mat3& T);

// reduced words of length 1..max_len, ordered by length then lexicographically
std::vector<Word> enumerate_reduced(int max_len);

// free words in A, a=A^-1, B, b=B^-1
using FreeWord = std::string;
std::vector<FreeWord> enumerate_free(int max_len);
Mat3 eval_free(const FreeWord& w, const Mat3& A, const Mat3& B);

}  // namespace riley
