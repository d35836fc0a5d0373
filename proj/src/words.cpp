#include "riley/words.hpp"

#include <cctype>
#include <stdexcept>

namespace riley {

namespace {
int mod3(int e) { return ((e % 3) + 3) % 3; }
}  // namespace

Word reduce_word(const Word& w) {
  Word out;
  for (Letter l : w) {
    if (l.gen != 's' && l.gen != 't') throw std::invalid_argument("letters must be s or t");
    l.exp = mod3(l.exp);
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().gen == l.gen) {
      out.back().exp = mod3(out.back().exp + l.exp);
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word word_inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (Letter& l : r) l.exp = -l.exp;
  return r;
}

Word word_concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word commutator(const Word& a, const Word& b) {
  return word_concat(word_concat(a, b), word_concat(word_inverse(a), word_inverse(b)));
}

Word whitehead_relator(const Word& u, const Word& v) {
  Word ui = word_inverse(u), vi = word_inverse(v);
  return word_concat(word_concat(commutator(u, v), commutator(u, vi)),
                     word_concat(commutator(ui, vi), commutator(ui, v)));
}

Word parse_word(const std::string& text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
      ++i;
      continue;
    }
    if (c != 's' && c != 't') throw std::invalid_argument(std::string("unexpected character '") + c + "'");
    Letter l{c, 1};
    ++i;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t used = 0;
      l.exp = std::stoi(text.substr(i), &used);
      i += used;
    }
    w.push_back(l);
  }
  return w;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const Letter& l : w) {
    s += l.gen;
    if (l.exp != 1) s += "^" + std::to_string(l.exp);
  }
  return s;
}

Mat3 eval_word(const Word& w, const Mat3& S, const Mat3& T) {
  const Mat3& h = form_H();
  Mat3 Si = h * S.adjoint() * h, Ti = h * T.adjoint() * h;
  Mat3 r = Mat3::Identity();
  for (const Letter& l : w) {
    const Mat3& g = l.gen == 's' ? (l.exp > 0 ? S : Si) : (l.exp > 0 ? T : Ti);
    for (int k = 0; k < std::abs(l.exp); ++k) r = r * g;
  }
  return r;
}

std::vector<Word> enumerate_reduced(int max_len) {
  std::vector<Word> out;
  std::vector<Word> layer;
  for (char g : {'s', 't'})
    for (int e : {1, 2}) layer.push_back({Letter{g, e}});
  for (int len = 1; len <= max_len; ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    if (len == max_len) break;
    std::vector<Word> next;
    for (const Word& w : layer) {
      char g = w.back().gen == 's' ? 't' : 's';
      for (int e : {1, 2}) {
        Word x = w;
        x.push_back({g, e});
        next.push_back(x);
      }
    }
    layer.swap(next);
  }
  return out;
}

std::vector<FreeWord> enumerate_free(int max_len) {
  const std::string letters = "ABab";
  auto inverse = [](char c) { return static_cast<char>(std::islower(c) ? std::toupper(c) : std::tolower(c)); };
  std::vector<FreeWord> out, layer;
  for (char c : letters) layer.emplace_back(1, c);
  for (int len = 1; len <= max_len; ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    if (len == max_len) break;
    std::vector<FreeWord> next;
    for (const FreeWord& w : layer)
      for (char c : letters)
        if (c != inverse(w.back())) next.push_back(w + c);
    layer.swap(next);
  }
  return out;
}

Mat3 eval_free(const FreeWord& w, const Mat3& A, const Mat3& B) {
  const Mat3& h = form_H();
  Mat3 Ai = h * A.adjoint() * h, Bi = h * B.adjoint() * h;
  Mat3 r = Mat3::Identity();
  for (char c : w) {
    switch (c) {
      case 'A': r = r * A; break;
      case 'a': r = r * Ai; break;
      case 'B': r = r * B; break;
      case 'b': r = r * Bi; break;
      default: throw std::invalid_argument("free word letters are A, a, B, b");
    }
  }
  return r;
}

}  // namespace riley
