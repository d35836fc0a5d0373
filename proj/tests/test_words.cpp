#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "riley/ford.hpp"
#include "riley/words.hpp"

using namespace riley;

TEST_CASE("parse and print") {
  Word w = parse_word("s t^2 s^-1 t");
  REQUIRE(w.size() == 4);
  CHECK(w[1] == Letter{'t', 2});
  CHECK(w[2] == Letter{'s', -1});
  CHECK(to_string(w) == "st^2s^-1t");
  CHECK(to_string(Word{}) == "1");
  CHECK_THROWS(parse_word("sx"));
}

TEST_CASE("reduction in the free product of two order-three groups") {
  CHECK(reduce_word(parse_word("sss")).empty());
  CHECK(reduce_word(parse_word("s s^-1")).empty());
  CHECK(to_string(reduce_word(parse_word("s^-1"))) == "s^2");
  CHECK(to_string(reduce_word(parse_word("s t t t s"))) == "s^2");
  CHECK(to_string(reduce_word(parse_word("t s^4 t^-2"))) == "tst");
  Word w = parse_word("s t^2 s t");
  CHECK(reduce_word(word_concat(w, word_inverse(w))).empty());
}

TEST_CASE("whitehead relator collapses for st, tst") {
  Word u = parse_word("st"), v = parse_word("tst");
  CHECK(reduce_word(whitehead_relator(u, v)).empty());
  CHECK(!reduce_word(commutator(u, v)).empty());
}

TEST_CASE("enumeration counts") {
  // 4 * 2^(n-1) reduced words of length n, 4 * 3^(n-1) free words
  CHECK(enumerate_reduced(1).size() == 4);
  CHECK(enumerate_reduced(8).size() == 4 * 255);
  CHECK(enumerate_free(8).size() == 2 * (6561 - 1));
  for (const Word& w : enumerate_reduced(6)) CHECK(reduce_word(w) == w);
  for (const FreeWord& w : enumerate_free(4))
    for (std::size_t i = 1; i < w.size(); ++i)
      CHECK(!(w[i] != w[i - 1] && std::tolower(w[i]) == std::tolower(w[i - 1])));  // no x x^-1
}

TEST_CASE("evaluation respects the group law") {
  GroupData g = build_group(Params::make(0.2, -0.3));
  Mat3 st = eval_word(parse_word("st"), g.S.m, g.T.m);
  CHECK(projective_residual(st, g.A.m) < 1e-10);
  CHECK(projective_residual(eval_word(parse_word("s^3"), g.S.m, g.T.m), Mat3::Identity()) < 1e-10);
  CHECK(projective_residual(eval_word(parse_word("s^-1"), g.S.m, g.T.m), g.S.inverse().m) < 1e-12);
  CHECK(projective_residual(eval_free("AaBb", g.A.m, g.B.m), Mat3::Identity()) < 1e-10);
  CHECK_THROWS(eval_free("AC", g.A.m, g.B.m));
}

TEST_CASE("short words are far from the identity") {
  for (Params p : {Params::make(0, 0), Params::limit()}) {
    FreenessReport r = freeness_probe(p, 8);
    CHECK(r.pass());
    CHECK(r.min_distance >= 1e-6);
    CHECK(r.words_checked == 1020);
  }
}
