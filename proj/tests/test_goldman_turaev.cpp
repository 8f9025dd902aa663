#include <doctest.h>

#include <random>

#include "curvelie/goldman_turaev.hpp"

using namespace curvelie;

namespace {

ConjClass C(const std::string& s) { return ConjClass::parse(s); }

FormalSum FS(std::initializer_list<std::pair<const char*, long long>> terms) {
  FormalSum s;
  for (const auto& [w, c] : terms) s.add(C(w), c);
  return s;
}

TensorSquareSum TS(
    std::initializer_list<std::tuple<const char*, const char*, long long>>
        terms) {
  TensorSquareSum s;
  for (const auto& [u, v, c] : terms) s.add(ClassPair{C(u), C(v)}, c);
  return s;
}

}  // namespace

TEST_CASE("bracket of the generator pair") {
  FatGraph torus = standard_surface(1, 1);
  CHECK(goldman_bracket(torus, C("a"), C("b")) == FS({{"ab", 1}}));
  CHECK(goldman_bracket(torus, C("b"), C("a")) == FS({{"ab", -1}}));

  FatGraph pants = standard_surface(0, 3);
  CHECK(goldman_bracket(pants, C("a"), C("b")).is_zero());
}

TEST_CASE("bracket with a diagonal entry vanishes") {
  FatGraph torus = standard_surface(1, 1);
  for (const char* w : {"a", "ab", "aab", "abAB", "aabb", "abab"})
    CHECK(goldman_bracket(torus, C(w), C(w)).is_zero());
}

TEST_CASE("bracket hand oracles on the one-holed torus") {
  FatGraph torus = standard_surface(1, 1);
  // single crossing of a with ab, composed loop a.ab
  CHECK(goldman_bracket(torus, C("a"), C("ab")) == FS({{"aab", 1}}));
  // slopes (1,1) and (-1,1) cross twice; both terms survive
  CHECK(goldman_bracket(torus, C("ab"), C("Ab")) ==
        FS({{"bb", 1}, {"abAb", 1}}));
}

TEST_CASE("intersection counts") {
  FatGraph torus = standard_surface(1, 1);
  FatGraph pants = standard_surface(0, 3);
  CHECK(intersection_count(torus, C("a"), C("b")).crossings == 1);
  CHECK(intersection_count(pants, C("a"), C("b")).crossings == 0);
  CHECK(intersection_count(torus, C("a"), C("ab")).crossings == 1);
  CHECK(intersection_count(torus, C("ab"), C("Ab")).crossings == 2);

  auto par = intersection_count(torus, C("ab"), C("abab"));
  CHECK(par.crossings == 0);
  CHECK(par.parallel_pairs);

  CHECK_THROWS_AS(intersection_count(torus, C("ab"), C("ba")),
                  std::invalid_argument);
}

TEST_CASE("self link counts") {
  FatGraph torus = standard_surface(1, 1);
  CHECK(self_link_count(torus, C("a")) == 0);
  CHECK(self_link_count(torus, C("ab")) == 0);
  CHECK(self_link_count(torus, C("aab")) == 0);   // a basis element: simple
  CHECK(self_link_count(torus, C("abAB")) == 0);  // boundary is embedded
  CHECK(self_link_count(torus, C("aabb")) == 1);
  CHECK(self_link_count(torus, C("abaB")) == 1);
  CHECK(self_link_count(torus, C("aaabb")) == 2);
  // parallel strand pairs of a power are pushed off, not counted
  CHECK(self_link_count(torus, C("abab")) == 0);

  FatGraph pants = standard_surface(0, 3);
  CHECK(self_link_count(pants, C("aB")) == 1);
}

TEST_CASE("cobracket hand oracles") {
  FatGraph torus = standard_surface(1, 1);
  // embedded classes
  CHECK(turaev_cobracket(torus, C("a")).is_zero());
  CHECK(turaev_cobracket(torus, C("abAB")).is_zero());
  // one crossing splitting into equal halves: the skew sum cancels
  CHECK(turaev_cobracket(torus, C("aabb")).is_zero());
  CHECK(turaev_cobracket(torus, C("abaB")).is_zero());
  // two crossings with symmetric splits cancel as well
  CHECK(turaev_cobracket(torus, C("aaabb")).is_zero());

  // pants: one crossing splitting aB into distinct halves
  FatGraph pants = standard_surface(0, 3);
  CHECK(turaev_cobracket(pants, C("aB")) ==
        TS({{"a", "B", -1}, {"B", "a", 1}}));
}

TEST_CASE("cobracket is skew and conjugation invariant") {
  FatGraph torus = standard_surface(1, 1);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> gen(1, 2), sgn(0, 1);
  for (const auto& w : enumerate_classes(2, 5, false)) {
    TensorSquareSum d = turaev_cobracket(torus, w);
    CHECK(d == [&] {
      TensorSquareSum f = flip(d);
      TensorSquareSum neg;
      neg.add_scaled(f, -1);
      return neg;
    }());
    // recompute from a random conjugate of a random rotation
    Letters conj;
    for (int i = 0; i < 3; ++i)
      conj.push_back(Letter{static_cast<std::uint8_t>(gen(rng)), sgn(rng) == 1});
    Word u{conj};
    Word rot;
    {
      Letters ls;
      int off = static_cast<int>(rng() % w.length());
      for (std::size_t i = 0; i < w.length(); ++i)
        ls.push_back(w.at(off + static_cast<long long>(i)));
      rot = Word(ls);
    }
    ConjClass again(u * rot * u.inverse());
    CHECK(again == w);
    CHECK(turaev_cobracket(torus, again) == d);
  }
}

TEST_CASE("simplicity verdicts") {
  FatGraph torus = standard_surface(1, 1);
  CHECK(is_simple(torus, C("a")));
  CHECK(is_simple(torus, C("ab")));
  CHECK(is_simple(torus, C("aab")));   // Christoffel word of slope (2,1)
  CHECK(is_simple(torus, C("aB")));
  CHECK(is_simple(torus, C("abAB")));  // boundary
  CHECK_FALSE(is_simple(torus, C("aa")));    // proper power
  CHECK_FALSE(is_simple(torus, C("abab")));  // proper power
  CHECK_FALSE(is_simple(torus, C("aabb")));
  CHECK_FALSE(is_simple(torus, C("abaB")));

  FatGraph pants = standard_surface(0, 3);
  CHECK(is_simple(pants, C("a")));
  CHECK(is_simple(pants, C("ab")));  // parallel to the third boundary
  CHECK_FALSE(is_simple(pants, C("aB")));
}

TEST_CASE("simple classes have zero cobracket") {
  FatGraph torus = standard_surface(1, 1);
  for (const auto& w : enumerate_classes(2, 6, false))
    if (is_simple(torus, w)) CHECK(turaev_cobracket(torus, w).is_zero());
}

TEST_CASE("no cancellation for simple pairs") {
  FatGraph torus = standard_surface(1, 1);
  const auto classes = enumerate_classes(2, 4, false);
  for (const auto& u : classes) {
    if (!is_simple(torus, u)) continue;
    for (const auto& v : classes) {
      if (u == v || !is_simple(torus, v)) continue;
      const auto count = intersection_count(torus, u, v);
      CHECK(goldman_bracket(torus, u, v).abs_coeff_sum() == count.crossings);
    }
  }
}

TEST_CASE("bracket vanishes without crossings") {
  FatGraph pants = standard_surface(0, 3);
  const auto classes = enumerate_classes(2, 4, false);
  for (const auto& u : classes)
    for (const auto& v : classes) {
      if (u == v) continue;
      if (intersection_count(pants, u, v).crossings == 0)
        CHECK(goldman_bracket(pants, u, v).is_zero());
    }
}

TEST_CASE("operations reject classes off the surface") {
  FatGraph annulus = standard_surface(0, 2);  // one edge only
  CHECK_THROWS_AS(self_link_count(annulus, C("ab")), std::invalid_argument);
  CHECK_THROWS_AS(is_simple(annulus, ConjClass()), std::invalid_argument);
}
