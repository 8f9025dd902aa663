#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "curvelie/word.hpp"

using namespace curvelie;

namespace {

Word W(const std::string& s) { return Word::parse(s); }
ConjClass C(const std::string& s) { return ConjClass::parse(s); }

// Independent canonical form: all rotations of the cyclic reduction, take the
// smallest string under the letter-key order. Used as the enumeration oracle.
std::string oracle_canonical(const std::string& s) {
  Letters w = parse_letters(s);
  w = free_reduce(w);
  while (w.size() >= 2 && w.front() == w.back().inverse()) {
    w.erase(w.begin());
    w.pop_back();
  }
  if (w.empty()) return "";
  auto key = [](const Letters& ls) {
    std::vector<int> k;
    for (const auto& l : ls) k.push_back(l.order_key());
    return k;
  };
  Letters best = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    Letters rot;
    for (std::size_t i = 0; i < w.size(); ++i)
      rot.push_back(w[(r + i) % w.size()]);
    if (key(rot) < key(best)) best = rot;
  }
  return letters_to_string(best);
}

Word random_word(std::mt19937& rng, int k, int len) {
  std::uniform_int_distribution<int> gen(1, k);
  std::uniform_int_distribution<int> sgn(0, 1);
  Letters ls;
  for (int i = 0; i < len; ++i)
    ls.push_back(Letter{static_cast<std::uint8_t>(gen(rng)), sgn(rng) == 1});
  return Word(ls);
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(W("abBa").str() == "aa");
  CHECK(W("aA").str() == "");
  CHECK(W("abA").str() == "abA");
  // idempotent, length-nonincreasing
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(rng, 2, i % 12);
    CHECK(free_reduce(w.letters()) == w.letters());
    CHECK(w.size() <= static_cast<std::size_t>(i % 12));
  }
}

TEST_CASE("canonical classes") {
  CHECK(C("baB") == C("a"));
  CHECK(C("ba") == C("ab"));
  CHECK(C("abAB").str() == "abAB");
  CHECK(C("aA").trivial());
  CHECK(C("Ba").str() == "aB");

  // least rotation among the four rotations of abAB
  std::string best = oracle_canonical("abAB");
  CHECK(C("abAB").str() == best);

  // conjugation invariance on random samples
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    Word v = random_word(rng, 2, 1 + i % 8);
    Word u = random_word(rng, 2, i % 6);
    CHECK(ConjClass(u * v * u.inverse()) == ConjClass(v));
  }
}

TEST_CASE("primitive roots and powers") {
  auto r = primitive_root(C("abab"));
  CHECK(r.root == C("ab"));
  CHECK(r.multiplicity == 2);
  r = primitive_root(C("a"));
  CHECK(r.root == C("a"));
  CHECK(r.multiplicity == 1);
  r = primitive_root(C("aabaabaab"));
  CHECK(r.root == C("aab"));
  CHECK(r.multiplicity == 3);

  CHECK(class_power(C("ab"), 2) == C("abab"));
  CHECK(class_power(C("a"), -1) == C("A"));
  // (abAb)^-2 computed by independent word arithmetic
  Word w = W("abAb").inverse();
  CHECK(class_power(C("abAb"), -2) == ConjClass(w * w));
  CHECK_THROWS_AS(class_power(C("a"), 0), std::invalid_argument);
  CHECK_THROWS_AS(primitive_root(ConjClass()), std::invalid_argument);

  // primitive_root(p^m) composes multiplicities
  std::mt19937 rng(23);
  for (int i = 0; i < 100; ++i) {
    Word v = random_word(rng, 2, 1 + i % 5);
    if (ConjClass(v).trivial()) continue;
    ConjClass p = ConjClass(v);
    int m = 2 + i % 3;
    auto base = primitive_root(p);
    auto pow = primitive_root(class_power(p, m));
    CHECK(pow.root == base.root);
    CHECK(pow.multiplicity == m * base.multiplicity);
  }
}

TEST_CASE("class enumeration matches brute force") {
  CHECK(enumerate_classes(1, 2, false) ==
        std::vector<ConjClass>{C("a"), C("A"), C("aa"), C("AA")});
  CHECK(enumerate_classes(2, 1, false) ==
        std::vector<ConjClass>{C("a"), C("A"), C("b"), C("B")});
  CHECK(enumerate_classes(2, 2, false).size() == 12);

  // brute force: all reduced words of each length, canonicalized and deduped
  for (int len = 1; len <= 6; ++len) {
    std::set<std::string> brute;
    std::vector<std::string> stack{""};
    std::function<void(std::string)> rec = [&](std::string s) {
      if (static_cast<int>(s.size()) == len) {
        std::string can = oracle_canonical(s);
        if (static_cast<int>(can.size()) == len) brute.insert(can);
        return;
      }
      for (char c : {'a', 'A', 'b', 'B'}) {
        if (!s.empty() &&
            Letter::from_char(s.back()) == Letter::from_char(c).inverse())
          continue;
        rec(s + c);
      }
    };
    rec("");
    std::vector<std::string> got;
    for (const auto& c : enumerate_classes_of_length(2, len, false))
      got.push_back(c.str());
    std::vector<std::string> want(brute.begin(), brute.end());
    std::sort(want.begin(), want.end());  // byte order != key order; resort got
    std::vector<std::string> got_sorted = got;
    std::sort(got_sorted.begin(), got_sorted.end());
    CHECK(got_sorted == want);
    // no duplicates in the stream
    std::set<std::string> dedup(got.begin(), got.end());
    CHECK(dedup.size() == got.size());
  }
}

TEST_CASE("primitive-only enumeration skips proper powers") {
  for (const auto& c : enumerate_classes(2, 6, true))
    CHECK(primitive_root(c).multiplicity == 1);
  // counts line up: all = primitive + powers of shorter primitives
  auto all = enumerate_classes(2, 6, false);
  auto prim = enumerate_classes(2, 6, true);
  std::set<ConjClass> powers;
  for (const auto& p : prim)
    for (int m = 2; m * static_cast<int>(p.length()) <= 6; ++m)
      powers.insert(class_power(p, m));
  CHECK(all.size() == prim.size() + powers.size());
}
