#include <doctest.h>

#include "curvelie/crossing.hpp"

using namespace curvelie;

namespace {
ConjClass C(const std::string& s) { return ConjClass::parse(s); }
}

TEST_CASE("ray letters") {
  ConjClass w = C("aab");
  Ray out{&w, 1, true};
  // forward from position 1: a b a a b ...
  CHECK(out.letter(0) == Letter{1, false});
  CHECK(out.letter(1) == Letter{2, false});
  CHECK(out.letter(2) == Letter{1, false});
  Ray in{&w, 1, false};
  // backward from position 1: (w0)^-1 (w2)^-1 (w1)^-1 ... = A B A A B ...
  CHECK(in.letter(0) == Letter{1, true});
  CHECK(in.letter(1) == Letter{2, true});
  CHECK(in.letter(2) == Letter{1, true});
  CHECK(in.letter(3) == Letter{1, true});
}

TEST_CASE("ray comparison") {
  FatGraph torus = standard_surface(1, 1);
  ConjClass a = C("a"), b = C("b"), ab = C("ab"), abab = C("abab");
  ConjClass aab = C("aab"), aba_rot = C("aab");

  // distinct first letters diverge at depth 0
  auto d = compare_rays(torus, Ray{&a, 0, true}, Ray{&b, 0, true});
  CHECK(d.depth == 0);
  CHECK(d.side == RaySide::left);  // a+ precedes b+ in sigma

  // a power aligned with its root is the same infinite word
  CHECK(compare_rays(torus, Ray{&ab, 0, true}, Ray{&abab, 0, true}).side ==
        RaySide::equal);
  CHECK(compare_rays(torus, Ray{&ab, 1, true}, Ray{&abab, 3, true}).side ==
        RaySide::equal);

  // differing rotations of one primitive diverge within the Fine-Wilf cap
  auto e = compare_rays(torus, Ray{&aab, 0, true}, Ray{&aba_rot, 1, true});
  CHECK(e.side != RaySide::equal);
  CHECK(e.depth >= 0);
  CHECK(e.depth < 6);

  // backward ray of a class never equals a forward one (w is not conjugate
  // to its inverse in a free group)
  CHECK(compare_rays(torus, Ray{&ab, 0, true}, Ray{&ab, 0, false}).side !=
        RaySide::equal);
}

TEST_CASE("linkedness on the one-holed torus") {
  FatGraph torus = standard_surface(1, 1);
  ConjClass a = C("a"), b = C("b");

  // the unique pass pair of a and b crosses once, positively by convention
  auto lp = is_linked(torus, Pass{&a, 0}, Pass{&b, 0});
  CHECK(lp.verdict == LinkVerdict::linked);
  CHECK(lp.sign == 1);
  auto lq = is_linked(torus, Pass{&b, 0}, Pass{&a, 0});
  CHECK(lq.verdict == LinkVerdict::linked);
  CHECK(lq.sign == -1);
}

TEST_CASE("linkedness on pants: disjoint boundary curves") {
  FatGraph pants = standard_surface(0, 3);
  ConjClass a = C("a"), b = C("b");
  auto lp = is_linked(pants, Pass{&a, 0}, Pass{&b, 0});
  CHECK(lp.verdict == LinkVerdict::not_linked);
}

TEST_CASE("powers of a common primitive are parallel when aligned") {
  FatGraph torus = standard_surface(1, 1);
  ConjClass ab = C("ab"), abab = C("abab");
  for (int t = 0; t < 2; ++t)
    for (int s = 0; s < 4; ++s) {
      auto lp = is_linked(torus, Pass{&ab, t}, Pass{&abab, s});
      if ((s - t) % 2 == 0)
        CHECK(lp.verdict == LinkVerdict::parallel);
      else
        CHECK(lp.verdict != LinkVerdict::linked);  // simple root: no crossing
    }
}

TEST_CASE("one crossing is charged to exactly one alignment") {
  // The lines of a and ab share the a-edge: both alignments alternate, only
  // the entry alignment may count.
  FatGraph torus = standard_surface(1, 1);
  ConjClass a = C("a"), ab = C("ab");
  int linked = 0;
  for (int s = 0; s < 2; ++s) {
    auto lp = is_linked(torus, Pass{&a, 0}, Pass{&ab, s});
    if (lp.verdict == LinkVerdict::linked) ++linked;
  }
  CHECK(linked == 1);
}
