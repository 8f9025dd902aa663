#include <doctest.h>

#include "curvelie/fatgraph.hpp"

using namespace curvelie;

TEST_CASE("boundary cycles of the standard models") {
  // torus with one boundary: single face whose edge word is a commutator
  FatGraph torus = standard_surface(1, 1);
  auto cycles = torus.boundary_cycles();
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].size() == 4);
  ConjClass b = torus.boundary_class(cycles[0]);
  CHECK((b == ConjClass::parse("abAB") || b == ConjClass::parse("aBAb")));

  // pants: three faces
  FatGraph pants = standard_surface(0, 3);
  CHECK(pants.boundary_cycles().size() == 3);

  // annulus: single loop, two faces
  FatGraph annulus = standard_surface(0, 2);
  CHECK(annulus.boundary_cycles().size() == 2);

  // face orbits partition all 2k ends
  for (const FatGraph* g : {&torus, &pants, &annulus}) {
    std::size_t total = 0;
    for (const auto& c : g->boundary_cycles()) total += c.size();
    CHECK(total == static_cast<std::size_t>(g->end_count()));
  }
}

TEST_CASE("surface signatures") {
  CHECK(standard_surface(1, 1).surface_sig() == SurfaceSig{1, 1});
  CHECK(standard_surface(0, 3).surface_sig() == SurfaceSig{0, 3});
  CHECK(standard_surface(0, 2).surface_sig() == SurfaceSig{0, 2});
  // round trip for all small (g, n)
  for (int g = 0; g <= 3; ++g)
    for (int n = 1; n <= 4; ++n) {
      if (g == 0 && n == 1) continue;
      CHECK(standard_surface(g, n).surface_sig() == SurfaceSig{g, n});
    }
}

TEST_CASE("construction errors name the problem") {
  CHECK_THROWS_AS(standard_surface(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(standard_surface(0, 1), std::invalid_argument);
  // duplicated end
  CHECK_THROWS_WITH_AS(
      FatGraph({EndId{1, false}, EndId{1, false}, EndId{1, true},
                EndId{2, false}}),
      doctest::Contains("a+"), std::invalid_argument);
  // end outside range
  CHECK_THROWS_WITH_AS(FatGraph({EndId{1, false}, EndId{3, true}}),
                       doctest::Contains("c-"), std::invalid_argument);
  CHECK_THROWS_AS(FatGraph({EndId{1, false}}), std::invalid_argument);
}

TEST_CASE("surface spec parsing") {
  CHECK(parse_surface("g=1,n=1").surface_sig() == SurfaceSig{1, 1});
  CHECK(parse_surface("a+,b+,a-,b-").surface_sig() == SurfaceSig{1, 1});
  CHECK(parse_surface("a+,a-,b+,b-").surface_sig() == SurfaceSig{0, 3});
  CHECK_THROWS_AS(parse_surface("g=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_surface("a+,bb"), std::invalid_argument);
}
