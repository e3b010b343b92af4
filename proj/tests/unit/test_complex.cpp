#include "doctest.h"

#include "fixtures.hpp"
#include "gridhfk/complex.hpp"
#include "gridhfk/errors.hpp"
#include "gridhfk/invariants.hpp"

using namespace gridhfk;

TEST_CASE("generator enumeration") {
  CHECK(GeneratorSet(2).size() == 2);
  CHECK(GeneratorSet(5).size() == 120);
  CHECK(GeneratorSet(6).size() == 720);
  CHECK_THROWS_AS(GeneratorSet(9, 8), CapExceeded);
  GeneratorSet g(6);
  for (std::uint32_t i = 0; i < g.size(); i += 37) CHECK(g.rank(g.perm(i)) == i);
}

TEST_CASE("rectangle counts") {
  auto tr = fixtures::trefoil();
  GeneratorSet gens(5);
  for (std::uint32_t id = 0; id < gens.size(); id += 7) {
    CHECK(rectangles(tr, gens, id, false).size() == 20);
  }
}

TEST_CASE("unknot gradings and complexes") {
  auto gg = assign_gradings(fixtures::unknot());
  // generator 0 is the identity permutation
  REQUIRE(gg.size() == 2);
  CHECK(gg.M == std::vector<int>{-1, 0});
  CHECK(gg.A == std::vector<int>{-1, 0});
  CHECK(build_tilde(gg).arrows.empty());
  // Both rectangles out of the identity generator hold one O each, and both
  // out of the other generator hold one X, so every differential cancels
  // in pairs over F2.
  GeneratorSet gens(2);
  const auto rects0 = rectangles(gg.grid, gens, 0, true);
  REQUIRE(rects0.size() == 2);
  CHECK(rects0[0].o_count == 1);
  CHECK(rects0[1].o_count == 1);
  CHECK(rects0[0].x_count == 0);
  const auto rects1 = rectangles(gg.grid, gens, 1, true);
  CHECK(rects1[0].x_count == 1);
  CHECK(rects1[1].x_count == 1);
  CHECK(build_minus_collapsed(gg).arrows.empty());
  CHECK(build_full_labeled(gg).arrows.empty());
  CHECK(fU_module_homology(build_minus_collapsed(gg)).towers == std::vector<Bigrading>{{-1, -1}, {0, 0}});
  CHECK(f2_homology(build_tilde(gg)).size() == 2);
  CHECK(hfk_hat(gg) == BigradedRanks{{{0, 0}, 1}});
  auto m = hfk_minus(gg);
  CHECK(m.towers == std::vector<Bigrading>{{0, 0}});
  CHECK(m.torsions.empty());
}

TEST_CASE("trefoil grid") {
  auto gg = assign_gradings(fixtures::trefoil());
  CHECK(gg.no_o_ranks == BigradedRanks{{{0, 0}, 1}, {{-1, 0}, 4}, {{-2, 0}, 6}, {{-3, 0}, 4}, {{-4, 0}, 1}});
  auto tilde = f2_homology(build_tilde(gg));
  CHECK(total_rank(tilde) == 48);
  auto hat = v_divide(tilde, 4);
  MESSAGE(ranks_table(hat));
  auto minus = hfk_minus(gg);
  CHECK(minus.towers.size() == 1);
  CHECK(minus.torsions.size() == 1);
}
