#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "gridhfk/alexander.hpp"
#include "gridhfk/complex.hpp"
#include "gridhfk/errors.hpp"
#include "gridhfk/invariants.hpp"
#include "gridhfk/model.hpp"

using namespace gridhfk;

namespace {

// Points in doubled coordinates so that markings sit at odd positions.
using Pts = std::vector<std::pair<int, int>>;

int count_lower_left(const Pts& p, const Pts& q) {
  int c = 0;
  for (auto [a, b] : p) {
    for (auto [u, v] : q) c += a < u && b < v;
  }
  return c;
}

// Twice J(P, Q) where J is the symmetrized lower-left count.
int j2(const Pts& p, const Pts& q) { return count_lower_left(p, q) + count_lower_left(q, p); }

// Closed-form Maslov grading with respect to a marking set:
// M(x) = J(x, x) - 2 J(x, O) + J(O, O) + 1.
int closed_form_maslov(const Pts& x, const Pts& marks) { return (j2(x, x) - 2 * j2(x, marks) + j2(marks, marks)) / 2 + 1; }

}  // namespace

TEST_CASE("gradings agree with the closed-form formula") {
  std::mt19937_64 rng(5);
  for (const auto& g : {fixtures::unknot(), fixtures::trefoil(), fixtures::figure_eight(), fixtures::t34()}) {
    const auto gg = assign_gradings(g);
    const int n = g.size();
    Pts os, xs;
    for (int r = 0; r < n; ++r) {
      os.emplace_back(2 * g.o_cols()[r] + 1, 2 * r + 1);
      xs.emplace_back(2 * g.x_cols()[r] + 1, 2 * r + 1);
    }
    for (int trial = 0; trial < 40; ++trial) {
      const std::uint32_t id = static_cast<std::uint32_t>(rng() % gg.size());
      Pts pts;
      const auto perm = gg.gens->perm(id);
      for (int c = 0; c < n; ++c) pts.emplace_back(2 * c, 2 * perm[c]);
      const int mo = closed_form_maslov(pts, os);
      const int mx = closed_form_maslov(pts, xs);
      CHECK(gg.M[id] == mo);
      // A = (M_O - M_X)/2 - (n - 1)/2
      CHECK(2 * gg.A[id] == mo - mx - (n - 1));
    }
  }
}

TEST_CASE("figure-eight and trefoil invariants") {
  auto fig8 = knot_report(fixtures::figure_eight());
  CHECK(fig8.hfk_hat == BigradedRanks{{{-1, -1}, 1}, {{0, 0}, 3}, {{1, 1}, 1}});
  CHECK(fig8.genus == 1);
  CHECK(fig8.fibered);
  CHECK(fig8.tau == 0);
  CHECK(alternating_model(fig8.delta, 0) == fig8.hfk_hat);

  auto small = knot_report(fixtures::figure_eight_small());
  CHECK(small.hfk_hat == fig8.hfk_hat);

  auto left = knot_report(fixtures::trefoil());
  auto right = knot_report(mirror(fixtures::trefoil()));
  CHECK(left.tau == -1);
  CHECK(right.tau == 1);
  CHECK(right.hfk_hat == mirror_ranks(left.hfk_hat));
  CHECK(right.hfk_hat != maslov_flip(left.hfk_hat));
  // alternating oracle with the left trefoil's signature
  CHECK(alternating_model(left.delta, 2) == left.hfk_hat);
  CHECK(alternating_model(right.delta, -2) == right.hfk_hat);
  CHECK_THROWS_AS(alternating_model(left.delta, 1), InputError);
}

TEST_CASE("T(3,4) is fibered of genus 3 with tau -3") {
  auto r = knot_report(fixtures::t34());
  CHECK(r.genus == 3);
  CHECK(r.fibered);
  CHECK(r.tau == -3);
  CHECK(total_rank(r.hfk_hat) == 5);
  CHECK(symmetry_check(r.hfk_hat));
}

TEST_CASE("staircase placement") {
  const LaurentPoly trefoil = parse_laurent("-1:1,0:-1,1:1");
  auto st = staircase_data(trefoil);
  CHECK(st.k == 1);
  CHECK(st.n == std::vector<int>{-1, 0, 1});
  CHECK(st.delta == std::vector<int>{-2, -1, 0});
  const auto right = hfk_hat(mirror(fixtures::trefoil()));
  CHECK(staircase_ranks(trefoil) == right);
  CHECK(staircase_ranks_as_printed(trefoil) != right);
  CHECK(model_hfk_hat(staircase_model(trefoil)) == right);

  const LaurentPoly t34 = parse_laurent("-3:1,-2:-1,0:1,2:-1,3:1");
  CHECK(staircase_ranks(t34) == mirror_ranks(hfk_hat(fixtures::t34())));
  CHECK(staircase_model(LaurentPoly(1)).generators.size() == 1);
  CHECK_THROWS_AS(staircase_data(parse_laurent("-1:-1,0:3,1:-1")), InputError);
}

TEST_CASE("model validation reports each problem") {
  auto bad = [](const char* text) {
    try {
      load_model(text);
    } catch (const ModelError& e) {
      return e.errors();
    }
    return std::vector<std::string>{};
  };
  CHECK(bad(R"({"generators":[{"id":"a","M":0,"A":0}],"arrows":[],"flip":[["a","a"]]})").empty());
  auto e1 = bad(R"({"generators":[{"id":"a","M":2,"A":1},{"id":"b","M":0,"A":0}],
                   "arrows":[{"from":"a","to":"b","nw":0,"nz":1}],"flip":[["a","a"]]})");
  CHECK(e1.size() >= 3);  // Maslov rule, flip undefined on b, flip gradings at a
  auto e2 = bad(R"({"generators":[{"id":"a","M":0,"A":0},{"id":"a","M":0,"A":0}],"arrows":[],"flip":[]})");
  CHECK(!e2.empty());
  auto e3 = bad(R"({"generators":[{"id":0,"M":0,"A":0}],"arrows":[{"from":0,"to":7,"nw":0,"nz":0}],"flip":[[0,0]]})");
  CHECK(!e3.empty());
  CHECK_THROWS_AS(load_model("not json"), InputError);
  CHECK_THROWS_AS(bundled_model("no-such-knot"), InputError);

  // d^2 != 0: a -> b -> c with nothing cancelling
  ModelComplex m;
  m.generators = {{"a", 0, 0}, {"b", -1, 0}, {"c", -2, 0}};
  m.arrows = {{0, 1, 0, 0}, {1, 2, 0, 0}};
  m.flip = {0, 1, 2};
  bool found = false;
  for (const auto& e : model_errors(m)) found = found || e.find("d^2") != std::string::npos || e.find("square") != std::string::npos;
  CHECK(found);

  // round trip
  auto t = bundled_model("trefoil-left");
  auto back = load_model(model_to_json(t));
  CHECK(back.generators.size() == 3);
  CHECK(model_errors(back).empty());
}
