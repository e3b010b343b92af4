#include "doctest.h"

#include "gridhfk/errors.hpp"
#include "gridhfk/model.hpp"
#include "gridhfk/surgery.hpp"

using namespace gridhfk;

namespace {

std::int64_t torsion_count(const UModuleSummary& m) { return static_cast<std::int64_t>(m.torsions.size()); }

}  // namespace

TEST_CASE("bundled models are valid") {
  for (const auto& name : bundled_model_names()) {
    INFO(name);
    CHECK(model_errors(bundled_model(name)).empty());
  }
}

TEST_CASE("large surgery on the left trefoil") {
  auto m = bundled_model("trefoil-left");
  auto a0 = large_surgery(m, 0, Flavor::plus);
  CHECK(a0.towers == 1);
  CHECK(a0.excess == 1);
  for (int s : {-2, -1, 1, 2}) {
    INFO(s);
    auto a = large_surgery(m, s, Flavor::plus);
    CHECK(a.towers == 1);
    CHECK(a.excess == 0);
  }
  CHECK(large_surgery(m, 0, Flavor::hat).hat_rank == 3);
  CHECK(large_surgery(m, 2, Flavor::hat).hat_rank == 1);
}

TEST_CASE("minus oracle agrees with the plus cutoff") {
  for (const auto& name : bundled_model_names()) {
    auto m = bundled_model(name);
    for (int s = -m.max_abs_A() - 1; s <= m.max_abs_A() + 1; ++s) {
      INFO(name << " s=" << s);
      auto minus = stable_minus_homology(m, s);
      auto plus = large_surgery(m, s, Flavor::plus);
      auto hat = large_surgery(m, s, Flavor::hat);
      CHECK(minus.towers.size() == static_cast<std::size_t>(plus.towers));
      std::int64_t orders = 0;
      for (const auto& t : minus.torsions) orders += t.order;
      CHECK(orders == plus.excess);
      CHECK(hat.hat_rank == plus.towers + 2 * torsion_count(minus));
    }
  }
}

TEST_CASE("staircase models match their bundled counterparts") {
  auto m = staircase_model(parse_laurent("-1:1,0:-1,1:1"));
  CHECK(model_errors(m).empty());
  auto r = bundled_model("trefoil-right");
  for (int s = -2; s <= 2; ++s) {
    CHECK(large_surgery(m, s, Flavor::plus) == large_surgery(r, s, Flavor::plus));
  }
}

TEST_CASE("surgery cone: small coefficients") {
  auto m = bundled_model("trefoil-left");
  auto plus1 = surgery_cone(m, 1, Flavor::plus, 0);
  REQUIRE(plus1.classes.size() == 1);
  CHECK(plus1.classes[0].size() == 1);
  auto h1 = surgery_homology(plus1);
  CHECK(h1[0].towers == 1);
  CHECK(h1[0].excess == 1);

  auto minus1 = surgery_cone(m, -1, Flavor::plus, 0);
  CHECK(minus1.classes[0].size() == 3);
  auto hm = surgery_homology(minus1);
  CHECK(hm[0].towers == 1);
  CHECK(hm[0].excess == 0);

  // the answer does not depend on the truncation radius
  for (int b = 0; b <= 3; ++b) {
    INFO(b);
    CHECK(surgery_homology(surgery_cone(m, 1, Flavor::plus, b))[0].towers == 1);
    CHECK(surgery_homology(surgery_cone(m, 1, Flavor::plus, b))[0].excess == 1);
    CHECK(surgery_homology(surgery_cone(m, -1, Flavor::hat, b))[0].hat_rank == 1);
  }
}

TEST_CASE("surgery cone: unknot lens space") {
  auto cone = surgery_cone(bundled_model("unknot"), 5, Flavor::plus, default_smax(bundled_model("unknot"), 5));
  auto h = surgery_homology(cone);
  REQUIRE(h.size() == 5);
  for (const auto& c : h) {
    CHECK(c.towers == 1);
    CHECK(c.excess == 0);
  }
  auto hat = surgery_homology(surgery_cone(bundled_model("unknot"), 5, Flavor::hat, 5));
  for (const auto& c : hat) CHECK(c.hat_rank == 1);
}

TEST_CASE("surgery cone: large coefficient matches large surgery") {
  for (const char* name : {"trefoil-left", "trefoil-right", "torus-2-5"}) {
    auto m = bundled_model(name);
    const int p = 2 * m.max_abs_A() + 3;
    auto cone = surgery_cone(m, p, Flavor::plus, default_smax(m, p));
    auto h = surgery_homology(cone);
    for (int s = -(p - 1) / 2; s <= (p - 1) / 2; ++s) {
      INFO(name << " s=" << s);
      auto big = large_surgery(m, s, Flavor::plus);
      const auto& c = h[((s % p) + p) % p];
      CHECK(c.towers == big.towers);
      CHECK(c.excess == big.excess);
    }
    auto hat = surgery_homology(surgery_cone(m, p, Flavor::hat, default_smax(m, p)));
    for (int s = -(p - 1) / 2; s <= (p - 1) / 2; ++s) {
      CHECK(hat[((s % p) + p) % p].hat_rank == large_surgery(m, s, Flavor::hat).hat_rank);
    }
  }
}

TEST_CASE("surgery cone rejects bad input") {
  auto m = bundled_model("trefoil-left");
  CHECK_THROWS_AS(surgery_cone(m, 0, Flavor::plus, 2), InputError);
  CHECK_THROWS_AS(surgery_cone(m, 1, Flavor::plus, -1), InputError);
  auto t25 = bundled_model("torus-2-5");
  // v_2 on T(2,5) is not a quasi-isomorphism; dropping A_2 is unsound
  CHECK_THROWS_AS(surgery_cone(t25, 1, Flavor::plus, 0), InputError);
}

TEST_CASE("stable complexes") {
  auto u = bundled_model("unknot");
  for (int s = -3; s <= 3; ++s) {
    CHECK(stable_complex(u, s, Flavor::hat).size() == 1);
    CHECK(large_surgery(u, s, Flavor::plus).towers == 1);
  }
  // trefoil A_1^+: every generator enters the region, c only from i = 0 up
  auto t = bundled_model("trefoil-left");
  auto c = stable_complex(t, 1, Flavor::plus, 2);
  CHECK(c.size() > 0);
  for (std::size_t e = 0; e < c.size(); ++e) {
    for (auto f : c.d[e]) CHECK(c.degree[f] == c.degree[e] - 1);
  }
  CHECK_THROWS_AS(stable_complex(t, 0, Flavor::plus, -1), InputError);
}

TEST_CASE("surgery cone: lens space L(2,1)") {
  auto u = bundled_model("unknot");
  auto h = surgery_homology(surgery_cone(u, 2, Flavor::plus, default_smax(u, 2)));
  REQUIRE(h.size() == 2);
  for (const auto& c : h) CHECK(c == HomologySummary{Flavor::plus, 0, 1, 0, c.cutoff, c.degree_ranks});
}

TEST_CASE("surgery cone: truncation insensitivity") {
  for (const auto& name : bundled_model_names()) {
    auto m = bundled_model(name);
    for (int p : {-3, -1, 1, 2, 5}) {
      INFO(name << " p=" << p);
      const int b = default_smax(m, p);
      auto h1 = surgery_homology(surgery_cone(m, p, Flavor::plus, b));
      auto h2 = surgery_homology(surgery_cone(m, p, Flavor::plus, b + 1));
      auto k1 = surgery_homology(surgery_cone(m, p, Flavor::hat, b));
      auto k2 = surgery_homology(surgery_cone(m, p, Flavor::hat, b + 1));
      for (std::size_t i = 0; i < h1.size(); ++i) {
        CHECK(h1[i].towers == h2[i].towers);
        CHECK(h1[i].excess == h2[i].excess);
        CHECK(k1[i] == k2[i]);
        // hat rank = towers + 2 * (number of finite summands); the summands
        // of these models all have order one
        CHECK(k1[i].hat_rank == h1[i].towers + 2 * h1[i].excess);
      }
    }
  }
}

TEST_CASE("thick arrows: v_s and h_s are quasi-isomorphisms far out") {
  for (const auto& name : bundled_model_names()) {
    auto m = bundled_model(name);
    const int g = m.max_abs_A();
    for (int s = g; s <= g + 2; ++s) {
      INFO(name << " s=" << s);
      CHECK(v_is_quasi_iso(m, s));
      CHECK(h_is_quasi_iso(m, -s));
    }
  }
  CHECK_FALSE(v_is_quasi_iso(bundled_model("trefoil-left"), 0));
}
