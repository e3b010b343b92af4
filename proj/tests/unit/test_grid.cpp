#include "doctest.h"

#include "fixtures.hpp"
#include "gridhfk/alexander.hpp"
#include "gridhfk/errors.hpp"
#include "gridhfk/moves.hpp"
#include "gridhfk/planar.hpp"

using namespace gridhfk;

TEST_CASE("parse and serialize") {
  auto g = parse_grid("n=5; O=[0,1,2,3,4]; X=[2,3,4,0,1]");
  CHECK(g == fixtures::trefoil());
  CHECK(parse_grid(serialize_grid(g)) == g);
  CHECK(parse_grid(serialize_grid_json(g)) == g);
  CHECK(parse_grid("# comment\nn=2\nO=[0,1]  # rows\nX=[1,0]\n") == fixtures::unknot());
  CHECK(parse_grid(R"({"n": 2, "O": [0, 1], "X": [1, 0]})") == fixtures::unknot());
  CHECK_THROWS_AS(parse_grid("n=3; O=[0,0,1]; X=[1,2,0]"), InputError);
  CHECK_THROWS_AS(parse_grid("n=2; O=[0,1]; X=[0,1]"), InputError);
  CHECK_THROWS_AS(parse_grid("n=1; O=[0]; X=[0]"), InputError);
  CHECK_THROWS_AS(parse_grid("n=2; O=[0,1]"), InputError);
  CHECK_THROWS_AS(parse_grid("n=2; O=[0,1; X=[1,0]"), InputError);
  CHECK_THROWS_AS(parse_grid("n=3; O=[0,1]; X=[1,0]"), InputError);
}

TEST_CASE("link components") {
  CHECK(link_components(fixtures::unknot()).count == 1);
  CHECK(link_components(fixtures::trefoil()).count == 1);
  CHECK(link_components(GridDiagram({0, 1, 2, 3}, {1, 0, 3, 2})).count == 2);
}

TEST_CASE("planar diagrams") {
  CHECK(planar_diagram(fixtures::unknot()).crossings.empty());
  auto d = planar_diagram(fixtures::trefoil());
  REQUIRE(d.crossings.size() == 3);
  CHECK(std::abs(d.writhe()) == 3);
  auto m = planar_diagram(mirror(fixtures::trefoil()));
  CHECK(m.writhe() == -d.writhe());
}

TEST_CASE("alexander polynomial") {
  const LaurentPoly trefoil_delta = LaurentPoly::from_coefficients({{-1, 1}, {0, -1}, {1, 1}});
  CHECK(alexander_polynomial(fixtures::unknot()) == LaurentPoly(1));
  CHECK(alexander_polynomial(fixtures::trefoil()) == trefoil_delta);
  CHECK(alexander_polynomial(mirror(fixtures::trefoil())) == trefoil_delta);
  CHECK(alexander_polynomial(fixtures::t34()) ==
        LaurentPoly::from_coefficients({{-3, 1}, {-2, -1}, {0, 1}, {2, -1}, {3, 1}}));
  CHECK(alexander_polynomial(connected_sum(fixtures::trefoil(), fixtures::trefoil())) ==
        trefoil_delta * trefoil_delta);
  CHECK_THROWS_AS(alexander_polynomial(GridDiagram({0, 1, 2, 3}, {1, 0, 3, 2})), InputError);
  CHECK(trefoil_delta.pretty() == "q^{-1} - 1 + q");
  CHECK(trefoil_delta.to_string() == "1 q^{-1} + -1 q^{0} + 1 q^{1}");
}

TEST_CASE("laurent evaluation") {
  const LaurentPoly t = LaurentPoly::from_coefficients({{-1, 1}, {0, -1}, {1, 1}});
  CHECK(t.evaluate(1) == Rational(1));
  CHECK(LaurentPoly(1).evaluate(Rational(3, 7)) == Rational(1));
  const LaurentPoly f = LaurentPoly(1) - LaurentPoly::monomial(1, -1);
  CHECK((f.pow(4) * t).evaluate(1) == Rational(0));
  CHECK((f.pow(4) * t).exact_divide(f.pow(4)) == t);
}

TEST_CASE("grid moves") {
  auto u = fixtures::unknot();
  auto t = apply_move(u, GridMove::translate(Axis::column));
  CHECK(t.o_cols() == std::vector<int>{1, 0});
  CHECK(t.x_cols() == std::vector<int>{0, 1});

  for (Marking mk : {Marking::o, Marking::x}) {
    for (int row = 0; row < 2; ++row) {
      for (int cr = 0; cr < 2; ++cr) {
        for (int ct = 0; ct < 2; ++ct) {
          const int col = mk == Marking::x ? u.x_cols()[row] : u.o_cols()[row];
          auto s = apply_move(u, GridMove::stabilize(mk, col, row, cr, ct));
          CHECK(s.size() == 3);
          CHECK(link_components(s).count == 1);
          CHECK(alexander_polynomial(s) == LaurentPoly(1));
        }
      }
    }
  }

  // interleaved spans in columns 0 and 1
  GridDiagram g({0, 1, 2, 3}, {2, 3, 0, 1});
  CHECK_FALSE(is_legal(g, GridMove::commute(Axis::column, 0)));
  CHECK_THROWS_AS(apply_move(g, GridMove::commute(Axis::column, 0)), InputError);

  CHECK(random_move_sequence(u, 0, 5, 5) == u);
  auto r = random_move_sequence(u, 10, 1, 5);
  CHECK(r.size() <= 5);
  CHECK(link_components(r).count == 1);
}

TEST_CASE("stabilize then destabilize round trip") {
  auto tr = fixtures::trefoil();
  for (Marking mk : {Marking::o, Marking::x}) {
    for (int row = 0; row < tr.size(); ++row) {
      for (int cr = 0; cr < 2; ++cr) {
        for (int ct = 0; ct < 2; ++ct) {
          const int col = mk == Marking::x ? tr.x_cols()[row] : tr.o_cols()[row];
          auto s = apply_move(tr, GridMove::stabilize(mk, col, row, cr, ct));
          CHECK(alexander_polynomial(s) == alexander_polynomial(tr));
          bool found = false;
          for (const auto& d : destabilizations(s)) {
            if (apply_move(s, d) == tr) found = true;
          }
          CHECK(found);
        }
      }
    }
  }
}

TEST_CASE("moves preserve the Alexander polynomial") {
  auto tr = fixtures::trefoil();
  const auto delta = alexander_polynomial(tr);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::vector<GridMove> trace;
    auto g = random_move_sequence(tr, 40, seed, 8, &trace);
    CHECK(trace.size() == 40);
    CHECK(g.size() <= 8);
    CHECK(alexander_polynomial(g) == delta);
  }
  CHECK(random_move_sequence(tr, 30, 9, 8) == random_move_sequence(tr, 30, 9, 8));
}
