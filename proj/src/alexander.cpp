#include "gridhfk/alexander.hpp"

#include <utility>

#include "gridhfk/errors.hpp"

namespace gridhfk {

std::vector<std::vector<LaurentPoly>> alexander_matrix(const PlanarDiagram& d) {
  const auto t = LaurentPoly::monomial(1, 1);
  std::vector<std::vector<LaurentPoly>> m(d.crossings.size(),
                                          std::vector<LaurentPoly>(d.arc_count));
  for (std::size_t k = 0; k < d.crossings.size(); ++k) {
    const Crossing& x = d.crossings[k];
    auto& row = m[k];
    if (x.sign > 0) {
      // under_out = over * under_in * over^-1
      row[x.over_arc] += LaurentPoly(1) - t;
      row[x.under_in] += t;
      row[x.under_out] -= LaurentPoly(1);
    } else {
      // under_out = over^-1 * under_in * over, row multiplied through by t
      row[x.over_arc] += t - LaurentPoly(1);
      row[x.under_in] += LaurentPoly(1);
      row[x.under_out] -= t;
    }
  }
  return m;
}

LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  LaurentPoly sign(1);
  LaurentPoly prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m[swap_with][k].is_zero()) ++swap_with;
      if (swap_with == n) return LaurentPoly();
      std::swap(m[k], m[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_divide(prev);
      }
      m[i][k] = LaurentPoly();
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

LaurentPoly normalize_alexander(const LaurentPoly& p) {
  if (p.is_zero()) throw InvariantViolation("Alexander determinant vanished");
  const int span = p.max_degree() - p.min_degree();
  if (span % 2 != 0) throw InvariantViolation("Alexander polynomial has odd span");
  LaurentPoly centered = p.shifted(-(p.min_degree() + span / 2));
  const Rational at_one = centered.evaluate(1);
  if (at_one == Rational(-1)) {
    centered = -centered;
  } else if (at_one != Rational(1)) {
    throw InvariantViolation("Alexander polynomial does not evaluate to +-1 at q=1");
  }
  for (const auto& [e, c] : centered.terms()) {
    if (centered.coefficient(-e) != c) throw InvariantViolation("Alexander polynomial is not symmetric");
  }
  return centered;
}

LaurentPoly alexander_polynomial(const PlanarDiagram& d) {
  if (d.components != 1) throw InputError("the Alexander oracle needs a knot, got a link");
  if (d.crossings.empty()) return LaurentPoly(1);
  auto m = alexander_matrix(d);
  // Any first elementary ideal generator: drop one relator and one generator.
  m.pop_back();
  for (auto& row : m) row.pop_back();
  return normalize_alexander(determinant(std::move(m)));
}

LaurentPoly alexander_polynomial(const GridDiagram& g) { return alexander_polynomial(planar_diagram(g)); }

}  // namespace gridhfk
