#pragma once

#include <vector>

#include "gridhfk/grid.hpp"
#include "gridhfk/laurent.hpp"
#include "gridhfk/planar.hpp"

namespace gridhfk {

// Alexander-Conway polynomial of a knot diagram from the Fox calculus on its
// Wirtinger presentation, normalized to be symmetric with value 1 at q = 1.
// Throws InputError for diagrams with more than one component.
LaurentPoly alexander_polynomial(const PlanarDiagram& d);
LaurentPoly alexander_polynomial(const GridDiagram& g);

// Rows = crossings, columns = arcs; entries are the Fox derivatives of the
// Wirtinger relators at the abelianization (scaled to nonnegative powers).
std::vector<std::vector<LaurentPoly>> alexander_matrix(const PlanarDiagram& d);

// Fraction-free (Bareiss) determinant over the integer Laurent ring.
LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m);

// Rescale by a unit +-q^k so that the result is symmetric and evaluates to 1
// at q = 1. Throws InvariantViolation if no such unit exists.
LaurentPoly normalize_alexander(const LaurentPoly& p);

}  // namespace gridhfk
