#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gridhfk/generators.hpp"
#include "gridhfk/grid.hpp"
#include "gridhfk/homology.hpp"
#include "gridhfk/laurent.hpp"

namespace gridhfk {

struct ComputeOptions {
  int jobs = 0;
  int cap = kDefaultGeneratorCap;
  HomologyOptions homology;
};

// Generators of a grid with their gradings. M is always absolute. A is
// absolute for knots; for links it is relative (zero on generator 0).
struct GradedGenerators {
  GridDiagram grid;
  std::shared_ptr<const GeneratorSet> gens;
  std::vector<int> M;
  std::vector<int> A;
  bool absolute_A = false;
  int components = 1;
  LaurentPoly delta;           // knots only
  BigradedRanks no_o_ranks;    // homology of the no-O complex, keyed (M, 0)

  std::uint32_t size() const { return gens->size(); }
};

// Relative gradings propagated over all rectangles from generator 0, which is
// assigned M = A = 0. Every rectangle is re-checked after propagation;
// a mismatch throws InvariantViolation.
void relative_gradings(const GridDiagram& g, const GeneratorSet& gens, std::vector<int>& M, std::vector<int>& A,
                       int jobs = 0);

// Enumerates generators, propagates gradings, fixes M by the no-O homology
// and, for knots, A by the Euler characteristic identity with `delta`.
GradedGenerators assign_gradings(const GridDiagram& g, const LaurentPoly& delta, const ComputeOptions& opt = {});
// As above with delta from the Alexander oracle; links get relative A.
GradedGenerators assign_gradings(const GridDiagram& g, const ComputeOptions& opt = {});

// Empty rectangles containing no markings; bigraded by (M, A).
Complex build_tilde(const GradedGenerators& gg, int jobs = 0);
// Empty rectangles containing no O. Graded by M only: the A array is zero.
Complex build_no_o(const GradedGenerators& gg, int jobs = 0);
// Empty rectangles containing no X; U exponent nw = number of O inside.
Complex build_minus_collapsed(const GradedGenerators& gg, int jobs = 0);
// All empty rectangles, labeled by (nw, nz) = (O count, X count).
Complex build_full_labeled(const GradedGenerators& gg, int jobs = 0);

// Sum over generators of (-1)^M q^A.
LaurentPoly euler_polynomial(const std::vector<int>& M, const std::vector<int>& A);

// Labeled-complex document: {"grid", "flavor", "generators": [{id, M, A}],
// "arrows": [{from, to, nw, nz}]}.
std::string export_complex_json(const GradedGenerators& gg, const Complex& c, const std::string& flavor);

}  // namespace gridhfk
