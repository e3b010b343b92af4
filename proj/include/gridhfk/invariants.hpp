#pragma once

#include <map>
#include <string>
#include <vector>

#include "gridhfk/complex.hpp"
#include "gridhfk/homology.hpp"
#include "gridhfk/laurent.hpp"

namespace gridhfk {

// Tilde homology divided by V^(n-1). Knots only.
BigradedRanks hfk_hat(const GradedGenerators& gg, const ComputeOptions& opt = {});
BigradedRanks hfk_hat(const GridDiagram& g, const ComputeOptions& opt = {});

// Collapsed minus homology divided by V^(n-1). Knots only.
UModuleSummary hfk_minus(const GradedGenerators& gg, const ComputeOptions& opt = {});

// Largest Alexander grading s >= 0 with nonzero rank. Throws on empty input.
int genus(const BigradedRanks& r);
bool is_fibered(const BigradedRanks& r);
// -A of the unique tower. Throws InvariantViolation unless there is exactly one.
int tau(const UModuleSummary& m);
bool detect_unknot(const BigradedRanks& r);
// rank(M, A) = rank(M - 2A, -A) everywhere.
bool symmetry_check(const BigradedRanks& r);
// sum (-1)^M rank q^A == (1 - q^-1)^(k-1) * delta
bool euler_check(const BigradedRanks& r, const LaurentPoly& delta, int k = 1);
LaurentPoly euler_polynomial(const BigradedRanks& r);

// (M, A) -> (-M, -A): the homology of the mirror knot.
BigradedRanks mirror_ranks(const BigradedRanks& r);
// (M, A) -> (-M, A). The literal flip some references state for mirrors.
BigradedRanks maslov_flip(const BigradedRanks& r);
BigradedRanks tensor_product(const BigradedRanks& a, const BigradedRanks& b);

// Rank |a_s| at (s + sigma/2, s). Throws InputError for odd sigma.
BigradedRanks alternating_model(const LaurentPoly& delta, int sigma);

// Delta = sum_{j=-k..k} (-1)^(k-j) q^(n_j), n_{-j} = -n_j, with delta_k = 0 and
// delta_j = delta_{j+1} - 2 (n_{j+1} - n_j) + 1   if k - j is odd,
// delta_j = delta_{j+1} - 1                      if k - j is even.
struct Staircase {
  int k = 0;
  std::vector<int> n;      // n_{-k} .. n_k
  std::vector<int> delta;  // delta_{-k} .. delta_k
};

// Throws InputError if delta is not of this form.
Staircase staircase_data(const LaurentPoly& delta);
// Rank one at (M, A) = (delta_j, n_j).
BigradedRanks staircase_ranks(const LaurentPoly& delta);
// Rank one at (M, A) = (n_j, delta_j), kept to document the resolution.
BigradedRanks staircase_ranks_as_printed(const LaurentPoly& delta);

struct KnotReport {
  GridDiagram grid;
  std::uint32_t generators = 0;
  BigradedRanks tilde;
  BigradedRanks hfk_hat;
  UModuleSummary hfk_minus;
  int genus = 0;
  bool fibered = false;
  int tau = 0;
  bool unknot = false;
  LaurentPoly delta;
  std::map<std::string, bool> checks;
};

// Throws InputError for links.
KnotReport knot_report(const GridDiagram& g, const ComputeOptions& opt = {}, bool with_minus = true);

std::string ranks_table(const BigradedRanks& r);

}  // namespace gridhfk
