#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace gridhfk {

struct Bigrading {
  int M = 0;
  int A = 0;
  friend auto operator<=>(const Bigrading&, const Bigrading&) = default;
};

// (M, A) -> rank. Zero ranks are never stored.
using BigradedRanks = std::map<Bigrading, std::int64_t>;

// One arrow of a chain complex over F2 or F2[U]. For the F2[U] complexes of a
// grid nw is the U exponent; nz is carried for bookkeeping only.
struct Arrow {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  std::uint8_t nw = 0;
  std::uint8_t nz = 0;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

// Generators carry (M, A); arrows are sorted by (from, to, nw, nz) and
// reduced mod 2 (no arrow appears twice).
struct Complex {
  std::vector<int> M;
  std::vector<int> A;
  std::vector<Arrow> arrows;

  std::size_t size() const { return M.size(); }
};

// Sorts and cancels duplicate arrows in pairs.
void normalize_arrows(std::vector<Arrow>& arrows);

struct HomologyOptions {
  int jobs = 0;
  // Blocks with at most this many matrix entries are reduced as dense bit
  // matrices.
  std::size_t dense_threshold = std::size_t{1} << 14;
  bool check_d_squared = true;
};

// Rank over F2 of the matrix with the given columns (each a sorted list of
// row indices < rows). Pivots on the smallest row index.
std::size_t f2_rank(std::vector<std::vector<std::uint32_t>> columns, std::size_t rows,
                    std::size_t dense_threshold);

// Homology of a complex over F2 whose differential lowers M by one and keeps
// A. Throws InvariantViolation if d^2 != 0 or an arrow is not homogeneous.
BigradedRanks f2_homology(const Complex& c, const HomologyOptions& opt = {});

// Throws InvariantViolation unless d^2 = 0 over F2.
void check_d_squared_f2(const Complex& c);
// Same over F2[U], where arrows compose by adding U exponents.
void check_d_squared_u(const Complex& c);
// Over F2[U, V] with V recording nz.
void check_d_squared_uv(const Complex& c);

struct Torsion {
  Bigrading at;  // grading of the generator of F2[U]/U^order
  int order = 0;
  friend auto operator<=>(const Torsion&, const Torsion&) = default;
};

// Homology of a free F2[U] complex as a direct sum of towers F2[U] and
// cyclic torsion modules. Both lists are sorted.
struct UModuleSummary {
  std::vector<Bigrading> towers;
  std::vector<Torsion> torsions;
  friend bool operator==(const UModuleSummary&, const UModuleSummary&) = default;
};

// Arrows are x -> U^nw y with U lowering M by 2 and A by 1, so every arrow
// must satisfy M(x) - M(y) = 1 - 2 nw and A(x) - A(y) = -nw. Throws
// InvariantViolation for inhomogeneous input or d^2 != 0. With
// check_alexander off, A is only carried along for reporting.
UModuleSummary fU_module_homology(const Complex& c, bool check_alexander = true);

// Divides a rank polynomial in m (Maslov) and a (Alexander) by
// (1 + m^-1 a^-1)^power. Throws InvariantViolation if the division is
// inexact or the quotient has a negative coefficient.
BigradedRanks v_divide(const BigradedRanks& p, int power);
UModuleSummary v_divide(const UModuleSummary& s, int power);

std::int64_t total_rank(const BigradedRanks& r);

}  // namespace gridhfk
