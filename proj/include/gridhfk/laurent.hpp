#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <boost/rational.hpp>

namespace gridhfk {

using Rational = boost::rational<std::int64_t>;

// Exact one-variable Laurent polynomial with integer coefficients. Zero
// coefficients are never stored. Arithmetic throws InvariantViolation on
// 64-bit overflow instead of wrapping.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT: implicit from integers is intended
  static LaurentPoly monomial(std::int64_t coeff, int exponent);
  static LaurentPoly from_coefficients(const std::map<int, std::int64_t>& coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int min_degree() const;
  int max_degree() const;
  std::int64_t coefficient(int exponent) const;
  const std::map<int, std::int64_t>& terms() const { return coeffs_; }

  LaurentPoly shifted(int k) const;  // multiply by q^k
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(int e) const;

  // Exact quotient; throws InvariantViolation if the divisor does not divide.
  LaurentPoly exact_divide(const LaurentPoly& divisor) const;

  Rational evaluate(const Rational& at) const;

  // `c_min q^{min} + ... + c_max q^{max}`, or `0`.
  std::string to_string() const;
  // Conventional rendering such as `q^{-1} - 1 + q`.
  std::string pretty() const;

 private:
  std::map<int, std::int64_t> coeffs_;
};

}  // namespace gridhfk
