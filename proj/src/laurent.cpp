#include "gridhfk/laurent.hpp"

#include <cstdlib>

#include "gridhfk/errors.hpp"

namespace gridhfk {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InvariantViolation("Laurent coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvariantViolation("Laurent coefficient overflow");
  return r;
}

void accumulate(std::map<int, std::int64_t>& m, int e, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = m.emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) m.erase(it);
  }
}

}  // namespace

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) coeffs_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.coeffs_[exponent] = coeff;
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(const std::map<int, std::int64_t>& coeffs) {
  LaurentPoly p;
  for (const auto& [e, c] : coeffs) accumulate(p.coeffs_, e, c);
  return p;
}

int LaurentPoly::min_degree() const {
  if (coeffs_.empty()) throw InvariantViolation("degree of the zero polynomial");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (coeffs_.empty()) throw InvariantViolation("degree of the zero polynomial");
  return coeffs_.rbegin()->first;
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : coeffs_) p.coeffs_[e + k] = c;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : coeffs_) p.coeffs_[e] = checked_mul(c, -1);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) accumulate(coeffs_, e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) accumulate(coeffs_, e, checked_mul(c, -1));
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) accumulate(p.coeffs_, ea + eb, checked_mul(ca, cb));
  }
  return p;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) throw InvariantViolation("negative power of a Laurent polynomial");
  LaurentPoly result(1);
  for (int i = 0; i < e; ++i) result = result * *this;
  return result;
}

LaurentPoly LaurentPoly::exact_divide(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw InvariantViolation("division by the zero polynomial");
  LaurentPoly rem = *this;
  LaurentPoly quot;
  const int dtop = divisor.max_degree();
  const std::int64_t lead = divisor.coefficient(dtop);
  const int dspan = dtop - divisor.min_degree();
  while (!rem.is_zero()) {
    const int rtop = rem.max_degree();
    if (rtop - rem.min_degree() < dspan) throw InvariantViolation("inexact Laurent division");
    const std::int64_t c = rem.coefficient(rtop);
    if (c % lead != 0) throw InvariantViolation("inexact Laurent division");
    const LaurentPoly term = monomial(c / lead, rtop - dtop);
    quot += term;
    rem -= term * divisor;
  }
  return quot;
}

Rational LaurentPoly::evaluate(const Rational& at) const {
  Rational total = 0;
  for (const auto& [e, c] : coeffs_) {
    Rational term = c;
    if (e != 0 && at.numerator() == 0) throw InputError("negative power evaluated at zero");
    for (int i = 0; i < std::abs(e); ++i) term = e > 0 ? term * at : term / at;
    total += term;
  }
  return total;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + " q^{" + std::to_string(e) + "}";
  }
  return out;
}

std::string LaurentPoly::pretty() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += e == 1 ? "q" : "q^{" + std::to_string(e) + "}";
  }
  return out;
}

}  // namespace gridhfk
