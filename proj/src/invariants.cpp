#include "gridhfk/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "gridhfk/errors.hpp"

namespace gridhfk {

namespace {

void require_knot(const GradedGenerators& gg) {
  if (gg.components != 1 || !gg.absolute_A) throw InputError("a knot is required, got a link");
}

}  // namespace

BigradedRanks hfk_hat(const GradedGenerators& gg, const ComputeOptions& opt) {
  require_knot(gg);
  return v_divide(f2_homology(build_tilde(gg, opt.jobs), opt.homology), gg.grid.size() - 1);
}

BigradedRanks hfk_hat(const GridDiagram& g, const ComputeOptions& opt) {
  if (link_components(g).count != 1) throw InputError("a knot is required, got a link");
  return hfk_hat(assign_gradings(g, opt), opt);
}

UModuleSummary hfk_minus(const GradedGenerators& gg, const ComputeOptions& opt) {
  require_knot(gg);
  return v_divide(fU_module_homology(build_minus_collapsed(gg, opt.jobs)), gg.grid.size() - 1);
}

int genus(const BigradedRanks& r) {
  if (r.empty()) throw InvariantViolation("genus of empty homology");
  int g = 0;
  for (const auto& [gr, v] : r) g = std::max(g, gr.A);
  return g;
}

bool is_fibered(const BigradedRanks& r) {
  const int g = genus(r);
  std::int64_t top = 0;
  for (const auto& [gr, v] : r) {
    if (gr.A == g) top += v;
  }
  return top == 1;
}

int tau(const UModuleSummary& m) {
  if (m.towers.size() != 1) {
    throw InvariantViolation("tau needs exactly one tower, found " + std::to_string(m.towers.size()));
  }
  return -m.towers.front().A;
}

bool detect_unknot(const BigradedRanks& r) { return r.size() == 1 && r.begin()->first == Bigrading{0, 0} && r.begin()->second == 1; }

bool symmetry_check(const BigradedRanks& r) {
  for (const auto& [g, v] : r) {
    auto it = r.find({g.M - 2 * g.A, -g.A});
    if (it == r.end() || it->second != v) return false;
  }
  return true;
}

LaurentPoly euler_polynomial(const BigradedRanks& r) {
  std::map<int, std::int64_t> c;
  for (const auto& [g, v] : r) c[g.A] += (g.M % 2 == 0) ? v : -v;
  return LaurentPoly::from_coefficients(c);
}

bool euler_check(const BigradedRanks& r, const LaurentPoly& delta, int k) {
  const LaurentPoly f = LaurentPoly(1) - LaurentPoly::monomial(1, -1);
  return euler_polynomial(r) == f.pow(k - 1) * delta;
}

BigradedRanks mirror_ranks(const BigradedRanks& r) {
  BigradedRanks out;
  for (const auto& [g, v] : r) out[{-g.M, -g.A}] = v;
  return out;
}

BigradedRanks maslov_flip(const BigradedRanks& r) {
  BigradedRanks out;
  for (const auto& [g, v] : r) out[{-g.M, g.A}] = v;
  return out;
}

BigradedRanks tensor_product(const BigradedRanks& a, const BigradedRanks& b) {
  BigradedRanks out;
  for (const auto& [ga, va] : a) {
    for (const auto& [gb, vb] : b) out[{ga.M + gb.M, ga.A + gb.A}] += va * vb;
  }
  return out;
}

BigradedRanks alternating_model(const LaurentPoly& delta, int sigma) {
  if (sigma % 2 != 0) throw InputError("signature must be even");
  BigradedRanks out;
  for (const auto& [s, a] : delta.terms()) out[{s + sigma / 2, s}] = std::llabs(a);
  return out;
}

Staircase staircase_data(const LaurentPoly& delta) {
  if (delta.is_zero()) throw InputError("zero polynomial is not an Alexander polynomial");
  const auto& terms = delta.terms();
  if (terms.size() % 2 != 1) throw InputError("L-space form needs an odd number of terms");
  Staircase st;
  st.k = static_cast<int>(terms.size() / 2);
  int idx = -st.k;
  for (const auto& [e, c] : terms) {
    const int expected = ((st.k - idx) % 2 == 0) ? 1 : -1;
    if (c != expected) throw InputError("coefficients are not alternating +-1 ending in +1");
    st.n.push_back(e);
    ++idx;
  }
  for (int j = 0; j <= 2 * st.k; ++j) {
    if (st.n[j] != -st.n[2 * st.k - j]) throw InputError("exponents are not symmetric");
  }
  st.delta.assign(2 * st.k + 1, 0);
  for (int j = st.k - 1; j >= -st.k; --j) {
    const int at = j + st.k;
    if ((st.k - j) % 2 == 1) {
      st.delta[at] = st.delta[at + 1] - 2 * (st.n[at + 1] - st.n[at]) + 1;
    } else {
      st.delta[at] = st.delta[at + 1] - 1;
    }
  }
  return st;
}

BigradedRanks staircase_ranks(const LaurentPoly& delta) {
  const Staircase st = staircase_data(delta);
  BigradedRanks out;
  for (std::size_t j = 0; j < st.n.size(); ++j) out[{st.delta[j], st.n[j]}] += 1;
  return out;
}

BigradedRanks staircase_ranks_as_printed(const LaurentPoly& delta) {
  const Staircase st = staircase_data(delta);
  BigradedRanks out;
  for (std::size_t j = 0; j < st.n.size(); ++j) out[{st.n[j], st.delta[j]}] += 1;
  return out;
}

KnotReport knot_report(const GridDiagram& g, const ComputeOptions& opt, bool with_minus) {
  if (link_components(g).count != 1) throw InputError("a knot is required, got a link");
  const GradedGenerators gg = assign_gradings(g, opt);
  KnotReport rep{g, gg.size(), {}, {}, {}, 0, false, 0, false, gg.delta, {}};
  rep.tilde = f2_homology(build_tilde(gg, opt.jobs), opt.homology);
  rep.hfk_hat = v_divide(rep.tilde, g.size() - 1);
  rep.genus = genus(rep.hfk_hat);
  rep.fibered = is_fibered(rep.hfk_hat);
  rep.unknot = detect_unknot(rep.hfk_hat);
  rep.checks["euler_chain"] = euler_polynomial(gg.M, gg.A) ==
                              (LaurentPoly(1) - LaurentPoly::monomial(1, -1)).pow(g.size() - 1) * gg.delta;
  rep.checks["euler_hat"] = euler_check(rep.hfk_hat, gg.delta);
  rep.checks["symmetry"] = symmetry_check(rep.hfk_hat);
  rep.checks["v_division"] = true;
  if (with_minus) {
    rep.hfk_minus = hfk_minus(gg, opt);
    rep.tau = tau(rep.hfk_minus);
  }
  return rep;
}

std::string ranks_table(const BigradedRanks& r) {
  std::ostringstream os;
  os << "     M      A   rank\n";
  for (auto it = r.rbegin(); it != r.rend(); ++it) {
    char line[64];
    std::snprintf(line, sizeof line, "%6d %6d %6lld\n", it->first.M, it->first.A, static_cast<long long>(it->second));
    os << line;
  }
  return os.str();
}

}  // namespace gridhfk
