#include "gridhfk/complex.hpp"

#include <deque>

#include <json.hpp>

#include "gridhfk/alexander.hpp"
#include "gridhfk/errors.hpp"
#include "gridhfk/parallel.hpp"

namespace gridhfk {

namespace {

constexpr int kUnset = 1 << 30;

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <class Keep>
Complex build(const GradedGenerators& gg, int jobs, const std::vector<int>& A, Keep keep) {
  const std::uint32_t count = gg.size();
  const std::size_t chunk = 512;
  std::vector<std::vector<Arrow>> parts((count + chunk - 1) / chunk);
  parallel_chunks(count, chunk, jobs, [&](std::size_t begin, std::size_t end) {
    auto& out = parts[begin / chunk];
    for (std::size_t id = begin; id < end; ++id) {
      for_each_rectangle(gg.grid, *gg.gens, static_cast<std::uint32_t>(id), true, [&](const Rect& r) {
        if (keep(r)) out.push_back({r.from, r.to, r.o_count, r.x_count});
      });
    }
  });
  Complex c;
  c.M = gg.M;
  c.A = A;
  for (auto& p : parts) c.arrows.insert(c.arrows.end(), p.begin(), p.end());
  normalize_arrows(c.arrows);
  return c;
}

}  // namespace

void relative_gradings(const GridDiagram& g, const GeneratorSet& gens, std::vector<int>& M, std::vector<int>& A,
                       int jobs) {
  const std::uint32_t count = gens.size();
  M.assign(count, kUnset);
  A.assign(count, kUnset);
  M[0] = 0;
  A[0] = 0;
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for_each_rectangle(g, gens, x, false, [&](const Rect& r) {
      if (M[r.to] != kUnset) return;
      M[r.to] = M[x] - (1 + 2 * r.interior_count - 2 * r.o_count);
      A[r.to] = A[x] - (r.x_count - r.o_count);
      queue.push_back(r.to);
    });
  }
  for (std::uint32_t x = 0; x < count; ++x) {
    if (M[x] == kUnset) throw InvariantViolation("rectangle graph is disconnected");
  }
  parallel_chunks(count, 1024, jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t x = begin; x < end; ++x) {
      for_each_rectangle(g, gens, static_cast<std::uint32_t>(x), false, [&](const Rect& r) {
        if (M[r.from] - M[r.to] != 1 + 2 * r.interior_count - 2 * r.o_count ||
            A[r.from] - A[r.to] != r.x_count - r.o_count) {
          throw InvariantViolation("grading propagation is not path independent");
        }
      });
    }
  });
}

LaurentPoly euler_polynomial(const std::vector<int>& M, const std::vector<int>& A) {
  std::map<int, std::int64_t> coeffs;
  for (std::size_t i = 0; i < M.size(); ++i) coeffs[A[i]] += (M[i] % 2 == 0) ? 1 : -1;
  return LaurentPoly::from_coefficients(coeffs);
}

namespace {

GradedGenerators grade(const GridDiagram& g, const LaurentPoly* delta, const ComputeOptions& opt) {
  GradedGenerators gg{g, std::make_shared<GeneratorSet>(g.size(), opt.cap), {}, {}, false, 1, {}, {}};
  gg.components = link_components(g).count;
  relative_gradings(g, *gg.gens, gg.M, gg.A, opt.jobs);
  const int n = g.size();

  const Complex no_o = build_no_o(gg, opt.jobs);
  const BigradedRanks h = f2_homology(no_o, opt.homology);
  if (total_rank(h) != (std::int64_t{1} << (n - 1))) {
    throw InvariantViolation("no-O homology has rank " + std::to_string(total_rank(h)) + ", expected 2^" +
                             std::to_string(n - 1));
  }
  const int top = h.rbegin()->first.M;
  for (int j = 0; j < n; ++j) {
    auto it = h.find({top - j, 0});
    const std::int64_t r = it == h.end() ? 0 : it->second;
    if (r != binomial(n - 1, j)) throw InvariantViolation("no-O homology does not have the binomial profile");
  }
  for (auto& m : gg.M) m -= top;
  for (const auto& [gr, r] : h) gg.no_o_ranks[{gr.M - top, 0}] = r;

  if (gg.components != 1) return gg;
  gg.delta = delta ? *delta : alexander_polynomial(g);
  const LaurentPoly one_minus = LaurentPoly(1) - LaurentPoly::monomial(1, -1);
  const LaurentPoly target = one_minus.pow(n - 1) * gg.delta;
  const LaurentPoly chi = euler_polynomial(gg.M, gg.A);
  if (chi.is_zero()) throw InvariantViolation("chain-level Euler polynomial vanished");
  const int shift = target.max_degree() - chi.max_degree();
  if (chi.shifted(shift) != target) {
    throw InvariantViolation("no Alexander shift matches (1 - q^-1)^(n-1) * Delta");
  }
  for (auto& a : gg.A) a += shift;
  gg.absolute_A = true;
  return gg;
}

}  // namespace

GradedGenerators assign_gradings(const GridDiagram& g, const LaurentPoly& delta, const ComputeOptions& opt) {
  if (link_components(g).count != 1) throw InputError("absolute Alexander grading needs a knot, got a link");
  return grade(g, &delta, opt);
}

GradedGenerators assign_gradings(const GridDiagram& g, const ComputeOptions& opt) { return grade(g, nullptr, opt); }

Complex build_tilde(const GradedGenerators& gg, int jobs) {
  return build(gg, jobs, gg.A, [](const Rect& r) { return r.o_count == 0 && r.x_count == 0; });
}

Complex build_no_o(const GradedGenerators& gg, int jobs) {
  return build(gg, jobs, std::vector<int>(gg.size(), 0), [](const Rect& r) { return r.o_count == 0; });
}

Complex build_minus_collapsed(const GradedGenerators& gg, int jobs) {
  Complex c = build(gg, jobs, gg.A, [](const Rect& r) { return r.x_count == 0; });
  for (auto& a : c.arrows) a.nz = 0;
  return c;
}

Complex build_full_labeled(const GradedGenerators& gg, int jobs) {
  return build(gg, jobs, gg.A, [](const Rect&) { return true; });
}

std::string export_complex_json(const GradedGenerators& gg, const Complex& c, const std::string& flavor) {
  nlohmann::ordered_json doc;
  doc["grid"] = nlohmann::ordered_json::parse(serialize_grid_json(gg.grid));
  doc["flavor"] = flavor;
  doc["absolute_alexander"] = gg.absolute_A;
  auto& gens = doc["generators"] = nlohmann::ordered_json::array();
  for (std::uint32_t i = 0; i < c.size(); ++i) {
    nlohmann::ordered_json e;
    e["id"] = i;
    e["M"] = c.M[i];
    e["A"] = c.A[i];
    gens.push_back(std::move(e));
  }
  auto& arrows = doc["arrows"] = nlohmann::ordered_json::array();
  for (const auto& a : c.arrows) {
    nlohmann::ordered_json e;
    e["from"] = a.from;
    e["to"] = a.to;
    e["nw"] = a.nw;
    e["nz"] = a.nz;
    arrows.push_back(std::move(e));
  }
  return doc.dump(1);
}

}  // namespace gridhfk
