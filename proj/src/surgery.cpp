#include "gridhfk/surgery.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

#include "gridhfk/errors.hpp"

namespace gridhfk {

namespace {

int floor_mod(int a, int m) { return ((a % m) + m) % m; }

struct Piece {
  bool is_a;
  int s;
  int offset;
};

// Builds the direct sum of pieces with their internal differentials and,
// optionally, v_s: A_s -> B_s and h_s: A_s -> B_{s+p} between listed pieces.
class ChainBuilder {
 public:
  ChainBuilder(const ModelComplex& m, Flavor flavor, bool truncate, int top) : m_(m), flavor_(flavor), truncate_(truncate), top_(top) {}

  bool in_region(const Piece& pc, int x, int i) const {
    const int j = i + m_.generators[x].A;
    if (pc.is_a) {
      const int r = std::max(i, j - pc.s);
      return flavor_ == Flavor::hat ? r == 0 : r >= 0;
    }
    return flavor_ == Flavor::hat ? i == 0 : i >= 0;
  }

  int degree(const Piece& pc, int x, int i) const { return pc.offset + m_.generators[x].M + 2 * i; }

  void add_piece(const Piece& pc) {
    const int idx = static_cast<int>(pieces_.size());
    pieces_.push_back(pc);
    for (int x = 0; x < static_cast<int>(m_.generators.size()); ++x) {
      const int A = m_.generators[x].A;
      const int i0 = pc.is_a ? std::min(0, pc.s - A) : 0;
      if (flavor_ == Flavor::hat) {
        if (in_region(pc, x, i0)) add(idx, x, i0);
        continue;
      }
      for (int i = i0; !truncate_ || degree(pc, x, i) <= top_; ++i) {
        if (in_region(pc, x, i)) add(idx, x, i);
      }
    }
  }

  void finish(int p, bool with_v, bool with_h) {
    FiniteComplex& c = c_;
    c.d.assign(c.size(), {});
    c.u.assign(c.size(), -1);
    for (std::size_t e = 0; e < keys_.size(); ++e) {
      const auto [pi, x, i] = keys_[e];
      const Piece& pc = pieces_[pi];
      std::vector<std::uint32_t> targets;
      for (const auto& a : m_.arrows) {
        if (a.from != x) continue;
        push(targets, lookup(pi, a.to, i - a.nw));
      }
      if (pc.is_a) {
        if (with_v) {
          const int b = find_piece(false, pc.s);
          if (b >= 0) push(targets, lookup(b, x, i));
        }
        const int j = i + m_.generators[x].A;
        if (with_h && j >= pc.s) {
          const int b = find_piece(false, pc.s + p);
          if (b >= 0) push(targets, lookup(b, m_.flip[x], j - pc.s));
        }
      }
      std::sort(targets.begin(), targets.end());
      std::vector<std::uint32_t> reduced;
      for (std::size_t k = 0; k < targets.size();) {
        std::size_t l = k;
        while (l < targets.size() && targets[l] == targets[k]) ++l;
        if ((l - k) % 2 == 1) reduced.push_back(targets[k]);
        k = l;
      }
      for (auto t : reduced) {
        if (c.degree[t] != c.degree[e] - 1) throw InvariantViolation("cone differential does not lower degree by one");
      }
      c.d[e] = std::move(reduced);
      if (flavor_ == Flavor::plus) c.u[e] = lookup(pi, x, i - 1);
    }
  }

  FiniteComplex take() { return std::move(c_); }

 private:
  void add(int pi, int x, int i) {
    const Piece& pc = pieces_[pi];
    index_[{pi, x, i}] = static_cast<std::uint32_t>(keys_.size());
    keys_.emplace_back(pi, x, i);
    c_.degree.push_back(degree(pc, x, i));
    c_.label.push_back(std::string(pc.is_a ? "A_" : "B_") + std::to_string(pc.s) + "[" + m_.generators[x].id +
                       ",i=" + std::to_string(i) + "]");
  }

  std::int64_t lookup(int pi, int x, int i) const {
    if (!in_region(pieces_[pi], x, i)) return -1;
    auto it = index_.find({pi, x, i});
    return it == index_.end() ? -1 : it->second;
  }

  static void push(std::vector<std::uint32_t>& v, std::int64_t t) {
    if (t >= 0) v.push_back(static_cast<std::uint32_t>(t));
  }

  int find_piece(bool is_a, int s) const {
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
      if (pieces_[k].is_a == is_a && pieces_[k].s == s) return static_cast<int>(k);
    }
    return -1;
  }

  const ModelComplex& m_;
  Flavor flavor_;
  bool truncate_;
  int top_;
  std::vector<Piece> pieces_;
  std::vector<std::tuple<int, int, int>> keys_;
  std::map<std::tuple<int, int, int>, std::uint32_t> index_;
  FiniteComplex c_;
};

// Highest degree of an element at the bottom of any piece.
int base_top(const ModelComplex& m, const std::vector<Piece>& pieces) {
  int top = 0;
  bool first = true;
  for (const auto& pc : pieces) {
    for (const auto& g : m.generators) {
      const int i0 = pc.is_a ? std::min(0, pc.s - g.A) : 0;
      const int d = pc.offset + g.M + 2 * std::max(i0, 0);
      top = first ? d : std::max(top, d);
      first = false;
    }
  }
  return top;
}

using Bits = std::vector<std::uint64_t>;

// Row-echelon basis over F2, kept reduced by leading bit.
class Echelon {
 public:
  explicit Echelon(std::size_t width) : words_((width + 63) / 64) {}

  // Returns true if v was independent of the current span.
  bool insert(Bits v) {
    for (;;) {
      const auto lead = leading(v);
      if (lead < 0) return false;
      auto it = rows_.find(lead);
      if (it == rows_.end()) {
        rows_.emplace(lead, std::move(v));
        return true;
      }
      for (std::size_t w = 0; w < words_; ++w) v[w] ^= it->second[w];
    }
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  static std::int64_t leading(const Bits& v) {
    for (std::size_t w = 0; w < v.size(); ++w) {
      if (v[w]) return static_cast<std::int64_t>(w * 64 + std::countr_zero(v[w]));
    }
    return -1;
  }
  std::size_t words_;
  std::map<std::int64_t, Bits> rows_;
};

struct DegreeData {
  std::vector<std::uint32_t> elems;
  std::map<std::uint32_t, std::size_t> local;
  std::vector<Bits> cycles;  // basis of ker d, in local coordinates
  std::vector<Bits> boundaries;  // spanning set of im d from the degree above
  std::size_t boundary_rank = 0;
};

std::map<int, DegreeData> degree_data(const FiniteComplex& c) {
  std::map<int, DegreeData> by;
  for (std::uint32_t e = 0; e < c.size(); ++e) {
    auto& dd = by[c.degree[e]];
    dd.local[e] = dd.elems.size();
    dd.elems.push_back(e);
  }
  auto vec_in = [&by](int deg, const std::vector<std::uint32_t>& targets) {
    auto& dd = by[deg];
    Bits v((dd.elems.size() + 63) / 64, 0);
    for (auto t : targets) {
      const auto k = dd.local.at(t);
      v[k / 64] ^= std::uint64_t{1} << (k % 64);
    }
    return v;
  };
  for (auto& [deg, dd] : by) {
    const std::size_t n = dd.elems.size();
    const std::size_t below = by.count(deg - 1) ? by[deg - 1].elems.size() : 0;
    // Gaussian elimination on [d e_k | e_k] to read off the kernel.
    std::vector<std::pair<Bits, Bits>> rows;
    for (std::size_t k = 0; k < n; ++k) {
      Bits img = below ? vec_in(deg - 1, c.d[dd.elems[k]]) : Bits{};
      Bits id((n + 63) / 64, 0);
      id[k / 64] |= std::uint64_t{1} << (k % 64);
      rows.emplace_back(std::move(img), std::move(id));
    }
    std::map<std::int64_t, std::size_t> pivots;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (;;) {
        std::int64_t lead = -1;
        for (std::size_t w = 0; w < rows[r].first.size(); ++w) {
          if (rows[r].first[w]) {
            lead = static_cast<std::int64_t>(w * 64 + std::countr_zero(rows[r].first[w]));
            break;
          }
        }
        if (lead < 0) {
          dd.cycles.push_back(rows[r].second);
          break;
        }
        auto it = pivots.find(lead);
        if (it == pivots.end()) {
          pivots.emplace(lead, r);
          break;
        }
        const auto& other = rows[it->second];
        for (std::size_t w = 0; w < other.first.size(); ++w) rows[r].first[w] ^= other.first[w];
        for (std::size_t w = 0; w < other.second.size(); ++w) rows[r].second[w] ^= other.second[w];
      }
    }
  }
  for (auto& [deg, dd] : by) {
    auto above = by.find(deg + 1);
    if (above == by.end()) continue;
    Echelon ech(dd.elems.size());
    for (auto e : above->second.elems) {
      Bits v = vec_in(deg, c.d[e]);
      dd.boundaries.push_back(v);
      ech.insert(std::move(v));
    }
    dd.boundary_rank = ech.rank();
  }
  return by;
}

}  // namespace

FiniteComplex stable_complex(const ModelComplex& m, int s, Flavor flavor, int N) {
  if (flavor == Flavor::plus && N < 0) throw InputError("cutoff must be non-negative");
  const std::vector<Piece> pieces{{true, s, 0}};
  ChainBuilder b(m, flavor, flavor == Flavor::plus, base_top(m, pieces) + 2 * N);
  b.add_piece(pieces[0]);
  b.finish(0, false, false);
  return b.take();
}

HomologySummary summarize_hat(const FiniteComplex& c) {
  Complex cx;
  cx.M = c.degree;
  cx.A.assign(c.size(), 0);
  for (std::uint32_t e = 0; e < c.size(); ++e) {
    for (auto t : c.d[e]) cx.arrows.push_back({e, t, 0, 0});
  }
  normalize_arrows(cx.arrows);
  HomologySummary out;
  out.flavor = Flavor::hat;
  for (const auto& [g, r] : f2_homology(cx)) {
    out.degree_ranks[g.M] = r;
    out.hat_rank += r;
  }
  return out;
}

HomologySummary summarize_plus(const FiniteComplex& c, int top_degree) {
  auto by = degree_data(c);
  HomologySummary out;
  out.flavor = Flavor::plus;
  const int exact_top = top_degree - 1;
  auto h = [&by](int d) -> std::int64_t {
    auto it = by.find(d);
    if (it == by.end()) return 0;
    return static_cast<std::int64_t>(it->second.cycles.size()) - static_cast<std::int64_t>(it->second.boundary_rank);
  };
  for (const auto& [deg, dd] : by) {
    if (deg > exact_top) continue;
    const auto r = h(deg);
    if (r) out.degree_ranks[deg] = r;
  }
  out.towers = h(exact_top) + h(exact_top - 1);
  for (const auto& [deg, dd] : by) {
    if (deg > exact_top) continue;
    const int from = (exact_top - deg) % 2 == 0 ? exact_top : exact_top - 1;
    std::int64_t tower_part = 0;
    auto src = by.find(from);
    if (src != by.end() && from >= deg) {
      // rank of U^K on homology: span(B_d + U^K Z_from) - rank B_d
      Echelon ech(dd.elems.size());
      for (const auto& b : dd.boundaries) ech.insert(b);
      const std::size_t base = ech.rank();
      const int K = (from - deg) / 2;
      for (const auto& z : src->second.cycles) {
        Bits v((dd.elems.size() + 63) / 64, 0);
        for (std::size_t k = 0; k < src->second.elems.size(); ++k) {
          if (!((z[k / 64] >> (k % 64)) & 1)) continue;
          std::int64_t e = src->second.elems[k];
          for (int step = 0; step < K && e >= 0; ++step) e = c.u[e];
          if (e < 0) continue;
          const auto li = dd.local.at(static_cast<std::uint32_t>(e));
          v[li / 64] ^= std::uint64_t{1} << (li % 64);
        }
        ech.insert(std::move(v));
      }
      tower_part = static_cast<std::int64_t>(ech.rank() - base);
    }
    out.excess += h(deg) - tower_part;
  }
  return out;
}

namespace {

template <class Build>
HomologySummary stabilized_plus(int start, const SurgeryOptions& opt, Build build) {
  HomologySummary prev;
  bool have_prev = false;
  for (int N = start; N <= opt.max_cutoff; ++N) {
    auto [chain, top] = build(N);
    HomologySummary cur = summarize_plus(chain, top);
    cur.cutoff = N;
    if (have_prev && cur.towers == prev.towers && cur.excess == prev.excess) return prev;
    prev = cur;
    have_prev = true;
  }
  throw InvariantViolation("plus-flavor cutoff did not stabilize below N = " + std::to_string(opt.max_cutoff));
}

}  // namespace

HomologySummary large_surgery(const ModelComplex& m, int s, Flavor flavor, const SurgeryOptions& opt) {
  if (flavor == Flavor::hat) return summarize_hat(stable_complex(m, s, Flavor::hat));
  const std::vector<Piece> pieces{{true, s, 0}};
  const int d0 = base_top(m, pieces);
  return stabilized_plus(m.maslov_spread() + 1, opt, [&](int N) {
    return std::pair{stable_complex(m, s, Flavor::plus, N), d0 + 2 * N};
  });
}

UModuleSummary stable_minus_homology(const ModelComplex& m, int s) {
  // Top element of each generator in max(i, j - s) <= 0.
  const int n = static_cast<int>(m.generators.size());
  std::vector<int> top(n);
  Complex c;
  for (int x = 0; x < n; ++x) {
    top[x] = std::min(0, s - m.generators[x].A);
    c.M.push_back(m.generators[x].M + 2 * top[x]);
    c.A.push_back(0);
  }
  for (const auto& a : m.arrows) {
    const int e = a.nw + top[a.to] - top[a.from];
    if (e < 0) throw InvariantViolation("A_s^- is not closed under the differential");
    c.arrows.push_back({static_cast<std::uint32_t>(a.from), static_cast<std::uint32_t>(a.to),
                        static_cast<std::uint8_t>(e), 0});
  }
  normalize_arrows(c.arrows);
  return fU_module_homology(c, false);
}

int default_smax(const ModelComplex& m, int p) { return m.max_abs_A() + std::abs(p); }

namespace {

// a_s for s = s0 + p t with s0 = s mod |p|; satisfies a_{s+p} = a_s + 2s.
int a_offset(int s, int p) {
  const int s0 = floor_mod(s, std::abs(p));
  const int t = (s - s0) / p;
  return 2 * s0 * t + p * t * (t - 1);
}

bool acyclic_cone(const ModelComplex& m, int s, bool use_v, int p) {
  ChainBuilder b(m, Flavor::hat, false, 0);
  const int a = 1;
  b.add_piece({true, s, a});
  if (use_v) {
    b.add_piece({false, s, a - 1});
    b.finish(p, true, false);
  } else {
    b.add_piece({false, s + p, a - 1 + 2 * s});
    b.finish(p, false, true);
  }
  return summarize_hat(b.take()).hat_rank == 0;
}

}  // namespace

bool v_is_quasi_iso(const ModelComplex& m, int s) { return acyclic_cone(m, s, true, 1); }
bool h_is_quasi_iso(const ModelComplex& m, int s) { return acyclic_cone(m, s, false, 1); }

SurgeryCone surgery_cone(const ModelComplex& m, int p, Flavor flavor, int smax) {
  if (p == 0) throw InputError("surgery coefficient must be nonzero");
  if (smax < 0) throw InputError("truncation radius must be non-negative");
  auto errs = model_errors(m);
  if (!errs.empty()) throw ModelError(errs);
  const int maxA = m.max_abs_A();
  for (int s = smax + 1; s <= maxA; ++s) {
    if (!v_is_quasi_iso(m, s)) {
      throw InputError("truncation radius " + std::to_string(smax) + " too small: v_" + std::to_string(s) +
                       " is not a quasi-isomorphism");
    }
  }
  for (int s = -maxA; s < -smax; ++s) {
    if (!h_is_quasi_iso(m, s)) {
      throw InputError("truncation radius " + std::to_string(smax) + " too small: h_" + std::to_string(s) +
                       " is not a quasi-isomorphism");
    }
  }
  SurgeryCone cone{m, p, flavor, smax, {}};
  const int q = std::abs(p);
  cone.classes.resize(q);
  for (int s = -smax; s <= smax; ++s) cone.classes[floor_mod(s, q)].push_back({true, s, a_offset(s, p)});
  const int lo = p > 0 ? -smax + p : -smax - q;
  for (int t = lo; t <= smax; ++t) cone.classes[floor_mod(t, q)].push_back({false, t, a_offset(t, p) - 1});
  return cone;
}

FiniteComplex cone_complex(const SurgeryCone& cone, int cls, int D) {
  ChainBuilder b(cone.model, cone.flavor, cone.flavor == Flavor::plus, D);
  for (const auto& pc : cone.classes.at(cls)) b.add_piece({pc.is_a, pc.s, pc.offset});
  b.finish(cone.p, true, true);
  return b.take();
}

std::vector<HomologySummary> surgery_homology(const SurgeryCone& cone, const SurgeryOptions& opt) {
  std::vector<HomologySummary> out;
  for (int cls = 0; cls < static_cast<int>(cone.classes.size()); ++cls) {
    if (cone.flavor == Flavor::hat) {
      out.push_back(summarize_hat(cone_complex(cone, cls)));
      continue;
    }
    std::vector<Piece> pieces;
    for (const auto& pc : cone.classes[cls]) pieces.push_back({pc.is_a, pc.s, pc.offset});
    const int d0 = base_top(cone.model, pieces);
    out.push_back(stabilized_plus(cone.model.maslov_spread() + 1, opt, [&](int N) {
      return std::pair{cone_complex(cone, cls, d0 + 2 * N), d0 + 2 * N};
    }));
  }
  return out;
}

}  // namespace gridhfk
