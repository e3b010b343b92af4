#include "gridhfk/homology.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <tuple>

#include "gridhfk/errors.hpp"
#include "gridhfk/parallel.hpp"

namespace gridhfk {

void normalize_arrows(std::vector<Arrow>& arrows) {
  std::sort(arrows.begin(), arrows.end());
  std::vector<Arrow> out;
  out.reserve(arrows.size());
  for (std::size_t i = 0; i < arrows.size();) {
    std::size_t j = i;
    while (j < arrows.size() && arrows[j] == arrows[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(arrows[i]);
    i = j;
  }
  arrows.swap(out);
}

namespace {

std::vector<std::size_t> offsets_by_source(const Complex& c) {
  std::vector<std::size_t> off(c.size() + 1, 0);
  for (const Arrow& a : c.arrows) {
    if (a.from >= c.size() || a.to >= c.size()) throw InvariantViolation("arrow endpoint out of range");
    ++off[a.from + 1];
  }
  for (std::size_t i = 0; i < c.size(); ++i) off[i + 1] += off[i];
  if (!std::is_sorted(c.arrows.begin(), c.arrows.end())) throw InvariantViolation("arrows are not sorted");
  return off;
}

std::size_t dense_rank(const std::vector<std::vector<std::uint32_t>>& columns, std::size_t rows) {
  const std::size_t words = (rows + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pivot_col(rows);
  std::vector<std::uint64_t> col(words);
  std::size_t rank = 0;
  for (const auto& entries : columns) {
    std::fill(col.begin(), col.end(), 0);
    for (auto r : entries) col[r / 64] ^= std::uint64_t{1} << (r % 64);
    std::size_t w = 0;
    for (;;) {
      while (w < words && col[w] == 0) ++w;
      if (w == words) break;
      const std::size_t p = w * 64 + std::countr_zero(col[w]);
      if (pivot_col[p].empty()) {
        pivot_col[p] = col;
        ++rank;
        break;
      }
      const auto& pc = pivot_col[p];
      for (std::size_t k = w; k < words; ++k) col[k] ^= pc[k];
    }
  }
  return rank;
}

std::size_t sparse_rank(std::vector<std::vector<std::uint32_t>> columns, std::size_t rows) {
  std::vector<std::int64_t> pivot(rows, -1);
  std::vector<std::uint32_t> scratch;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    auto& col = columns[c];
    while (!col.empty()) {
      const auto p = col.front();
      if (pivot[p] < 0) {
        pivot[p] = static_cast<std::int64_t>(c);
        ++rank;
        break;
      }
      const auto& other = columns[pivot[p]];
      scratch.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                    std::back_inserter(scratch));
      col.swap(scratch);
    }
  }
  return rank;
}

}  // namespace

std::size_t f2_rank(std::vector<std::vector<std::uint32_t>> columns, std::size_t rows,
                    std::size_t dense_threshold) {
  if (columns.empty() || rows == 0) return 0;
  for (auto& col : columns) {
    if (!std::is_sorted(col.begin(), col.end())) std::sort(col.begin(), col.end());
    if (!col.empty() && col.back() >= rows) throw InvariantViolation("matrix entry outside the row range");
  }
  if (columns.size() * rows <= dense_threshold) return dense_rank(columns, rows);
  return sparse_rank(std::move(columns), rows);
}

void check_d_squared_f2(const Complex& c) {
  const auto off = offsets_by_source(c);
  std::vector<std::uint32_t> hits;
  for (std::size_t x = 0; x < c.size(); ++x) {
    hits.clear();
    for (std::size_t i = off[x]; i < off[x + 1]; ++i) {
      const auto y = c.arrows[i].to;
      for (std::size_t j = off[y]; j < off[y + 1]; ++j) hits.push_back(c.arrows[j].to);
    }
    std::sort(hits.begin(), hits.end());
    for (std::size_t i = 0; i < hits.size();) {
      std::size_t j = i;
      while (j < hits.size() && hits[j] == hits[i]) ++j;
      if ((j - i) % 2 == 1) {
        throw InvariantViolation("d^2 != 0: generator " + std::to_string(x) + " reaches " +
                                 std::to_string(hits[i]) + " an odd number of times");
      }
      i = j;
    }
  }
}

namespace {

void check_d_squared_labels(const Complex& c, bool with_nz) {
  const auto off = offsets_by_source(c);
  std::vector<std::tuple<std::uint32_t, int, int>> hits;
  for (std::size_t x = 0; x < c.size(); ++x) {
    hits.clear();
    for (std::size_t i = off[x]; i < off[x + 1]; ++i) {
      const Arrow& a = c.arrows[i];
      for (std::size_t j = off[a.to]; j < off[a.to + 1]; ++j) {
        hits.emplace_back(c.arrows[j].to, a.nw + c.arrows[j].nw, with_nz ? a.nz + c.arrows[j].nz : 0);
      }
    }
    std::sort(hits.begin(), hits.end());
    for (std::size_t i = 0; i < hits.size();) {
      std::size_t j = i;
      while (j < hits.size() && hits[j] == hits[i]) ++j;
      if ((j - i) % 2 == 1) {
        throw InvariantViolation(std::string("d^2 != 0 over ") + (with_nz ? "F2[U, V]" : "F2[U]") + " at generator " +
                                 std::to_string(x));
      }
      i = j;
    }
  }
}

}  // namespace

void check_d_squared_u(const Complex& c) { check_d_squared_labels(c, false); }
void check_d_squared_uv(const Complex& c) { check_d_squared_labels(c, true); }

BigradedRanks f2_homology(const Complex& c, const HomologyOptions& opt) {
  if (c.A.size() != c.size()) throw InvariantViolation("complex grading arrays differ in length");
  if (opt.check_d_squared) check_d_squared_f2(c);
  const auto off = offsets_by_source(c);

  std::map<Bigrading, std::vector<std::uint32_t>> buckets;
  for (std::uint32_t x = 0; x < c.size(); ++x) buckets[{c.M[x], c.A[x]}].push_back(x);
  std::vector<std::uint32_t> local(c.size());
  for (const auto& [g, ids] : buckets) {
    for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<std::uint32_t>(i);
  }

  std::vector<std::pair<Bigrading, const std::vector<std::uint32_t>*>> blocks;
  for (const auto& [g, ids] : buckets) blocks.emplace_back(g, &ids);
  std::vector<std::size_t> rank_out(blocks.size(), 0);

  // Largest blocks first so they do not end up last on one worker.
  std::vector<std::size_t> order(blocks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return blocks[a].second->size() > blocks[b].second->size(); });

  parallel_chunks(order.size(), 1, opt.jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const std::size_t b = order[k];
      const Bigrading g = blocks[b].first;
      const auto target = buckets.find({g.M - 1, g.A});
      std::vector<std::vector<std::uint32_t>> cols;
      cols.reserve(blocks[b].second->size());
      bool any = false;
      for (auto x : *blocks[b].second) {
        std::vector<std::uint32_t> col;
        for (std::size_t i = off[x]; i < off[x + 1]; ++i) {
          const auto y = c.arrows[i].to;
          if (c.M[y] != g.M - 1 || c.A[y] != g.A) {
            throw InvariantViolation("differential is not homogeneous of degree (-1, 0)");
          }
          col.push_back(local[y]);
        }
        any = any || !col.empty();
        cols.push_back(std::move(col));
      }
      if (!any) continue;
      rank_out[b] = f2_rank(std::move(cols), target->second.size(), opt.dense_threshold);
    }
  });

  std::map<Bigrading, std::size_t> out_rank;
  for (std::size_t b = 0; b < blocks.size(); ++b) out_rank[blocks[b].first] = rank_out[b];
  BigradedRanks result;
  for (const auto& [g, ids] : buckets) {
    std::int64_t r = static_cast<std::int64_t>(ids.size()) - static_cast<std::int64_t>(out_rank[g]);
    auto above = out_rank.find({g.M + 1, g.A});
    if (above != out_rank.end()) r -= static_cast<std::int64_t>(above->second);
    if (r < 0) throw InvariantViolation("negative homology rank");
    if (r > 0) result[g] = r;
  }
  return result;
}

namespace {

// Sparse F2 matrix of a homogeneous F2[U] complex; the U power of an entry is
// implied by the gradings of its endpoints.
class SparseDifferential {
 public:
  explicit SparseDifferential(std::size_t n) : out_(n), in_(n) {}

  void toggle(std::uint32_t x, std::uint32_t y) {
    arrows_ += flip(out_[x], y) ? 1 : -1;
    flip(in_[y], x);
  }
  std::int64_t arrow_count() const { return arrows_; }
  const std::vector<std::uint32_t>& out(std::uint32_t x) const { return out_[x]; }
  const std::vector<std::uint32_t>& in(std::uint32_t y) const { return in_[y]; }

 private:
  // Returns true if e was inserted.
  static bool flip(std::vector<std::uint32_t>& v, std::uint32_t e) {
    auto it = std::lower_bound(v.begin(), v.end(), e);
    if (it != v.end() && *it == e) {
      v.erase(it);
      return false;
    }
    v.insert(it, e);
    return true;
  }
  std::int64_t arrows_ = 0;
  std::vector<std::vector<std::uint32_t>> out_;
  std::vector<std::vector<std::uint32_t>> in_;
};

}  // namespace

UModuleSummary fU_module_homology(const Complex& c, bool check_alexander) {
  if (c.A.size() != c.size()) throw InvariantViolation("complex grading arrays differ in length");
  const std::size_t n = c.size();
  SparseDifferential d(n);
  for (const Arrow& a : c.arrows) {
    if (c.M[a.from] - c.M[a.to] != 1 - 2 * a.nw) {
      throw InvariantViolation("arrow violates M(x) - M(y) = 1 - 2 n_w");
    }
    if (check_alexander && c.A[a.from] - c.A[a.to] != -a.nw) {
      throw InvariantViolation("arrow violates A(x) - A(y) = -n_w");
    }
  }
  check_d_squared_u(c);
  for (const Arrow& a : c.arrows) d.toggle(a.from, a.to);

  auto exponent = [&c](std::uint32_t x, std::uint32_t y) { return (1 - (c.M[x] - c.M[y])) / 2; };

  UModuleSummary result;
  std::vector<char> alive(n, 1);

  int level = 0;
  while (d.arrow_count() > 0) {
    bool found = false;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (!alive[x]) continue;
      std::int64_t pick = -1;
      for (auto y : d.out(x)) {
        if (exponent(x, y) == level) {
          pick = y;
          break;
        }
      }
      if (pick < 0) continue;
      const auto y = static_cast<std::uint32_t>(pick);
      found = true;

      // Rebase y so that d(x) = U^k y exactly.
      const std::vector<std::uint32_t> others_of_x = d.out(x);
      for (auto z : others_of_x) {
        if (z == y) continue;
        const std::vector<std::uint32_t> into_y = d.in(y);
        for (auto w : into_y) d.toggle(w, z);
        const std::vector<std::uint32_t> from_z = d.out(z);
        for (auto t : from_z) d.toggle(y, t);
      }
      // Rebase every other w hitting y as w + U^(k_w - k) x.
      const std::vector<std::uint32_t> into_y = d.in(y);
      for (auto w : into_y) {
        if (w == x) continue;
        const std::vector<std::uint32_t> into_w = d.in(w);
        for (auto v : into_w) d.toggle(v, x);
        d.toggle(w, y);
      }
      if (d.out(x).size() != 1 || d.in(y).size() != 1 || !d.out(y).empty() || !d.in(x).empty()) {
        throw InvariantViolation("cancellation did not split off the pair; d^2 != 0?");
      }
      d.toggle(x, y);
      alive[x] = alive[y] = 0;
      if (level > 0) result.torsions.push_back({{c.M[y], c.A[y]}, level});
      if (d.arrow_count() == 0) break;
    }
    if (d.arrow_count() == 0) break;
    if (!found) {
      int next = -1;
      for (std::uint32_t x = 0; x < n; ++x) {
        for (auto y : d.out(x)) {
          const int k = exponent(x, y);
          if (k < level) throw InvariantViolation("U exponent decreased during cancellation");
          if (next < 0 || k < next) next = k;
        }
      }
      level = next;
    }
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    if (alive[x]) result.towers.push_back({c.M[x], c.A[x]});
  }
  std::sort(result.towers.begin(), result.towers.end());
  std::sort(result.torsions.begin(), result.torsions.end());
  return result;
}

BigradedRanks v_divide(const BigradedRanks& p, int power) {
  if (power < 0) throw InvariantViolation("negative V power");
  BigradedRanks cur = p;
  for (int step = 0; step < power; ++step) {
    // q(M, A) = p(M, A) - q(M + 1, A + 1), walking each diagonal from the top.
    BigradedRanks q;
    for (auto it = cur.rbegin(); it != cur.rend(); ++it) {
      const Bigrading g = it->first;
      std::int64_t v = it->second;
      auto up = q.find({g.M + 1, g.A + 1});
      if (up != q.end()) v -= up->second;
      if (v < 0) throw InvariantViolation("V-division produced a negative rank");
      if (v > 0) q[g] = v;
    }
    BigradedRanks back;
    for (const auto& [g, v] : q) {
      back[g] += v;
      back[{g.M - 1, g.A - 1}] += v;
    }
    if (back != cur) throw InvariantViolation("rank polynomial is not divisible by (1 + m^-1 a^-1)");
    cur = std::move(q);
  }
  return cur;
}

UModuleSummary v_divide(const UModuleSummary& s, int power) {
  BigradedRanks towers;
  for (const auto& t : s.towers) ++towers[t];
  std::map<int, BigradedRanks> torsion_by_order;
  for (const auto& t : s.torsions) ++torsion_by_order[t.order][t.at];
  UModuleSummary out;
  for (const auto& [g, v] : v_divide(towers, power)) {
    for (std::int64_t i = 0; i < v; ++i) out.towers.push_back(g);
  }
  for (const auto& [order, ranks] : torsion_by_order) {
    for (const auto& [g, v] : v_divide(ranks, power)) {
      for (std::int64_t i = 0; i < v; ++i) out.torsions.push_back({g, order});
    }
  }
  std::sort(out.towers.begin(), out.towers.end());
  std::sort(out.torsions.begin(), out.torsions.end());
  return out;
}

std::int64_t total_rank(const BigradedRanks& r) {
  std::int64_t t = 0;
  for (const auto& [g, v] : r) t += v;
  return t;
}

}  // namespace gridhfk
