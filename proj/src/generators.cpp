#include "gridhfk/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "gridhfk/errors.hpp"

namespace gridhfk {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

GeneratorSet::GeneratorSet(int n, int cap) : n_(n) {
  if (n < 1) throw InputError("generator set needs n >= 1");
  if (n >= kHardSizeLimit) {
    throw CapExceeded("grid size " + std::to_string(n) + " is at or above the hard limit " +
                      std::to_string(kHardSizeLimit));
  }
  if (n > cap) {
    throw CapExceeded("grid size " + std::to_string(n) + " exceeds the generator cap " + std::to_string(cap));
  }
  count_ = static_cast<std::uint32_t>(factorial(n));
  perms_.resize(static_cast<std::size_t>(count_) * n);
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::size_t offset = 0;
  do {
    std::copy(p.begin(), p.end(), perms_.begin() + offset);
    offset += n;
  } while (std::next_permutation(p.begin(), p.end()));
  place_value_.resize(n);
  for (int i = 0; i < n; ++i) place_value_[i] = static_cast<std::uint32_t>(factorial(n - 1 - i));
}

std::uint32_t GeneratorSet::rank(std::span<const std::uint8_t> perm) const {
  std::uint32_t unused = (1u << n_) - 1;
  std::uint32_t r = 0;
  for (int i = 0; i < n_; ++i) {
    const std::uint32_t bit = 1u << perm[i];
    r += static_cast<std::uint32_t>(std::popcount(unused & (bit - 1))) * place_value_[i];
    unused &= ~bit;
  }
  return r;
}

namespace {

// Cyclic open interval (lo, hi) on Z/n; (a, a) is everything but a.
bool strictly_between(int v, int lo, int hi, int n) {
  const int d = (v - lo + n) % n;
  const int w = (hi - lo + n) % n;
  return d > 0 && (w == 0 ? true : d < w);
}

// Cyclic half-open interval [lo, hi).
bool in_half_open(int v, int lo, int hi, int n) {
  const int d = (v - lo + n) % n;
  const int w = (hi - lo + n) % n;
  return d < (w == 0 ? n : w);
}

}  // namespace

void for_each_rectangle(const GridDiagram& g, const GeneratorSet& gens, std::uint32_t id, bool empty_only,
                        const std::function<void(const Rect&)>& fn) {
  const int n = g.size();
  if (gens.n() != n) throw InputError("generator set does not match the grid size");
  const auto x = gens.perm(id);
  std::uint8_t y[16];
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const int bottom = x[a];
      const int top = x[b];
      int interior = 0;
      for (int c = 0; c < n; ++c) {
        if (strictly_between(c, a, b, n) && strictly_between(x[c], bottom, top, n)) ++interior;
      }
      if (empty_only && interior > 0) continue;
      int o_count = 0;
      int x_count = 0;
      for (int r = 0; r < n; ++r) {
        if (!in_half_open(r, bottom, top, n)) continue;
        if (in_half_open(g.o_cols()[r], a, b, n)) ++o_count;
        if (in_half_open(g.x_cols()[r], a, b, n)) ++x_count;
      }
      std::copy(x.begin(), x.end(), y);
      std::swap(y[a], y[b]);
      Rect rect;
      rect.from = id;
      rect.to = gens.rank({y, static_cast<std::size_t>(n)});
      rect.left = static_cast<std::uint8_t>(a);
      rect.right = static_cast<std::uint8_t>(b);
      rect.bottom = static_cast<std::uint8_t>(bottom);
      rect.top = static_cast<std::uint8_t>(top);
      rect.o_count = static_cast<std::uint8_t>(o_count);
      rect.x_count = static_cast<std::uint8_t>(x_count);
      rect.interior_count = static_cast<std::uint8_t>(interior);
      fn(rect);
    }
  }
}

std::vector<Rect> rectangles(const GridDiagram& g, const GeneratorSet& gens, std::uint32_t id, bool empty_only) {
  std::vector<Rect> out;
  for_each_rectangle(g, gens, id, empty_only, [&out](const Rect& r) { out.push_back(r); });
  return out;
}

}  // namespace gridhfk
