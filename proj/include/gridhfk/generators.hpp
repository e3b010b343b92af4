#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gridhfk/grid.hpp"

namespace gridhfk {

inline constexpr int kDefaultGeneratorCap = 9;
// Grids of this size or larger are always refused (10! generators).
inline constexpr int kHardSizeLimit = 10;

std::uint64_t factorial(int n);

// All n! generators of a size-n grid in lexicographic order of the word
// perm[0..n-1], where perm[c] is the row of the point on vertical line c.
// A generator's id is its lexicographic rank.
class GeneratorSet {
 public:
  // Throws CapExceeded if n > cap or n >= kHardSizeLimit.
  explicit GeneratorSet(int n, int cap = kDefaultGeneratorCap);

  int n() const { return n_; }
  std::uint32_t size() const { return count_; }
  std::span<const std::uint8_t> perm(std::uint32_t id) const {
    return {perms_.data() + static_cast<std::size_t>(id) * n_, static_cast<std::size_t>(n_)};
  }
  std::uint32_t rank(std::span<const std::uint8_t> perm) const;

 private:
  int n_;
  std::uint32_t count_;
  std::vector<std::uint8_t> perms_;
  std::vector<std::uint32_t> place_value_;
};

// The rectangle with lower-left corner on vertical line `left`, upper-right
// corner on vertical line `right` (both points of the source generator),
// wrapping around the torus as needed. The target generator swaps the rows
// of the two lines.
struct Rect {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  std::uint8_t left = 0;
  std::uint8_t right = 0;
  std::uint8_t bottom = 0;  // row of from's point on `left`
  std::uint8_t top = 0;     // row of from's point on `right`
  std::uint8_t o_count = 0;
  std::uint8_t x_count = 0;
  std::uint8_t interior_count = 0;

  bool empty() const { return interior_count == 0; }
};

// Visits the n(n-1) rectangles leaving generator `id`, one for each ordered
// pair of distinct vertical lines, in order of (left, right).
void for_each_rectangle(const GridDiagram& g, const GeneratorSet& gens, std::uint32_t id, bool empty_only,
                        const std::function<void(const Rect&)>& fn);

std::vector<Rect> rectangles(const GridDiagram& g, const GeneratorSet& gens, std::uint32_t id, bool empty_only);

}  // namespace gridhfk
