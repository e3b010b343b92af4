#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gridhfk {

// An n x n toroidal grid diagram. Rows are indexed bottom to top; o_cols[r]
// and x_cols[r] give the columns of the O and X markings in row r. The O
// markings play the role of the w basepoints and the X markings the z
// basepoints.
//
// Strands run from O to X inside a row and from X to O inside a column;
// vertical strands always pass over horizontal ones.
class GridDiagram {
 public:
  // Validates: n >= 2, both arrays are permutations of {0..n-1}, and no cell
  // carries both an O and an X. Throws InputError otherwise.
  GridDiagram(std::vector<int> o_cols, std::vector<int> x_cols);

  int size() const { return static_cast<int>(o_cols_.size()); }
  const std::vector<int>& o_cols() const { return o_cols_; }
  const std::vector<int>& x_cols() const { return x_cols_; }

  // Row of the O (resp. X) marking in column c.
  int o_row(int c) const { return o_row_[c]; }
  int x_row(int c) const { return x_row_[c]; }

  bool has_o(int col, int row) const { return o_cols_[row] == col; }
  bool has_x(int col, int row) const { return x_cols_[row] == col; }

  friend bool operator==(const GridDiagram&, const GridDiagram&) = default;

 private:
  std::vector<int> o_cols_;
  std::vector<int> x_cols_;
  std::vector<int> o_row_;
  std::vector<int> x_row_;
};

// Accepts either the text form `n=5; O=[0,1,2,3,4]; X=[2,3,4,0,1]` (with `#`
// comments; fields may also be separated by newlines or commas) or a JSON object {"n": 5, "O": [...], "X": [...]}.
GridDiagram parse_grid(std::string_view text);

// Canonical text form, e.g. `n=2; O=[0,1]; X=[1,0]`.
std::string serialize_grid(const GridDiagram& g);
std::string serialize_grid_json(const GridDiagram& g);

struct LinkComponents {
  int count = 0;
  // Component id of the marking pair in each row (the O and X of row r lie on
  // the same horizontal segment and hence on the same component).
  std::vector<int> row_component;
};

LinkComponents link_components(const GridDiagram& g);

// Reflection in a vertical line; presents the mirror link.
GridDiagram mirror(const GridDiagram& g);

// g1 in the lower-left block, g2 in the upper-right block, joined by exchanging
// the X markings of the two rows adjacent to the junction. Both inputs must be
// knots.
GridDiagram connected_sum(const GridDiagram& g1, const GridDiagram& g2);

}  // namespace gridhfk
