#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridhfk/grid.hpp"

namespace gridhfk {

enum class MoveKind { translation, commutation, stabilization, destabilization };
enum class Axis { column, row };
enum class Marking { o, x };

// Parameters by kind:
//   translation     axis; cyclic shift by +1 (columns move right, rows move up).
//   commutation     axis, index: exchange columns (rows) index and index+1.
//   stabilization   marking, col, row, corner_right, corner_top: replace the
//                   marking of the given type at (col, row) by a 2x2 block;
//                   the corner flags pick which of the four block cells is
//                   left empty.
//   destabilization marking, col, row: the cell (col, row) holds the lone
//                   marking of the other type in a 2x2 block, which is
//                   collapsed.
struct GridMove {
  MoveKind kind = MoveKind::translation;
  Axis axis = Axis::column;
  int index = 0;
  Marking marking = Marking::x;
  int col = 0;
  int row = 0;
  bool corner_right = false;
  bool corner_top = false;

  static GridMove translate(Axis axis);
  static GridMove commute(Axis axis, int index);
  static GridMove stabilize(Marking m, int col, int row, bool corner_right, bool corner_top);
  static GridMove destabilize(Marking m, int col, int row);

  std::string describe() const;
};

bool is_legal(const GridDiagram& g, const GridMove& m);

// Throws InputError if the move is illegal for g.
GridDiagram apply_move(const GridDiagram& g, const GridMove& m);

// Every legal destabilization of g.
std::vector<GridMove> destabilizations(const GridDiagram& g);

// Deterministic random walk through legal moves; sizes stay in [2, max_n].
GridDiagram random_move_sequence(const GridDiagram& g, int count, std::uint64_t seed, int max_n,
                                 std::vector<GridMove>* trace = nullptr);

}  // namespace gridhfk
