#pragma once

#include <vector>

#include "gridhfk/grid.hpp"

namespace gridhfk {

struct Crossing {
  int col = 0;  // column of the vertical (over) segment
  int row = 0;  // row of the horizontal (under) segment
  int over_arc = 0;
  int under_in = 0;
  int under_out = 0;
  int sign = 0;  // +1 right-handed, -1 left-handed
};

// The planar diagram of the link drawn by a grid, broken into over-arcs at
// every undercrossing. Crossings are listed in row-major order (row, then
// column).
struct PlanarDiagram {
  std::vector<Crossing> crossings;
  int arc_count = 0;
  std::vector<int> arc_component;
  int components = 0;

  int writhe() const;
};

PlanarDiagram planar_diagram(const GridDiagram& g);

}  // namespace gridhfk
