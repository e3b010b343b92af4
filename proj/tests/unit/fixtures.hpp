#pragma once

#include "gridhfk/grid.hpp"

namespace fixtures {

inline gridhfk::GridDiagram unknot() { return gridhfk::GridDiagram({0, 1}, {1, 0}); }

inline gridhfk::GridDiagram torus_grid(int n, int shift) {
  std::vector<int> o(n), x(n);
  for (int i = 0; i < n; ++i) {
    o[i] = i;
    x[i] = (i + shift) % n;
  }
  return gridhfk::GridDiagram(o, x);
}

inline gridhfk::GridDiagram trefoil() { return torus_grid(5, 2); }

// T(3,4)
inline gridhfk::GridDiagram t34() { return torus_grid(7, 3); }

// Six crossings, writhe 0.
inline gridhfk::GridDiagram figure_eight() { return gridhfk::GridDiagram({2, 3, 1, 0, 4, 5}, {4, 0, 5, 2, 1, 3}); }

// Four-crossing diagram on a 7x7 grid.
inline gridhfk::GridDiagram figure_eight_small() {
  return gridhfk::GridDiagram({5, 0, 4, 6, 3, 1, 2}, {1, 3, 2, 5, 6, 4, 0});
}

// Left trefoil # left trefoil, reduced from the 10x10 block sum.
inline gridhfk::GridDiagram trefoil_square() {
  return gridhfk::GridDiagram({6, 0, 1, 3, 2, 4, 5, 7}, {3, 4, 6, 0, 5, 7, 1, 2});
}

}  // namespace fixtures
