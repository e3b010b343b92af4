#include "gridhfk/planar.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace gridhfk {

namespace {

int sgn(int v) { return (v > 0) - (v < 0); }

bool strictly_between(int v, int a, int b) { return std::min(a, b) < v && v < std::max(a, b); }

}  // namespace

int PlanarDiagram::writhe() const {
  int w = 0;
  for (const auto& c : crossings) w += c.sign;
  return w;
}

PlanarDiagram planar_diagram(const GridDiagram& g) {
  const int n = g.size();
  const auto comps = link_components(g);
  PlanarDiagram d;
  d.components = comps.count;

  // Crossing (c, r): column c's vertical segment passes through row r's
  // horizontal segment.
  std::map<std::pair<int, int>, int> crossing_at;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (!strictly_between(c, g.o_cols()[r], g.x_cols()[r])) continue;
      if (!strictly_between(r, g.x_row(c), g.o_row(c))) continue;
      Crossing x;
      x.col = c;
      x.row = r;
      const int vertical_dir = sgn(g.o_row(c) - g.x_row(c));
      const int horizontal_dir = sgn(g.x_cols()[r] - g.o_cols()[r]);
      // z-component of (over direction) x (under direction).
      x.sign = -vertical_dir * horizontal_dir;
      crossing_at[{r, c}] = static_cast<int>(d.crossings.size());
      d.crossings.push_back(x);
    }
  }

  std::vector<int> vertical_arc(n, -1);
  std::vector<bool> visited(n, false);
  for (int start = 0; start < n; ++start) {
    if (visited[start]) continue;
    const int first_arc = d.arc_count;
    int arc = d.arc_count++;
    d.arc_component.push_back(comps.row_component[start]);
    bool broke = false;
    int r = start;
    while (!visited[r]) {
      visited[r] = true;
      const int from = g.o_cols()[r];
      const int to = g.x_cols()[r];
      const int step = to > from ? 1 : -1;
      for (int c = from + step; c != to; c += step) {
        auto it = crossing_at.find({r, c});
        if (it == crossing_at.end()) continue;
        Crossing& x = d.crossings[it->second];
        x.under_in = arc;
        broke = true;
        arc = d.arc_count++;
        d.arc_component.push_back(comps.row_component[start]);
        x.under_out = arc;
      }
      vertical_arc[to] = arc;
      r = g.o_row(to);
    }
    if (broke) {
      // The final arc closes up with the first one.
      const int last = arc;
      for (auto& x : d.crossings) {
        if (x.under_in == last) x.under_in = first_arc;
        if (x.under_out == last) x.under_out = first_arc;
      }
      for (int c = 0; c < n; ++c) {
        if (vertical_arc[c] == last) vertical_arc[c] = first_arc;
      }
      d.arc_component.pop_back();
      --d.arc_count;
    }
  }
  for (auto& x : d.crossings) x.over_arc = vertical_arc[x.col];
  return d;
}

}  // namespace gridhfk
