#include "gridhfk/moves.hpp"

#include <algorithm>
#include <random>

#include "gridhfk/errors.hpp"

namespace gridhfk {

namespace {

struct Span {
  int lo, hi;
};

Span span(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// Disjoint or strictly nested; sharing an endpoint is neither.
bool commutable(Span a, Span b) {
  if (a.hi < b.lo || b.hi < a.lo) return true;
  if (a.lo < b.lo && b.hi < a.hi) return true;
  if (b.lo < a.lo && a.hi < b.hi) return true;
  return false;
}

GridDiagram translate(const GridDiagram& g, Axis axis) {
  const int n = g.size();
  std::vector<int> o(n), x(n);
  for (int r = 0; r < n; ++r) {
    if (axis == Axis::column) {
      o[r] = (g.o_cols()[r] + 1) % n;
      x[r] = (g.x_cols()[r] + 1) % n;
    } else {
      o[(r + 1) % n] = g.o_cols()[r];
      x[(r + 1) % n] = g.x_cols()[r];
    }
  }
  return GridDiagram(std::move(o), std::move(x));
}

bool commutation_legal(const GridDiagram& g, Axis axis, int i) {
  if (i < 0 || i + 1 >= g.size()) return false;
  if (axis == Axis::column) {
    return commutable(span(g.o_row(i), g.x_row(i)), span(g.o_row(i + 1), g.x_row(i + 1)));
  }
  return commutable(span(g.o_cols()[i], g.x_cols()[i]), span(g.o_cols()[i + 1], g.x_cols()[i + 1]));
}

GridDiagram commute(const GridDiagram& g, Axis axis, int i) {
  std::vector<int> o = g.o_cols();
  std::vector<int> x = g.x_cols();
  if (axis == Axis::row) {
    std::swap(o[i], o[i + 1]);
    std::swap(x[i], x[i + 1]);
  } else {
    auto swap_cols = [i](int c) { return c == i ? i + 1 : (c == i + 1 ? i : c); };
    for (auto& c : o) c = swap_cols(c);
    for (auto& c : x) c = swap_cols(c);
  }
  return GridDiagram(std::move(o), std::move(x));
}

// `same` holds the columns of the stabilized marking type, `other` the
// columns of the opposite type.
GridDiagram stabilize(const GridDiagram& g, const GridMove& m) {
  const int n = g.size();
  const bool on_x = m.marking == Marking::x;
  const std::vector<int>& same = on_x ? g.x_cols() : g.o_cols();
  const std::vector<int>& other = on_x ? g.o_cols() : g.x_cols();
  const int c = m.col;
  const int r = m.row;
  if (r < 0 || r >= n || same[r] != c) throw InputError("stabilization: no such marking at that cell");

  auto map_col = [c](int u) { return u <= c ? u : u + 1; };
  auto map_row = [r](int t) { return t <= r ? t : t + 1; };
  const int kappa = m.corner_right ? c + 1 : c;
  const int kappa2 = m.corner_right ? c : c + 1;
  const int rho = m.corner_top ? r + 1 : r;
  const int rho2 = m.corner_top ? r : r + 1;

  std::vector<int> new_same(n + 1), new_other(n + 1);
  for (int t = 0; t < n; ++t) {
    if (t == r) continue;
    const int nt = map_row(t);
    new_same[nt] = map_col(same[t]);
    new_other[nt] = other[t] == c ? kappa : map_col(other[t]);
  }
  new_other[rho] = map_col(other[r]);
  new_same[rho] = kappa2;
  new_other[rho2] = kappa2;
  new_same[rho2] = kappa;
  return on_x ? GridDiagram(std::move(new_other), std::move(new_same))
              : GridDiagram(std::move(new_same), std::move(new_other));
}

// Lone marking at (col, row) of the type opposite to m.marking; checks the
// 2x2 pattern and returns the collapsed grid, or nullopt.
std::optional<GridDiagram> try_destabilize(const GridDiagram& g, const GridMove& m) {
  const int n = g.size();
  if (n < 3) return std::nullopt;
  const bool on_x = m.marking == Marking::x;
  const std::vector<int>& same = on_x ? g.x_cols() : g.o_cols();
  const std::vector<int>& other = on_x ? g.o_cols() : g.x_cols();
  const int kappa2 = m.col;
  const int rho2 = m.row;
  if (rho2 < 0 || rho2 >= n || other[rho2] != kappa2) return std::nullopt;
  const int kappa = same[rho2];
  if (std::abs(kappa - kappa2) != 1) return std::nullopt;
  const int rho = on_x ? g.x_row(kappa2) : g.o_row(kappa2);
  if (std::abs(rho - rho2) != 1) return std::nullopt;

  auto map_col = [kappa2](int u) { return u < kappa2 ? u : u - 1; };
  std::vector<int> new_same, new_other;
  for (int t = 0; t < n; ++t) {
    if (t == rho2) continue;
    int s = same[t];
    if (t == rho) s = kappa;
    new_same.push_back(map_col(s));
    new_other.push_back(map_col(other[t]));
  }
  try {
    return on_x ? GridDiagram(std::move(new_other), std::move(new_same))
                : GridDiagram(std::move(new_same), std::move(new_other));
  } catch (const InputError&) {
    return std::nullopt;
  }
}

}  // namespace

GridMove GridMove::translate(Axis axis) {
  GridMove m;
  m.kind = MoveKind::translation;
  m.axis = axis;
  return m;
}

GridMove GridMove::commute(Axis axis, int index) {
  GridMove m;
  m.kind = MoveKind::commutation;
  m.axis = axis;
  m.index = index;
  return m;
}

GridMove GridMove::stabilize(Marking mk, int col, int row, bool corner_right, bool corner_top) {
  GridMove m;
  m.kind = MoveKind::stabilization;
  m.marking = mk;
  m.col = col;
  m.row = row;
  m.corner_right = corner_right;
  m.corner_top = corner_top;
  return m;
}

GridMove GridMove::destabilize(Marking mk, int col, int row) {
  GridMove m;
  m.kind = MoveKind::destabilization;
  m.marking = mk;
  m.col = col;
  m.row = row;
  return m;
}

std::string GridMove::describe() const {
  const std::string ax = axis == Axis::column ? "column" : "row";
  const std::string mk = marking == Marking::x ? "X" : "O";
  switch (kind) {
    case MoveKind::translation:
      return "translate " + ax;
    case MoveKind::commutation:
      return "commute " + ax + "s " + std::to_string(index) + "," + std::to_string(index + 1);
    case MoveKind::stabilization:
      return "stabilize " + mk + " at (" + std::to_string(col) + "," + std::to_string(row) + ") empty corner " +
             (corner_top ? "top-" : "bottom-") + (corner_right ? "right" : "left");
    case MoveKind::destabilization:
      return "destabilize " + mk + "-block at (" + std::to_string(col) + "," + std::to_string(row) + ")";
  }
  return "?";
}

bool is_legal(const GridDiagram& g, const GridMove& m) {
  switch (m.kind) {
    case MoveKind::translation:
      return true;
    case MoveKind::commutation:
      return commutation_legal(g, m.axis, m.index);
    case MoveKind::stabilization: {
      const auto& same = m.marking == Marking::x ? g.x_cols() : g.o_cols();
      return m.row >= 0 && m.row < g.size() && same[m.row] == m.col;
    }
    case MoveKind::destabilization:
      return try_destabilize(g, m).has_value();
  }
  return false;
}

GridDiagram apply_move(const GridDiagram& g, const GridMove& m) {
  switch (m.kind) {
    case MoveKind::translation:
      return translate(g, m.axis);
    case MoveKind::commutation:
      if (!commutation_legal(g, m.axis, m.index)) throw InputError("illegal move: " + m.describe());
      return commute(g, m.axis, m.index);
    case MoveKind::stabilization:
      if (!is_legal(g, m)) throw InputError("illegal move: " + m.describe());
      return stabilize(g, m);
    case MoveKind::destabilization: {
      auto out = try_destabilize(g, m);
      if (!out) throw InputError("illegal move: " + m.describe());
      return *out;
    }
  }
  throw InputError("unknown move kind");
}

std::vector<GridMove> destabilizations(const GridDiagram& g) {
  std::vector<GridMove> out;
  for (Marking mk : {Marking::o, Marking::x}) {
    for (int row = 0; row < g.size(); ++row) {
      const int col = mk == Marking::x ? g.o_cols()[row] : g.x_cols()[row];
      GridMove m = GridMove::destabilize(mk, col, row);
      if (try_destabilize(g, m)) out.push_back(m);
    }
  }
  return out;
}

GridDiagram random_move_sequence(const GridDiagram& g, int count, std::uint64_t seed, int max_n,
                                 std::vector<GridMove>* trace) {
  if (max_n < g.size()) throw InputError("max_n is smaller than the starting grid");
  std::mt19937_64 rng(seed);
  auto pick = [&rng](int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); };
  GridDiagram cur = g;
  for (int done = 0; done < count;) {
    const int n = cur.size();
    GridMove m;
    switch (pick(4)) {
      case 0:
        m = GridMove::translate(pick(2) ? Axis::row : Axis::column);
        break;
      case 1:
        m = GridMove::commute(pick(2) ? Axis::row : Axis::column, pick(n - 1));
        if (!is_legal(cur, m)) continue;
        break;
      case 2: {
        if (n + 1 > max_n) continue;
        const Marking mk = pick(2) ? Marking::x : Marking::o;
        const int row = pick(n);
        const int col = mk == Marking::x ? cur.x_cols()[row] : cur.o_cols()[row];
        m = GridMove::stabilize(mk, col, row, pick(2) == 1, pick(2) == 1);
        break;
      }
      default: {
        const auto options = destabilizations(cur);
        if (options.empty()) continue;
        m = options[pick(static_cast<int>(options.size()))];
        break;
      }
    }
    cur = apply_move(cur, m);
    if (trace) trace->push_back(m);
    ++done;
  }
  return cur;
}

}  // namespace gridhfk
