#include "gridhfk/grid.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "gridhfk/errors.hpp"

namespace gridhfk {

namespace {

std::vector<int> inverse_or_throw(const std::vector<int>& cols, const char* name) {
  const int n = static_cast<int>(cols.size());
  std::vector<int> inv(n, -1);
  for (int r = 0; r < n; ++r) {
    const int c = cols[r];
    if (c < 0 || c >= n || inv[c] != -1) {
      throw InputError(std::string(name) + " is not a permutation of 0.." + std::to_string(n - 1));
    }
    inv[c] = r;
  }
  return inv;
}

std::string strip_comments(std::string_view text) {
  std::string out;
  bool in_comment = false;
  for (char ch : text) {
    if (ch == '#') in_comment = true;
    if (ch == '\n') in_comment = false;
    if (!in_comment) out.push_back(ch);
  }
  return out;
}

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

int parse_int(const std::string& s) {
  const std::string t = trim(s);
  if (t.empty()) throw InputError("expected an integer, got an empty field");
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(t, &used);
  } catch (const std::exception&) {
    throw InputError("expected an integer, got '" + t + "'");
  }
  if (used != t.size()) throw InputError("expected an integer, got '" + t + "'");
  return value;
}

std::vector<int> parse_list(const std::string& s) {
  const std::string t = trim(s);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    throw InputError("expected a bracketed list, got '" + t + "'");
  }
  std::vector<int> out;
  std::string inner = trim(t.substr(1, t.size() - 2));
  if (inner.empty()) return out;
  std::stringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
  return out;
}

GridDiagram parse_text(std::string_view text) {
  const std::string body = strip_comments(text);
  std::map<std::string, std::string> fields;
  std::string current;
  int depth = 0;
  auto flush = [&] {
    const std::string item = trim(current);
    current.clear();
    if (item.empty()) return;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("expected key=value, got '" + item + "'");
    std::string key = trim(item.substr(0, eq));
    if (fields.count(key)) throw InputError("duplicate field '" + key + "'");
    fields[key] = item.substr(eq + 1);
  };
  for (char ch : body) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (depth < 0) throw InputError("unbalanced brackets");
    if (depth == 0 && (ch == ';' || ch == ',' || ch == '\n')) {
      flush();
      continue;
    }
    current.push_back(ch);
  }
  if (depth != 0) throw InputError("unbalanced brackets");
  flush();

  for (const auto& [key, value] : fields) {
    if (key != "n" && key != "O" && key != "X") throw InputError("unknown field '" + key + "'");
  }
  if (!fields.count("O") || !fields.count("X")) throw InputError("grid needs both O=[...] and X=[...]");
  std::vector<int> o = parse_list(fields["O"]);
  std::vector<int> x = parse_list(fields["X"]);
  if (fields.count("n")) {
    const int n = parse_int(fields["n"]);
    if (n != static_cast<int>(o.size()) || n != static_cast<int>(x.size())) {
      throw InputError("n=" + std::to_string(n) + " does not match the marking list lengths");
    }
  }
  return GridDiagram(std::move(o), std::move(x));
}

GridDiagram parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed grid document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("O") || !doc.contains("X")) {
    throw InputError("grid document must be an object with integer arrays O and X");
  }
  try {
    auto o = doc.at("O").get<std::vector<int>>();
    auto x = doc.at("X").get<std::vector<int>>();
    if (doc.contains("n")) {
      const int n = doc.at("n").get<int>();
      if (n != static_cast<int>(o.size()) || n != static_cast<int>(x.size())) {
        throw InputError("n=" + std::to_string(n) + " does not match the marking list lengths");
      }
    }
    return GridDiagram(std::move(o), std::move(x));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad grid field: ") + e.what());
  }
}

std::string join(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

}  // namespace

GridDiagram::GridDiagram(std::vector<int> o_cols, std::vector<int> x_cols)
    : o_cols_(std::move(o_cols)), x_cols_(std::move(x_cols)) {
  if (o_cols_.size() != x_cols_.size()) throw InputError("O and X lists differ in length");
  const int n = static_cast<int>(o_cols_.size());
  if (n < 2) throw InputError("grid size must be at least 2");
  o_row_ = inverse_or_throw(o_cols_, "O");
  x_row_ = inverse_or_throw(x_cols_, "X");
  for (int r = 0; r < n; ++r) {
    if (o_cols_[r] == x_cols_[r]) {
      throw InputError("row " + std::to_string(r) + " has O and X in the same cell");
    }
  }
}

GridDiagram parse_grid(std::string_view text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{') return parse_json(text);
    break;
  }
  return parse_text(text);
}

std::string serialize_grid(const GridDiagram& g) {
  return "n=" + std::to_string(g.size()) + "; O=" + join(g.o_cols()) + "; X=" + join(g.x_cols());
}

std::string serialize_grid_json(const GridDiagram& g) {
  nlohmann::json doc;
  doc["n"] = g.size();
  doc["O"] = g.o_cols();
  doc["X"] = g.x_cols();
  return doc.dump();
}

LinkComponents link_components(const GridDiagram& g) {
  const int n = g.size();
  LinkComponents out;
  out.row_component.assign(n, -1);
  for (int start = 0; start < n; ++start) {
    if (out.row_component[start] != -1) continue;
    // Row segment O -> X, then up/down the X's column to that column's O,
    // whose row is the next segment.
    int r = start;
    while (out.row_component[r] == -1) {
      out.row_component[r] = out.count;
      r = g.o_row(g.x_cols()[r]);
    }
    ++out.count;
  }
  return out;
}

GridDiagram mirror(const GridDiagram& g) {
  const int n = g.size();
  std::vector<int> o(n), x(n);
  for (int r = 0; r < n; ++r) {
    o[r] = n - 1 - g.o_cols()[r];
    x[r] = n - 1 - g.x_cols()[r];
  }
  return GridDiagram(std::move(o), std::move(x));
}

GridDiagram connected_sum(const GridDiagram& g1, const GridDiagram& g2) {
  if (link_components(g1).count != 1 || link_components(g2).count != 1) {
    throw InputError("connected sum needs two knots");
  }
  const int n1 = g1.size();
  const int n2 = g2.size();
  std::vector<int> o(n1 + n2), x(n1 + n2);
  for (int r = 0; r < n1; ++r) {
    o[r] = g1.o_cols()[r];
    x[r] = g1.x_cols()[r];
  }
  for (int r = 0; r < n2; ++r) {
    o[n1 + r] = n1 + g2.o_cols()[r];
    x[n1 + r] = n1 + g2.x_cols()[r];
  }
  // The top row of g1 and the bottom row of g2 meet no vertical segment of
  // their own block, so exchanging their X markings is a trivial band move.
  std::swap(x[n1 - 1], x[n1]);
  return GridDiagram(std::move(o), std::move(x));
}

}  // namespace gridhfk
