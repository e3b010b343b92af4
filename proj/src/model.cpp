#include "gridhfk/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "gridhfk/invariants.hpp"

namespace gridhfk {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace

ModelError::ModelError(std::vector<std::string> errors)
    : InputError("invalid model: " + join(errors)), errors_(std::move(errors)) {}

int ModelComplex::max_abs_A() const {
  int m = 0;
  for (const auto& g : generators) m = std::max(m, std::abs(g.A));
  return m;
}

int ModelComplex::maslov_spread() const {
  if (generators.empty()) return 0;
  int lo = generators.front().M, hi = lo;
  for (const auto& g : generators) {
    lo = std::min(lo, g.M);
    hi = std::max(hi, g.M);
  }
  return hi - lo;
}

std::vector<std::string> model_errors(const ModelComplex& m) {
  std::vector<std::string> errs;
  const int n = static_cast<int>(m.generators.size());
  if (n == 0) errs.push_back("model has no generators");
  std::set<std::string> ids;
  for (const auto& g : m.generators) {
    if (!ids.insert(g.id).second) errs.push_back("duplicate generator id '" + g.id + "'");
  }
  auto name = [&m](int i) { return m.generators[i].id; };
  bool arrows_ok = true;
  for (std::size_t k = 0; k < m.arrows.size(); ++k) {
    const auto& a = m.arrows[k];
    const std::string tag = "arrow " + std::to_string(k);
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n) {
      errs.push_back(tag + " has an endpoint that is not a generator");
      arrows_ok = false;
      continue;
    }
    if (a.nw < 0 || a.nz < 0) errs.push_back(tag + " has a negative multiplicity");
    if (a.from == a.to && a.nw == 0 && a.nz == 0) errs.push_back(tag + " is a loop");
    const auto& x = m.generators[a.from];
    const auto& y = m.generators[a.to];
    if (x.M - y.M != 1 - 2 * a.nw) {
      errs.push_back(tag + " (" + x.id + " -> " + y.id + ") violates M(from) - M(to) = 1 - 2 n_w");
    }
    if (x.A - y.A != a.nz - a.nw) {
      errs.push_back(tag + " (" + x.id + " -> " + y.id + ") violates A(from) - A(to) = n_z - n_w");
    }
  }

  bool flip_ok = static_cast<int>(m.flip.size()) == n;
  if (!flip_ok) {
    errs.push_back("flip is not defined on every generator");
  } else {
    for (int i = 0; i < n; ++i) {
      const int f = m.flip[i];
      if (f < 0 || f >= n) {
        errs.push_back(f < 0 ? "flip is not defined on '" + name(i) + "'" : "flip of '" + name(i) + "' is not a generator");
        flip_ok = false;
        continue;
      }
      if (m.flip[f] != i) {
        errs.push_back("flip is not an involution at '" + name(i) + "'");
        flip_ok = false;
      }
      if (m.generators[f].A != -m.generators[i].A) errs.push_back("flip does not send A to -A at '" + name(i) + "'");
      if (m.generators[f].M != m.generators[i].M - 2 * m.generators[i].A) {
        errs.push_back("flip does not send M to M - 2A at '" + name(i) + "'");
      }
    }
  }

  if (arrows_ok) {
    using Key = std::tuple<int, int, int, int>;
    std::map<Key, int> labeled;
    for (const auto& a : m.arrows) labeled[{a.from, a.to, a.nw, a.nz}] ^= 1;
    if (flip_ok) {
      for (const auto& [k, v] : labeled) {
        if (!v) continue;
        const auto [x, y, nw, nz] = k;
        auto it = labeled.find({m.flip[x], m.flip[y], nz, nw});
        if (it == labeled.end() || !it->second) {
          errs.push_back("flip does not carry the arrow " + name(x) + " -> " + name(y) +
                         " to an arrow with (n_w, n_z) swapped");
        }
      }
    }
    std::map<int, std::vector<std::tuple<int, int, int>>> out;
    for (const auto& [k, v] : labeled) {
      if (v) out[std::get<0>(k)].emplace_back(std::get<1>(k), std::get<2>(k), std::get<3>(k));
    }
    for (int x = 0; x < n; ++x) {
      std::map<Key, int> sq;
      for (const auto& [y, w1, z1] : out[x]) {
        for (const auto& [t, w2, z2] : out[y]) sq[{t, w1 + w2, z1 + z2, 0}] ^= 1;
      }
      for (const auto& [k, v] : sq) {
        if (v) {
          errs.push_back("d^2 != 0 from '" + name(x) + "' to '" + name(std::get<0>(k)) + "' with (n_w, n_z) = (" +
                         std::to_string(std::get<1>(k)) + ", " + std::to_string(std::get<2>(k)) + ")");
        }
      }
    }
  }
  return errs;
}

ModelComplex load_model(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ModelError({std::string("malformed document: ") + e.what()});
  }
  std::vector<std::string> errs;
  if (!doc.is_object()) throw ModelError({"model document must be an object"});
  for (const char* key : {"generators", "arrows", "flip"}) {
    if (!doc.contains(key) || !doc[key].is_array()) errs.push_back(std::string("missing array field '") + key + "'");
  }
  if (!errs.empty()) throw ModelError(errs);

  auto id_of = [](const nlohmann::json& v, std::string& out) {
    if (v.is_string()) {
      out = v.get<std::string>();
      return true;
    }
    if (v.is_number_integer()) {
      out = std::to_string(v.get<long long>());
      return true;
    }
    return false;
  };
  auto int_field = [&errs](const nlohmann::json& obj, const char* key, const std::string& where, int& out) {
    if (!obj.contains(key) || !obj[key].is_number_integer()) {
      errs.push_back(where + " needs an integer '" + key + "'");
      return;
    }
    out = obj[key].get<int>();
  };

  ModelComplex m;
  m.name = doc.value("name", std::string("model"));
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < doc["generators"].size(); ++i) {
    const auto& g = doc["generators"][i];
    const std::string where = "generator " + std::to_string(i);
    ModelGenerator mg;
    if (!g.is_object() || !g.contains("id") || !id_of(g["id"], mg.id)) {
      errs.push_back(where + " needs an 'id'");
      continue;
    }
    int_field(g, "M", where, mg.M);
    int_field(g, "A", where, mg.A);
    if (!index.count(mg.id)) index[mg.id] = static_cast<int>(m.generators.size());
    m.generators.push_back(mg);
  }
  auto lookup = [&](const nlohmann::json& v, const std::string& where, int& out) {
    std::string id;
    if (!id_of(v, id)) {
      errs.push_back(where + " has a malformed id");
      return false;
    }
    auto it = index.find(id);
    if (it == index.end()) {
      errs.push_back(where + " refers to unknown generator '" + id + "'");
      return false;
    }
    out = it->second;
    return true;
  };
  for (std::size_t k = 0; k < doc["arrows"].size(); ++k) {
    const auto& a = doc["arrows"][k];
    const std::string where = "arrow " + std::to_string(k);
    if (!a.is_object()) {
      errs.push_back(where + " must be an object");
      continue;
    }
    ModelArrow ma;
    bool ok = a.contains("from") && lookup(a["from"], where, ma.from);
    ok = (a.contains("to") && lookup(a["to"], where, ma.to)) && ok;
    if (!a.contains("from") || !a.contains("to")) errs.push_back(where + " needs 'from' and 'to'");
    int_field(a, "nw", where, ma.nw);
    int_field(a, "nz", where, ma.nz);
    if (ok) m.arrows.push_back(ma);
  }
  m.flip.assign(m.generators.size(), -1);
  for (std::size_t k = 0; k < doc["flip"].size(); ++k) {
    const auto& pr = doc["flip"][k];
    const std::string where = "flip pair " + std::to_string(k);
    if (!pr.is_array() || pr.size() != 2) {
      errs.push_back(where + " must be a two-element array");
      continue;
    }
    int x = -1, y = -1;
    if (!lookup(pr[0], where, x) || !lookup(pr[1], where, y)) continue;
    for (auto [u, v] : {std::pair{x, y}, std::pair{y, x}}) {
      if (m.flip[u] >= 0 && m.flip[u] != v) errs.push_back(where + " redefines the flip of '" + m.generators[u].id + "'");
      m.flip[u] = v;
    }
  }
  // Semantic checks run even after document errors so that one pass reports
  // everything; dropped arrows simply do not take part.
  auto more = model_errors(m);
  errs.insert(errs.end(), more.begin(), more.end());
  if (!errs.empty()) throw ModelError(errs);
  return m;
}

std::string model_to_json(const ModelComplex& m) {
  nlohmann::ordered_json doc;
  doc["name"] = m.name;
  doc["generators"] = nlohmann::ordered_json::array();
  for (const auto& g : m.generators) doc["generators"].push_back({{"id", g.id}, {"M", g.M}, {"A", g.A}});
  doc["arrows"] = nlohmann::ordered_json::array();
  for (const auto& a : m.arrows) {
    doc["arrows"].push_back(
        {{"from", m.generators[a.from].id}, {"to", m.generators[a.to].id}, {"nw", a.nw}, {"nz", a.nz}});
  }
  doc["flip"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.flip.size(); ++i) {
    if (static_cast<int>(i) <= m.flip[i]) doc["flip"].push_back({m.generators[i].id, m.generators[m.flip[i]].id});
  }
  return doc.dump(1);
}

BigradedRanks model_hfk_hat(const ModelComplex& m) {
  Complex c;
  for (const auto& g : m.generators) {
    c.M.push_back(g.M);
    c.A.push_back(g.A);
  }
  for (const auto& a : m.arrows) {
    if (a.nw == 0 && a.nz == 0) {
      c.arrows.push_back({static_cast<std::uint32_t>(a.from), static_cast<std::uint32_t>(a.to), 0, 0});
    }
  }
  normalize_arrows(c.arrows);
  return f2_homology(c);
}

ModelComplex staircase_model(const LaurentPoly& delta) {
  const Staircase st = staircase_data(delta);
  ModelComplex m;
  m.name = "staircase";
  const int count = 2 * st.k + 1;
  for (int at = 0; at < count; ++at) {
    m.generators.push_back({"x" + std::to_string(at - st.k), st.delta[at], st.n[at]});
    m.flip.push_back(count - 1 - at);
  }
  for (int j = -st.k; j < st.k; ++j) {
    const int at = j + st.k;
    const int step = st.n[at + 1] - st.n[at];
    if ((st.k - j) % 2 == 1) {
      m.arrows.push_back({at, at + 1, step, 0});
    } else {
      m.arrows.push_back({at + 1, at, 0, step});
    }
  }
  auto errs = model_errors(m);
  if (!errs.empty()) throw InvariantViolation("staircase model is invalid: " + errs.front());
  return m;
}

ModelComplex dual_model(const ModelComplex& m) {
  ModelComplex d = m;
  d.name = m.name + "-mirror";
  for (auto& g : d.generators) {
    g.M = -g.M;
    g.A = -g.A;
  }
  for (auto& a : d.arrows) std::swap(a.from, a.to);
  return d;
}

ModelComplex bundled_model(std::string_view name) {
  if (name == "unknot") {
    return ModelComplex{"unknot", {{"x", 0, 0}}, {}, {0}};
  }
  if (name == "trefoil-left") {
    return ModelComplex{"trefoil-left", {{"a", 2, 1}, {"b", 1, 0}, {"c", 0, -1}}, {{0, 1, 0, 1}, {2, 1, 1, 0}}, {2, 1, 0}};
  }
  if (name == "trefoil-right") {
    ModelComplex m = dual_model(bundled_model("trefoil-left"));
    m.name = "trefoil-right";
    return m;
  }
  if (name == "torus-2-5") {
    ModelComplex m = staircase_model(parse_laurent("-2:1,-1:-1,0:1,1:-1,2:1"));
    m.name = "torus-2-5";
    return m;
  }
  if (name == "torus-3-4") {
    ModelComplex m = staircase_model(parse_laurent("-3:1,-2:-1,0:1,2:-1,3:1"));
    m.name = "torus-3-4";
    return m;
  }
  throw InputError("unknown bundled model '" + std::string(name) + "'");
}

std::vector<std::string> bundled_model_names() {
  return {"unknot", "trefoil-left", "trefoil-right", "torus-2-5", "torus-3-4"};
}

LaurentPoly parse_laurent(std::string_view text) {
  std::map<int, std::int64_t> coeffs;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("expected exp:coef in '" + item + "'");
    try {
      std::size_t used = 0;
      const std::string e = item.substr(0, colon), c = item.substr(colon + 1);
      const int exp = std::stoi(e, &used);
      if (used != e.size()) throw InputError("bad exponent in '" + item + "'");
      const long long coef = std::stoll(c, &used);
      if (used != c.size()) throw InputError("bad coefficient in '" + item + "'");
      coeffs[exp] += coef;
    } catch (const std::logic_error&) {
      throw InputError("bad term '" + item + "'");
    }
  }
  return LaurentPoly::from_coefficients(coeffs);
}

}  // namespace gridhfk
