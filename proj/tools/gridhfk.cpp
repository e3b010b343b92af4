#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gridhfk/alexander.hpp"
#include "gridhfk/complex.hpp"
#include "gridhfk/errors.hpp"
#include "gridhfk/invariants.hpp"
#include "gridhfk/model.hpp"
#include "gridhfk/moves.hpp"
#include "gridhfk/planar.hpp"
#include "gridhfk/surgery.hpp"

using namespace gridhfk;
using nlohmann::ordered_json;

namespace {

constexpr int kCliDefaultCap = 8;
constexpr int kAllowLargeCap = 9;

struct RunConfig {
  std::string grid_text;
  std::string grid_file;
  std::string format = "table";
  std::uint64_t seed = 1;
  int jobs = 0;
  int max_n = 0;  // 0: default cap
  bool allow_large = false;
  bool quiet = false;

  std::string flavor;
  int moves = 50;
  bool corrupt = false;

  std::string model;
  std::string model_file;
  std::string delta;
  int p = 0;
  std::optional<int> smax;
  std::optional<int> s;
  int cutoff = 64;
};

void progress(const RunConfig& cfg, const std::string& msg) {
  if (!cfg.quiet) std::cerr << "[gridhfk] " << msg << "\n";
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Cap precedence: --max-n, then GRIDHFK_MAX_N, then the default; --allow-large
// lifts the default to 9. Anything at or above the hard limit is refused.
int resolve_cap(const RunConfig& cfg) {
  int cap = cfg.allow_large ? kAllowLargeCap : kCliDefaultCap;
  if (const char* env = std::getenv("GRIDHFK_MAX_N"); env && *env) {
    try {
      cap = std::stoi(env);
    } catch (const std::logic_error&) {
      throw InputError(std::string("GRIDHFK_MAX_N is not an integer: ") + env);
    }
  }
  if (cfg.max_n > 0) cap = cfg.max_n;
  if (cap >= kHardSizeLimit) {
    throw InputError("size cap " + std::to_string(cap) + " refused: grids of size " + std::to_string(kHardSizeLimit) +
                     " and above are never computed");
  }
  if (cap > kCliDefaultCap && !cfg.allow_large) {
    throw InputError("size cap " + std::to_string(cap) + " needs --allow-large");
  }
  if (cap < 2) throw InputError("size cap must be at least 2");
  return cap;
}

ComputeOptions compute_options(const RunConfig& cfg) {
  ComputeOptions opt;
  opt.jobs = cfg.jobs;
  opt.cap = resolve_cap(cfg);
  opt.homology.jobs = cfg.jobs;
  return opt;
}

GridDiagram load_grid(const RunConfig& cfg) {
  if (!cfg.grid_text.empty() && !cfg.grid_file.empty()) throw InputError("give either --grid or --file, not both");
  if (!cfg.grid_text.empty()) return parse_grid(cfg.grid_text);
  if (!cfg.grid_file.empty()) return parse_grid(read_file(cfg.grid_file));
  throw InputError("no grid given (use --grid or --file)");
}

void check_size(const GridDiagram& g, int cap) {
  if (g.size() >= kHardSizeLimit) {
    throw CapExceeded("grid size " + std::to_string(g.size()) + " is at or above the hard limit");
  }
  if (g.size() > cap) {
    throw CapExceeded("grid size " + std::to_string(g.size()) + " exceeds the cap " + std::to_string(cap) +
                      (cap < kAllowLargeCap ? " (see --allow-large)" : ""));
  }
}

bool structured(const RunConfig& cfg) { return cfg.format == "structured"; }

ordered_json ranks_json(const BigradedRanks& r) {
  ordered_json out = ordered_json::array();
  for (const auto& [g, k] : r) out.push_back({g.M, g.A, k});
  return out;
}

ordered_json module_json(const UModuleSummary& m) {
  ordered_json towers = ordered_json::array();
  for (const auto& t : m.towers) towers.push_back({t.M, t.A});
  ordered_json torsions = ordered_json::array();
  for (const auto& t : m.torsions) torsions.push_back({t.at.M, t.at.A, t.order});
  return {{"towers", towers}, {"torsions", torsions}};
}

std::string module_text(const UModuleSummary& m) {
  std::ostringstream ss;
  ss << m.towers.size() << (m.towers.size() == 1 ? " tower" : " towers");
  for (const auto& t : m.towers) ss << " (" << t.M << "," << t.A << ")";
  ss << "; " << m.torsions.size() << " torsion";
  for (const auto& t : m.torsions) ss << " (" << t.at.M << "," << t.at.A << ")^" << t.order;
  return ss.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_validate(const RunConfig& cfg) {
  const GridDiagram g = load_grid(cfg);
  const auto comps = link_components(g);
  if (structured(cfg)) {
    ordered_json out{{"valid", true}, {"n", g.size()}, {"O", g.o_cols()}, {"X", g.x_cols()}, {"components", comps.count}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "valid: " << serialize_grid(g) << "\n";
    std::cout << "components: " << comps.count << "\n";
  }
  return 0;
}

int cmd_info(const RunConfig& cfg) {
  const GridDiagram g = load_grid(cfg);
  const int cap = resolve_cap(cfg);
  const auto comps = link_components(g);
  const auto pd = planar_diagram(g);
  const auto gens = factorial(g.size());
  if (structured(cfg)) {
    ordered_json out{{"grid", serialize_grid(g)},          {"n", g.size()},
                     {"components", comps.count},          {"crossings", pd.crossings.size()},
                     {"writhe", pd.writhe()},              {"generators", gens},
                     {"within_cap", g.size() <= cap}, {"cap", cap}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "grid: " << serialize_grid(g) << "\n";
    std::cout << "size: " << g.size() << "\n";
    std::cout << "components: " << comps.count << "\n";
    std::cout << "crossings: " << pd.crossings.size() << "\n";
    std::cout << "writhe: " << pd.writhe() << "\n";
    std::cout << "generators: " << gens << "\n";
    std::cout << "within cap " << cap << ": " << yes_no(g.size() <= cap) << "\n";
  }
  return 0;
}

int cmd_oracle(const RunConfig& cfg) {
  const GridDiagram g = load_grid(cfg);
  const ComputeOptions opt = compute_options(cfg);
  const LaurentPoly delta = alexander_polynomial(g);
  // Chain-level identity: sum (-1)^M q^A = (1 - q^-1)^(n-1) delta.
  std::optional<bool> chain;
  if (g.size() <= opt.cap) {
    progress(cfg, "grading " + std::to_string(factorial(g.size())) + " generators");
    const auto gg = assign_gradings(g, delta, opt);
    const LaurentPoly factor = LaurentPoly(1) - LaurentPoly::monomial(1, -1);
    chain = euler_polynomial(gg.M, gg.A) == factor.pow(g.size() - 1) * delta;
  } else {
    progress(cfg, "grid exceeds the cap; skipping the chain-level check");
  }
  if (structured(cfg)) {
    ordered_json out{{"grid", serialize_grid(g)}, {"alexander", delta.to_string()}};
    ordered_json coeffs = ordered_json::array();
    for (const auto& [e, c] : delta.terms()) coeffs.push_back({e, c});
    out["coefficients"] = coeffs;
    out["euler_chain_check"] = chain ? ordered_json(*chain) : ordered_json(nullptr);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "alexander: " << delta.to_string() << "\n";
    std::cout << "euler chain check: " << (chain ? (*chain ? "pass" : "FAIL") : "skipped") << "\n";
  }
  if (chain && !*chain) throw InvariantViolation("graded Euler characteristic of the chain complex disagrees with the oracle");
  return 0;
}

int cmd_hfk(const RunConfig& cfg) {
  const GridDiagram g = load_grid(cfg);
  const ComputeOptions opt = compute_options(cfg);
  check_size(g, opt.cap);
  const std::string flavor = cfg.flavor.empty() ? "all" : cfg.flavor;
  const bool with_minus = flavor != "hat";
  Stopwatch sw;
  progress(cfg, "computing knot Floer homology for n=" + std::to_string(g.size()));
  const KnotReport r = knot_report(g, opt, with_minus);
  progress(cfg, "done in " + std::to_string(sw.seconds()) + " s");
  if (structured(cfg)) {
    ordered_json out;
    out["grid"] = serialize_grid(g);
    out["generators"] = r.generators;
    out["alexander"] = r.delta.to_string();
    out["hfk_hat"] = ranks_json(r.hfk_hat);
    out["tilde_total_rank"] = total_rank(r.tilde);
    out["hfk_minus"] = with_minus ? module_json(r.hfk_minus) : ordered_json(nullptr);
    out["genus"] = r.genus;
    out["fibered"] = r.fibered;
    out["tau"] = with_minus ? ordered_json(r.tau) : ordered_json(nullptr);
    out["unknot"] = r.unknot;
    ordered_json checks = ordered_json::object();
    for (const auto& [k, v] : r.checks) checks[k] = v;
    out["checks"] = checks;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "grid: " << serialize_grid(g) << "\n";
    std::cout << "generators: " << r.generators << "\n";
    std::cout << "alexander: " << r.delta.to_string() << "\n";
    std::cout << "HFK-hat ranks:\n" << ranks_table(r.hfk_hat);
    if (with_minus) std::cout << "HFK-minus: " << module_text(r.hfk_minus) << "\n";
    std::cout << "genus: " << r.genus << "\n";
    std::cout << "fibered: " << yes_no(r.fibered) << "\n";
    if (with_minus) std::cout << "tau: " << r.tau << "\n";
    std::cout << "unknot: " << yes_no(r.unknot) << "\n";
    for (const auto& [k, v] : r.checks) std::cout << "check " << k << ": " << (v ? "pass" : "FAIL") << "\n";
  }
  for (const auto& [k, v] : r.checks) {
    if (!v) throw InvariantViolation("check failed: " + k);
  }
  return 0;
}

int cmd_moves(const RunConfig& cfg) {
  const GridDiagram g = load_grid(cfg);
  const int cap = resolve_cap(cfg);
  check_size(g, cap);
  std::vector<GridMove> trace;
  const GridDiagram out = random_move_sequence(g, cfg.moves, cfg.seed, cap, &trace);
  if (structured(cfg)) {
    ordered_json moves = ordered_json::array();
    for (const auto& m : trace) moves.push_back(m.describe());
    ordered_json doc{{"start", serialize_grid(g)}, {"seed", cfg.seed}, {"moves", moves}, {"result", serialize_grid(out)}};
    std::cout << doc.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < trace.size(); ++i) std::cout << i + 1 << ". " << trace[i].describe() << "\n";
    std::cout << "result: " << serialize_grid(out) << "\n";
  }
  return 0;
}

int cmd_invariance(const RunConfig& cfg) {
  const GridDiagram g = load_grid(cfg);
  const ComputeOptions opt = compute_options(cfg);
  check_size(g, opt.cap);
  Stopwatch sw;
  progress(cfg, "hfk-hat of the input grid");
  const BigradedRanks before = hfk_hat(g, opt);
  const GridDiagram moved = random_move_sequence(g, cfg.moves, cfg.seed, opt.cap);
  progress(cfg, "hfk-hat after " + std::to_string(cfg.moves) + " moves (n=" + std::to_string(moved.size()) + ")");
  BigradedRanks after = hfk_hat(moved, opt);
  if (cfg.corrupt) after[{0, 0}] += 1;  // test hook: the comparison must notice
  const bool pass = before == after;
  progress(cfg, "done in " + std::to_string(sw.seconds()) + " s");
  if (structured(cfg)) {
    ordered_json doc{{"start", serialize_grid(g)},   {"seed", cfg.seed},          {"moves", cfg.moves},
                     {"result", serialize_grid(moved)}, {"before", ranks_json(before)}, {"after", ranks_json(after)},
                     {"pass", pass}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "start: " << serialize_grid(g) << "\n";
    std::cout << "after " << cfg.moves << " moves: " << serialize_grid(moved) << "\n";
    std::cout << "invariance: " << (pass ? "pass" : "FAIL") << "\n";
  }
  if (!pass) throw InvariantViolation("HFK-hat changed under grid moves");
  return 0;
}

ModelComplex load_model_source(const RunConfig& cfg) {
  const int given = !cfg.model.empty() + !cfg.model_file.empty() + !cfg.delta.empty();
  if (given != 1) throw InputError("give exactly one of --model, --model-file, --delta");
  if (!cfg.model.empty()) return bundled_model(cfg.model);
  if (!cfg.model_file.empty()) return load_model(read_file(cfg.model_file));
  return staircase_model(parse_laurent(cfg.delta));
}

ordered_json summary_json(const HomologySummary& h) {
  ordered_json out;
  if (h.flavor == Flavor::hat) {
    out["rank"] = h.hat_rank;
  } else {
    out["towers"] = h.towers;
    out["excess"] = h.excess;
    out["cutoff"] = h.cutoff;
  }
  ordered_json deg = ordered_json::array();
  for (const auto& [d, r] : h.degree_ranks) deg.push_back({d, r});
  out["degree_ranks"] = deg;
  return out;
}

std::string summary_text(const HomologySummary& h) {
  if (h.flavor == Flavor::hat) return "rank " + std::to_string(h.hat_rank);
  std::string s = std::to_string(h.towers) + (h.towers == 1 ? " tower" : " towers");
  if (h.excess) s += " + " + std::to_string(h.excess);
  return s;
}

int cmd_surgery(const RunConfig& cfg) {
  const ModelComplex m = load_model_source(cfg);
  const std::string fl = cfg.flavor.empty() ? "plus" : cfg.flavor;
  if (fl != "hat" && fl != "plus") throw InputError("surgery flavor must be hat or plus");
  const Flavor flavor = fl == "hat" ? Flavor::hat : Flavor::plus;
  SurgeryOptions sopt;
  sopt.max_cutoff = cfg.cutoff;
  Stopwatch sw;
  ordered_json doc;
  doc["model"] = m.name;
  doc["flavor"] = fl;
  if (cfg.s) {
    progress(cfg, "large surgery, s=" + std::to_string(*cfg.s));
    const auto h = large_surgery(m, *cfg.s, flavor, sopt);
    doc["s"] = *cfg.s;
    doc["stable"] = summary_json(h);
    if (!structured(cfg)) std::cout << "A_" << *cfg.s << ": " << summary_text(h) << "\n";
  } else {
    if (cfg.p == 0) throw InputError("--p must be a nonzero integer");
    const int smax = cfg.smax ? *cfg.smax : default_smax(m, cfg.p);
    progress(cfg, "mapping cone p=" + std::to_string(cfg.p) + " smax=" + std::to_string(smax));
    const auto cone = surgery_cone(m, cfg.p, flavor, smax);
    const auto hs = surgery_homology(cone, sopt);
    doc["p"] = cfg.p;
    doc["smax"] = smax;
    ordered_json classes = ordered_json::array();
    for (std::size_t i = 0; i < hs.size(); ++i) {
      ordered_json pieces = ordered_json::array();
      for (const auto& pc : cone.classes[i]) pieces.push_back(std::string(pc.is_a ? "A_" : "B_") + std::to_string(pc.s));
      ordered_json c{{"class", i}, {"pieces", pieces}};
      c.update(summary_json(hs[i]));
      classes.push_back(c);
      if (!structured(cfg)) {
        std::cout << "class " << i << " [";
        for (std::size_t k = 0; k < pieces.size(); ++k) std::cout << (k ? " " : "") << pieces[k].get<std::string>();
        std::cout << "]: " << summary_text(hs[i]) << "\n";
      }
    }
    doc["classes"] = classes;
  }
  progress(cfg, "done in " + std::to_string(sw.seconds()) + " s");
  if (structured(cfg)) std::cout << doc.dump(2) << "\n";
  return 0;
}

int cmd_model_check(const RunConfig& cfg) {
  ModelComplex m;
  try {
    m = load_model_source(cfg);
  } catch (const ModelError& e) {
    if (structured(cfg)) {
      std::cout << ordered_json{{"valid", false}, {"errors", e.errors()}}.dump(2) << "\n";
    } else {
      for (const auto& msg : e.errors()) std::cout << "error: " << msg << "\n";
    }
    throw;
  }
  if (structured(cfg)) {
    std::cout << ordered_json{{"valid", true},
                              {"name", m.name},
                              {"generators", m.generators.size()},
                              {"arrows", m.arrows.size()},
                              {"model", ordered_json::parse(model_to_json(m))}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "valid: " << m.name << " (" << m.generators.size() << " generators, " << m.arrows.size()
              << " arrows)\n";
  }
  return 0;
}

int cmd_export(const RunConfig& cfg) {
  const GridDiagram g = load_grid(cfg);
  const ComputeOptions opt = compute_options(cfg);
  check_size(g, opt.cap);
  const std::string fl = cfg.flavor.empty() ? "tilde" : cfg.flavor;
  const auto gg = assign_gradings(g, opt);
  Complex c;
  if (fl == "tilde") {
    c = build_tilde(gg, cfg.jobs);
  } else if (fl == "minus") {
    c = build_minus_collapsed(gg, cfg.jobs);
  } else if (fl == "full") {
    c = build_full_labeled(gg, cfg.jobs);
  } else {
    throw InputError("export flavor must be tilde, minus or full");
  }
  std::cout << export_complex_json(gg, c, fl) << "\n";
  return 0;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "structured"}));
  sub->add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores, 1 = sequential)")->check(CLI::NonNegativeNumber);
  sub->add_flag("--quiet", cfg.quiet, "Suppress progress on stderr");
}

void add_grid(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--grid", cfg.grid_text, "Inline grid, e.g. \"n=2;O=[0,1];X=[1,0]\"");
  sub->add_option("--file", cfg.grid_file, "Grid file (text or JSON)");
  sub->add_option("--max-n", cfg.max_n, "Grid size cap (default 8; env GRIDHFK_MAX_N)");
  sub->add_flag("--allow-large", cfg.allow_large, "Allow grids of size 9");
}

void add_model(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--model", cfg.model, "Bundled model")->check(CLI::IsMember(bundled_model_names()));
  sub->add_option("--model-file", cfg.model_file, "Model document (JSON)");
  sub->add_option("--delta", cfg.delta, "Staircase from an Alexander polynomial, e.g. -1:1,0:-1,1:1");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot Floer homology from grid diagrams, and surgery on model complexes"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* validate = app.add_subcommand("validate", "Parse and validate a grid");
  add_common(validate, cfg);
  add_grid(validate, cfg);

  auto* info = app.add_subcommand("info", "Size, components, crossings and generator count");
  add_common(info, cfg);
  add_grid(info, cfg);

  auto* hfk = app.add_subcommand("hfk", "Knot Floer homology and derived invariants");
  add_common(hfk, cfg);
  add_grid(hfk, cfg);
  hfk->add_option("--flavor", cfg.flavor, "hat skips the minus computation (and tau)")
      ->check(CLI::IsMember({"hat", "all"}));

  auto* oracle = app.add_subcommand("oracle", "Alexander polynomial and the chain-level Euler check");
  add_common(oracle, cfg);
  add_grid(oracle, cfg);

  auto* moves = app.add_subcommand("moves", "Apply a seeded random sequence of grid moves");
  add_common(moves, cfg);
  add_grid(moves, cfg);
  moves->add_option("--seed", cfg.seed, "Random seed");
  moves->add_option("--count", cfg.moves, "Number of moves")->check(CLI::NonNegativeNumber);

  auto* inv = app.add_subcommand("invariance", "Compare HFK-hat before and after random grid moves");
  add_common(inv, cfg);
  add_grid(inv, cfg);
  inv->add_option("--seed", cfg.seed, "Random seed");
  inv->add_option("--count", cfg.moves, "Number of moves")->check(CLI::NonNegativeNumber);
  inv->add_flag("--corrupt", cfg.corrupt, "Test hook: perturb the second computation")->group("");

  auto* surgery = app.add_subcommand("surgery", "Integer surgery via the mapping cone");
  add_common(surgery, cfg);
  add_model(surgery, cfg);
  surgery->add_option("--p", cfg.p, "Surgery coefficient (nonzero)");
  surgery->add_option("--s", cfg.s, "Large surgery: homology of A_s instead of the cone");
  surgery->add_option("--flavor", cfg.flavor, "hat or plus (default plus)")->check(CLI::IsMember({"hat", "plus"}));
  surgery->add_option("--smax", cfg.smax, "Truncation radius (default max|A| + |p|)");
  surgery->add_option("--cutoff", cfg.cutoff, "Largest U-power cutoff tried by plus stabilization")
      ->check(CLI::PositiveNumber);

  auto* mcheck = app.add_subcommand("model-check", "Validate a model complex");
  add_common(mcheck, cfg);
  add_model(mcheck, cfg);

  auto* exp = app.add_subcommand("export", "Dump a grid complex as JSON");
  add_common(exp, cfg);
  add_grid(exp, cfg);
  exp->add_option("--flavor", cfg.flavor, "tilde, minus or full")->check(CLI::IsMember({"tilde", "minus", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(cfg);
    if (*info) return cmd_info(cfg);
    if (*hfk) return cmd_hfk(cfg);
    if (*oracle) return cmd_oracle(cfg);
    if (*moves) return cmd_moves(cfg);
    if (*inv) return cmd_invariance(cfg);
    if (*surgery) return cmd_surgery(cfg);
    if (*mcheck) return cmd_model_check(cfg);
    if (*exp) return cmd_export(cfg);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
