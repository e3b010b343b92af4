#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gridhfk/homology.hpp"
#include "gridhfk/model.hpp"

namespace gridhfk {

enum class Flavor { hat, plus };

// A finite graded chain complex over F2 with an optional U action. Element
// labels read like "A_1[b,i=-1]".
struct FiniteComplex {
  std::vector<int> degree;
  std::vector<std::vector<std::uint32_t>> d;
  std::vector<std::int64_t> u;  // image under U or -1
  std::vector<std::string> label;

  std::size_t size() const { return degree.size(); }
};

struct SurgeryOptions {
  int max_cutoff = 64;
};

struct HomologySummary {
  Flavor flavor = Flavor::hat;
  std::int64_t hat_rank = 0;
  std::int64_t towers = 0;
  std::int64_t excess = 0;  // total rank of the reduced (finite) part
  int cutoff = 0;           // plus flavor: stabilized U-power cutoff N
  std::map<int, std::int64_t> degree_ranks;  // relative degrees; plus: below the cutoff only
  friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

// Region max(i, j - s) >= 0 (plus, degrees <= D0 + 2N) or = 0 (hat), where
// elements are [x, i] with j = i + A(x) and degree M(x) + 2i.
FiniteComplex stable_complex(const ModelComplex& m, int s, Flavor flavor, int N = 0);

// Homology of a finite complex; the plus summary reads towers and the reduced
// rank off the degrees below the cutoff.
HomologySummary summarize_hat(const FiniteComplex& c);
HomologySummary summarize_plus(const FiniteComplex& c, int top_degree);

// H_*(A_s); plus flavor grows N until (towers, excess) freezes.
HomologySummary large_surgery(const ModelComplex& m, int s, Flavor flavor, const SurgeryOptions& opt = {});

// The same group from the free F2[U] complex A_s^- (region max(i, j-s) <= 0).
UModuleSummary stable_minus_homology(const ModelComplex& m, int s);

struct ConePiece {
  bool is_a = true;  // A_s, otherwise B_s
  int s = 0;
  int offset = 0;  // degree shift of the piece inside the cone
};

struct SurgeryCone {
  ModelComplex model;
  int p = 0;
  Flavor flavor = Flavor::plus;
  int smax = 0;
  // Indexed by Spin^c class s mod |p| in [0, |p|).
  std::vector<std::vector<ConePiece>> classes;
};

int default_smax(const ModelComplex& m, int p);

// Truncated mapping cone. Keeps A_s for |s| <= smax and the B_t they reach
// except those cancelled against discarded A_s. Throws InputError if some
// discarded v_s or h_s is not a quasi-isomorphism (smax too small).
SurgeryCone surgery_cone(const ModelComplex& m, int p, Flavor flavor, int smax);

// Chain complex of one Spin^c class; plus flavor truncated at degree D.
FiniteComplex cone_complex(const SurgeryCone& cone, int cls, int D = 0);

std::vector<HomologySummary> surgery_homology(const SurgeryCone& cone, const SurgeryOptions& opt = {});

// Cone of v_s (or h_s) in hat flavor has zero homology.
bool v_is_quasi_iso(const ModelComplex& m, int s);
bool h_is_quasi_iso(const ModelComplex& m, int s);

}  // namespace gridhfk
