#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gridhfk/errors.hpp"
#include "gridhfk/homology.hpp"
#include "gridhfk/laurent.hpp"

namespace gridhfk {

// A finite model of the full knot complex: generators x with (M, A), arrows
// x -> y labeled by the basepoint multiplicities (n_w, n_z), and an involution
// exchanging the roles of the two basepoints.
struct ModelGenerator {
  std::string id;
  int M = 0;
  int A = 0;
};

struct ModelArrow {
  int from = 0;
  int to = 0;
  int nw = 0;
  int nz = 0;
};

struct ModelComplex {
  std::string name;
  std::vector<ModelGenerator> generators;
  std::vector<ModelArrow> arrows;
  std::vector<int> flip;

  int max_abs_A() const;
  int maslov_spread() const;
};

class ModelError : public InputError {
 public:
  explicit ModelError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

// Every violated invariant, one message each; empty when the model is valid.
std::vector<std::string> model_errors(const ModelComplex& m);

// Parses {"generators": [{id, M, A}], "arrows": [{from, to, nw, nz}],
// "flip": [[id, id], ...]} and validates it. Ids may be strings or integers.
// Throws ModelError listing every problem found.
ModelComplex load_model(std::string_view text);
std::string model_to_json(const ModelComplex& m);

// Homology of the associated graded complex (arrows with n_w = n_z = 0).
BigradedRanks model_hfk_hat(const ModelComplex& m);

// Staircase complex of an L-space knot with the given Alexander polynomial.
ModelComplex staircase_model(const LaurentPoly& delta);

// Model of the mirror knot: gradings negated, arrows reversed.
ModelComplex dual_model(const ModelComplex& m);

// unknot, trefoil-left, trefoil-right, torus-2-5, torus-3-4.
ModelComplex bundled_model(std::string_view name);
std::vector<std::string> bundled_model_names();

// Accepts `exp:coef,exp:coef,...`, e.g. `-1:1,0:-1,1:1`.
LaurentPoly parse_laurent(std::string_view text);

}  // namespace gridhfk
