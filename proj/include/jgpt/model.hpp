#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jgpt/linear_map.hpp"
#include "jgpt/spectral.hpp"

namespace jgpt {

enum class Backend { Classical, Jordan, Polytopic };

std::string backend_name(Backend b);

struct PolytopicSpec {
  std::vector<std::string> outcome_labels;
  std::vector<std::vector<int>> tests;  // outcome ids, all tests same size
  Eigen::MatrixXd vertices;             // rows = vertex states, cols = outcomes
};

// A probabilistic model: uniform test space plus a convex state set.
// Classical models are carried as a one-test polytope whose vertices are
// the point masses; Jordan models keep their test space lazy (frames are
// sampled, never enumerated).
class Model {
 public:
  static Model classical(std::vector<std::string> outcomes);
  static Model classical(int n);
  static Model jordan(Algebra alg);
  static Model polytopic(PolytopicSpec spec, double tol = kDefaultTol);

  Backend backend() const;
  int rank() const;

  const Algebra& algebra() const;  // Jordan only

  // Finite backends (classical / polytopic).
  int n_outcomes() const;
  const std::vector<std::string>& outcome_labels() const;
  const std::vector<std::vector<int>>& tests() const;
  const Eigen::MatrixXd& vertices() const;

  bool operator==(const Model& other) const;
  bool operator!=(const Model& other) const { return !(*this == other); }
  std::string to_string() const;

  struct Impl;

 private:
  explicit Model(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

// The two-test polytopic model with square state space.
Model square_bit_model();

struct State {
  Model model;
  Eigen::VectorXd probs;        // finite backends: values on all outcomes
  std::optional<Element> cone;  // Jordan: unit-trace cone element
};

State finite_state(const Model& m, Eigen::VectorXd probs,
                   double tol = kDefaultTol);
State jordan_state(const Model& m, const Element& a, double tol = kDefaultTol);
State vertex_state(const Model& m, int vertex);
State maximally_mixed_state(const Model& m);

struct Effect {
  Model model;
  Eigen::VectorXd weights;        // finite: coefficients over outcome effects
  std::optional<Element> element; // Jordan
};

Effect outcome_effect(const Model& m, int outcome);
Effect jordan_effect(const Model& m, const Element& e);
Effect unit_effect(const Model& m);
Effect zero_effect(const Model& m);

double effect_value(const Effect& e, const State& s);

struct StateValidity {
  bool valid;
  double worst_violation;
  std::string detail;
};

// Nonnegativity and per-test normalization; Jordan backends also check cone
// membership and sample random frames.
StateValidity validate_state(const State& s, Rng& rng, int frame_samples = 8,
                             double tol = kDefaultTol);

bool state_nonsingular(const State& s, double tol = kDefaultTol);

State random_state(const Model& m, Rng& rng, bool interior = true);
std::vector<Element> model_random_frame(const Model& m, Rng& rng);

// Exact convex-hull membership by support enumeration; vertex counts are
// desk-scale so this is cheap and has no solver tolerance knobs.
struct HullResult {
  bool member;
  double residual;
  Eigen::VectorXd weights;
};
HullResult convex_hull_membership(const Eigen::MatrixXd& vertices,
                                  const Eigen::VectorXd& point,
                                  double tol = kDefaultTol);

// The outcome-effect cone E(A)+ and the full dual cone of a finite model;
// these can differ and no attempt is made to decide when they coincide.
bool in_outcome_effect_cone(const Model& m, const Eigen::VectorXd& weights,
                            double tol = kDefaultTol);
bool in_dual_cone(const Model& m, const Eigen::VectorXd& weights,
                  double tol = kDefaultTol);

struct OutcomeFace {
  int outcome;
  int face_vertex_count;  // vertices v with v(x) = 1
  int face_dim;           // affine dimension of that face
  bool sharp;
};

struct SharpnessReport {
  bool sharp = false;
  // finite backends: one record per outcome
  std::vector<OutcomeFace> faces;
  // Jordan backends: sampled certificates
  int samples = 0;
  double worst_delta_residual = 0.0;  // validity of delta_x = x
  int worst_peirce_rank = 1;          // rank of U_x; 1 certifies a point face
  double worst_value_excess = 0.0;    // max over states of alpha(x) - 1
  std::string note;
};

SharpnessReport sharpness_check(const Model& m, Rng& rng, int samples = 20,
                                double tol = kDefaultTol);

struct SpectralityOutcome {
  bool success = false;
  std::string reason;
  std::vector<Element> frame;  // Jordan witness test
  std::vector<int> test;       // finite witness test
  Eigen::VectorXd weights;
  double residual = 0.0;
};

// Decomposes a state over a single test with the distinguished states
// delta_x. Jordan backends use the canonical delta_x = x. Finite backends
// use the supplied family, or, when none is given, the canonical family of
// uniquely-distinguished states — which exists only where the model is
// sharp.
SpectralityOutcome spectrality_decompose(const Model& m, const State& s,
                                         const std::vector<State>* delta = nullptr,
                                         double tol = kDefaultTol);

}  // namespace jgpt
