#pragma once

#include "jgpt/model.hpp"

namespace jgpt {

// Non-signaling bipartite state. Finite x finite pairs carry the explicit
// joint probability table; Jordan x Jordan pairs carry a bilinear form on
// the two coordinate spaces, evaluated on outcome pairs (p, q) as
// p' * form * q.
class BipartiteState {
 public:
  static BipartiteState from_table(Model a, Model b, Eigen::MatrixXd table);
  static BipartiteState from_form(Model a, Model b, Eigen::MatrixXd form);

  const Model& model_a() const { return a_; }
  const Model& model_b() const { return b_; }
  bool table_backed() const { return table_backed_; }

  double value(int x, int y) const;
  double value(const Element& x, const Element& y) const;

  const Eigen::MatrixXd& table() const;
  const Eigen::MatrixXd& form() const;

 private:
  BipartiteState(Model a, Model b, Eigen::MatrixXd data, bool table_backed);
  Model a_;
  Model b_;
  Eigen::MatrixXd data_;
  bool table_backed_;
};

struct BipartiteValidation {
  bool pass = false;
  double normalization_violation = 0.0;  // condition (i)
  double marginal_violation = 0.0;       // condition (ii)
  double conditional_violation = 0.0;    // condition (iii)
  double total_probability_violation = 0.0;
  double worst_violation() const;
};

BipartiteValidation validate_bipartite(const BipartiteState& w, Rng& rng,
                                       int frame_samples = 6,
                                       double tol = kDefaultTol);

enum class Side { A, B };

State marginal(const BipartiteState& w, Side side);
State conditional(const BipartiteState& w, int outcome, Side conditioned_on,
                  double tol = kDefaultTol);
State conditional(const BipartiteState& w, const Element& outcome,
                  Side conditioned_on, double tol = kDefaultTol);

// Lemma-0 style conditioning map: sends an effect of A (coefficients over
// outcome effects for finite backends, coordinates for Jordan backends) to
// the corresponding unnormalized conditional state of B.
struct ConditioningMap {
  Model from;
  Model to;
  Eigen::MatrixXd matrix;

  // Images are unnormalized members of V(B)+.
  Eigen::VectorXd apply_weights(const Eigen::VectorXd& effect_weights) const;
  Element apply_element(const Element& effect) const;
};

ConditioningMap conditioning_map(const BipartiteState& w);

// Largest |w_hat(x)(y) - w(x,y)| over outcome pairs (sampled frames for
// Jordan backends).
double conditioning_map_reproduction_error(const BipartiteState& w,
                                           const ConditioningMap& map,
                                           Rng& rng, int frame_samples = 6);

BipartiteState product_state(const State& alpha, const State& beta);

}  // namespace jgpt
