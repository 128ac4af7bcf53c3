#pragma once

#include "jgpt/reconstruction.hpp"

namespace jgpt {

// Non-signaling composite of two complex quantum models; the joint model is
// the complex quantum model of the tensor-product space and the pairing is
// the tensor product of projections.
struct Composite {
  Model a;
  Model b;
  Model joint;

  Element pair_effect(const Element& x, const Element& y) const;
};

Composite quantum_composite(const Model& a, const Model& b);

// Pulls a joint state back through the pairing to a bipartite form on the
// factor models.
BipartiteState pull_back(const Composite& c, const State& joint_state);

struct CompositeValidation {
  double unit_violation = 0.0;      // sum over a test pair vs u_AB
  double pullback_violation = 0.0;  // pulled-back states fail non-signaling
  bool pass = false;
};

CompositeValidation validate_composite(const Composite& c, Rng& rng,
                                       int samples = 5,
                                       double tol = kDefaultTol);

struct TomographyReport {
  int dim_a = 0;
  int dim_b = 0;
  int dim_joint = 0;
  bool dims_multiply = false;
  int product_span_rank = 0;
  bool pass = false;
};

TomographyReport local_tomography_check(const Composite& c, Rng& rng);

// Snake identities for cup = sum_k B_k (x) B_k_bar (unit normalization) and
// cap = eta (state normalization); with these conventions both composites
// equal identity/n.
struct SnakeReport {
  int dimension = 0;
  double residual_first = 0.0;
  double residual_second = 0.0;
  double loop_rescale_residual = 0.0;  // n * snake == identity
  std::string normalization_note;
  bool pass = false;
};

SnakeReport snake_check(int n, double tol = 1e-10);

// Adjoint with respect to the canonical inner products (trace form / rank);
// in coordinates T-dagger = (rank_dom / rank_cod) T-transpose.
LinearMap dagger_adjoint(const LinearMap& t);

struct DaggerReport {
  double defining_residual = 0.0;    // <Ta,b> vs <a, T-dagger b>
  double involution_residual = 0.0;  // T-dagger-dagger vs T
  double antihomomorphism_residual = 0.0;  // (ST)-dagger vs T-dagger S-dagger
  double identity_residual = 0.0;
  bool pass = false;
};

DaggerReport dagger_check(const Algebra& dom, const Algebra& cod, Rng& rng,
                          int samples = 100, double tol = 1e-12);

struct FunctorialityReport {
  double double_conjugation_residual = 0.0;
  double eta_relation_residual = 0.0;  // eta_Abar(a_bar, b) vs eta_A(a, b_bar)
  bool pass = false;
};

FunctorialityReport conjugate_functoriality_check(const LinearMap& phi,
                                                  Rng& rng, int samples = 50,
                                                  double tol = 1e-12);

}  // namespace jgpt
