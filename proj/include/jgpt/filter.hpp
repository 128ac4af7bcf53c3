#pragma once

#include "jgpt/conjugate.hpp"

namespace jgpt {

// Filter on a test: attenuates outcome x of the generating frame by t_x.
// Realized as U_c with c = sum sqrt(t_x) x, which is automatically
// symmetric for the canonical conjugate.
struct Filter {
  Model model;
  LinearMap map;
  std::vector<Element> frame;
  Eigen::VectorXd coefficients;
};

Filter make_filter(const Model& m, const std::vector<Element>& frame,
                   const Eigen::VectorXd& coefficients,
                   double tol = kDefaultTol);

// max over sampled effect pairs of |eta(Phi* a, b_bar) - eta(a, Phi_bar* b_bar)|
double filter_symmetry_residual(const LinearMap& phi, const Conjugate& conj,
                                Rng& rng, int samples = 50);

struct ReversibilityReport {
  bool reversible = false;
  double p = 0.0;                    // min t
  double identity_residual = 0.0;    // |S Phi - p I|
  bool reverse_is_process = false;
  Eigen::MatrixXd reverse;           // S, when reversible
};

ReversibilityReport p_reversibility_check(const Filter& f, Rng& rng,
                                          double tol = kDefaultTol);

// Order automorphism T = U_sqrt(b) U_sqrt(a)^-1 with T(a) = b; both inputs
// must be cone-interior.
LinearMap homogeneity_transport(const Element& a, const Element& b,
                                double tol = kDefaultTol);

// Filter preparing alpha from the maximally mixed state up to the scalar
// 1/(n * max eigenvalue).
Filter prepare_state(const Model& m, const State& alpha,
                     double tol = kDefaultTol);

}  // namespace jgpt
