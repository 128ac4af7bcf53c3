#pragma once

#include "jgpt/bipartite.hpp"

namespace jgpt {

// Involutive Jordan automorphism realizing x -> x_bar in coordinates:
// entrywise conjugation (= transpose) for complex Hermitian algebras, the
// identity elsewhere (quaternionic time reversal is inner and fixes the
// Hermitian part pointwise), blockwise for direct sums.
LinearMap conjugation_map(const Algebra& alg);

// Conjugate system: the partner model, the outcome isomorphism, and the
// uniformly correlating state eta with eta(x, x_bar) = 1/n.
struct Conjugate {
  Model model;       // A
  Model conj_model;  // A_bar, same algebra with the conjugation isomorphism
  LinearMap conj;    // coordinates of x -> x_bar
  BipartiteState eta;

  Element bar(const Element& x) const { return conj.apply(x); }
  double eta_outcomes(const Element& x, const Element& y_bar) const {
    return eta.value(x, y_bar);
  }
};

Conjugate make_conjugate(const Model& a);

// phi_bar = C_B . phi . C_A
LinearMap conjugate_process(const LinearMap& phi);

struct EprReport {
  int dimension = 0;
  int samples = 0;
  double worst_pair_deviation = 0.0;   // <(a x b_bar) Psi, Psi> vs Tr(ab)/n
  double worst_frame_deviation = 0.0;  // 1/n on matches, 0 on mismatches
  double basis_change_deviation = 0.0; // Psi rebuilt from a random basis
  bool pass = false;
};

// Builds the maximally entangled vector in dimension n and verifies that
// its joint probability function is the normalized trace inner product.
EprReport epr_check(int n, Rng& rng, int samples = 100, double tol = 1e-12);

}  // namespace jgpt
