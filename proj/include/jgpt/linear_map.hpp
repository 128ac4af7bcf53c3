#pragma once

#include "jgpt/spectral.hpp"

namespace jgpt {

// Linear map between ambient coordinate spaces. Processes, filters and
// daggers are all carried this way; in the orthonormal coordinates the
// trace-form dual of a map is its matrix transpose.
struct LinearMap {
  Algebra domain;
  Algebra codomain;
  Eigen::MatrixXd matrix;

  Element apply(const Element& a) const;
  LinearMap compose(const LinearMap& inner) const;  // this after inner
  LinearMap dual() const;                           // transpose
  static LinearMap identity(const Algebra& alg);
};

LinearMap left_mult_operator(const Element& c);

// U_c = 2 L_c^2 - L_{c^2}; generalizes a -> cac.
LinearMap quadratic_rep(const Element& c);

// Process sanity: positivity on sampled cone points and dual unit bound
// T*(u) <= u.
struct ProcessReport {
  bool positive;
  double worst_cone_violation;  // most negative eigenvalue seen on images
  bool unit_bounded;
  double unit_deficit_min_eigenvalue;  // min eigenvalue of u - T*(u)
  bool pass() const { return positive && unit_bounded; }
};
ProcessReport process_check(const LinearMap& t, Rng& rng, int samples = 50,
                            double tol = kDefaultTol);

}  // namespace jgpt
