#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "jgpt/algebra.hpp"

namespace jgpt {

// Jordan frame of primitive idempotents with matching eigenvalues,
// descending. frame.size() == eigenvalues.size() == rank.
struct SpectralData {
  std::vector<Element> frame;
  Eigen::VectorXd eigenvalues;

  Element reconstruct() const;
};

SpectralData spectral_decompose(const Element& a, double tol = kDefaultTol);

// Strictly decreasing levels after merging eigenvalues within tol; each
// level carries the sum of its frame idempotents.
struct SpectralLevel {
  double value;
  Element idempotent;
  int multiplicity;
};
std::vector<SpectralLevel> merged_levels(const SpectralData& sd,
                                         double tol = kDefaultTol);

Element functional_calculus(const Element& a,
                            const std::function<double(double)>& f,
                            double tol = kDefaultTol);

// Named instances with domain checks.
Element square_element(const Element& a, double tol = kDefaultTol);
Element sqrt_element(const Element& a, double tol = kDefaultTol);
Element inverse_element(const Element& a, double tol = kDefaultTol);

enum class ConeClass { InsideInterior, Boundary, Outside };

struct ConeReport {
  ConeClass cls;
  double min_eigenvalue;
  // Only for Outside: spectral projection onto the negative eigenvalues;
  // a cone element with <a, witness> < 0.
  std::optional<Element> witness;
};

ConeReport cone_membership(const Element& a, double tol = kDefaultTol);

// Samplers built on spectral data.
std::vector<Element> random_frame(const Algebra& alg, Rng& rng);
Element random_cone_interior(const Algebra& alg, Rng& rng, double lo = 0.2,
                             double hi = 1.0);
Element random_outside_cone(const Algebra& alg, Rng& rng);

}  // namespace jgpt
