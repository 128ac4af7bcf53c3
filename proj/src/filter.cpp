#include "jgpt/filter.hpp"

#include <cmath>

namespace jgpt {

namespace {

void check_frame(const Algebra& alg, const std::vector<Element>& frame,
                 double tol) {
  if (static_cast<int>(frame.size()) != alg.rank())
    throw Error("invalid frame: wrong number of idempotents");
  Element sum = zero_element(alg);
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (frame[i].algebra != alg)
      throw MismatchError("invalid frame: element of a different algebra");
    if (norm(jordan_product(frame[i], frame[i]) - frame[i]) > tol)
      throw Error("invalid frame: member is not idempotent");
    for (std::size_t j = i + 1; j < frame.size(); ++j) {
      if (norm(jordan_product(frame[i], frame[j])) > tol)
        throw Error("invalid frame: members are not orthogonal");
    }
    sum = sum + frame[i];
  }
  if (norm(sum - unit_element(alg)) > tol)
    throw Error("invalid frame: members do not sum to the unit");
}

}  // namespace

Filter make_filter(const Model& m, const std::vector<Element>& frame,
                   const Eigen::VectorXd& coefficients, double tol) {
  if (m.backend() != Backend::Jordan)
    throw Error("make_filter: Jordan backends only");
  const Algebra& alg = m.algebra();
  check_frame(alg, frame, tol);
  if (coefficients.size() != static_cast<int>(frame.size()))
    throw Error("make_filter: one coefficient per frame member");
  if (coefficients.minCoeff() < 0.0 || coefficients.maxCoeff() > 1.0)
    throw Error("make_filter: coefficient out of [0,1]");
  Element c = zero_element(alg);
  for (std::size_t i = 0; i < frame.size(); ++i) {
    c.coords += std::sqrt(coefficients(static_cast<int>(i))) *
                frame[i].coords;
  }
  return Filter{m, quadratic_rep(c), frame, coefficients};
}

double filter_symmetry_residual(const LinearMap& phi, const Conjugate& conj,
                                Rng& rng, int samples) {
  if (phi.domain != conj.model.algebra())
    throw MismatchError("filter_symmetry_residual: model mismatch");
  LinearMap phi_dual = phi.dual();
  LinearMap phi_bar_dual = conjugate_process(phi).dual();
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    Element a = random_cone_interior(phi.domain, rng, 0.0, 1.0);
    Element b = random_cone_interior(phi.domain, rng, 0.0, 1.0);
    Element b_bar = conj.bar(b);
    double lhs = conj.eta.value(phi_dual.apply(a), b_bar);
    double rhs = conj.eta.value(a, phi_bar_dual.apply(b_bar));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

ReversibilityReport p_reversibility_check(const Filter& f, Rng& rng,
                                          double tol) {
  ReversibilityReport rep;
  rep.p = f.coefficients.minCoeff();
  if (rep.p <= 0.0) {
    rep.reversible = false;
    return rep;
  }
  const Algebra& alg = f.model.algebra();
  Element c_inv = zero_element(alg);
  for (std::size_t i = 0; i < f.frame.size(); ++i) {
    c_inv.coords += (1.0 / std::sqrt(f.coefficients(static_cast<int>(i)))) *
                    f.frame[i].coords;
  }
  LinearMap s{alg, alg, rep.p * quadratic_rep(c_inv).matrix};
  Eigen::MatrixXd composed = s.matrix * f.map.matrix;
  rep.identity_residual =
      (composed - rep.p * Eigen::MatrixXd::Identity(alg.dim(), alg.dim()))
          .norm();
  rep.reverse_is_process = process_check(s, rng, 30, tol).pass();
  rep.reverse = s.matrix;
  rep.reversible = rep.identity_residual <= tol * (1.0 + rep.p * alg.dim()) &&
                   rep.reverse_is_process;
  return rep;
}

LinearMap homogeneity_transport(const Element& a, const Element& b,
                                double tol) {
  if (a.algebra != b.algebra)
    throw MismatchError("homogeneity_transport: different algebras");
  for (const Element* e : {&a, &b}) {
    ConeReport cr = cone_membership(*e, tol);
    if (cr.cls != ConeClass::InsideInterior)
      throw SpectralDomainError(
          "homogeneity_transport: input is not cone-interior",
          cr.min_eigenvalue);
  }
  LinearMap to_b = quadratic_rep(sqrt_element(b, tol));
  LinearMap from_a = quadratic_rep(inverse_element(sqrt_element(a, tol), tol));
  return to_b.compose(from_a);
}

Filter prepare_state(const Model& m, const State& alpha, double tol) {
  if (m.backend() != Backend::Jordan)
    throw Error("prepare_state: Jordan backends only");
  if (alpha.model != m) throw MismatchError("prepare_state: model mismatch");
  SpectralData sd = spectral_decompose(*alpha.cone, tol);
  double s_max = sd.eigenvalues(0);
  double s_min = sd.eigenvalues(sd.eigenvalues.size() - 1);
  if (s_min <= tol)
    throw SpectralDomainError("prepare_state: singular state", s_min);
  Eigen::VectorXd t = sd.eigenvalues / s_max;
  // rounding can push the top ratio a hair above 1
  for (int i = 0; i < t.size(); ++i) t(i) = std::min(t(i), 1.0);
  return make_filter(m, sd.frame, t, tol);
}

}  // namespace jgpt
