#include "jgpt/linear_map.hpp"

namespace jgpt {

Element LinearMap::apply(const Element& a) const {
  if (a.algebra != domain) throw MismatchError("LinearMap::apply: wrong domain");
  return Element{codomain, matrix * a.coords};
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
  if (inner.codomain != domain)
    throw MismatchError("LinearMap::compose: domain/codomain mismatch");
  return LinearMap{inner.domain, codomain, matrix * inner.matrix};
}

LinearMap LinearMap::dual() const {
  return LinearMap{codomain, domain, matrix.transpose()};
}

LinearMap LinearMap::identity(const Algebra& alg) {
  return LinearMap{alg, alg, Eigen::MatrixXd::Identity(alg.dim(), alg.dim())};
}

LinearMap left_mult_operator(const Element& c) {
  const Algebra& alg = c.algebra;
  Eigen::MatrixXd m(alg.dim(), alg.dim());
  for (int k = 0; k < alg.dim(); ++k) {
    m.col(k) = jordan_product(c, basis_element(alg, k)).coords;
  }
  return LinearMap{alg, alg, std::move(m)};
}

LinearMap quadratic_rep(const Element& c) {
  LinearMap l = left_mult_operator(c);
  LinearMap l2 = left_mult_operator(jordan_product(c, c));
  return LinearMap{c.algebra, c.algebra,
                   2.0 * (l.matrix * l.matrix) - l2.matrix};
}

ProcessReport process_check(const LinearMap& t, Rng& rng, int samples,
                            double tol) {
  ProcessReport rep{};
  rep.worst_cone_violation = 0.0;
  rep.positive = true;
  for (int i = 0; i < samples; ++i) {
    Element x = random_cone_interior(t.domain, rng, 0.0, 1.0);
    double min_ev = spectral_decompose(t.apply(x)).eigenvalues.minCoeff();
    rep.worst_cone_violation = std::min(rep.worst_cone_violation, min_ev);
  }
  double scale = 1.0 + t.matrix.norm();
  rep.positive = rep.worst_cone_violation >= -tol * scale;
  Element deficit =
      unit_element(t.domain) - t.dual().apply(unit_element(t.codomain));
  rep.unit_deficit_min_eigenvalue =
      spectral_decompose(deficit).eigenvalues.minCoeff();
  rep.unit_bounded = rep.unit_deficit_min_eigenvalue >= -tol * scale;
  return rep;
}

}  // namespace jgpt
