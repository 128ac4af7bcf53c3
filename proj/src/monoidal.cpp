#include "jgpt/monoidal.hpp"

#include <cmath>

#include "jgpt/tensor.hpp"

namespace jgpt {

namespace {

void require_complex_quantum(const Model& m, const char* what) {
  if (m.backend() != Backend::Jordan ||
      m.algebra().kind() != AlgebraKind::ComplexHerm)
    throw Error(std::string(what) + ": complex quantum models only");
}

}  // namespace

Element Composite::pair_effect(const Element& x, const Element& y) const {
  Eigen::MatrixXcd mx = element_to_matrix(x);
  Eigen::MatrixXcd my = element_to_matrix(y);
  return element_from_matrix(joint.algebra(),
                             kron<std::complex<double>>(mx, my));
}

Composite quantum_composite(const Model& a, const Model& b) {
  require_complex_quantum(a, "quantum_composite");
  require_complex_quantum(b, "quantum_composite");
  int n = a.algebra().size();
  int m = b.algebra().size();
  return Composite{a, b, Model::jordan(Algebra::complex_herm(n * m))};
}

BipartiteState pull_back(const Composite& c, const State& joint_state) {
  if (joint_state.model != c.joint)
    throw MismatchError("pull_back: state of a different composite");
  const Algebra& aa = c.a.algebra();
  const Algebra& ab = c.b.algebra();
  Eigen::MatrixXd form(aa.dim(), ab.dim());
  for (int i = 0; i < aa.dim(); ++i) {
    Element bi = basis_element(aa, i);
    for (int j = 0; j < ab.dim(); ++j) {
      form(i, j) = trace_inner_product(
          *joint_state.cone, c.pair_effect(bi, basis_element(ab, j)));
    }
  }
  return BipartiteState::from_form(c.a, c.b, std::move(form));
}

CompositeValidation validate_composite(const Composite& c, Rng& rng,
                                       int samples, double tol) {
  CompositeValidation v;
  Element u_joint = unit_element(c.joint.algebra());
  for (int s = 0; s < samples; ++s) {
    std::vector<Element> ea = random_frame(c.a.algebra(), rng);
    std::vector<Element> fb = random_frame(c.b.algebra(), rng);
    Element sum = zero_element(c.joint.algebra());
    for (const Element& x : ea)
      for (const Element& y : fb) sum = sum + c.pair_effect(x, y);
    v.unit_violation = std::max(v.unit_violation, norm(sum - u_joint));

    State w = random_state(c.joint, rng);
    BipartiteValidation bv = validate_bipartite(pull_back(c, w), rng, 3, tol);
    v.pullback_violation = std::max(v.pullback_violation,
                                    bv.worst_violation());
  }
  v.pass = v.unit_violation <= tol && v.pullback_violation <= tol;
  return v;
}

TomographyReport local_tomography_check(const Composite& c, Rng& rng) {
  TomographyReport rep;
  rep.dim_a = c.a.algebra().dim();
  rep.dim_b = c.b.algebra().dim();
  rep.dim_joint = c.joint.algebra().dim();
  rep.dims_multiply = rep.dim_joint == rep.dim_a * rep.dim_b;

  // product effects of outcome pairs must span the joint dual space; draw
  // each pair from independent frames (the four products of one frame pair
  // are linearly tied through the unit)
  const int want = rep.dim_joint;
  Eigen::MatrixXd rows(2 * want, rep.dim_joint);
  for (int r = 0; r < 2 * want; ++r) {
    std::vector<Element> ea = random_frame(c.a.algebra(), rng);
    std::vector<Element> fb = random_frame(c.b.algebra(), rng);
    const Element& x = ea[static_cast<std::size_t>(
        rng.below(static_cast<int>(ea.size())))];
    const Element& y = fb[static_cast<std::size_t>(
        rng.below(static_cast<int>(fb.size())))];
    rows.row(r) = c.pair_effect(x, y).coords.transpose();
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(rows);
  qr.setThreshold(1e-10);
  rep.product_span_rank = static_cast<int>(qr.rank());
  rep.pass = rep.dims_multiply && rep.product_span_rank == rep.dim_joint;
  return rep;
}

SnakeReport snake_check(int n, double tol) {
  SnakeReport rep;
  rep.dimension = n;
  rep.normalization_note =
      "cup carries the unit normalization sum_k B_k (x) B_k_bar, cap is the "
      "normalized state eta; each snake composite equals identity/n";

  Algebra alg = Algebra::complex_herm(n);
  Conjugate conj = make_conjugate(Model::jordan(alg));
  const int d = alg.dim();
  const Eigen::MatrixXd& c = conj.conj.matrix;

  // cup in V(A) (x) V(Abar) coordinates, cap as the eta functional
  Eigen::VectorXd cup(d * d);
  Eigen::VectorXd cap(d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      cup(i * d + j) = c(j, i);
      cap(i * d + j) = conj.eta.form()(i, j);
    }
  }

  // (cap (x) id)(id (x) cup) on V(A)
  Eigen::MatrixXd snake1(d, d);
  for (int r = 0; r < d; ++r) {
    for (int p = 0; p < d; ++p) {
      double sum = 0.0;
      for (int q = 0; q < d; ++q) sum += cap(p * d + q) * cup(q * d + r);
      snake1(r, p) = sum;
    }
  }
  // (id (x) cap)(cup (x) id) on V(Abar)
  Eigen::MatrixXd snake2(d, d);
  for (int p = 0; p < d; ++p) {
    for (int r = 0; r < d; ++r) {
      double sum = 0.0;
      for (int q = 0; q < d; ++q) sum += cup(p * d + q) * cap(q * d + r);
      snake2(p, r) = sum;
    }
  }

  Eigen::MatrixXd expect = Eigen::MatrixXd::Identity(d, d) / n;
  rep.residual_first = (snake1 - expect).norm();
  rep.residual_second = (snake2 - expect).norm();
  rep.loop_rescale_residual =
      (double(n) * snake1 - Eigen::MatrixXd::Identity(d, d)).norm();
  rep.pass = rep.residual_first <= tol && rep.residual_second <= tol &&
             rep.loop_rescale_residual <= tol * n;
  return rep;
}

LinearMap dagger_adjoint(const LinearMap& t) {
  double ratio = double(t.domain.rank()) / double(t.codomain.rank());
  return LinearMap{t.codomain, t.domain, ratio * t.matrix.transpose()};
}

DaggerReport dagger_check(const Algebra& dom, const Algebra& cod, Rng& rng,
                          int samples, double tol) {
  DaggerReport rep;
  auto inner = [](const Element& x, const Element& y) {
    return trace_inner_product(x, y) / x.algebra.rank();
  };

  Eigen::MatrixXd tm(cod.dim(), dom.dim());
  for (int i = 0; i < cod.dim(); ++i)
    for (int j = 0; j < dom.dim(); ++j) tm(i, j) = rng.gauss();
  LinearMap t{dom, cod, tm};
  LinearMap td = dagger_adjoint(t);

  for (int s = 0; s < samples; ++s) {
    Element a = random_element(dom, rng);
    Element b = random_element(cod, rng);
    double lhs = inner(t.apply(a), b);
    double rhs = inner(a, td.apply(b));
    rep.defining_residual = std::max(
        rep.defining_residual,
        std::abs(lhs - rhs) / (1.0 + norm(a) * norm(b) * tm.norm()));
  }

  rep.involution_residual =
      (dagger_adjoint(td).matrix - t.matrix).norm() / (1.0 + t.matrix.norm());

  Eigen::MatrixXd sm(dom.dim(), cod.dim());
  for (int i = 0; i < dom.dim(); ++i)
    for (int j = 0; j < cod.dim(); ++j) sm(i, j) = rng.gauss();
  LinearMap s{cod, dom, sm};
  LinearMap st = s.compose(t);
  Eigen::MatrixXd lhs = dagger_adjoint(st).matrix;
  Eigen::MatrixXd rhs = td.compose(dagger_adjoint(s)).matrix;
  rep.antihomomorphism_residual = (lhs - rhs).norm() / (1.0 + lhs.norm());

  rep.identity_residual =
      (dagger_adjoint(LinearMap::identity(dom)).matrix -
       Eigen::MatrixXd::Identity(dom.dim(), dom.dim()))
          .norm();

  rep.pass = rep.defining_residual <= tol && rep.involution_residual <= tol &&
             rep.antihomomorphism_residual <= tol &&
             rep.identity_residual <= tol;
  return rep;
}

FunctorialityReport conjugate_functoriality_check(const LinearMap& phi,
                                                  Rng& rng, int samples,
                                                  double tol) {
  if (phi.domain.kind() != AlgebraKind::ComplexHerm ||
      phi.codomain.kind() != AlgebraKind::ComplexHerm)
    throw Error("conjugate_functoriality_check: complex quantum only");
  FunctorialityReport rep;
  LinearMap bar = conjugate_process(phi);
  rep.double_conjugation_residual =
      (conjugate_process(bar).matrix - phi.matrix).norm() /
      (1.0 + phi.matrix.norm());

  Conjugate conj = make_conjugate(Model::jordan(phi.domain));
  for (int s = 0; s < samples; ++s) {
    Element a = random_element(phi.domain, rng);
    Element b = random_element(phi.domain, rng);
    // eta_Abar(a_bar, b) computed on Abar with the same conjugation
    double lhs = conj.eta.value(conj.bar(a), b);
    double rhs = conj.eta.value(a, conj.bar(b));
    rep.eta_relation_residual =
        std::max(rep.eta_relation_residual,
                 std::abs(lhs - rhs) / (1.0 + norm(a) * norm(b)));
  }
  rep.pass = rep.double_conjugation_residual <= tol &&
             rep.eta_relation_residual <= tol;
  return rep;
}

}  // namespace jgpt
