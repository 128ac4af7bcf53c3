#include "jgpt/conjugate.hpp"

#include <cmath>

#include "jgpt/tensor.hpp"

namespace jgpt {

LinearMap conjugation_map(const Algebra& alg) {
  switch (alg.kind()) {
    case AlgebraKind::RealSym:
    case AlgebraKind::SpinFactor:
      return LinearMap::identity(alg);
    case AlgebraKind::ComplexHerm: {
      Eigen::MatrixXd c(alg.dim(), alg.dim());
      for (int k = 0; k < alg.dim(); ++k) {
        Eigen::MatrixXcd t =
            element_to_matrix(basis_element(alg, k)).transpose();
        c.col(k) = element_from_matrix(alg, t).coords;
      }
      return LinearMap{alg, alg, std::move(c)};
    }
    case AlgebraKind::QuatHerm:
      // Quaternionic time reversal J conj(.) J^T fixes every element of the
      // embedded algebra (that is the quaternionic structure condition), so
      // the canonical conjugation is the identity. Entrywise quaternion
      // conjugation is not a Jordan automorphism for n >= 3 and cannot serve
      // here: quaternion multiplication does not commute.
      return LinearMap::identity(alg);
    case AlgebraKind::DirectSum: {
      Eigen::MatrixXd c = Eigen::MatrixXd::Zero(alg.dim(), alg.dim());
      for (int p = 0; p < alg.size(); ++p) {
        const Algebra& part = alg.parts()[static_cast<std::size_t>(p)];
        c.block(alg.part_offset(p), alg.part_offset(p), part.dim(),
                part.dim()) = conjugation_map(part).matrix;
      }
      return LinearMap{alg, alg, std::move(c)};
    }
  }
  throw Error("conjugation_map: unknown kind");
}

Conjugate make_conjugate(const Model& a) {
  if (a.backend() != Backend::Jordan)
    throw Error("make_conjugate: Jordan backends only (conjugates for "
                "polytopic models are not constructed)");
  const Algebra& alg = a.algebra();
  LinearMap conj = conjugation_map(alg);
  Model abar = Model::jordan(alg);
  // eta(x, y_bar) = <x, y>/n; on coordinates the second slot composes with
  // the (involutive) conjugation
  Eigen::MatrixXd form = conj.matrix / a.rank();
  BipartiteState eta = BipartiteState::from_form(a, abar, std::move(form));
  return Conjugate{a, std::move(abar), std::move(conj), std::move(eta)};
}

LinearMap conjugate_process(const LinearMap& phi) {
  LinearMap ca = conjugation_map(phi.domain);
  LinearMap cb = conjugation_map(phi.codomain);
  return LinearMap{phi.domain, phi.codomain,
                   cb.matrix * phi.matrix * ca.matrix};
}

EprReport epr_check(int n, Rng& rng, int samples, double tol) {
  if (n < 2) throw Error("epr_check: dimension must be >= 2");
  EprReport rep;
  rep.dimension = n;
  rep.samples = samples;

  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(n * n);
  for (int i = 0; i < n; ++i) psi(i * n + i) = 1.0 / std::sqrt(double(n));

  Algebra herm = Algebra::complex_herm(n);
  auto joint = [&](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd k = kron<std::complex<double>>(a, b.conjugate());
    return (psi.adjoint() * k * psi)(0, 0).real();
  };

  for (int s = 0; s < samples; ++s) {
    Eigen::MatrixXcd a = element_to_matrix(random_element(herm, rng));
    Eigen::MatrixXcd b = element_to_matrix(random_element(herm, rng));
    double expected = (a * b).trace().real() / n;
    rep.worst_pair_deviation =
        std::max(rep.worst_pair_deviation, std::abs(joint(a, b) - expected));
  }

  for (int s = 0; s < 10; ++s) {
    std::vector<Element> frame = random_frame(herm, rng);
    for (std::size_t i = 0; i < frame.size(); ++i) {
      Eigen::MatrixXcd pi = element_to_matrix(frame[i]);
      for (std::size_t j = 0; j < frame.size(); ++j) {
        Eigen::MatrixXcd pj = element_to_matrix(frame[j]);
        double expected = (i == j) ? 1.0 / n : 0.0;
        rep.worst_frame_deviation = std::max(
            rep.worst_frame_deviation, std::abs(joint(pi, pj) - expected));
      }
    }
  }

  // Psi is basis-independent: rebuild it from a Haar-ish random basis.
  Eigen::MatrixXcd g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      g(i, j) = std::complex<double>(rng.gauss(), rng.gauss());
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::VectorXcd psi2 = Eigen::VectorXcd::Zero(n * n);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXcd bi = q.col(i);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        psi2(r * n + c) += bi(r) * std::conj(bi(c)) / std::sqrt(double(n));
      }
    }
  }
  rep.basis_change_deviation = (psi2 - psi).norm();

  rep.pass = rep.worst_pair_deviation <= tol &&
             rep.worst_frame_deviation <= tol &&
             rep.basis_change_deviation <= tol;
  return rep;
}

}  // namespace jgpt
