#include "jgpt/reconstruction.hpp"

#include <cmath>
#include <limits>

namespace jgpt {

double EtaForm::value(const Element& a, const Element& b) const {
  return conjugate.eta.value(a, conjugate.bar(b));
}

EtaForm eta_inner_product(const Conjugate& conj) {
  const Algebra& alg = conj.model.algebra();
  Eigen::MatrixXd gram(alg.dim(), alg.dim());
  for (int i = 0; i < alg.dim(); ++i) {
    Element bi = basis_element(alg, i);
    for (int j = 0; j < alg.dim(); ++j) {
      gram(i, j) = conj.eta.value(bi, conj.bar(basis_element(alg, j)));
    }
  }
  return EtaForm{conj, std::move(gram)};
}

SelfDualityReport self_duality_check(const EtaForm& form, Rng& rng,
                                     int forward_samples, int converse_samples,
                                     double tol) {
  SelfDualityReport rep;
  const Algebra& alg = form.conjugate.model.algebra();

  rep.gram_symmetric =
      (form.gram - form.gram.transpose()).norm() <= 1e-12 * (1.0 + form.gram.norm());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(form.gram);
  rep.gram_min_eigenvalue = es.eigenvalues().minCoeff();
  rep.gram_positive_definite = rep.gram_min_eigenvalue > 0.0;

  rep.forward_samples = forward_samples;
  rep.forward_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < forward_samples; ++i) {
    Element a = random_cone_interior(alg, rng, 0.0, 1.0);
    Element b = random_cone_interior(alg, rng, 0.0, 1.0);
    rep.forward_min = std::min(rep.forward_min, form.value(a, b));
  }

  rep.converse_samples = converse_samples;
  rep.worst_witness_value = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < converse_samples; ++i) {
    Element a = random_outside_cone(alg, rng);
    ConeReport cr = cone_membership(a, tol);
    if (cr.cls != ConeClass::Outside || !cr.witness) {
      ++rep.converse_failures;
      continue;
    }
    double v = form.value(a, *cr.witness);
    rep.worst_witness_value = std::max(rep.worst_witness_value, v);
    // the witness must beat the spec margin tol*|min eigenvalue|/2
    if (v > -tol * std::abs(cr.min_eigenvalue) / 2.0) ++rep.converse_failures;
  }

  // eta-hat is an order isomorphism: invertible, cone-preserving both ways
  ConditioningMap eta_hat = conditioning_map(form.conjugate.eta);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(eta_hat.matrix);
  rep.order_iso_invertible = lu.isInvertible();
  if (rep.order_iso_invertible) {
    Eigen::MatrixXd inv = lu.inverse();
    for (int i = 0; i < 50; ++i) {
      Element a = random_cone_interior(alg, rng, 0.0, 1.0);
      double fwd =
          spectral_decompose(Element{alg, eta_hat.matrix * a.coords})
              .eigenvalues.minCoeff();
      double bwd = spectral_decompose(Element{alg, inv * a.coords})
                       .eigenvalues.minCoeff();
      rep.order_iso_cone_violation =
          std::max(rep.order_iso_cone_violation,
                   std::max(0.0, -std::min(fwd, bwd)));
    }
  }

  rep.pass = rep.gram_symmetric && rep.gram_positive_definite &&
             rep.forward_min >= -1e-12 && rep.converse_failures == 0 &&
             rep.order_iso_invertible &&
             rep.order_iso_cone_violation <= tol;
  return rep;
}

Element recovered_square(const Element& a, double tol) {
  SharpRepresentation rep = unique_spectral_rep(a, tol);
  Element out = zero_element(a.algebra);
  for (std::size_t i = 0; i < rep.effects.size(); ++i) {
    double t = rep.values(static_cast<int>(i));
    out.coords += t * t * rep.effects[i].coords;
  }
  return out;
}

Element recovered_product(const Element& a, const Element& b, double tol) {
  Element sum_sq = recovered_square(a + b, tol);
  return 0.5 * (sum_sq - recovered_square(a, tol) - recovered_square(b, tol));
}

ProductRecovery recover_jordan_product(const Conjugate& conj, Rng& rng,
                                       int samples, double tol) {
  ProductRecovery rep;
  rep.note =
      "candidate product normalized as ((a+b)^2 - a^2 - b^2)/2 so that the "
      "order unit is the product unit";
  const Algebra& alg = conj.model.algebra();

  for (int i = 0; i < alg.dim(); ++i) {
    Element bi = basis_element(alg, i);
    for (int j = i; j < alg.dim(); ++j) {
      Element bj = basis_element(alg, j);
      Element native = jordan_product(bi, bj);
      Element rec = recovered_product(bi, bj, tol);
      double rel = norm(rec - native) / (1.0 + norm(native));
      rep.table_disagreement = std::max(rep.table_disagreement, rel);
    }
  }

  for (int s = 0; s < samples; ++s) {
    Element a = random_element(alg, rng);
    Element b = random_element(alg, rng);
    Element c = random_element(alg, rng);
    double u = rng.uniform(-2.0, 2.0);
    double v = rng.uniform(-2.0, 2.0);
    Element lhs = recovered_product(u * a + v * b, c, tol);
    Element rhs = u * recovered_product(a, c, tol) +
                  v * recovered_product(b, c, tol);
    double scale = 1.0 + (norm(a) + norm(b)) * norm(c);
    rep.bilinearity_residual =
        std::max(rep.bilinearity_residual, norm(lhs - rhs) / scale);

    Element a2 = recovered_square(a, tol);
    Element jl = recovered_product(a2, recovered_product(a, b, tol), tol);
    Element jr = recovered_product(a, recovered_product(a2, b, tol), tol);
    double na = norm(a);
    rep.jordan_identity_residual =
        std::max(rep.jordan_identity_residual,
                 norm(jl - jr) / (1.0 + na * na * na * norm(b)));
  }

  for (int s = 0; s < 10; ++s) {
    std::vector<Element> frame = random_frame(alg, rng);
    for (std::size_t i = 0; i < frame.size(); ++i) {
      rep.outcome_idempotency = std::max(
          rep.outcome_idempotency,
          norm(recovered_product(frame[i], frame[i], tol) - frame[i]));
      for (std::size_t j = i + 1; j < frame.size(); ++j) {
        rep.frame_orthogonality =
            std::max(rep.frame_orthogonality,
                     norm(recovered_product(frame[i], frame[j], tol)));
      }
    }
  }

  rep.pass = rep.table_disagreement <= tol &&
             rep.bilinearity_residual <= tol &&
             rep.jordan_identity_residual <= tol &&
             rep.outcome_idempotency <= tol &&
             rep.frame_orthogonality <= tol;
  return rep;
}

SharpRepresentation unique_spectral_rep(const Element& a, double tol) {
  SpectralData sd = spectral_decompose(a, tol);
  std::vector<SpectralLevel> levels = merged_levels(sd, tol);
  SharpRepresentation rep;
  rep.values.resize(static_cast<int>(levels.size()));
  Element recon = zero_element(a.algebra);
  rep.min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < levels.size(); ++i) {
    rep.values(static_cast<int>(i)) = levels[i].value;
    rep.effects.push_back(levels[i].idempotent);
    rep.multiplicities.push_back(levels[i].multiplicity);
    recon.coords += levels[i].value * levels[i].idempotent.coords;
    if (i > 0) {
      rep.min_gap =
          std::min(rep.min_gap, levels[i - 1].value - levels[i].value);
    }
    // normalized projection state gives this effect probability 1
    double tr = jordan_trace(levels[i].idempotent);
    rep.sharp_witness_residual = std::max(
        rep.sharp_witness_residual,
        std::abs(trace_inner_product(levels[i].idempotent,
                                     levels[i].idempotent) /
                     tr -
                 1.0));
  }
  if (levels.size() == 1) rep.min_gap = std::numeric_limits<double>::infinity();
  rep.reconstruction_residual = norm(recon - a);
  return rep;
}

BipartiteState correlation_dilation(const Conjugate& conj, const State& alpha,
                                    double tol) {
  if (alpha.model != conj.model)
    throw MismatchError("correlation_dilation: model mismatch");
  const Algebra& alg = conj.model.algebra();
  SpectralData sd = spectral_decompose(*alpha.cone, tol);
  Eigen::MatrixXd form = Eigen::MatrixXd::Zero(alg.dim(), alg.dim());
  for (std::size_t i = 0; i < sd.frame.size(); ++i) {
    double t = sd.eigenvalues(static_cast<int>(i));
    if (t < 0.0 && t > -tol) t = 0.0;
    if (t < 0.0)
      throw SpectralDomainError("correlation_dilation: state outside the cone",
                                t);
    Eigen::VectorXd z = sd.frame[i].coords;
    form += t * z * (conj.conj.matrix * z).transpose();
  }
  return BipartiteState::from_form(conj.model, conj.conj_model,
                                   std::move(form));
}

namespace {

CorrelatingResult correlating_from_values(
    const Eigen::MatrixXd& values, const Eigen::VectorXd& marg_a,
    const Eigen::VectorXd& marg_b, double support_tol, double tol) {
  CorrelatingResult res;
  const int na = static_cast<int>(values.rows());
  const int nb = static_cast<int>(values.cols());
  std::vector<int> match_a(static_cast<std::size_t>(na), -1);
  std::vector<int> degree_b(static_cast<std::size_t>(nb), 0);
  for (int x = 0; x < na; ++x) {
    for (int y = 0; y < nb; ++y) {
      if (values(x, y) > support_tol) {
        if (match_a[static_cast<std::size_t>(x)] != -1) {
          res.reason = "an outcome on the first side correlates with several "
                       "partner outcomes";
          return res;
        }
        match_a[static_cast<std::size_t>(x)] = y;
        if (++degree_b[static_cast<std::size_t>(y)] > 1) {
          res.reason = "an outcome on the second side correlates with several "
                       "partner outcomes";
          return res;
        }
      }
    }
  }
  for (int x = 0; x < na; ++x) {
    int y = match_a[static_cast<std::size_t>(x)];
    if (y >= 0) res.bijection.emplace_back(x, y);
  }
  if (res.bijection.empty()) {
    res.reason = "empty support";
    return res;
  }
  for (const auto& [x, y] : res.bijection) {
    res.identity_violation =
        std::max(res.identity_violation,
                 std::max(std::abs(values(x, y) - marg_a(x)),
                          std::abs(values(x, y) - marg_b(y))));
  }
  res.correlating = res.identity_violation <= tol;
  if (!res.correlating) res.reason = "support is a partial bijection but the "
                                     "perfect-correlation identity fails";
  return res;
}

}  // namespace

CorrelatingResult correlating_check(const BipartiteState& w,
                                    const std::vector<Element>& test_a,
                                    const std::vector<Element>& test_b,
                                    double support_tol, double tol) {
  const int na = static_cast<int>(test_a.size());
  const int nb = static_cast<int>(test_b.size());
  Eigen::MatrixXd values(na, nb);
  Eigen::VectorXd marg_a(na), marg_b(nb);
  State m1 = marginal(w, Side::A);
  State m2 = marginal(w, Side::B);
  for (int x = 0; x < na; ++x) {
    marg_a(x) = trace_inner_product(*m1.cone, test_a[static_cast<std::size_t>(x)]);
    for (int y = 0; y < nb; ++y) {
      values(x, y) = w.value(test_a[static_cast<std::size_t>(x)],
                             test_b[static_cast<std::size_t>(y)]);
    }
  }
  for (int y = 0; y < nb; ++y) {
    marg_b(y) = trace_inner_product(*m2.cone, test_b[static_cast<std::size_t>(y)]);
  }
  return correlating_from_values(values, marg_a, marg_b, support_tol, tol);
}

CorrelatingResult correlating_check(const BipartiteState& w,
                                    const std::vector<int>& test_a,
                                    const std::vector<int>& test_b,
                                    double support_tol, double tol) {
  const int na = static_cast<int>(test_a.size());
  const int nb = static_cast<int>(test_b.size());
  Eigen::MatrixXd values(na, nb);
  Eigen::VectorXd marg_a(na), marg_b(nb);
  State m1 = marginal(w, Side::A);
  State m2 = marginal(w, Side::B);
  for (int x = 0; x < na; ++x) {
    marg_a(x) = m1.probs(test_a[static_cast<std::size_t>(x)]);
    for (int y = 0; y < nb; ++y) {
      values(x, y) = w.value(test_a[static_cast<std::size_t>(x)],
                             test_b[static_cast<std::size_t>(y)]);
    }
  }
  for (int y = 0; y < nb; ++y)
    marg_b(y) = m2.probs(test_b[static_cast<std::size_t>(y)]);
  return correlating_from_values(values, marg_a, marg_b, support_tol, tol);
}

BitClassification classify_bit(const Model& m, Rng& rng, int samples,
                               double tol) {
  if (m.backend() != Backend::Jordan)
    throw Error("classify_bit: Jordan backends only");
  if (m.rank() != 2) throw Error("classify_bit: rank-2 models only");
  const Algebra& alg = m.algebra();
  BitClassification out;
  out.ball_dimension = alg.dim() - 1;
  switch (out.ball_dimension) {
    case 1: out.label = "classical bit"; break;
    case 2: out.label = "real bit"; break;
    case 3: out.label = "complex bit"; break;
    case 5: out.label = "quaternionic bit"; break;
    default: out.label = "non-quantum spin factor"; break;
  }

  const Element u = unit_element(alg);
  const double radius = 1.0 / std::sqrt(2.0);
  for (int s = 0; s < samples; ++s) {
    // pure states sit on the sphere of radius 1/sqrt2 around u/2
    std::vector<Element> frame = random_frame(alg, rng);
    for (const Element& p : frame) {
      double r = norm(p - 0.5 * u);
      out.sphere_residual =
          std::max(out.sphere_residual, std::abs(r - radius));
    }
    // and every point of that sphere is a primitive idempotent
    Element z = random_element(alg, rng);
    z.coords -= (trace_inner_product(z, u) / trace_inner_product(u, u)) *
                u.coords;
    if (norm(z) < 1e-12) continue;
    z = (radius / norm(z)) * z;
    Element q = 0.5 * u + z;
    out.idempotency_residual = std::max(
        out.idempotency_residual, norm(jordan_product(q, q) - q));
  }
  out.pass = out.sphere_residual <= tol && out.idempotency_residual <= tol;
  return out;
}

}  // namespace jgpt
