#include "jgpt/suites.hpp"

#include <cmath>

namespace jgpt {

namespace {

CheckRecord from_sweep(const std::string& name, const std::string& claim,
                       const std::string& anchor, const SweepOutcome& s,
                       double tol, const std::string& note = "") {
  return CheckRecord{name, claim, anchor, s.samples, s.worst, tol,
                     s.failures == 0, note};
}

CheckRecord simple(const std::string& name, const std::string& claim,
                   const std::string& anchor, int samples, double worst,
                   double tol, bool pass, const std::string& note = "") {
  return CheckRecord{name, claim, anchor, samples, worst, tol, pass, note};
}

std::uint64_t stream(const std::string& name) { return check_stream_id(name); }

}  // namespace

std::vector<Model> standard_zoo() {
  return {
      Model::jordan(Algebra::real_sym(2)),
      Model::jordan(Algebra::real_sym(3)),
      Model::jordan(Algebra::real_sym(4)),
      Model::jordan(Algebra::complex_herm(2)),
      Model::jordan(Algebra::complex_herm(3)),
      Model::jordan(Algebra::complex_herm(4)),
      Model::jordan(Algebra::quat_herm(2)),
      Model::jordan(Algebra::quat_herm(3)),
      Model::jordan(Algebra::spin_factor(4)),
      Model::jordan(Algebra::spin_factor(8)),
  };
}

std::vector<Model> zoo_filter(const std::string& kind, int rank) {
  std::vector<Model> out;
  if (!kind.empty() && rank > 0) {
    out.push_back(Model::jordan(algebra_from_kind(kind, rank)));
    return out;
  }
  for (const Model& m : standard_zoo()) {
    const Algebra& alg = m.algebra();
    if (!kind.empty() && algebra_from_kind(kind, alg.size()) != alg) continue;
    if (rank > 0 && m.rank() != rank) continue;
    out.push_back(m);
  }
  if (out.empty()) throw Error("no zoo model matches the requested kind/rank");
  return out;
}

Report suite_model_validate(const Model& m, const SuiteOptions& opt) {
  Report rep{"model-validate", opt.seed, opt.tol, {}};
  const std::string tag = m.to_string();

  SweepOutcome states = run_sweep(
      20, opt.seed, stream(tag + "/states"), opt.tol,
      [&](Rng& rng) {
        State s = random_state(m, rng);
        return validate_state(s, rng, 2, opt.tol).worst_violation;
      },
      opt.exec);
  rep.add(from_sweep(tag + "/states-valid",
                     "random states are probability weights on every test",
                     "probabilistic model: states", states, opt.tol));

  SweepOutcome effects = run_sweep(
      20, opt.seed, stream(tag + "/effects"), opt.tol,
      [&](Rng& rng) {
        State s = random_state(m, rng);
        double worst = 0.0;
        if (m.backend() == Backend::Jordan) {
          for (const Element& p : model_random_frame(m, rng)) {
            double v = effect_value(jordan_effect(m, p), s);
            worst = std::max(worst, std::max(-v, v - 1.0));
          }
        } else {
          for (int x = 0; x < m.n_outcomes(); ++x) {
            double v = effect_value(outcome_effect(m, x), s);
            worst = std::max(worst, std::max(-v, v - 1.0));
          }
        }
        worst = std::max(
            worst, std::abs(effect_value(unit_effect(m), s) - 1.0));
        worst = std::max(worst, std::abs(effect_value(zero_effect(m), s)));
        return std::max(worst, 0.0);
      },
      opt.exec);
  rep.add(from_sweep(tag + "/effects-bounded",
                     "outcome effects take values in [0,1]; unit gives 1",
                     "probabilistic model: effects", effects, opt.tol));
  return rep;
}

Report suite_sharpness(const Model& m, const SuiteOptions& opt) {
  Report rep{"sharpness", opt.seed, opt.tol, {}};
  const std::string tag = m.to_string();
  Rng rng(derive_seed(opt.seed, stream(tag + "/sharpness"), 0));
  SharpnessReport sr = sharpness_check(m, rng, 20, opt.tol);
  if (m.backend() == Backend::Jordan) {
    rep.add(simple(tag + "/sharp-delta", "each outcome has its probability-1 state",
                   "sharp models", sr.samples, sr.worst_delta_residual, opt.tol,
                   sr.worst_delta_residual <= opt.tol));
    rep.add(simple(tag + "/sharp-face",
                   "the probability-1 face of each outcome is a single state",
                   "sharp models", sr.samples,
                   double(sr.worst_peirce_rank - 1), 0.5,
                   sr.worst_peirce_rank == 1,
                   "face dimension via the rank of the quadratic representation"));
    rep.add(simple(tag + "/sharp-bound", "no state exceeds probability 1",
                   "sharp models", sr.samples, sr.worst_value_excess, opt.tol,
                   sr.worst_value_excess <= opt.tol));
  } else {
    for (const OutcomeFace& f : sr.faces) {
      const std::string& label =
          m.outcome_labels()[static_cast<std::size_t>(f.outcome)];
      rep.add(simple(tag + "/sharp-outcome-" + label,
                     "outcome '" + label + "' has a unique probability-1 state",
                     "sharp models", 1, double(f.face_vertex_count - 1), 0.0,
                     f.sharp,
                     "face has " + std::to_string(f.face_vertex_count) +
                         " vertices, dimension " + std::to_string(f.face_dim)));
    }
  }
  return rep;
}

Report suite_spectrality(const Model& m, const SuiteOptions& opt) {
  Report rep{"spectrality", opt.seed, opt.tol, {}};
  const std::string tag = m.to_string();
  if (m.backend() == Backend::Jordan) {
    SweepOutcome sweep = run_sweep(
        50, opt.seed, stream(tag + "/spectrality"), 1e-9,
        [&](Rng& rng) {
          State s = random_state(m, rng, false);
          SpectralityOutcome so = spectrality_decompose(m, s);
          return so.success ? so.residual : 1.0;
        },
        opt.exec);
    rep.add(from_sweep(tag + "/spectral-states",
                       "every state decomposes over one test with its own "
                       "outcome probabilities as weights",
                       "spectral states", sweep, 1e-9));
    Rng rng(derive_seed(opt.seed, stream(tag + "/spectral-mixed"), 0));
    SpectralityOutcome mixed =
        spectrality_decompose(m, maximally_mixed_state(m));
    double weight_dev = 0.0;
    for (int i = 0; i < mixed.weights.size(); ++i) {
      weight_dev = std::max(weight_dev,
                            std::abs(mixed.weights(i) - 1.0 / m.rank()));
    }
    rep.add(simple(tag + "/spectral-mixed",
                   "the maximally mixed state has uniform weights 1/n",
                   "maximally mixed state", 1,
                   std::max(weight_dev, mixed.residual), 1e-9,
                   mixed.success && weight_dev <= 1e-9));
    return rep;
  }
  // finite: canonical distinguished states, where they exist
  State centroid = maximally_mixed_state(m);
  SpectralityOutcome cent = spectrality_decompose(m, centroid);
  rep.add(simple(tag + "/spectral-centroid",
                 "the uniform state decomposes over canonical distinguished "
                 "states",
                 "spectral states", 1, cent.residual, opt.tol, cent.success,
                 cent.success ? "" : cent.reason));
  for (int v = 0; v < m.vertices().rows(); ++v) {
    SpectralityOutcome so = spectrality_decompose(m, vertex_state(m, v));
    rep.add(simple(tag + "/spectral-vertex-" + std::to_string(v),
                   "vertex state decomposes over canonical distinguished "
                   "states",
                   "spectral states", 1, so.residual, opt.tol, so.success,
                   so.success ? "" : so.reason));
  }
  return rep;
}

Report suite_conjugate(const Model& m, const SuiteOptions& opt) {
  Report rep{"conjugate", opt.seed, opt.tol, {}};
  const std::string tag = m.to_string();
  Conjugate conj = make_conjugate(m);
  const int n = m.rank();

  SweepOutcome frames = run_sweep(
      50, opt.seed, stream(tag + "/eta-frames"), 1e-10,
      [&](Rng& rng) {
        std::vector<Element> frame = model_random_frame(m, rng);
        double worst = 0.0;
        for (std::size_t i = 0; i < frame.size(); ++i) {
          for (std::size_t j = 0; j < frame.size(); ++j) {
            double v = conj.eta.value(frame[i], conj.bar(frame[j]));
            double expect = (i == j) ? 1.0 / n : 0.0;
            worst = std::max(worst, std::abs(v - expect));
          }
        }
        return worst;
      },
      opt.exec);
  rep.add(from_sweep(tag + "/eta-frame-values",
                     "eta(x, x_bar) = 1/n and eta(x, y_bar) = 0 within a test",
                     "conjugate systems", frames, 1e-10));

  Rng rng(derive_seed(opt.seed, stream(tag + "/eta-valid"), 0));
  BipartiteValidation bv = validate_bipartite(conj.eta, rng, 5, opt.tol);
  rep.add(simple(tag + "/eta-bipartite-valid",
                 "eta is a non-signaling bipartite state",
                 "conjugate systems", 5, bv.worst_violation(), opt.tol,
                 bv.pass));

  State m1 = marginal(conj.eta, Side::A);
  State m2 = marginal(conj.eta, Side::B);
  State rho = maximally_mixed_state(m);
  double marg = std::max(norm(*m1.cone - *rho.cone), norm(*m2.cone - *rho.cone));
  rep.add(simple(tag + "/eta-marginals-mixed",
                 "both marginals of eta are the maximally mixed state",
                 "maximally mixed state", 2, marg, 1e-10, marg <= 1e-10));

  if (m.algebra().kind() == AlgebraKind::ComplexHerm) {
    Rng erng(derive_seed(opt.seed, stream(tag + "/epr"), 0));
    EprReport er = epr_check(m.algebra().size(), erng, 100, 1e-12);
    double worst = std::max(er.worst_pair_deviation,
                            std::max(er.worst_frame_deviation,
                                     er.basis_change_deviation));
    rep.add(simple(tag + "/epr-trace",
                   "the EPR vector's joint probabilities equal Tr(ab)/n",
                   "trace inner product as a bipartite state", er.samples,
                   worst, 1e-12, er.pass));
  }
  return rep;
}

Report suite_selfdual(const Model& m, const SuiteOptions& opt) {
  Report rep{"selfdual", opt.seed, opt.tol, {}};
  const std::string tag = m.to_string();
  Conjugate conj = make_conjugate(m);
  EtaForm form = eta_inner_product(conj);
  Rng rng(derive_seed(opt.seed, stream(tag + "/selfdual"), 0));
  SelfDualityReport sd = self_duality_check(form, rng, 200, 200, opt.tol);

  rep.add(simple(tag + "/gram-positive-definite",
                 "the eta form is a symmetric positive-definite inner product",
                 "self-dualizing inner product", form.gram.rows(),
                 -sd.gram_min_eigenvalue, 0.0,
                 sd.gram_symmetric && sd.gram_positive_definite,
                 "worst residual is minus the smallest Gram eigenvalue"));
  rep.add(simple(tag + "/forward-cone-pairs",
                 "cone pairs have nonnegative eta inner product",
                 "self-dualizing inner product", sd.forward_samples,
                 std::max(0.0, -sd.forward_min), 1e-12,
                 sd.forward_min >= -1e-12));
  rep.add(simple(tag + "/converse-witness",
                 "elements outside the cone receive a separating witness",
                 "self-dualizing inner product", sd.converse_samples,
                 sd.worst_witness_value, 0.0, sd.converse_failures == 0,
                 "worst residual is the largest (most positive) witness value"));
  rep.add(simple(tag + "/order-isomorphism",
                 "the conditioning map of eta is an order isomorphism",
                 "self-dualizing inner product", 50,
                 sd.order_iso_cone_violation, opt.tol,
                 sd.order_iso_invertible &&
                     sd.order_iso_cone_violation <= opt.tol));
  return rep;
}

Report suite_filters(const Model& m, const SuiteOptions& opt) {
  Report rep{"filters", opt.seed, opt.tol, {}};
  const std::string tag = m.to_string();
  Conjugate conj = make_conjugate(m);
  const int n = m.rank();

  auto random_coeffs = [n](Rng& rng, double lo) {
    Eigen::VectorXd t(n);
    for (int i = 0; i < n; ++i) t(i) = rng.uniform(lo, 1.0);
    return t;
  };

  SweepOutcome action = run_sweep(
      50, opt.seed, stream(tag + "/filter-action"), 1e-9,
      [&](Rng& rng) {
        std::vector<Element> frame = model_random_frame(m, rng);
        Filter f = make_filter(m, frame, random_coeffs(rng, 0.0), opt.tol);
        State s = random_state(m, rng);
        Element image = f.map.apply(*s.cone);
        double worst = 0.0;
        for (std::size_t i = 0; i < frame.size(); ++i) {
          double lhs = trace_inner_product(image, frame[i]);
          double rhs = f.coefficients(static_cast<int>(i)) *
                       trace_inner_product(*s.cone, frame[i]);
          worst = std::max(worst, std::abs(lhs - rhs));
          // dual action on the outcome effects of the generating test
          worst = std::max(
              worst, norm(f.map.dual().apply(frame[i]) -
                          f.coefficients(static_cast<int>(i)) * frame[i]));
        }
        return worst;
      },
      opt.exec);
  rep.add(from_sweep(tag + "/filter-action",
                     "a filter scales each outcome of its test by t_x, and "
                     "its dual scales the outcome effects",
                     "filters", action, 1e-9));

  SweepOutcome symmetry = run_sweep(
      50, opt.seed, stream(tag + "/filter-symmetry"), 1e-9,
      [&](Rng& rng) {
        std::vector<Element> frame = model_random_frame(m, rng);
        Filter f = make_filter(m, frame, random_coeffs(rng, 0.0), opt.tol);
        return filter_symmetry_residual(f.map, conj, rng, 20);
      },
      opt.exec);
  rep.add(from_sweep(tag + "/filter-symmetry",
                     "filters built as quadratic representations are "
                     "symmetric for eta",
                     "filters are symmetric", symmetry, 1e-9));

  SweepOutcome reversibility = run_sweep(
      30, opt.seed, stream(tag + "/filter-reversibility"), 1e-9,
      [&](Rng& rng) {
        std::vector<Element> frame = model_random_frame(m, rng);
        Filter f = make_filter(m, frame, random_coeffs(rng, 0.05), opt.tol);
        ReversibilityReport rr = p_reversibility_check(f, rng, opt.tol);
        if (!rr.reversible) return 1.0;
        return rr.identity_residual;
      },
      opt.exec);
  rep.add(from_sweep(tag + "/filter-p-reversibility",
                     "filters with strictly positive coefficients are "
                     "p-reversible with p = min t",
                     "p-reversible processes", reversibility, 1e-9));

  SweepOutcome mixed_image = run_sweep(
      30, opt.seed, stream(tag + "/filter-mixed-image"), 1e-9,
      [&](Rng& rng) {
        std::vector<Element> frame = model_random_frame(m, rng);
        Eigen::VectorXd t = random_coeffs(rng, 0.0);
        Filter f = make_filter(m, frame, t, opt.tol);
        Element rho = (1.0 / n) * unit_element(m.algebra());
        Element expect = zero_element(m.algebra());
        for (std::size_t i = 0; i < frame.size(); ++i) {
          expect.coords += t(static_cast<int>(i)) / n *
                           frame[i].coords;
        }
        return norm(f.map.apply(rho) - expect);
      },
      opt.exec);
  rep.add(from_sweep(tag + "/filter-mixed-image",
                     "a filter maps the maximally mixed state to (1/n) sum "
                     "t_x delta_x",
                     "preparing states with filters", mixed_image, 1e-9));

  SweepOutcome prepare = run_sweep(
      50, opt.seed, stream(tag + "/prepare-state"), 1e-9,
      [&](Rng& rng) {
        State alpha = random_state(m, rng);
        Filter f = prepare_state(m, alpha, opt.tol);
        double smax = spectral_decompose(*alpha.cone).eigenvalues(0);
        Element rho = (1.0 / n) * unit_element(m.algebra());
        double worst =
            norm(f.map.apply(rho) - (1.0 / (n * smax)) * *alpha.cone);
        ReversibilityReport rr = p_reversibility_check(f, rng, opt.tol);
        if (!rr.reversible) return 1.0;
        worst = std::max(worst, rr.identity_residual);
        worst = std::max(worst, filter_symmetry_residual(f.map, conj, rng, 20));
        return worst;
      },
      opt.exec);
  rep.add(from_sweep(tag + "/prepare-state",
                     "every nonsingular state is prepared from the mixed "
                     "state by a p-reversible symmetric filter",
                     "preparability of nonsingular states", prepare, 1e-9));
  return rep;
}

Report suite_algebra(const std::vector<Model>& models,
                     const SuiteOptions& opt) {
  Report rep{"algebra", opt.seed, opt.tol, {}};
  for (const Model& m : models) {
    const Algebra& alg = m.algebra();
    const std::string tag = alg.to_string();

    SweepOutcome jid = run_sweep(
        100, opt.seed, stream(tag + "/jordan-identity"), 1e-9,
        [&](Rng& rng) {
          return jordan_identity_residual(random_element(alg, rng),
                                          random_element(alg, rng));
        },
        opt.exec);
    rep.add(from_sweep(tag + "/jordan-identity",
                       "a^2 (a b) = a (a^2 b) on random pairs",
                       "Jordan identity", jid, 1e-9));

    SweepOutcome roundtrip = run_sweep(
        100, opt.seed, stream(tag + "/spectral-roundtrip"), 1e-10,
        [&](Rng& rng) {
          Element a = random_element(alg, rng);
          SpectralData sd = spectral_decompose(a);
          return norm(sd.reconstruct() - a) / (1.0 + norm(a));
        },
        opt.exec);
    rep.add(from_sweep(tag + "/spectral-roundtrip",
                       "spectral decompositions reconstruct their input",
                       "spectral decomposition", roundtrip, 1e-10));

    SweepOutcome assoc = run_sweep(
        100, opt.seed, stream(tag + "/trace-associativity"), 1e-9,
        [&](Rng& rng) {
          Element a = random_element(alg, rng);
          Element b = random_element(alg, rng);
          Element c = random_element(alg, rng);
          double lhs = trace_inner_product(jordan_product(a, b), c);
          double rhs = trace_inner_product(a, jordan_product(b, c));
          return std::abs(lhs - rhs) /
                 (1.0 + norm(a) * norm(b) * norm(c));
        },
        opt.exec);
    rep.add(from_sweep(tag + "/trace-associativity",
                       "the trace form is associative for the product",
                       "trace inner product", assoc, 1e-9));
  }
  return rep;
}

Report suite_lemma1(const std::vector<Model>& models, const SuiteOptions& opt) {
  Report rep{"lemma1", opt.seed, opt.tol, {}};
  for (const Model& m : models) {
    rep.merge(suite_conjugate(m, opt));
    rep.merge(suite_selfdual(m, opt));
    if (m.rank() == 2) {
      Rng rng(derive_seed(opt.seed, stream(m.to_string() + "/bit"), 0));
      BitClassification bc = classify_bit(m, rng, 50, opt.tol);
      rep.add(simple(m.to_string() + "/bit-ball",
                     "the state space of a rank-2 model is a " +
                         std::to_string(bc.ball_dimension) + "-ball (" +
                         bc.label + ")",
                     "bits and balls", 50,
                     std::max(bc.sphere_residual, bc.idempotency_residual),
                     opt.tol, bc.pass, bc.label));
    }
  }
  return rep;
}

Report suite_lemma2(const std::vector<Model>& models, const SuiteOptions& opt) {
  Report rep{"lemma2", opt.seed, opt.tol, {}};
  for (const Model& m : models) {
    const std::string tag = m.to_string();
    Conjugate conj = make_conjugate(m);

    SweepOutcome sweep = run_sweep(
        50, opt.seed, stream(tag + "/dilation"), 1e-10,
        [&](Rng& rng) {
          State alpha = random_state(m, rng);
          BipartiteState w = correlation_dilation(conj, alpha, opt.tol);
          double worst = validate_bipartite(w, rng, 3, opt.tol).worst_violation();
          worst = std::max(worst, norm(*marginal(w, Side::A).cone - *alpha.cone));
          SpectralData sd = spectral_decompose(*alpha.cone);
          std::vector<Element> test_b;
          for (const Element& p : sd.frame) test_b.push_back(conj.bar(p));
          CorrelatingResult cr =
              correlating_check(w, sd.frame, test_b, opt.tol, opt.tol);
          if (!cr.correlating) return 1.0;
          for (const auto& [x, y] : cr.bijection) {
            if (x != y) return 1.0;  // must restrict the identity
          }
          worst = std::max(worst, cr.identity_violation);
          return worst;
        },
        opt.exec);
    rep.add(from_sweep(tag + "/dilation-correlates",
                       "every state dilates to a correlating bipartite state "
                       "with itself as marginal",
                       "correlation principle", sweep, 1e-10));
  }
  return rep;
}

Report suite_thm1(const std::vector<Model>& models, const SuiteOptions& opt) {
  Report rep{"thm1", opt.seed, opt.tol, {}};
  for (const Model& m : models) {
    const std::string tag = m.to_string();
    Conjugate conj = make_conjugate(m);
    Rng rng(derive_seed(opt.seed, stream(tag + "/recovery"), 0));
    ProductRecovery pr = recover_jordan_product(conj, rng, 100, 1e-8);
    rep.add(simple(tag + "/recovered-product-table",
                   "the spectral candidate product equals the native product "
                   "on all basis pairs",
                   "canonical Jordan product", m.algebra().dim() *
                       (m.algebra().dim() + 1) / 2,
                   pr.table_disagreement, 1e-8,
                   pr.table_disagreement <= 1e-8, pr.note));
    rep.add(simple(tag + "/recovered-product-bilinear",
                   "the candidate product is numerically bilinear",
                   "canonical Jordan product", 100, pr.bilinearity_residual,
                   1e-8, pr.bilinearity_residual <= 1e-8));
    rep.add(simple(tag + "/recovered-product-jordan",
                   "the candidate product satisfies the Jordan identity",
                   "canonical Jordan product", 100,
                   pr.jordan_identity_residual, 1e-8,
                   pr.jordan_identity_residual <= 1e-8));
    rep.add(simple(tag + "/recovered-product-outcomes",
                   "outcomes are idempotents and tests are frames for the "
                   "recovered product",
                   "canonical Jordan product", 10,
                   std::max(pr.outcome_idempotency, pr.frame_orthogonality),
                   1e-8,
                   std::max(pr.outcome_idempotency, pr.frame_orthogonality) <=
                       1e-8));

    SweepOutcome transport = run_sweep(
        100, opt.seed, stream(tag + "/homogeneity"), 1e-8,
        [&](Rng& rng2) {
          const Algebra& alg = m.algebra();
          Element a = random_cone_interior(alg, rng2);
          Element b = random_cone_interior(alg, rng2);
          LinearMap t = homogeneity_transport(a, b, opt.tol);
          double worst = norm(t.apply(a) - b);
          LinearMap back = homogeneity_transport(b, a, opt.tol);
          Element probe = random_cone_interior(alg, rng2, 0.0, 1.0);
          double fwd_min =
              spectral_decompose(t.apply(probe)).eigenvalues.minCoeff();
          double bwd_min =
              spectral_decompose(back.apply(probe)).eigenvalues.minCoeff();
          worst = std::max(worst, std::max(0.0, -std::min(fwd_min, bwd_min)));
          return worst;
        },
        opt.exec);
    rep.add(from_sweep(tag + "/homogeneity-transport",
                       "interior points are connected by cone-preserving "
                       "transports built from filters",
                       "homogeneity", transport, 1e-8));
  }
  return rep;
}

Report suite_thm2(const std::vector<Model>& models, const SuiteOptions& opt) {
  Report rep{"thm2", opt.seed, opt.tol, {}};
  for (const Model& m : models) {
    Report filters = suite_filters(m, opt);
    // Theorem 2(a) is the prepare-state check; carry the whole filter suite
    rep.merge(filters);
  }
  return rep;
}

Report suite_thm3(const SuiteOptions& opt) {
  Report rep{"thm3", opt.seed, opt.tol, {}};

  for (int n : {2, 3, 4}) {
    SnakeReport sr = snake_check(n, 1e-10);
    rep.add(simple("snake/dimension-" + std::to_string(n),
                   "both snake composites equal identity/n",
                   "dagger compact structure", 2,
                   std::max(sr.residual_first, sr.residual_second), 1e-10,
                   sr.pass, sr.normalization_note));
  }

  {
    Rng rng(derive_seed(opt.seed, stream("dagger/square"), 0));
    DaggerReport dr =
        dagger_check(Algebra::complex_herm(2), Algebra::complex_herm(2), rng,
                     100, 1e-12);
    double worst = std::max(
        std::max(dr.defining_residual, dr.involution_residual),
        std::max(dr.antihomomorphism_residual, dr.identity_residual));
    rep.add(simple("dagger/endomorphisms",
                   "the dagger is involutive, composition-reversing and "
                   "identity-preserving",
                   "dagger compact structure", 100, worst, 1e-12, dr.pass));
  }
  {
    Rng rng(derive_seed(opt.seed, stream("dagger/rect"), 0));
    DaggerReport dr =
        dagger_check(Algebra::complex_herm(2), Algebra::complex_herm(3), rng,
                     100, 1e-12);
    double worst = std::max(
        std::max(dr.defining_residual, dr.involution_residual),
        std::max(dr.antihomomorphism_residual, dr.identity_residual));
    rep.add(simple("dagger/between-models",
                   "the dagger respects the canonical inner products across "
                   "models",
                   "dagger compact structure", 100, worst, 1e-12, dr.pass));
  }

  for (int n : {2, 3}) {
    for (int mdim : {2, 3}) {
      Model a = Model::jordan(Algebra::complex_herm(n));
      Model b = Model::jordan(Algebra::complex_herm(mdim));
      Composite c = quantum_composite(a, b);
      Rng rng(derive_seed(opt.seed,
                          stream("composite/" + std::to_string(n) + "x" +
                                 std::to_string(mdim)),
                          0));
      CompositeValidation cv = validate_composite(c, rng, 3, opt.tol);
      TomographyReport tr = local_tomography_check(c, rng);
      std::string tag = std::to_string(n) + "x" + std::to_string(mdim);
      rep.add(simple("composite/" + tag + "-non-signaling",
                     "joint states pull back to non-signaling bipartite "
                     "states and product effects sum to the joint unit",
                     "non-signaling composites", 3,
                     std::max(cv.unit_violation, cv.pullback_violation),
                     opt.tol, cv.pass));
      rep.add(simple("composite/" + tag + "-local-tomography",
                     "dim V(AB) = dim V(A) dim V(B) and product effects span",
                     "local tomography", tr.dim_joint,
                     double(tr.dim_joint - tr.product_span_rank), 0.0,
                     tr.pass,
                     std::to_string(tr.dim_a) + "*" + std::to_string(tr.dim_b) +
                         " = " + std::to_string(tr.dim_joint)));
    }
  }

  {
    Model a = Model::jordan(Algebra::complex_herm(2));
    Model one = Model::jordan(Algebra::complex_herm(1));
    Composite c = quantum_composite(a, one);
    rep.add(simple("composite/trivial-factor",
                   "composing with the trivial model preserves dimension",
                   "monoidal unit", 1,
                   double(c.joint.algebra().dim() - a.algebra().dim()), 0.0,
                   c.joint.algebra().dim() == a.algebra().dim()));
  }

  {
    Model a = Model::jordan(Algebra::complex_herm(3));
    Rng rng(derive_seed(opt.seed, stream("functoriality"), 0));
    std::vector<Element> frame = model_random_frame(a, rng);
    Eigen::VectorXd t(3);
    t << rng.uniform(), rng.uniform(), rng.uniform();
    Filter f = make_filter(a, frame, t, opt.tol);
    FunctorialityReport fr =
        conjugate_functoriality_check(f.map, rng, 50, 1e-12);
    rep.add(simple("functoriality/conjugation",
                   "double conjugation is the identity and eta is conjugation "
                   "symmetric",
                   "conjugates of processes", 50,
                   std::max(fr.double_conjugation_residual,
                            fr.eta_relation_residual),
                   1e-12, fr.pass));
  }
  return rep;
}

Report suite_gbit_demo(const SuiteOptions& opt) {
  Report rep{"gbit-demo", opt.seed, opt.tol, {}};
  Model gbit = square_bit_model();
  Rng rng(derive_seed(opt.seed, stream("gbit"), 0));

  SweepOutcome states = run_sweep(
      10, opt.seed, stream("gbit/states"), opt.tol,
      [&](Rng& r) {
        return validate_state(random_state(gbit, r), r, 0, opt.tol)
            .worst_violation;
      },
      opt.exec);
  rep.add(from_sweep("gbit/model-valid",
                     "the square bit is a well-formed two-test model",
                     "probabilistic model: states", states, opt.tol));

  SharpnessReport sr = sharpness_check(gbit, rng, 0, opt.tol);
  for (const OutcomeFace& f : sr.faces) {
    const std::string& label =
        gbit.outcome_labels()[static_cast<std::size_t>(f.outcome)];
    rep.add(simple("gbit/sharp-outcome-" + label,
                   "outcome '" + label + "' has a unique probability-1 state",
                   "sharp models", 1, double(f.face_vertex_count - 1), 0.0,
                   f.sharp,
                   "face has " + std::to_string(f.face_vertex_count) +
                       " vertices, dimension " + std::to_string(f.face_dim)));
  }

  SpectralityOutcome cent =
      spectrality_decompose(gbit, maximally_mixed_state(gbit));
  rep.add(simple("gbit/centroid-spectrality",
                 "the centroid decomposes over canonical distinguished states",
                 "spectral states", 1, cent.success ? cent.residual : 1.0,
                 opt.tol, cent.success,
                 cent.success ? "" : cent.reason));
  return rep;
}

Report full_report(const SuiteOptions& opt) {
  Report rep{"full", opt.seed, opt.tol, {}};
  std::vector<Model> zoo = standard_zoo();

  rep.merge(suite_algebra(zoo, opt));
  rep.merge(suite_lemma1(zoo, opt));  // includes the conjugate checks
  rep.merge(suite_lemma2(zoo, opt));
  rep.merge(suite_thm1(zoo, opt));
  rep.merge(suite_thm2(zoo, opt));
  rep.merge(suite_thm3(opt));

  // the square-bit counterexample, wrapped as positive assertions
  Report demo = suite_gbit_demo(opt);
  bool not_sharp = true;
  bool centroid_fails = false;
  bool model_ok = false;
  for (const CheckRecord& c : demo.checks) {
    if (c.name == "gbit/model-valid") model_ok = c.pass;
    if (c.name.rfind("gbit/sharp-outcome-", 0) == 0 && c.pass)
      not_sharp = false;
    if (c.name == "gbit/centroid-spectrality") centroid_fails = !c.pass;
  }
  rep.add(simple("counterexample/gbit-not-sharp",
                 "the square bit fails sharpness on every outcome",
                 "sharp models", 4, not_sharp ? 0.0 : 1.0, 0.0,
                 model_ok && not_sharp,
                 "each probability-1 face is an edge with 2 vertices"));
  rep.add(simple("counterexample/gbit-centroid",
                 "the square-bit centroid has no canonical spectral "
                 "decomposition",
                 "spectral states", 1, centroid_fails ? 0.0 : 1.0, 0.0,
                 centroid_fails,
                 "no outcome has a unique probability-1 state, so no "
                 "canonical distinguished family exists"));
  return rep;
}

}  // namespace jgpt
