#include "jgpt/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace jgpt {

std::string backend_name(Backend b) {
  switch (b) {
    case Backend::Classical: return "classical";
    case Backend::Jordan: return "jordan";
    case Backend::Polytopic: return "polytopic";
  }
  return "?";
}

struct Model::Impl {
  Backend backend;
  int rank = 0;
  std::optional<Algebra> algebra;
  std::vector<std::string> outcome_labels;
  std::vector<std::vector<int>> tests;
  Eigen::MatrixXd vertices;
};

Model::Model(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

namespace {

void check_polytopic(const Model::Impl& impl, double tol) {
  const int n_out = static_cast<int>(impl.outcome_labels.size());
  if (impl.tests.empty()) throw Error("polytopic model: no tests");
  const std::size_t rank = impl.tests.front().size();
  if (rank == 0) throw Error("polytopic model: empty test");
  std::vector<bool> covered(static_cast<std::size_t>(n_out), false);
  for (const auto& t : impl.tests) {
    if (t.size() != rank)
      throw Error("polytopic model: tests have different sizes");
    for (int x : t) {
      if (x < 0 || x >= n_out)
        throw Error("polytopic model: test references unknown outcome");
      covered[static_cast<std::size_t>(x)] = true;
    }
  }
  for (int x = 0; x < n_out; ++x) {
    if (!covered[static_cast<std::size_t>(x)])
      throw Error("polytopic model: outcome belongs to no test");
  }
  if (impl.vertices.cols() != n_out || impl.vertices.rows() == 0)
    throw Error("polytopic model: vertex matrix shape mismatch");
  for (int v = 0; v < impl.vertices.rows(); ++v) {
    if (impl.vertices.row(v).minCoeff() < -tol ||
        impl.vertices.row(v).maxCoeff() > 1.0 + tol)
      throw Error("polytopic model: vertex is not a probability weight");
    for (const auto& t : impl.tests) {
      double sum = 0.0;
      for (int x : t) sum += impl.vertices(v, x);
      if (std::abs(sum - 1.0) > tol)
        throw Error("polytopic model: vertex does not sum to 1 on a test");
    }
  }
  for (int x = 0; x < n_out; ++x) {
    if (impl.vertices.col(x).maxCoeff() <= tol)
      throw Error("polytopic model: outcome has no supporting state");
  }
}

}  // namespace

Model Model::classical(std::vector<std::string> outcomes) {
  if (outcomes.empty()) throw Error("classical model: no outcomes");
  auto impl = std::make_shared<Impl>();
  impl->backend = Backend::Classical;
  impl->rank = static_cast<int>(outcomes.size());
  impl->outcome_labels = std::move(outcomes);
  std::vector<int> test(static_cast<std::size_t>(impl->rank));
  for (int i = 0; i < impl->rank; ++i) test[static_cast<std::size_t>(i)] = i;
  impl->tests.push_back(std::move(test));
  impl->vertices = Eigen::MatrixXd::Identity(impl->rank, impl->rank);
  return Model(impl);
}

Model Model::classical(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return classical(std::move(labels));
}

Model Model::jordan(Algebra alg) {
  auto impl = std::make_shared<Impl>();
  impl->backend = Backend::Jordan;
  impl->rank = alg.rank();
  impl->algebra = std::move(alg);
  return Model(impl);
}

Model Model::polytopic(PolytopicSpec spec, double tol) {
  auto impl = std::make_shared<Impl>();
  impl->backend = Backend::Polytopic;
  impl->outcome_labels = std::move(spec.outcome_labels);
  impl->tests = std::move(spec.tests);
  impl->vertices = std::move(spec.vertices);
  check_polytopic(*impl, tol);
  impl->rank = static_cast<int>(impl->tests.front().size());
  return Model(impl);
}

Backend Model::backend() const { return impl_->backend; }
int Model::rank() const { return impl_->rank; }

const Algebra& Model::algebra() const {
  if (!impl_->algebra) throw Error("algebra(): Jordan backend only");
  return *impl_->algebra;
}

int Model::n_outcomes() const {
  if (impl_->backend == Backend::Jordan)
    throw Error("n_outcomes(): finite backends only");
  return static_cast<int>(impl_->outcome_labels.size());
}

const std::vector<std::string>& Model::outcome_labels() const {
  return impl_->outcome_labels;
}

const std::vector<std::vector<int>>& Model::tests() const {
  if (impl_->backend == Backend::Jordan)
    throw Error("tests(): finite backends only");
  return impl_->tests;
}

const Eigen::MatrixXd& Model::vertices() const {
  if (impl_->backend == Backend::Jordan)
    throw Error("vertices(): finite backends only");
  return impl_->vertices;
}

bool Model::operator==(const Model& other) const {
  if (impl_ == other.impl_) return true;
  if (impl_->backend != other.impl_->backend) return false;
  if (impl_->backend == Backend::Jordan)
    return *impl_->algebra == *other.impl_->algebra;
  return impl_->outcome_labels == other.impl_->outcome_labels &&
         impl_->tests == other.impl_->tests &&
         impl_->vertices == other.impl_->vertices;
}

std::string Model::to_string() const {
  switch (impl_->backend) {
    case Backend::Classical:
      return "classical(" + std::to_string(rank()) + ")";
    case Backend::Jordan:
      return "jordan(" + impl_->algebra->to_string() + ")";
    case Backend::Polytopic:
      return "polytopic(" + std::to_string(n_outcomes()) + " outcomes, " +
             std::to_string(impl_->tests.size()) + " tests)";
  }
  return "?";
}

Model square_bit_model() {
  PolytopicSpec spec;
  spec.outcome_labels = {"x0", "x1", "y0", "y1"};
  spec.tests = {{0, 1}, {2, 3}};
  Eigen::MatrixXd v(4, 4);
  v << 1, 0, 1, 0,
       1, 0, 0, 1,
       0, 1, 1, 0,
       0, 1, 0, 1;
  spec.vertices = v;
  return Model::polytopic(spec);
}

State finite_state(const Model& m, Eigen::VectorXd probs, double tol) {
  if (m.backend() == Backend::Jordan)
    throw Error("finite_state: finite backends only");
  if (probs.size() != m.n_outcomes())
    throw Error("finite_state: wrong probability vector length");
  for (const auto& t : m.tests()) {
    double sum = 0.0;
    for (int x : t) sum += probs(x);
    if (std::abs(sum - 1.0) > tol)
      throw Error("finite_state: does not sum to 1 on a test");
  }
  return State{m, std::move(probs), std::nullopt};
}

State jordan_state(const Model& m, const Element& a, double tol) {
  if (m.backend() != Backend::Jordan)
    throw Error("jordan_state: Jordan backend only");
  if (a.algebra != m.algebra())
    throw MismatchError("jordan_state: element of a different algebra");
  if (std::abs(jordan_trace(a) - 1.0) > tol)
    throw Error("jordan_state: cone element must have unit trace");
  return State{m, Eigen::VectorXd(), a};
}

State vertex_state(const Model& m, int vertex) {
  const Eigen::MatrixXd& v = m.vertices();
  if (vertex < 0 || vertex >= v.rows())
    throw Error("vertex_state: index out of range");
  return State{m, v.row(vertex).transpose(), std::nullopt};
}

State maximally_mixed_state(const Model& m) {
  if (m.backend() == Backend::Jordan) {
    return State{m, Eigen::VectorXd(),
                 (1.0 / m.rank()) * unit_element(m.algebra())};
  }
  return State{m, Eigen::VectorXd::Constant(m.n_outcomes(), 1.0 / m.rank()),
               std::nullopt};
}

Effect outcome_effect(const Model& m, int outcome) {
  if (m.backend() == Backend::Jordan)
    throw Error("outcome_effect(int): finite backends only");
  if (outcome < 0 || outcome >= m.n_outcomes())
    throw Error("outcome_effect: index out of range");
  Eigen::VectorXd w = Eigen::VectorXd::Zero(m.n_outcomes());
  w(outcome) = 1.0;
  return Effect{m, std::move(w), std::nullopt};
}

Effect jordan_effect(const Model& m, const Element& e) {
  if (m.backend() != Backend::Jordan)
    throw Error("jordan_effect: Jordan backend only");
  if (e.algebra != m.algebra())
    throw MismatchError("jordan_effect: element of a different algebra");
  return Effect{m, Eigen::VectorXd(), e};
}

Effect unit_effect(const Model& m) {
  if (m.backend() == Backend::Jordan)
    return jordan_effect(m, unit_element(m.algebra()));
  // indicator of the first test; as a functional on states this is the
  // order unit regardless of which test is used
  Eigen::VectorXd w = Eigen::VectorXd::Zero(m.n_outcomes());
  for (int x : m.tests().front()) w(x) = 1.0;
  return Effect{m, std::move(w), std::nullopt};
}

Effect zero_effect(const Model& m) {
  if (m.backend() == Backend::Jordan)
    return jordan_effect(m, zero_element(m.algebra()));
  return Effect{m, Eigen::VectorXd::Zero(m.n_outcomes()), std::nullopt};
}

double effect_value(const Effect& e, const State& s) {
  if (e.model != s.model) throw MismatchError("effect_value: model mismatch");
  if (e.model.backend() == Backend::Jordan)
    return trace_inner_product(*e.element, *s.cone);
  return e.weights.dot(s.probs);
}

StateValidity validate_state(const State& s, Rng& rng, int frame_samples,
                             double tol) {
  StateValidity out{true, 0.0, ""};
  auto flag = [&](double violation, const std::string& what) {
    if (violation > out.worst_violation) {
      out.worst_violation = violation;
      out.detail = what;
    }
    if (violation > tol) out.valid = false;
  };
  if (s.model.backend() == Backend::Jordan) {
    const Element& a = *s.cone;
    double min_ev = spectral_decompose(a).eigenvalues.minCoeff();
    flag(std::max(0.0, -min_ev), "cone membership");
    flag(std::abs(jordan_trace(a) - 1.0), "normalization");
    for (int i = 0; i < frame_samples; ++i) {
      double sum = 0.0;
      for (const Element& p : random_frame(s.model.algebra(), rng)) {
        double v = trace_inner_product(a, p);
        flag(std::max(0.0, -v), "negative outcome probability");
        flag(std::max(0.0, v - 1.0), "outcome probability above 1");
        sum += v;
      }
      flag(std::abs(sum - 1.0), "test normalization");
    }
    return out;
  }
  flag(std::max(0.0, -s.probs.minCoeff()), "negative outcome probability");
  for (const auto& t : s.model.tests()) {
    double sum = 0.0;
    for (int x : t) sum += s.probs(x);
    flag(std::abs(sum - 1.0), "test normalization");
  }
  if (s.model.backend() == Backend::Polytopic) {
    HullResult hull = convex_hull_membership(s.model.vertices(), s.probs, tol);
    flag(hull.residual, "outside the state polytope");
  }
  return out;
}

bool state_nonsingular(const State& s, double tol) {
  if (s.model.backend() == Backend::Jordan)
    return spectral_decompose(*s.cone).eigenvalues.minCoeff() > tol;
  return s.probs.minCoeff() > tol;
}

State random_state(const Model& m, Rng& rng, bool interior) {
  if (m.backend() == Backend::Jordan) {
    double lo = interior ? 0.05 : 0.0;
    Element a = random_cone_interior(m.algebra(), rng, lo, 1.0);
    return jordan_state(m, (1.0 / jordan_trace(a)) * a);
  }
  const Eigen::MatrixXd& v = m.vertices();
  Eigen::VectorXd w(v.rows());
  for (int i = 0; i < v.rows(); ++i) {
    double x = rng.uniform();
    w(i) = -std::log(x > 1e-300 ? x : 1e-300);
    if (!interior && rng.uniform() < 0.3) w(i) = 0.0;
  }
  if (w.sum() <= 0.0) w.setConstant(1.0);
  w /= w.sum();
  return finite_state(m, v.transpose() * w);
}

std::vector<Element> model_random_frame(const Model& m, Rng& rng) {
  if (m.backend() != Backend::Jordan)
    throw Error("model_random_frame: Jordan backend only");
  return random_frame(m.algebra(), rng);
}

namespace {

// Equality-constrained least squares on a fixed support:
// min |A l - p|  s.t.  sum(l) = 1.
bool solve_support(const Eigen::MatrixXd& cols, const Eigen::VectorXd& p,
                   Eigen::VectorXd& lambda, double& residual) {
  const int k = static_cast<int>(cols.cols());
  Eigen::MatrixXd kkt(k + 1, k + 1);
  kkt.topLeftCorner(k, k) = 2.0 * cols.transpose() * cols;
  kkt.topRightCorner(k, 1).setOnes();
  kkt.bottomLeftCorner(1, k).setOnes();
  kkt(k, k) = 0.0;
  Eigen::VectorXd rhs(k + 1);
  rhs.head(k) = 2.0 * cols.transpose() * p;
  rhs(k) = 1.0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(kkt);
  if (!lu.isInvertible()) return false;
  Eigen::VectorXd sol = lu.solve(rhs);
  lambda = sol.head(k);
  residual = (cols * lambda - p).norm();
  return true;
}

}  // namespace

HullResult convex_hull_membership(const Eigen::MatrixXd& vertices,
                                  const Eigen::VectorXd& point, double tol) {
  const int nv = static_cast<int>(vertices.rows());
  if (nv > 20) throw Error("convex_hull_membership: too many vertices");
  Eigen::MatrixXd cols = vertices.transpose();  // columns = vertices
  HullResult best{false, std::numeric_limits<double>::infinity(),
                  Eigen::VectorXd::Zero(nv)};
  for (unsigned mask = 1; mask < (1u << nv); ++mask) {
    std::vector<int> support;
    for (int i = 0; i < nv; ++i) {
      if (mask & (1u << i)) support.push_back(i);
    }
    Eigen::MatrixXd sub(cols.rows(), support.size());
    for (std::size_t i = 0; i < support.size(); ++i)
      sub.col(static_cast<int>(i)) = cols.col(support[i]);
    Eigen::VectorXd lambda;
    double residual;
    if (!solve_support(sub, point, lambda, residual)) continue;
    if (lambda.minCoeff() < -tol) continue;
    if (residual < best.residual) {
      best.residual = residual;
      best.weights.setZero();
      for (std::size_t i = 0; i < support.size(); ++i)
        best.weights(support[i]) = lambda(static_cast<int>(i));
      if (residual <= tol) {
        best.member = true;
        return best;
      }
    }
  }
  best.member = best.residual <= tol;
  return best;
}

bool in_outcome_effect_cone(const Model& m, const Eigen::VectorXd& weights,
                            double tol) {
  if (m.backend() == Backend::Jordan)
    throw Error("in_outcome_effect_cone: finite backends only");
  // Functionals are identified by their values on the vertex states; look
  // for a nonnegative coefficient vector t with V t = V w.
  const Eigen::MatrixXd& v = m.vertices();
  Eigen::VectorXd target = v * weights;
  const int n = m.n_outcomes();
  if (n > 20) throw Error("in_outcome_effect_cone: too many outcomes");
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> support;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) support.push_back(i);
    Eigen::MatrixXd sub(v.rows(), support.size());
    for (std::size_t i = 0; i < support.size(); ++i)
      sub.col(static_cast<int>(i)) = v.col(support[i]);
    Eigen::VectorXd t;
    if (support.empty()) {
      if (target.norm() <= tol) return true;
      continue;
    }
    t = sub.colPivHouseholderQr().solve(target);
    if (t.minCoeff() < -tol) continue;
    if ((sub * t - target).norm() <= tol) return true;
  }
  return false;
}

bool in_dual_cone(const Model& m, const Eigen::VectorXd& weights, double tol) {
  if (m.backend() == Backend::Jordan)
    throw Error("in_dual_cone: finite backends only");
  return (m.vertices() * weights).minCoeff() >= -tol;
}

namespace {

SharpnessReport sharpness_finite(const Model& m, double tol) {
  SharpnessReport rep;
  rep.sharp = true;
  const Eigen::MatrixXd& v = m.vertices();
  for (int x = 0; x < m.n_outcomes(); ++x) {
    std::vector<int> face;
    for (int i = 0; i < v.rows(); ++i) {
      if (std::abs(v(i, x) - 1.0) <= tol) face.push_back(i);
    }
    int dim = 0;
    if (face.empty()) {
      dim = -1;
    } else if (face.size() > 1) {
      Eigen::MatrixXd diff(static_cast<int>(face.size()) - 1, v.cols());
      for (std::size_t i = 1; i < face.size(); ++i)
        diff.row(static_cast<int>(i) - 1) = v.row(face[i]) - v.row(face[0]);
      Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(diff.transpose());
      qr.setThreshold(tol);
      dim = static_cast<int>(qr.rank());
    }
    bool sharp_here = face.size() == 1;
    if (!sharp_here) rep.sharp = false;
    rep.faces.push_back(
        {x, static_cast<int>(face.size()), dim, sharp_here});
  }
  return rep;
}

SharpnessReport sharpness_jordan(const Model& m, Rng& rng, int samples,
                                 double tol) {
  SharpnessReport rep;
  rep.samples = samples;
  const Algebra& alg = m.algebra();
  for (int i = 0; i < samples; ++i) {
    std::vector<Element> frame = random_frame(alg, rng);
    const Element& p = frame[static_cast<std::size_t>(
        rng.below(static_cast<int>(frame.size())))];
    // delta_x = x itself is the probability-1 state
    double dres = std::abs(jordan_trace(p) - 1.0);
    double min_ev = spectral_decompose(p).eigenvalues.minCoeff();
    dres = std::max(dres, std::max(0.0, -min_ev));
    rep.worst_delta_residual = std::max(rep.worst_delta_residual, dres);
    // the face {alpha : alpha(x) = 1} lives in the image of U_x, so
    // numerical rank 1 certifies it is the single point x
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(quadratic_rep(p).matrix);
    int rank = 0;
    for (int k = 0; k < svd.singularValues().size(); ++k) {
      if (svd.singularValues()(k) > 0.5) ++rank;
    }
    rep.worst_peirce_rank = std::max(rep.worst_peirce_rank, rank);
    State s = random_state(m, rng);
    rep.worst_value_excess = std::max(
        rep.worst_value_excess, trace_inner_product(*s.cone, p) - 1.0);
  }
  rep.sharp = rep.worst_delta_residual <= tol && rep.worst_peirce_rank == 1 &&
              rep.worst_value_excess <= tol;
  return rep;
}

}  // namespace

SharpnessReport sharpness_check(const Model& m, Rng& rng, int samples,
                                double tol) {
  if (m.backend() == Backend::Jordan)
    return sharpness_jordan(m, rng, samples, tol);
  return sharpness_finite(m, tol);
}

namespace {

SpectralityOutcome spectrality_jordan(const Model& m, const State& s,
                                      double tol) {
  SpectralityOutcome out;
  SpectralData sd = spectral_decompose(*s.cone, tol);
  out.frame = sd.frame;
  out.weights = sd.eigenvalues;
  Element recon = zero_element(m.algebra());
  for (std::size_t i = 0; i < sd.frame.size(); ++i) {
    // weights must be the state's own outcome probabilities
    double w = trace_inner_product(*s.cone, sd.frame[i]);
    recon.coords += w * sd.frame[i].coords;
    out.weights(static_cast<int>(i)) = w;
  }
  out.residual = norm(recon - *s.cone);
  out.success = out.residual <= tol * (1.0 + norm(*s.cone));
  if (!out.success) out.reason = "reconstruction residual above tolerance";
  return out;
}

SpectralityOutcome spectrality_finite(const Model& m, const State& s,
                                      const std::vector<State>* delta,
                                      double tol) {
  SpectralityOutcome out;
  std::vector<std::optional<Eigen::VectorXd>> family(
      static_cast<std::size_t>(m.n_outcomes()));
  if (delta != nullptr) {
    if (static_cast<int>(delta->size()) != m.n_outcomes())
      throw Error("spectrality_decompose: need one state per outcome");
    for (int x = 0; x < m.n_outcomes(); ++x) {
      const State& d = (*delta)[static_cast<std::size_t>(x)];
      if (d.model != m)
        throw MismatchError("spectrality_decompose: delta state model mismatch");
      if (std::abs(d.probs(x) - 1.0) > tol)
        throw Error("spectrality_decompose: delta_x(x) != 1 for outcome " +
                    m.outcome_labels()[static_cast<std::size_t>(x)]);
      family[static_cast<std::size_t>(x)] = d.probs;
    }
  } else {
    // canonical family: the unique probability-1 state per outcome, which
    // exists exactly where the model is sharp
    SharpnessReport sharp = sharpness_finite(m, tol);
    for (const OutcomeFace& f : sharp.faces) {
      if (f.face_vertex_count == 1) {
        for (int i = 0; i < m.vertices().rows(); ++i) {
          if (std::abs(m.vertices()(i, f.outcome) - 1.0) <= tol) {
            family[static_cast<std::size_t>(f.outcome)] =
                m.vertices().row(i).transpose();
            break;
          }
        }
      }
    }
  }

  double best = std::numeric_limits<double>::infinity();
  bool any_candidate = false;
  for (const auto& t : m.tests()) {
    bool defined = true;
    for (int x : t) {
      if (!family[static_cast<std::size_t>(x)]) defined = false;
    }
    if (!defined) continue;
    any_candidate = true;
    Eigen::VectorXd recon = Eigen::VectorXd::Zero(m.n_outcomes());
    for (int x : t) recon += s.probs(x) * *family[static_cast<std::size_t>(x)];
    double res = (recon - s.probs).lpNorm<Eigen::Infinity>();
    if (res < best) {
      best = res;
      out.test.assign(t.begin(), t.end());
      out.weights.resize(static_cast<int>(t.size()));
      for (std::size_t i = 0; i < t.size(); ++i)
        out.weights(static_cast<int>(i)) = s.probs(t[i]);
    }
  }
  if (!any_candidate) {
    out.success = false;
    out.reason =
        "no test has a distinguished state for every outcome (model is not "
        "sharp there and no family was supplied)";
    return out;
  }
  out.residual = best;
  out.success = best <= tol;
  if (!out.success)
    out.reason = "no test reproduces the state from its own probabilities";
  return out;
}

}  // namespace

SpectralityOutcome spectrality_decompose(const Model& m, const State& s,
                                         const std::vector<State>* delta,
                                         double tol) {
  if (s.model != m) throw MismatchError("spectrality_decompose: model mismatch");
  if (m.backend() == Backend::Jordan) return spectrality_jordan(m, s, tol);
  return spectrality_finite(m, s, delta, tol);
}

}  // namespace jgpt
