#include "jgpt/bipartite.hpp"

#include <cmath>

namespace jgpt {

BipartiteState::BipartiteState(Model a, Model b, Eigen::MatrixXd data,
                               bool table_backed)
    : a_(std::move(a)), b_(std::move(b)), data_(std::move(data)),
      table_backed_(table_backed) {}

BipartiteState BipartiteState::from_table(Model a, Model b,
                                          Eigen::MatrixXd table) {
  if (a.backend() == Backend::Jordan || b.backend() == Backend::Jordan)
    throw Error("from_table: finite backends only");
  if (table.rows() != a.n_outcomes() || table.cols() != b.n_outcomes())
    throw Error("from_table: table shape mismatch");
  return BipartiteState(std::move(a), std::move(b), std::move(table), true);
}

BipartiteState BipartiteState::from_form(Model a, Model b,
                                         Eigen::MatrixXd form) {
  if (a.backend() != Backend::Jordan || b.backend() != Backend::Jordan)
    throw Error("from_form: Jordan backends only");
  if (form.rows() != a.algebra().dim() || form.cols() != b.algebra().dim())
    throw Error("from_form: form shape mismatch");
  return BipartiteState(std::move(a), std::move(b), std::move(form), false);
}

double BipartiteState::value(int x, int y) const {
  if (!table_backed_) throw Error("value(int,int): table-backed states only");
  return data_(x, y);
}

double BipartiteState::value(const Element& x, const Element& y) const {
  if (table_backed_) throw Error("value(Element,Element): form-backed only");
  if (x.algebra != a_.algebra() || y.algebra != b_.algebra())
    throw MismatchError("BipartiteState::value: wrong algebra");
  return x.coords.dot(data_ * y.coords);
}

const Eigen::MatrixXd& BipartiteState::table() const {
  if (!table_backed_) throw Error("table(): table-backed states only");
  return data_;
}

const Eigen::MatrixXd& BipartiteState::form() const {
  if (table_backed_) throw Error("form(): form-backed states only");
  return data_;
}

double BipartiteValidation::worst_violation() const {
  return std::max(std::max(normalization_violation, marginal_violation),
                  std::max(conditional_violation,
                           total_probability_violation));
}

namespace {

// Violation of "gamma is a valid state of m" without throwing.
double finite_state_violation(const Model& m, const Eigen::VectorXd& gamma,
                              double tol) {
  double worst = std::max(0.0, -gamma.minCoeff());
  for (const auto& t : m.tests()) {
    double sum = 0.0;
    for (int x : t) sum += gamma(x);
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  if (m.backend() == Backend::Polytopic) {
    worst = std::max(
        worst, convex_hull_membership(m.vertices(), gamma, tol).residual);
  }
  return worst;
}

double jordan_state_violation(const Element& a) {
  double min_ev = spectral_decompose(a).eigenvalues.minCoeff();
  return std::max(std::max(0.0, -min_ev), std::abs(jordan_trace(a) - 1.0));
}

BipartiteValidation validate_table(const BipartiteState& w, double tol) {
  BipartiteValidation v;
  const Model& ma = w.model_a();
  const Model& mb = w.model_b();
  const Eigen::MatrixXd& t = w.table();

  for (const auto& ea : ma.tests()) {
    for (const auto& fb : mb.tests()) {
      double sum = 0.0;
      for (int x : ea)
        for (int y : fb) sum += t(x, y);
      v.normalization_violation =
          std::max(v.normalization_violation, std::abs(sum - 1.0));
    }
  }

  // marginals must not depend on the partner test
  Eigen::VectorXd m1 = Eigen::VectorXd::Zero(ma.n_outcomes());
  for (int x = 0; x < ma.n_outcomes(); ++x) {
    double ref = 0.0;
    bool first = true;
    for (const auto& fb : mb.tests()) {
      double sum = 0.0;
      for (int y : fb) sum += t(x, y);
      if (first) {
        ref = sum;
        first = false;
      } else {
        v.marginal_violation = std::max(v.marginal_violation,
                                        std::abs(sum - ref));
      }
    }
    m1(x) = ref;
  }
  Eigen::VectorXd m2 = Eigen::VectorXd::Zero(mb.n_outcomes());
  for (int y = 0; y < mb.n_outcomes(); ++y) {
    double ref = 0.0;
    bool first = true;
    for (const auto& ea : ma.tests()) {
      double sum = 0.0;
      for (int x : ea) sum += t(x, y);
      if (first) {
        ref = sum;
        first = false;
      } else {
        v.marginal_violation = std::max(v.marginal_violation,
                                        std::abs(sum - ref));
      }
    }
    m2(y) = ref;
  }

  for (int y = 0; y < mb.n_outcomes(); ++y) {
    if (m2(y) <= tol) continue;
    Eigen::VectorXd cond = t.col(y) / m2(y);
    v.conditional_violation = std::max(
        v.conditional_violation, finite_state_violation(ma, cond, tol));
  }
  for (int x = 0; x < ma.n_outcomes(); ++x) {
    if (m1(x) <= tol) continue;
    Eigen::VectorXd cond = t.row(x).transpose() / m1(x);
    v.conditional_violation = std::max(
        v.conditional_violation, finite_state_violation(mb, cond, tol));
  }

  // law of total probability over every partner test
  for (int x = 0; x < ma.n_outcomes(); ++x) {
    for (const auto& fb : mb.tests()) {
      double sum = 0.0;
      for (int y : fb) sum += t(x, y);  // = sum_y w2(y) * w(x,y)/w2(y)
      v.total_probability_violation =
          std::max(v.total_probability_violation, std::abs(sum - m1(x)));
    }
  }

  v.pass = v.worst_violation() <= tol;
  return v;
}

BipartiteValidation validate_form(const BipartiteState& w, Rng& rng,
                                  int frame_samples, double tol) {
  BipartiteValidation v;
  const Algebra& aa = w.model_a().algebra();
  const Algebra& ab = w.model_b().algebra();
  const Eigen::MatrixXd& m = w.form();
  Element ua = unit_element(aa);
  Element ub = unit_element(ab);

  Element marg1{aa, m * ub.coords};
  Element marg2{ab, m.transpose() * ua.coords};

  for (int s = 0; s < frame_samples; ++s) {
    std::vector<Element> ea = random_frame(aa, rng);
    std::vector<Element> fb = random_frame(ab, rng);

    double sum = 0.0;
    for (const Element& p : ea)
      for (const Element& q : fb) sum += w.value(p, q);
    v.normalization_violation =
        std::max(v.normalization_violation, std::abs(sum - 1.0));

    // partner-test independence of the marginal
    for (const Element& p : ea) {
      double row_sum = 0.0;
      for (const Element& q : fb) row_sum += w.value(p, q);
      v.marginal_violation =
          std::max(v.marginal_violation,
                   std::abs(row_sum - trace_inner_product(marg1, p)));
    }
    for (const Element& q : fb) {
      double col_sum = 0.0;
      for (const Element& p : ea) col_sum += w.value(p, q);
      v.marginal_violation =
          std::max(v.marginal_violation,
                   std::abs(col_sum - trace_inner_product(marg2, q)));
    }

    // conditionals on sampled outcomes
    for (const Element& p : ea) {
      double px = trace_inner_product(marg1, p);
      if (px <= tol) continue;
      Element cond{ab, (m.transpose() * p.coords) / px};
      v.conditional_violation =
          std::max(v.conditional_violation, jordan_state_violation(cond));
    }
    for (const Element& q : fb) {
      double qy = trace_inner_product(marg2, q);
      if (qy <= tol) continue;
      Element cond{aa, (m * q.coords) / qy};
      v.conditional_violation =
          std::max(v.conditional_violation, jordan_state_violation(cond));
    }

    // law of total probability: w1(x) = sum_y w(x,y)
    for (const Element& p : ea) {
      double sum_y = 0.0;
      for (const Element& q : fb) sum_y += w.value(p, q);
      v.total_probability_violation =
          std::max(v.total_probability_violation,
                   std::abs(trace_inner_product(marg1, p) - sum_y));
    }
  }

  // the marginals themselves must be states
  v.conditional_violation =
      std::max(v.conditional_violation, jordan_state_violation(marg1));
  v.conditional_violation =
      std::max(v.conditional_violation, jordan_state_violation(marg2));

  v.pass = v.worst_violation() <= tol;
  return v;
}

}  // namespace

BipartiteValidation validate_bipartite(const BipartiteState& w, Rng& rng,
                                       int frame_samples, double tol) {
  if (w.table_backed()) return validate_table(w, tol);
  return validate_form(w, rng, frame_samples, tol);
}

State marginal(const BipartiteState& w, Side side) {
  if (w.table_backed()) {
    const Eigen::MatrixXd& t = w.table();
    if (side == Side::A) {
      Eigen::VectorXd probs = Eigen::VectorXd::Zero(w.model_a().n_outcomes());
      const auto& fb = w.model_b().tests().front();
      for (int x = 0; x < probs.size(); ++x)
        for (int y : fb) probs(x) += t(x, y);
      return finite_state(w.model_a(), probs);
    }
    Eigen::VectorXd probs = Eigen::VectorXd::Zero(w.model_b().n_outcomes());
    const auto& ea = w.model_a().tests().front();
    for (int y = 0; y < probs.size(); ++y)
      for (int x : ea) probs(y) += t(x, y);
    return finite_state(w.model_b(), probs);
  }
  if (side == Side::A) {
    Element a{w.model_a().algebra(),
              w.form() * unit_element(w.model_b().algebra()).coords};
    return jordan_state(w.model_a(), a);
  }
  Element b{w.model_b().algebra(),
            w.form().transpose() * unit_element(w.model_a().algebra()).coords};
  return jordan_state(w.model_b(), b);
}

State conditional(const BipartiteState& w, int outcome, Side conditioned_on,
                  double tol) {
  if (!w.table_backed())
    throw Error("conditional(int): table-backed states only");
  const Eigen::MatrixXd& t = w.table();
  if (conditioned_on == Side::A) {
    double px = marginal(w, Side::A).probs(outcome);
    if (px <= tol)
      throw Error("conditional: conditioning on a zero-probability outcome");
    return finite_state(w.model_b(), t.row(outcome).transpose() / px);
  }
  double py = marginal(w, Side::B).probs(outcome);
  if (py <= tol)
    throw Error("conditional: conditioning on a zero-probability outcome");
  return finite_state(w.model_a(), t.col(outcome) / py);
}

State conditional(const BipartiteState& w, const Element& outcome,
                  Side conditioned_on, double tol) {
  if (w.table_backed())
    throw Error("conditional(Element): form-backed states only");
  if (conditioned_on == Side::A) {
    double px = trace_inner_product(marginal(w, Side::A).cone.value(), outcome);
    if (px <= tol)
      throw Error("conditional: conditioning on a zero-probability outcome");
    Element b{w.model_b().algebra(),
              (w.form().transpose() * outcome.coords) / px};
    return jordan_state(w.model_b(), b);
  }
  double py = trace_inner_product(marginal(w, Side::B).cone.value(), outcome);
  if (py <= tol)
    throw Error("conditional: conditioning on a zero-probability outcome");
  Element a{w.model_a().algebra(), (w.form() * outcome.coords) / py};
  return jgpt::jordan_state(w.model_a(), a);
}

Eigen::VectorXd ConditioningMap::apply_weights(
    const Eigen::VectorXd& effect_weights) const {
  return matrix * effect_weights;
}

Element ConditioningMap::apply_element(const Element& effect) const {
  if (effect.algebra != from.algebra())
    throw MismatchError("ConditioningMap: wrong algebra");
  return Element{to.algebra(), matrix * effect.coords};
}

ConditioningMap conditioning_map(const BipartiteState& w) {
  if (w.table_backed())
    return ConditioningMap{w.model_a(), w.model_b(), w.table().transpose()};
  return ConditioningMap{w.model_a(), w.model_b(), w.form().transpose()};
}

double conditioning_map_reproduction_error(const BipartiteState& w,
                                           const ConditioningMap& map,
                                           Rng& rng, int frame_samples) {
  double worst = 0.0;
  if (w.table_backed()) {
    for (int x = 0; x < w.model_a().n_outcomes(); ++x) {
      Eigen::VectorXd img =
          map.apply_weights(outcome_effect(w.model_a(), x).weights);
      for (int y = 0; y < w.model_b().n_outcomes(); ++y) {
        worst = std::max(worst, std::abs(img(y) - w.value(x, y)));
      }
    }
    return worst;
  }
  for (int s = 0; s < frame_samples; ++s) {
    std::vector<Element> ea = random_frame(w.model_a().algebra(), rng);
    std::vector<Element> fb = random_frame(w.model_b().algebra(), rng);
    for (const Element& p : ea) {
      Element img = map.apply_element(p);
      for (const Element& q : fb) {
        worst = std::max(worst, std::abs(trace_inner_product(img, q) -
                                         w.value(p, q)));
      }
    }
  }
  return worst;
}

BipartiteState product_state(const State& alpha, const State& beta) {
  const Model& ma = alpha.model;
  const Model& mb = beta.model;
  if (ma.backend() == Backend::Jordan && mb.backend() == Backend::Jordan) {
    return BipartiteState::from_form(
        ma, mb, alpha.cone->coords * beta.cone->coords.transpose());
  }
  if (ma.backend() != Backend::Jordan && mb.backend() != Backend::Jordan) {
    return BipartiteState::from_table(ma, mb,
                                      alpha.probs * beta.probs.transpose());
  }
  throw Error("product_state: mixed backend pairs are not supported");
}

}  // namespace jgpt
