#include "jgpt/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace jgpt {

namespace {

Element rank_one_projection(const Algebra& alg, const Eigen::VectorXcd& v) {
  Eigen::VectorXd coords(alg.dim());
  const auto& basis = alg.basis();
  const double s = alg.trace_scale();
  for (int k = 0; k < alg.dim(); ++k) {
    coords(k) = s * (v.adjoint() * basis[static_cast<std::size_t>(k)] * v)(0, 0)
                        .real();
  }
  return Element{alg, std::move(coords)};
}

SpectralData decompose_real_or_complex(const Element& a) {
  const Algebra& alg = a.algebra;
  Eigen::MatrixXcd m = element_to_matrix(a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  const int n = alg.matrix_size();
  SpectralData sd;
  sd.eigenvalues.resize(n);
  sd.frame.reserve(static_cast<std::size_t>(n));
  // Eigen returns eigenvalues ascending; emit descending.
  for (int i = 0; i < n; ++i) {
    int src = n - 1 - i;
    sd.eigenvalues(i) = solver.eigenvalues()(src);
    sd.frame.push_back(rank_one_projection(alg, solver.eigenvectors().col(src)));
  }
  return sd;
}

// Quaternionic structure on C^{2n}: v -> J conj(v) maps each eigenspace of an
// embedded matrix to itself and J conj(v) is always orthogonal to v, so every
// eigenvalue has even multiplicity and eigenspaces split into quaternionic
// lines span{v, J conj(v)}.
Eigen::MatrixXcd quat_structure_j(int mat_n) {
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(mat_n, mat_n);
  for (int i = 0; i + 1 < mat_n; i += 2) {
    j(i, i + 1) = 1.0;
    j(i + 1, i) = -1.0;
  }
  return j;
}

Element quat_line_projection(const Algebra& alg, const Eigen::VectorXcd& v,
                             const Eigen::VectorXcd& w) {
  Eigen::VectorXd coords(alg.dim());
  const auto& basis = alg.basis();
  const double s = alg.trace_scale();
  for (int k = 0; k < alg.dim(); ++k) {
    const auto& b = basis[static_cast<std::size_t>(k)];
    coords(k) = s * ((v.adjoint() * b * v)(0, 0).real() +
                     (w.adjoint() * b * w)(0, 0).real());
  }
  return Element{alg, std::move(coords)};
}

SpectralData decompose_quat(const Element& a, double tol) {
  const Algebra& alg = a.algebra;
  Eigen::MatrixXcd m = element_to_matrix(a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  const int mn = alg.matrix_size();
  const Eigen::VectorXd& ev = solver.eigenvalues();
  const double scale = std::max(1.0, std::max(std::abs(ev(0)),
                                              std::abs(ev(mn - 1))));
  Eigen::MatrixXcd j = quat_structure_j(mn);

  struct Pair {
    double value;
    Element idem;
  };
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(alg.rank()));

  int lo = 0;
  while (lo < mn) {
    int hi = lo + 1;
    while (hi < mn && ev(hi) - ev(hi - 1) <= tol * scale) ++hi;
    int g = hi - lo;
    if (g % 2 != 0)
      throw Error("spectral_decompose: quaternionic eigenvalue group of odd size");
    // peel off quaternionic lines from the group projection
    Eigen::MatrixXcd w_cols = solver.eigenvectors().middleCols(lo, g);
    Eigen::MatrixXcd p_rem = w_cols * w_cols.adjoint();
    for (int t = 0; t < g / 2; ++t) {
      int best = 0;
      double best_norm = -1.0;
      for (int c = 0; c < mn; ++c) {
        double nc = p_rem.col(c).norm();
        if (nc > best_norm) {
          best_norm = nc;
          best = c;
        }
      }
      Eigen::VectorXcd v = p_rem.col(best).normalized();
      Eigen::VectorXcd w = j * v.conjugate();
      w -= v * (v.adjoint() * w)(0, 0);
      w = (p_rem * w).eval();
      w.normalize();
      double lambda = 0.5 * ((v.adjoint() * m * v)(0, 0).real() +
                             (w.adjoint() * m * w)(0, 0).real());
      pairs.push_back({lambda, quat_line_projection(alg, v, w)});
      p_rem -= v * v.adjoint() + w * w.adjoint();
    }
    lo = hi;
  }

  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& x, const Pair& y) { return x.value > y.value; });
  SpectralData sd;
  sd.eigenvalues.resize(alg.rank());
  for (int i = 0; i < alg.rank(); ++i) {
    sd.eigenvalues(i) = pairs[static_cast<std::size_t>(i)].value;
    sd.frame.push_back(std::move(pairs[static_cast<std::size_t>(i)].idem));
  }
  return sd;
}

SpectralData decompose_spin(const Element& a) {
  const Algebra& alg = a.algebra;
  auto [s, x] = spin_parts(a);
  double r = x.norm();
  Eigen::VectorXd dir;
  if (r > 0.0) {
    dir = x / r;
  } else {
    // degenerate case: any direction gives a valid frame; fix e1
    dir = Eigen::VectorXd::Zero(alg.size());
    dir(0) = 1.0;
  }
  SpectralData sd;
  sd.eigenvalues.resize(2);
  sd.eigenvalues << s + r, s - r;
  sd.frame.push_back(spin_element(alg, 0.5, 0.5 * dir));
  sd.frame.push_back(spin_element(alg, 0.5, -0.5 * dir));
  return sd;
}

SpectralData decompose_sum(const Element& a, double tol) {
  const Algebra& alg = a.algebra;
  struct Pair {
    double value;
    Element idem;
  };
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(alg.rank()));
  for (int p = 0; p < alg.size(); ++p) {
    SpectralData part = spectral_decompose(extract_part(a, p), tol);
    for (std::size_t i = 0; i < part.frame.size(); ++i) {
      pairs.push_back({part.eigenvalues(static_cast<int>(i)),
                       embed_part(alg, p, part.frame[i])});
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& x, const Pair& y) { return x.value > y.value; });
  SpectralData sd;
  sd.eigenvalues.resize(alg.rank());
  for (int i = 0; i < alg.rank(); ++i) {
    sd.eigenvalues(i) = pairs[static_cast<std::size_t>(i)].value;
    sd.frame.push_back(std::move(pairs[static_cast<std::size_t>(i)].idem));
  }
  return sd;
}

}  // namespace

Element SpectralData::reconstruct() const {
  Element out = zero_element(frame.front().algebra);
  for (std::size_t i = 0; i < frame.size(); ++i) {
    out.coords += eigenvalues(static_cast<int>(i)) * frame[i].coords;
  }
  return out;
}

SpectralData spectral_decompose(const Element& a, double tol) {
  switch (a.algebra.kind()) {
    case AlgebraKind::RealSym:
    case AlgebraKind::ComplexHerm:
      return decompose_real_or_complex(a);
    case AlgebraKind::QuatHerm:
      return decompose_quat(a, tol);
    case AlgebraKind::SpinFactor:
      return decompose_spin(a);
    case AlgebraKind::DirectSum:
      return decompose_sum(a, tol);
  }
  throw Error("spectral_decompose: unknown kind");
}

std::vector<SpectralLevel> merged_levels(const SpectralData& sd, double tol) {
  std::vector<SpectralLevel> levels;
  const int r = static_cast<int>(sd.frame.size());
  const double scale =
      std::max(1.0, sd.eigenvalues.cwiseAbs().maxCoeff());
  int lo = 0;
  while (lo < r) {
    int hi = lo + 1;
    while (hi < r && sd.eigenvalues(hi - 1) - sd.eigenvalues(hi) <= tol * scale)
      ++hi;
    Element idem = sd.frame[static_cast<std::size_t>(lo)];
    double sum = sd.eigenvalues(lo);
    for (int i = lo + 1; i < hi; ++i) {
      idem = idem + sd.frame[static_cast<std::size_t>(i)];
      sum += sd.eigenvalues(i);
    }
    levels.push_back({sum / (hi - lo), idem, hi - lo});
    lo = hi;
  }
  return levels;
}

Element functional_calculus(const Element& a,
                            const std::function<double(double)>& f,
                            double tol) {
  SpectralData sd = spectral_decompose(a, tol);
  Element out = zero_element(a.algebra);
  for (std::size_t i = 0; i < sd.frame.size(); ++i) {
    out.coords += f(sd.eigenvalues(static_cast<int>(i))) * sd.frame[i].coords;
  }
  return out;
}

Element square_element(const Element& a, double tol) {
  return functional_calculus(a, [](double t) { return t * t; }, tol);
}

Element sqrt_element(const Element& a, double tol) {
  SpectralData sd = spectral_decompose(a, tol);
  double min_ev = sd.eigenvalues(static_cast<int>(sd.frame.size()) - 1);
  if (min_ev < -tol)
    throw SpectralDomainError("sqrt_element: negative eigenvalue", min_ev);
  Element out = zero_element(a.algebra);
  for (std::size_t i = 0; i < sd.frame.size(); ++i) {
    double ev = std::max(0.0, sd.eigenvalues(static_cast<int>(i)));
    out.coords += std::sqrt(ev) * sd.frame[i].coords;
  }
  return out;
}

Element inverse_element(const Element& a, double tol) {
  SpectralData sd = spectral_decompose(a, tol);
  Element out = zero_element(a.algebra);
  for (std::size_t i = 0; i < sd.frame.size(); ++i) {
    double ev = sd.eigenvalues(static_cast<int>(i));
    if (std::abs(ev) <= tol)
      throw SpectralDomainError("inverse_element: zero eigenvalue", ev);
    out.coords += (1.0 / ev) * sd.frame[i].coords;
  }
  return out;
}

ConeReport cone_membership(const Element& a, double tol) {
  SpectralData sd = spectral_decompose(a, tol);
  const int r = static_cast<int>(sd.frame.size());
  double min_ev = sd.eigenvalues(r - 1);
  if (min_ev > tol) return {ConeClass::InsideInterior, min_ev, std::nullopt};
  if (min_ev >= -tol) return {ConeClass::Boundary, min_ev, std::nullopt};
  Element witness = zero_element(a.algebra);
  for (int i = 0; i < r; ++i) {
    if (sd.eigenvalues(i) < -tol)
      witness.coords += sd.frame[static_cast<std::size_t>(i)].coords;
  }
  return {ConeClass::Outside, min_ev, witness};
}

std::vector<Element> random_frame(const Algebra& alg, Rng& rng) {
  return spectral_decompose(random_element(alg, rng)).frame;
}

Element random_cone_interior(const Algebra& alg, Rng& rng, double lo,
                             double hi) {
  std::vector<Element> frame = random_frame(alg, rng);
  Element out = zero_element(alg);
  for (const Element& p : frame) out.coords += rng.uniform(lo, hi) * p.coords;
  return out;
}

Element random_outside_cone(const Algebra& alg, Rng& rng) {
  Element a = random_element(alg, rng);
  double min_ev = spectral_decompose(a).eigenvalues(alg.rank() - 1);
  if (min_ev > -0.2) {
    a = a - (min_ev + 0.5) * unit_element(alg);
  }
  return a;
}

}  // namespace jgpt
