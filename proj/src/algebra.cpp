#include "jgpt/algebra.hpp"

#include <cmath>

namespace jgpt {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// 2x2 complex image of a quaternion w + xi + yj + zk.
Eigen::Matrix2cd quat_to_complex(double w, double x, double y, double z) {
  Eigen::Matrix2cd m;
  m << std::complex<double>(w, x), std::complex<double>(y, z),
      std::complex<double>(-y, z), std::complex<double>(w, -x);
  return m;
}

void place_quat_entry(Eigen::MatrixXcd& m, int i, int j, double w, double x,
                      double y, double z) {
  m.block<2, 2>(2 * i, 2 * j) = quat_to_complex(w, x, y, z);
}

}  // namespace

struct Algebra::Impl {
  AlgebraKind kind;
  int size = 0;
  int dim = 0;
  int rank = 0;
  int mat_n = 0;
  double trace_scale = 1.0;
  std::vector<Eigen::MatrixXcd> basis;
  std::vector<Algebra> parts;
  std::vector<int> offsets;
};

std::string kind_name(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::RealSym: return "real_sym";
    case AlgebraKind::ComplexHerm: return "complex_herm";
    case AlgebraKind::QuatHerm: return "quat_herm";
    case AlgebraKind::SpinFactor: return "spin_factor";
    case AlgebraKind::DirectSum: return "direct_sum";
  }
  return "?";
}

Algebra Algebra::real_sym(int n) {
  if (n < 1) throw Error("real_sym: size must be >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = AlgebraKind::RealSym;
  impl->size = n;
  impl->dim = n * (n + 1) / 2;
  impl->rank = n;
  impl->mat_n = n;
  impl->basis.reserve(impl->dim);
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(n, n);
    b(i, i) = 1.0;
    impl->basis.push_back(b);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(n, n);
      b(i, j) = kInvSqrt2;
      b(j, i) = kInvSqrt2;
      impl->basis.push_back(b);
    }
  }
  return Algebra(impl);
}

Algebra Algebra::complex_herm(int n) {
  if (n < 1) throw Error("complex_herm: size must be >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = AlgebraKind::ComplexHerm;
  impl->size = n;
  impl->dim = n * n;
  impl->rank = n;
  impl->mat_n = n;
  impl->basis.reserve(impl->dim);
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(n, n);
    b(i, i) = 1.0;
    impl->basis.push_back(b);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Eigen::MatrixXcd re = Eigen::MatrixXcd::Zero(n, n);
      re(i, j) = kInvSqrt2;
      re(j, i) = kInvSqrt2;
      impl->basis.push_back(re);
      Eigen::MatrixXcd im = Eigen::MatrixXcd::Zero(n, n);
      im(i, j) = std::complex<double>(0.0, kInvSqrt2);
      im(j, i) = std::complex<double>(0.0, -kInvSqrt2);
      impl->basis.push_back(im);
    }
  }
  return Algebra(impl);
}

Algebra Algebra::quat_herm(int n) {
  if (n < 1) throw Error("quat_herm: size must be >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = AlgebraKind::QuatHerm;
  impl->size = n;
  impl->dim = n * (2 * n - 1);
  impl->rank = n;
  impl->mat_n = 2 * n;
  impl->trace_scale = 0.5;  // each quaternionic eigenvalue appears twice
  impl->basis.reserve(impl->dim);
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    place_quat_entry(b, i, i, 1.0, 0.0, 0.0, 0.0);
    impl->basis.push_back(b);
  }
  // off-diagonal entry q/sqrt2 at (i,j), conjugate at (j,i), q in {1,i,j,k}
  const double units[4][4] = {
      {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (const auto& q : units) {
        Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
        place_quat_entry(b, i, j, q[0] * kInvSqrt2, q[1] * kInvSqrt2,
                         q[2] * kInvSqrt2, q[3] * kInvSqrt2);
        place_quat_entry(b, j, i, q[0] * kInvSqrt2, -q[1] * kInvSqrt2,
                         -q[2] * kInvSqrt2, -q[3] * kInvSqrt2);
        impl->basis.push_back(b);
      }
    }
  }
  return Algebra(impl);
}

Algebra Algebra::spin_factor(int d) {
  if (d < 2) throw Error("spin_factor: dimension must be >= 2");
  auto impl = std::make_shared<Impl>();
  impl->kind = AlgebraKind::SpinFactor;
  impl->size = d;
  impl->dim = d + 1;
  impl->rank = 2;
  return Algebra(impl);
}

Algebra Algebra::direct_sum(std::vector<Algebra> parts) {
  if (parts.empty()) throw Error("direct_sum: needs at least one part");
  auto impl = std::make_shared<Impl>();
  impl->kind = AlgebraKind::DirectSum;
  impl->size = static_cast<int>(parts.size());
  impl->offsets.reserve(parts.size());
  for (const auto& p : parts) {
    impl->offsets.push_back(impl->dim);
    impl->dim += p.dim();
    impl->rank += p.rank();
  }
  impl->parts = std::move(parts);
  return Algebra(impl);
}

AlgebraKind Algebra::kind() const { return impl_->kind; }
int Algebra::size() const { return impl_->size; }
int Algebra::dim() const { return impl_->dim; }
int Algebra::rank() const { return impl_->rank; }
int Algebra::matrix_size() const { return impl_->mat_n; }
double Algebra::trace_scale() const { return impl_->trace_scale; }

bool Algebra::is_matrix_kind() const {
  switch (impl_->kind) {
    case AlgebraKind::RealSym:
    case AlgebraKind::ComplexHerm:
    case AlgebraKind::QuatHerm:
      return true;
    default:
      return false;
  }
}

const std::vector<Eigen::MatrixXcd>& Algebra::basis() const {
  if (!is_matrix_kind()) throw Error("basis(): matrix kinds only");
  return impl_->basis;
}

const std::vector<Algebra>& Algebra::parts() const {
  if (impl_->kind != AlgebraKind::DirectSum)
    throw Error("parts(): direct sums only");
  return impl_->parts;
}

int Algebra::part_offset(int i) const {
  if (impl_->kind != AlgebraKind::DirectSum)
    throw Error("part_offset(): direct sums only");
  return impl_->offsets.at(static_cast<std::size_t>(i));
}

bool Algebra::operator==(const Algebra& other) const {
  if (impl_ == other.impl_) return true;
  if (impl_->kind != other.impl_->kind) return false;
  if (impl_->kind == AlgebraKind::DirectSum) {
    if (impl_->parts.size() != other.impl_->parts.size()) return false;
    for (std::size_t i = 0; i < impl_->parts.size(); ++i) {
      if (impl_->parts[i] != other.impl_->parts[i]) return false;
    }
    return true;
  }
  return impl_->size == other.impl_->size;
}

std::string Algebra::to_string() const {
  if (impl_->kind == AlgebraKind::DirectSum) {
    std::string s = "direct_sum(";
    for (std::size_t i = 0; i < impl_->parts.size(); ++i) {
      if (i) s += ", ";
      s += impl_->parts[i].to_string();
    }
    return s + ")";
  }
  return kind_name(impl_->kind) + "(" + std::to_string(impl_->size) + ")";
}

namespace {

void require_same_algebra(const Element& a, const Element& b,
                          const char* what) {
  if (a.algebra != b.algebra)
    throw MismatchError(std::string(what) + ": elements of different algebras");
}

}  // namespace

Element zero_element(const Algebra& alg) {
  return Element{alg, Eigen::VectorXd::Zero(alg.dim())};
}

Element unit_element(const Algebra& alg) {
  switch (alg.kind()) {
    case AlgebraKind::SpinFactor: {
      Eigen::VectorXd c = Eigen::VectorXd::Zero(alg.dim());
      c(0) = std::sqrt(2.0);
      return Element{alg, c};
    }
    case AlgebraKind::DirectSum: {
      Element u = zero_element(alg);
      for (int p = 0; p < alg.size(); ++p) {
        const Algebra& part = alg.parts()[static_cast<std::size_t>(p)];
        u.coords.segment(alg.part_offset(p), part.dim()) =
            unit_element(part).coords;
      }
      return u;
    }
    default: {
      // diagonal basis elements come first
      Eigen::VectorXd c = Eigen::VectorXd::Zero(alg.dim());
      for (int i = 0; i < alg.size(); ++i) c(i) = 1.0;
      return Element{alg, c};
    }
  }
}

Element basis_element(const Algebra& alg, int k) {
  if (k < 0 || k >= alg.dim()) throw Error("basis_element: index out of range");
  Eigen::VectorXd c = Eigen::VectorXd::Zero(alg.dim());
  c(k) = 1.0;
  return Element{alg, c};
}

Element element_from_coords(const Algebra& alg, Eigen::VectorXd coords) {
  if (coords.size() != alg.dim())
    throw Error("element_from_coords: wrong coordinate length");
  return Element{alg, std::move(coords)};
}

Eigen::MatrixXcd element_to_matrix(const Element& a) {
  const Algebra& alg = a.algebra;
  if (!alg.is_matrix_kind()) throw Error("element_to_matrix: matrix kinds only");
  const int m = alg.matrix_size();
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(m, m);
  const auto& basis = alg.basis();
  for (int k = 0; k < alg.dim(); ++k) {
    if (a.coords(k) != 0.0) x += a.coords(k) * basis[static_cast<std::size_t>(k)];
  }
  return x;
}

namespace {

// Extraction against the orthonormal basis; assumes m is a valid
// representation element.
Element from_matrix_unchecked(const Algebra& alg, const Eigen::MatrixXcd& m) {
  Eigen::VectorXd coords(alg.dim());
  const auto& basis = alg.basis();
  const double s = alg.trace_scale();
  for (int k = 0; k < alg.dim(); ++k) {
    coords(k) =
        s * (basis[static_cast<std::size_t>(k)].cwiseProduct(m.transpose()))
                .sum()
                .real();
  }
  return Element{alg, std::move(coords)};
}

Eigen::MatrixXcd quat_structure(int mat_n) {
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(mat_n, mat_n);
  for (int i = 0; i + 1 < mat_n; i += 2) {
    j(i, i + 1) = 1.0;
    j(i + 1, i) = -1.0;
  }
  return j;
}

}  // namespace

Element element_from_matrix(const Algebra& alg, const Eigen::MatrixXcd& m,
                            double tol) {
  if (!alg.is_matrix_kind())
    throw Error("element_from_matrix: matrix kinds only");
  if (m.rows() != alg.matrix_size() || m.cols() != alg.matrix_size())
    throw Error("element_from_matrix: wrong matrix size");
  const double scale = 1.0 + m.norm();
  if ((m - m.adjoint()).norm() > tol * scale)
    throw Error("element_from_matrix: matrix is not Hermitian");
  if (alg.kind() == AlgebraKind::RealSym && m.imag().norm() > tol * scale)
    throw Error("element_from_matrix: matrix is not real");
  if (alg.kind() == AlgebraKind::QuatHerm) {
    Eigen::MatrixXcd j = quat_structure(alg.matrix_size());
    if ((m * j - j * m.conjugate()).norm() > tol * scale)
      throw Error("element_from_matrix: matrix is not quaternionic");
  }
  return from_matrix_unchecked(alg, m);
}

Element spin_element(const Algebra& alg, double s, const Eigen::VectorXd& x) {
  if (alg.kind() != AlgebraKind::SpinFactor)
    throw Error("spin_element: spin factors only");
  if (x.size() != alg.size()) throw Error("spin_element: wrong vector length");
  Eigen::VectorXd c(alg.dim());
  c(0) = std::sqrt(2.0) * s;
  c.tail(alg.size()) = std::sqrt(2.0) * x;
  return Element{alg, std::move(c)};
}

std::pair<double, Eigen::VectorXd> spin_parts(const Element& a) {
  if (a.algebra.kind() != AlgebraKind::SpinFactor)
    throw Error("spin_parts: spin factors only");
  return {a.coords(0) * kInvSqrt2,
          Eigen::VectorXd(a.coords.tail(a.algebra.size()) * kInvSqrt2)};
}

Element embed_part(const Algebra& sum, int part, const Element& a) {
  if (sum.kind() != AlgebraKind::DirectSum)
    throw Error("embed_part: direct sums only");
  const Algebra& p = sum.parts()[static_cast<std::size_t>(part)];
  if (a.algebra != p) throw MismatchError("embed_part: wrong part algebra");
  Element out = zero_element(sum);
  out.coords.segment(sum.part_offset(part), p.dim()) = a.coords;
  return out;
}

Element extract_part(const Element& a, int part) {
  const Algebra& sum = a.algebra;
  if (sum.kind() != AlgebraKind::DirectSum)
    throw Error("extract_part: direct sums only");
  const Algebra& p = sum.parts()[static_cast<std::size_t>(part)];
  return Element{p, a.coords.segment(sum.part_offset(part), p.dim())};
}

Element operator+(const Element& a, const Element& b) {
  require_same_algebra(a, b, "operator+");
  return Element{a.algebra, a.coords + b.coords};
}

Element operator-(const Element& a, const Element& b) {
  require_same_algebra(a, b, "operator-");
  return Element{a.algebra, a.coords - b.coords};
}

Element operator-(const Element& a) { return Element{a.algebra, -a.coords}; }

Element operator*(double s, const Element& a) {
  return Element{a.algebra, s * a.coords};
}

Element operator*(const Element& a, double s) { return s * a; }

Element jordan_product(const Element& a, const Element& b) {
  require_same_algebra(a, b, "jordan_product");
  const Algebra& alg = a.algebra;
  switch (alg.kind()) {
    case AlgebraKind::SpinFactor: {
      // (s,x)(t,y) = (st + x.y, sy + tx) carried on sqrt2-scaled coords
      const int d = alg.size();
      Eigen::VectorXd c(alg.dim());
      c(0) = kInvSqrt2 * a.coords.dot(b.coords);
      c.tail(d) = kInvSqrt2 * (a.coords(0) * b.coords.tail(d) +
                               b.coords(0) * a.coords.tail(d));
      return Element{alg, std::move(c)};
    }
    case AlgebraKind::DirectSum: {
      Element out = zero_element(alg);
      for (int p = 0; p < alg.size(); ++p) {
        Element prod = jordan_product(extract_part(a, p), extract_part(b, p));
        out.coords.segment(alg.part_offset(p),
                           alg.parts()[static_cast<std::size_t>(p)].dim()) =
            prod.coords;
      }
      return out;
    }
    default: {
      Eigen::MatrixXcd x = element_to_matrix(a);
      Eigen::MatrixXcd y = element_to_matrix(b);
      return from_matrix_unchecked(alg, 0.5 * (x * y + y * x));
    }
  }
}

double trace_inner_product(const Element& a, const Element& b) {
  require_same_algebra(a, b, "trace_inner_product");
  return a.coords.dot(b.coords);
}

double jordan_trace(const Element& a) {
  return trace_inner_product(a, unit_element(a.algebra));
}

double norm(const Element& a) { return a.coords.norm(); }

double jordan_identity_residual(const Element& a, const Element& b) {
  require_same_algebra(a, b, "jordan_identity_residual");
  Element a2 = jordan_product(a, a);
  Element lhs = jordan_product(a2, jordan_product(a, b));
  Element rhs = jordan_product(a, jordan_product(a2, b));
  double na = norm(a);
  double scale = 1.0 + na * na * na * norm(b);
  return norm(lhs - rhs) / scale;
}

Element random_element(const Algebra& alg, Rng& rng) {
  Eigen::VectorXd c(alg.dim());
  for (int i = 0; i < alg.dim(); ++i) c(i) = rng.gauss();
  return Element{alg, std::move(c)};
}

}  // namespace jgpt
