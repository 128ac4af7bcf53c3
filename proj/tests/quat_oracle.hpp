// Test-only quaternion arithmetic. Gives an oracle for quaternionic
// Hermitian products that never touches the complex embedding used by the
// library.
#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "jgpt/algebra.hpp"

namespace jgpt_test {

struct Quat {
  double w = 0, x = 0, y = 0, z = 0;

  Quat operator+(const Quat& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
  Quat operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
  Quat conj() const { return {w, -x, -y, -z}; }
  Quat operator*(const Quat& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }
};

using QuatMatrix = std::vector<std::vector<Quat>>;

inline QuatMatrix quat_zero(int n) {
  return QuatMatrix(static_cast<std::size_t>(n),
                    std::vector<Quat>(static_cast<std::size_t>(n)));
}

inline QuatMatrix quat_mult(const QuatMatrix& a, const QuatMatrix& b) {
  int n = static_cast<int>(a.size());
  QuatMatrix c = quat_zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        c[i][j] = c[i][j] + a[i][k] * b[k][j];
  return c;
}

inline QuatMatrix quat_sym(const QuatMatrix& a, const QuatMatrix& b) {
  QuatMatrix ab = quat_mult(a, b);
  QuatMatrix ba = quat_mult(b, a);
  int n = static_cast<int>(a.size());
  QuatMatrix c = quat_zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i][j] = (ab[i][j] + ba[i][j]) * 0.5;
  return c;
}

// Coordinates of a Hermitian quaternion matrix against the library's
// orthonormal basis order (diagonal first, then units 1,i,j,k per i<j pair),
// written down directly from the entries.
inline Eigen::VectorXd quat_coords(const QuatMatrix& q) {
  int n = static_cast<int>(q.size());
  Eigen::VectorXd c(n * (2 * n - 1));
  int idx = 0;
  for (int i = 0; i < n; ++i) c(idx++) = q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)].w;
  const double s2 = std::sqrt(2.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Quat& e = q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      c(idx++) = s2 * e.w;
      c(idx++) = s2 * e.x;
      c(idx++) = s2 * e.y;
      c(idx++) = s2 * e.z;
    }
  }
  return c;
}

inline QuatMatrix quat_from_coords(int n, const Eigen::VectorXd& c) {
  QuatMatrix q = quat_zero(n);
  int idx = 0;
  for (int i = 0; i < n; ++i)
    q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = {c(idx++), 0, 0, 0};
  const double inv_s2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Quat e{c(idx) * inv_s2, c(idx + 1) * inv_s2, c(idx + 2) * inv_s2,
             c(idx + 3) * inv_s2};
      idx += 4;
      q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
      q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = e.conj();
    }
  }
  return q;
}

inline double quat_real_trace(const QuatMatrix& q) {
  double t = 0;
  for (std::size_t i = 0; i < q.size(); ++i) t += q[i][i].w;
  return t;
}

}  // namespace jgpt_test
