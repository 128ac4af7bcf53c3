#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "jgpt/errors.hpp"
#include "jgpt/rng.hpp"

namespace jgpt {

inline constexpr double kDefaultTol = 1e-8;

enum class AlgebraKind { RealSym, ComplexHerm, QuatHerm, SpinFactor, DirectSum };

std::string kind_name(AlgebraKind kind);

// A simple Euclidean Jordan algebra (or a direct sum of them) with a fixed
// coordinate basis that is orthonormal under the trace inner product,
// normalized so primitive idempotents have unit norm. Immutable; cheap to
// copy. Matrix kinds carry a complex matrix representation (quaternionic
// entries via the 2x2 complex embedding), spin factors work directly on
// coordinates.
class Algebra {
 public:
  static Algebra real_sym(int n);
  static Algebra complex_herm(int n);
  static Algebra quat_herm(int n);
  static Algebra spin_factor(int d);
  static Algebra direct_sum(std::vector<Algebra> parts);

  AlgebraKind kind() const;
  int size() const;  // n for matrix kinds, d for spin factors, #parts for sums
  int dim() const;   // ambient real dimension
  int rank() const;  // size of any Jordan frame

  bool is_matrix_kind() const;
  int matrix_size() const;    // rows of the complex representation
  double trace_scale() const; // matrix trace -> canonical trace factor

  const std::vector<Eigen::MatrixXcd>& basis() const;  // matrix kinds only
  const std::vector<Algebra>& parts() const;           // direct sums only
  int part_offset(int i) const;

  bool operator==(const Algebra& other) const;
  bool operator!=(const Algebra& other) const { return !(*this == other); }
  std::string to_string() const;

  struct Impl;

 private:
  explicit Algebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

struct Element {
  Algebra algebra;
  Eigen::VectorXd coords;
};

Element zero_element(const Algebra& alg);
Element unit_element(const Algebra& alg);
Element basis_element(const Algebra& alg, int k);
Element element_from_coords(const Algebra& alg, Eigen::VectorXd coords);

// Matrix kinds: conversion to/from the complex representation. For
// QuatHerm the matrix is the 2n x 2n embedding and must commute with the
// quaternionic structure.
Eigen::MatrixXcd element_to_matrix(const Element& a);
Element element_from_matrix(const Algebra& alg, const Eigen::MatrixXcd& m,
                            double tol = kDefaultTol);

// Spin factors: natural (s, x) coordinates with product
// (s,x)(t,y) = (st + x.y, sy + tx).
Element spin_element(const Algebra& alg, double s, const Eigen::VectorXd& x);
std::pair<double, Eigen::VectorXd> spin_parts(const Element& a);

// Direct sums: block embedding / extraction.
Element embed_part(const Algebra& sum, int part, const Element& a);
Element extract_part(const Element& a, int part);

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator-(const Element& a);
Element operator*(double s, const Element& a);
Element operator*(const Element& a, double s);

Element jordan_product(const Element& a, const Element& b);
double trace_inner_product(const Element& a, const Element& b);
double jordan_trace(const Element& a);  // <a, u>
double norm(const Element& a);

// || a^2 (a b) - a (a^2 b) || / (1 + ||a||^3 ||b||)
double jordan_identity_residual(const Element& a, const Element& b);

Element random_element(const Algebra& alg, Rng& rng);

}  // namespace jgpt
