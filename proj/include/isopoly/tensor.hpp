#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "isopoly/permutation.hpp"
#include "isopoly/rational.hpp"

namespace isopoly {

/// P with P(i, sigma(i)) = 1: row i is the standard basis vector e_{sigma(i)}.
inline MatrixXr perm_matrix(const Permutation& sigma) {
  const int n = sigma.size();
  MatrixXr p = MatrixXr::Zero(n, n);
  for (int i = 0; i < n; ++i) p(i, sigma(i)) = 1;
  return p;
}

/// <A,B> = sum_{i,j} A(i,j) B(i,j).
inline Rational matrix_pairing(const MatrixXr& a, const MatrixXr& b) {
  require_same_dim(a.rows(), b.rows(), "matrix_pairing");
  require_same_dim(a.cols(), b.cols(), "matrix_pairing");
  Rational acc = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) acc += a(i, j) * b(i, j);
  return acc;
}

/// Dense n x n x n x n rational coefficient array in the objective-coefficient
/// convention: coeff(i,j,s,t) is the coefficient of P_{i,j} Q_{s,t} in the
/// pairing with a vertex tensor P (x) Q. A tensor built from a simple pair
/// A (x) B therefore stores coeff(i,j,s,t) = A(i,s) B(j,t); the index shuffle
/// happens once at construction and nowhere else.
class ObjectiveTensor {
 public:
  explicit ObjectiveTensor(int n) : n_(n), coeff_(idx_count(n), Rational(0)) {
    if (n < 1) throw std::invalid_argument("ObjectiveTensor: n must be >= 1");
  }

  int dim() const { return n_; }

  const Rational& operator()(int i, int j, int s, int t) const {
    return coeff_[flat(i, j, s, t)];
  }
  Rational& operator()(int i, int j, int s, int t) { return coeff_[flat(i, j, s, t)]; }

  ObjectiveTensor& operator+=(const ObjectiveTensor& other) {
    require_same_dim(n_, other.n_, "ObjectiveTensor::operator+=");
    for (std::size_t k = 0; k < coeff_.size(); ++k) coeff_[k] += other.coeff_[k];
    return *this;
  }

  ObjectiveTensor& operator*=(const Rational& c) {
    for (auto& v : coeff_) v *= c;
    return *this;
  }

  friend ObjectiveTensor operator+(ObjectiveTensor a, const ObjectiveTensor& b) { return a += b; }
  friend ObjectiveTensor operator*(const Rational& c, ObjectiveTensor w) { return w *= c; }

  Rational max_abs_coeff() const {
    Rational m = 0;
    for (const auto& v : coeff_)
      if (abs(v) > m) m = abs(v);
    return m;
  }

  Rational min_coeff() const {
    Rational m = coeff_[0];
    for (const auto& v : coeff_)
      if (v < m) m = v;
    return m;
  }

  friend bool operator==(const ObjectiveTensor& a, const ObjectiveTensor& b) {
    return a.n_ == b.n_ && a.coeff_ == b.coeff_;
  }

 private:
  static std::size_t idx_count(int n) {
    const std::size_t m = static_cast<std::size_t>(n);
    return m * m * m * m;
  }
  std::size_t flat(int i, int j, int s, int t) const {
    return ((static_cast<std::size_t>(i) * n_ + j) * n_ + s) * n_ + t;
  }

  int n_;
  std::vector<Rational> coeff_;
};

/// coeff(i,j,s,t) = A(i,s) B(j,t), so that pairing with P (x) Q matches
/// sum A_{i,s} B_{j,t} P_{i,j} Q_{s,t}.
inline ObjectiveTensor objective_from_pair(const MatrixXr& a, const MatrixXr& b) {
  require_square(a, "objective_from_pair");
  require_square(b, "objective_from_pair");
  require_same_dim(a.rows(), b.rows(), "objective_from_pair");
  const int n = static_cast<int>(a.rows());
  ObjectiveTensor w(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) w(i, j, s, t) = a(i, s) * b(j, t);
  return w;
}

/// I (x) I as an objective: pairing with P (x) Q counts positions where the
/// two permutations agree.
inline ObjectiveTensor identity_objective(int n) {
  ObjectiveTensor w(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w(i, j, i, j) = 1;
  return w;
}

/// <W, P (x) Q> = sum_{i,s} coeff(i, sigma(i), s, pi(s)). Plain contraction.
inline Rational pair_value(const ObjectiveTensor& w, const Permutation& sigma,
                           const Permutation& pi) {
  require_same_dim(w.dim(), sigma.size(), "pair_value");
  require_same_dim(w.dim(), pi.size(), "pair_value");
  Rational acc = 0;
  for (int i = 0; i < w.dim(); ++i)
    for (int s = 0; s < w.dim(); ++s) acc += w(i, sigma(i), s, pi(s));
  return acc;
}

/// <A (x) B, P (x) Q> evaluated as <P B Q^T, A> without expanding the tensor.
/// (P B Q^T)(i,s) = B(sigma(i), pi(s)), so the whole sum is O(n^2).
inline Rational fast_pair_value(const MatrixXr& a, const MatrixXr& b, const Permutation& sigma,
                                const Permutation& pi) {
  require_square(a, "fast_pair_value");
  require_square(b, "fast_pair_value");
  require_same_dim(a.rows(), b.rows(), "fast_pair_value");
  require_same_dim(a.rows(), static_cast<Eigen::Index>(sigma.size()), "fast_pair_value");
  require_same_dim(a.rows(), static_cast<Eigen::Index>(pi.size()), "fast_pair_value");
  const int n = static_cast<int>(a.rows());
  Rational acc = 0;
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < n; ++s) acc += a(i, s) * b(sigma(i), pi(s));
  return acc;
}

/// A simple tensor A (x) B kept in factored form.
struct PairObjective {
  MatrixXr a;
  MatrixXr b;

  PairObjective(MatrixXr a_, MatrixXr b_) : a(std::move(a_)), b(std::move(b_)) {
    require_square(a, "PairObjective");
    require_square(b, "PairObjective");
    require_same_dim(a.rows(), b.rows(), "PairObjective");
  }

  int dim() const { return static_cast<int>(a.rows()); }
  ObjectiveTensor expand() const { return objective_from_pair(a, b); }
};

/// The vertex P (x) Q of psi_{n,n} as a flat 0/1 vector of length n^4,
/// coordinate (i,j,s,t) in row-major order. Exactly n^2 ones.
inline VectorXr vertex_point(const Permutation& sigma, const Permutation& pi) {
  if (sigma.size() != pi.size()) throw std::invalid_argument("vertex_point: size mismatch");
  const int n = sigma.size();
  VectorXr x = VectorXr::Zero(static_cast<Eigen::Index>(n) * n * n * n);
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < n; ++s) {
      const std::size_t idx =
          ((static_cast<std::size_t>(i) * n + sigma(i)) * n + s) * n + pi(s);
      x(static_cast<Eigen::Index>(idx)) = 1;
    }
  return x;
}

}  // namespace isopoly
