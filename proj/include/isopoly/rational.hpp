#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isopoly {

// Every scalar in the library is an exact GMP-backed rational; there is no
// floating point anywhere.
using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

using MatrixXr = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXr = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Canonical text form: "p" for integers, "p/q" in lowest terms with q > 0.
inline std::string to_string(const Rational& r) { return r.str(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Parses "p" or "p/q" (optional leading '-', decimal digits only).
/// The result is canonicalized regardless of how the input was written.
inline Rational rational_from_string(const std::string& s) {
  const auto bad = [&]() -> Rational {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  };
  if (s.empty()) return bad();
  const std::size_t slash = s.find('/');
  const std::string num_part = s.substr(0, slash == std::string::npos ? s.size() : slash);
  const std::string den_part = slash == std::string::npos ? "1" : s.substr(slash + 1);
  const auto digits_ok = [](const std::string& t, bool sign_allowed) {
    if (t.empty()) return false;
    std::size_t k = (sign_allowed && t[0] == '-') ? 1 : 0;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') return false;
    return true;
  };
  if (!digits_ok(num_part, true) || !digits_ok(den_part, false)) return bad();
  Integer p(num_part), q(den_part);
  if (q == 0) return bad();
  return Rational(p, q);  // the two-argument constructor canonicalizes
}

inline bool matrices_equal(const MatrixXr& a, const MatrixXr& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline void require_square(const MatrixXr& m, const char* what) {
  if (m.rows() != m.cols())
    throw std::invalid_argument(std::string(what) + ": matrix is not square");
}

inline void require_same_dim(Eigen::Index a, Eigen::Index b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace isopoly
