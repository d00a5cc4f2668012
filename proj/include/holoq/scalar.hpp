#pragma once

// Exact scalar types and the dense Eigen containers built on them. Every matrix
// in the library is an Eigen::Matrix over one of these scalars; no floating
// point is used anywhere.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <string_view>

namespace holoq {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

/// Floor division for a nonzero divisor.
Integer floor_div(const Integer& a, const Integer& b);
/// Representative of a modulo b in [0, |b|).
Integer floor_mod(const Integer& a, const Integer& b);

Integer floor(const Rational& q);
/// Fractional part in [0, 1).
Rational frac(const Rational& q);
inline bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

Rational parse_rational(std::string_view text);
std::string to_string(const Integer& x);
std::string to_string(const Rational& q);

template <typename Derived>
bool is_integral(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_integer(m(i, j))) return false;
  return true;
}

/// Entrywise reduction modulo Z^n into [0, 1)^n.
RatVector reduce_mod_one(const RatVector& v);

/// Least common denominator of all entries.
Integer common_denominator(const RatMatrix& m);

template <typename To, typename Derived>
Matrix<To> cast_matrix(const Eigen::MatrixBase<Derived>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = To(m(i, j));
  return out;
}

/// Exact integer product; uses a machine-word kernel when the entries are
/// small enough that no intermediate sum can overflow.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector multiply(const IntMatrix& a, const IntVector& v);
RatVector multiply(const IntMatrix& a, const RatVector& v);

IntMatrix identity_matrix(Eigen::Index n);

}  // namespace holoq
