#include "holoq/scalar.hpp"

#include "holoq/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace holoq {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Integer floor_mod(const Integer& a, const Integer& b) {
  Integer r = a % b;
  if (r < 0) r += abs(b);
  return r;
}

Integer floor(const Rational& q) {
  return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw Error(ErrorKind::InvalidInput, "empty rational literal");
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw Error(ErrorKind::InvalidInput, "bad rational literal '" + s + "'");
  if (num.front() == '+') num.erase(0, 1);
  if (den.front() == '+') den.erase(0, 1);
  Integer d(den);
  if (d == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + s + "'");
  return Rational(Integer(num), d);
}

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& q) { return q.str(); }

RatVector reduce_mod_one(const RatVector& v) {
  RatVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = frac(v(i));
  return out;
}

Integer common_denominator(const RatMatrix& m) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) l = lcm(l, Integer(boost::multiprecision::denominator(m(i, j))));
  return l;
}

namespace {

constexpr unsigned kSmallBits = 24;

bool small_entries(const IntMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Integer& x = m.data()[i];
    if (x != 0 && boost::multiprecision::msb(abs(x)) >= kSmallBits) return false;
  }
  return true;
}

Matrix<std::int64_t> to_word(const IntMatrix& m) {
  Matrix<std::int64_t> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.size(); ++i) out.data()[i] = m.data()[i].convert_to<std::int64_t>();
  return out;
}

IntMatrix from_word(const Matrix<std::int64_t>& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.size(); ++i) out.data()[i] = Integer(m.data()[i]);
  return out;
}

}  // namespace

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  // 2^24 * 2^24 * inner < 2^62 for inner dimensions up to 2^14.
  if (a.cols() < (1 << 14) && small_entries(a) && small_entries(b)) return from_word(to_word(a) * to_word(b));
  IntMatrix out = IntMatrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntVector multiply(const IntMatrix& a, const IntVector& v) {
  IntMatrix col = v;
  return multiply(a, col).col(0);
}

RatVector multiply(const IntMatrix& a, const RatVector& v) {
  RatVector out = RatVector::Zero(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0 && v(k) != 0) out(i) += Rational(a(i, k)) * v(k);
  return out;
}

IntMatrix identity_matrix(Eigen::Index n) {
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

}  // namespace holoq
