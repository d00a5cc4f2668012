#include "holoq/cyclotomic.hpp"

#include "holoq/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>
#include <numeric>

namespace holoq {

namespace {

using Poly = std::vector<Integer>;

// exact quotient of a by monic b
Poly poly_divide(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const Integer c = a[i];
    q[i - db] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
  while (nr) {
    const std::int64_t q = r / nr;
    std::tie(t, nt) = std::pair(nt, t - q * nt);
    std::tie(r, nr) = std::pair(nr, r - q * nr);
  }
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t result = m, n = m;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(std::uint64_t m) {
  static std::mutex mutex;
  static std::map<std::uint64_t, Poly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  Poly p(m + 1, 0);  // x^m - 1
  p[0] = -1;
  p[m] = 1;
  for (std::uint64_t d = 1; d < m; ++d)
    if (m % d == 0) p = poly_divide(p, cyclotomic_polynomial(d));
  std::lock_guard lock(mutex);
  return cache.emplace(m, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(Rational q) : m_(1), c_{std::move(q)} {}

Cyclotomic Cyclotomic::from_exponents(std::uint64_t m, const std::vector<Rational>& coeffs) {
  if (m == 0) throw Error(ErrorKind::InvalidInput, "conductor must be positive");
  std::vector<Rational> full(m, Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) full[k % m] += coeffs[k];
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = full.size(); i-- > d;) {
    const Rational c = full[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j)
      if (phi[j] != 0) full[i - d + j] -= c * Rational(phi[j]);
  }
  full.resize(d);
  return Cyclotomic(m, std::move(full));
}

Cyclotomic Cyclotomic::root_of_unity(std::uint64_t m, std::int64_t k) {
  const auto mm = static_cast<std::int64_t>(m);
  std::vector<Rational> c(m, Rational(0));
  c[static_cast<std::size_t>(((k % mm) + mm) % mm)] = 1;
  return from_exponents(m, c);
}

Cyclotomic Cyclotomic::lift(std::uint64_t n) const {
  if (n == m_) return *this;
  if (n % m_ != 0) throw Error(ErrorKind::InvalidInput, "lift target is not a multiple of the conductor");
  const std::uint64_t step = n / m_;
  std::vector<Rational> full(n, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) full[k * step] = c_[k];
  return from_exponents(n, full);
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> full(m_, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) full[(m_ - k) % m_] += c_[k];
  return from_exponents(m_, full);
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

Rational Cyclotomic::rational() const {
  if (!is_rational()) throw Error(ErrorKind::InvalidInput, "cyclotomic " + str() + " is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool Cyclotomic::is_algebraic_integer() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return is_integer(q); });
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  const std::uint64_t n = std::lcm(m_, o.m_);
  if (n != m_) *this = lift(n);
  const Cyclotomic b = o.lift(n);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += b.c_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  const std::uint64_t n = std::lcm(m_, o.m_);
  const Cyclotomic a = lift(n), b = o.lift(n);
  std::vector<Rational> prod(a.c_.size() + b.c_.size(), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  *this = from_exponents(n, prod);
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& q) {
  for (auto& c : c_) c /= q;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return compare(a, b) == std::strong_ordering::equal; }

std::strong_ordering compare(const Cyclotomic& a, const Cyclotomic& b) {
  const std::uint64_t n = std::lcm(a.m_, b.m_);
  const Cyclotomic x = a.lift(n), y = b.lift(n);
  for (std::size_t k = 0; k < x.c_.size(); ++k) {
    if (x.c_[k] < y.c_[k]) return std::strong_ordering::less;
    if (x.c_[k] > y.c_[k]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Cyclotomic::str() const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const std::string z = "z" + std::to_string(m_) + (k > 1 ? "^" + std::to_string(k) : "");
    if (k == 0)
      out += a.str();
    else if (a == 1)
      out += z;
    else
      out += a.str() + "*" + z;
  }
  return out.empty() ? "0" : out;
}

PrimeIdealReduction::PrimeIdealReduction(std::uint64_t m, std::uint64_t p) : m_(m), p_(p) {
  m_prime_ = m;
  std::uint64_t pa = 1;
  while (m_prime_ % p == 0) {
    m_prime_ /= p;
    pa *= p;
  }
  // ζ_m = ζ_{p^a}^{?} ζ_{m'}^{u}: with c1 = (p^a)^{-1} mod m', ζ_m^k -> x^{k c1 mod m'}
  u_ = m_prime_ == 1 ? 0 : mod_inverse(pa % m_prime_, m_prime_);
  std::uint64_t f = 1;
  if (m_prime_ > 1)
    while (mod_pow(p, f, m_prime_) != 1) ++f;
  // Φ_{m'} mod p
  std::vector<std::uint64_t> phi;
  for (const Integer& c : cyclotomic_polynomial(m_prime_)) {
    Integer r = c % Integer(p);
    if (r < 0) r += p;
    phi.push_back(r.convert_to<std::uint64_t>());
  }
  // scan monic degree-f polynomials in lexicographic order of (c0, ..., c_{f-1})
  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < f; ++i) {
    if (count > 10'000'000 / p) throw Error(ErrorKind::InvalidInput, "residue field too large for factor search");
    count *= p;
  }
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint64_t> g(f + 1, 0);
    std::uint64_t rest = idx;
    for (std::uint64_t i = 0; i < f; ++i) {
      g[i] = rest % p;
      rest /= p;
    }
    g[f] = 1;
    // remainder of phi modulo g
    std::vector<std::uint64_t> r = phi;
    for (std::size_t i = r.size(); i-- > f;) {
      const std::uint64_t c = r[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j <= f; ++j) r[i - f + j] = (r[i - f + j] + (p - c) * g[j]) % p;
    }
    if (std::all_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(f), [](std::uint64_t x) { return x == 0; })) {
      f_ = std::move(g);
      return;
    }
  }
  throw Error(ErrorKind::InvalidInput, "no irreducible factor found");
}

std::vector<std::uint64_t> PrimeIdealReduction::reduce(const Cyclotomic& x) const {
  if (!x.is_algebraic_integer())
    throw Error(ErrorKind::NonIntegralCentralCharacter, "value " + x.str() + " is not an algebraic integer");
  if (m_ % x.conductor() != 0) throw Error(ErrorKind::InvalidInput, "conductor mismatch in reduction");
  const Cyclotomic y = x.lift(m_);
  const std::size_t f = f_.size() - 1;
  // accumulate in F_p[x]/(x^{m'} - 1), then reduce modulo f
  std::vector<std::uint64_t> acc(m_prime_, 0);
  for (std::size_t k = 0; k < y.coefficients().size(); ++k) {
    Integer c = boost::multiprecision::numerator(y.coefficients()[k]) % Integer(p_);
    if (c < 0) c += p_;
    const std::uint64_t e = m_prime_ == 1 ? 0 : (k % m_prime_) * u_ % m_prime_;
    acc[e] = (acc[e] + c.convert_to<std::uint64_t>()) % p_;
  }
  for (std::size_t i = acc.size(); i-- > f;) {
    const std::uint64_t c = acc[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= f; ++j) acc[i - f + j] = (acc[i - f + j] + (p_ - c) * f_[j]) % p_;
  }
  acc.resize(f, 0);
  return acc;
}

}  // namespace holoq
