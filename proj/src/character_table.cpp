#include "holoq/character_table.hpp"

#include "holoq/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace holoq {

namespace {

using u64 = std::uint64_t;
using ModVec = std::vector<u64>;

u64 mod_pow(u64 b, u64 e, u64 m) {
  u64 r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

u64 mod_inv(u64 a, u64 p) { return mod_pow(a, p - 2, p); }

u64 primitive_root(u64 p) {
  const auto qs = prime_divisors(p - 1);
  for (u64 g = 2; g < p; ++g)
    if (std::all_of(qs.begin(), qs.end(), [&](u64 q) { return mod_pow(g, (p - 1) / q, p) != 1; })) return g;
  return 1;
}

u64 dixon_prime_for(u64 order, u64 exponent) {
  const double bound = 2.0 * std::sqrt(static_cast<double>(order));
  for (u64 l = exponent + 1;; l += exponent)
    if (static_cast<double>(l) > bound && is_prime(l)) return l;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<ModVec>& rows, u64 p) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const u64 inv = mod_inv(rows[r][c], p);
    for (auto& x : rows[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 f = rows[i][c];
      for (std::size_t k = 0; k < n; ++k) rows[i][k] = (rows[i][k] + (p - f) * rows[r][k]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis (as rows) of the null space of the d x d matrix A.
std::vector<ModVec> null_space(std::vector<ModVec> A, u64 p) {
  const std::size_t d = A.size();
  const auto piv = rref(A, p);
  std::vector<bool> is_pivot(d, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<ModVec> out;
  for (std::size_t f = 0; f < d; ++f) {
    if (is_pivot[f]) continue;
    ModVec v(d, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = (p - A[i][f]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial det(xI - A), constant term first, via Hessenberg form.
ModVec charpoly(std::vector<ModVec> A, u64 p) {
  const std::size_t n = A.size();
  for (std::size_t m = 1; m + 1 < n + 1 && m < n; ++m) {
    std::size_t i = m;
    while (i < n && A[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(A[i], A[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(A[r][i], A[r][m]);
    }
    const u64 inv = mod_inv(A[m][m - 1], p);
    for (std::size_t r = m + 1; r < n; ++r) {
      const u64 f = A[r][m - 1] * inv % p;
      if (f == 0) continue;
      for (std::size_t c = 0; c < n; ++c) A[r][c] = (A[r][c] + (p - f) * A[m][c]) % p;
      for (std::size_t c = 0; c < n; ++c) A[c][m] = (A[c][m] + f * A[c][r]) % p;
    }
  }
  // p_k(x) = (x - h_kk) p_{k-1}(x) - Σ_{i<k} h_ik (Π_{j=i+1}^{k} h_{j,j-1}) p_{i-1}(x)
  std::vector<ModVec> P(n + 1);
  P[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    ModVec next(k + 1, 0);
    const ModVec& prev = P[k - 1];
    for (std::size_t j = 0; j < prev.size(); ++j) {
      next[j + 1] = (next[j + 1] + prev[j]) % p;
      next[j] = (next[j] + (p - A[k - 1][k - 1]) * prev[j]) % p;
    }
    u64 prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = prod * A[i + 1][i] % p;
      const u64 coef = prod * A[i][k - 1] % p;
      if (coef == 0) continue;
      const ModVec& q = P[i];
      for (std::size_t j = 0; j < q.size(); ++j) next[j] = (next[j] + (p - coef) * q[j]) % p;
    }
    P[k] = std::move(next);
  }
  return P[n];
}

struct DixonResult {
  std::vector<Character> irr;
};

std::vector<Character> dixon(const PermGroup& g, u64 ell) {
  const auto& classes = g.classes();
  const std::size_t r = classes.size();
  const u64 order = g.order();
  const u64 e = g.exponent();

  // structure constants a[j][k][l] = #{x in K_j : x^{-1} z_l in K_k}
  std::vector<u64> a(r * r * r, 0);
  for (std::size_t l = 0; l < r; ++l) {
    const ElementId z = classes[l].representative;
    for (ElementId x = 0; x < order; ++x) {
      const std::size_t j = g.class_of(x), k = g.class_of(g.mul(g.inverse(x), z));
      ++a[(j * r + k) * r + l];
    }
  }

  // split F_ℓ^r into common eigenspaces of M_j, (M_j)_{k,l} = a[j][k][l]
  std::vector<std::vector<ModVec>> spaces;
  {
    std::vector<ModVec> full(r, ModVec(r, 0));
    for (std::size_t i = 0; i < r; ++i) full[i][i] = 1;
    spaces.push_back(std::move(full));
  }
  for (std::size_t j = 1; j < r; ++j) {
    std::vector<std::vector<ModVec>> next;
    for (auto& basis : spaces) {
      const std::size_t d = basis.size();
      if (d == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      const auto piv = rref(basis, ell);
      // X[k][i] = (M_j b_i)[piv_k]
      std::vector<ModVec> X(d, ModVec(d, 0));
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
          u64 s = 0;
          const std::size_t row = piv[k];
          for (std::size_t l = 0; l < r; ++l) s = (s + a[(j * r + row) * r + l] % ell * basis[i][l]) % ell;
          X[k][i] = s;
        }
      }
      const ModVec cp = charpoly(X, ell);
      std::size_t covered = 0;
      for (u64 lambda = 0; lambda < ell && covered < d; ++lambda) {
        u64 v = 0;
        for (std::size_t i = cp.size(); i-- > 0;) v = (v * lambda + cp[i]) % ell;
        if (v != 0) continue;
        std::vector<ModVec> Y = X;
        for (std::size_t i = 0; i < d; ++i) Y[i][i] = (Y[i][i] + ell - lambda) % ell;
        const auto ker = null_space(Y, ell);
        std::vector<ModVec> sub;
        for (const auto& y : ker) {
          ModVec w(r, 0);
          for (std::size_t i = 0; i < d; ++i)
            if (y[i])
              for (std::size_t l = 0; l < r; ++l) w[l] = (w[l] + y[i] * basis[i][l]) % ell;
          sub.push_back(std::move(w));
        }
        covered += sub.size();
        next.push_back(std::move(sub));
      }
      if (covered != d) throw Error(ErrorKind::LiftVerificationFailed, "class matrix is not diagonalizable mod ell");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r)
    throw Error(ErrorKind::LiftVerificationFailed, "common eigenspaces did not separate the characters");

  std::vector<std::size_t> inv_class(r);
  for (std::size_t l = 0; l < r; ++l) inv_class[l] = g.class_of(g.inverse(classes[l].representative));
  const u64 z = mod_pow(primitive_root(ell), (ell - 1) / e, ell);
  const u64 e_inv = mod_inv(e % ell, ell);
  std::vector<u64> z_pow(e);
  for (u64 i = 0; i < e; ++i) z_pow[i] = mod_pow(z, i, ell);

  std::vector<Character> out;
  for (const auto& space : spaces) {
    ModVec w = space.front();
    const u64 n0 = mod_inv(w[0], ell);
    for (auto& x : w) x = x * n0 % ell;
    u64 s = 0;
    for (std::size_t l = 0; l < r; ++l)
      s = (s + w[l] * w[inv_class[l]] % ell * mod_inv(classes[l].size() % ell, ell)) % ell;
    const u64 target = order % ell * mod_inv(s, ell) % ell;
    u64 deg = 0;
    for (u64 d = 1; d * d <= order; ++d)
      if (d * d % ell == target) {
        deg = d;
        break;
      }
    if (deg == 0) throw Error(ErrorKind::LiftVerificationFailed, "no degree matches the central character");
    ModVec chi(r);
    for (std::size_t l = 0; l < r; ++l) chi[l] = deg * w[l] % ell * mod_inv(classes[l].size() % ell, ell) % ell;

    Character c;
    for (std::size_t l = 0; l < r; ++l) {
      const ElementId x = classes[l].representative;
      std::vector<u64> pw(e);
      ElementId y = PermGroup::identity();
      for (u64 i = 0; i < e; ++i) {
        pw[i] = chi[g.class_of(y)];
        y = g.mul(y, x);
      }
      std::vector<Rational> mult(e, Rational(0));
      u64 total = 0;
      for (u64 k = 0; k < e; ++k) {
        u64 m = 0;
        for (u64 i = 0; i < e; ++i) m = (m + pw[i] * z_pow[(e - (k * i) % e) % e]) % ell;
        m = m * e_inv % ell;
        if (m > deg) throw Error(ErrorKind::LiftVerificationFailed, "eigenvalue multiplicity out of range");
        mult[k] = static_cast<long long>(m);
        total += m;
      }
      if (total != deg) throw Error(ErrorKind::LiftVerificationFailed, "eigenvalue multiplicities do not sum to the degree");
      c.values.push_back(Cyclotomic::from_exponents(e, mult));
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool is_trivial(const Character& c) {
  return std::all_of(c.values.begin(), c.values.end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
}

void require_same_length(const CharacterTable& t, const Character& chi) {
  if (chi.values.size() != t.num_classes())
    throw Error(ErrorKind::ClassMismatch, "character has " + std::to_string(chi.values.size()) + " values, group has " +
                                              std::to_string(t.num_classes()) + " classes");
}

Cyclotomic hermitian_sum(const CharacterTable& t, const Character& chi, const Character& psi) {
  Cyclotomic s;
  for (std::size_t k = 0; k < t.num_classes(); ++k)
    s += Cyclotomic(Rational(static_cast<long long>(t.class_size(k)))) * chi.values[k] * psi.values[k].conj();
  return s / Rational(static_cast<long long>(t.group().order()));
}

}  // namespace

Integer Character::degree() const {
  const Rational d = values.at(0).rational();
  if (!is_integer(d)) throw Error(ErrorKind::InvalidInput, "character degree is not an integer");
  return boost::multiprecision::numerator(d);
}

Character operator+(const Character& a, const Character& b) {
  if (a.values.size() != b.values.size()) throw Error(ErrorKind::ClassMismatch, "adding characters of different groups");
  Character c = a;
  for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] += b.values[i];
  return c;
}

Character operator*(const Integer& k, const Character& a) {
  Character c = a;
  for (auto& v : c.values) v *= Cyclotomic(Rational(k));
  return c;
}

std::string to_string(IrrType t) {
  switch (t) {
    case IrrType::R: return "R";
    case IrrType::C: return "C";
    case IrrType::H: return "H";
  }
  return "?";
}

std::string to_string(ModuleType t) {
  switch (t) {
    case ModuleType::RT: return "RT";
    case ModuleType::CT: return "CT";
    case ModuleType::HT: return "HT";
    case ModuleType::Mixed: return "mixed";
  }
  return "?";
}

CharacterTable::CharacterTable(GroupPtr group) : group_(std::move(group)) {
  const PermGroup& g = *group_;
  prime_ = dixon_prime_for(g.order(), g.exponent());
  irr_ = dixon(g, prime_);
  std::sort(irr_.begin(), irr_.end(), [](const Character& a, const Character& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    for (std::size_t k = 0; k < a.values.size(); ++k) {
      const auto c = compare(a.values[k], b.values[k]);
      if (c != std::strong_ordering::equal) return c == std::strong_ordering::greater;
    }
    return false;
  });

  const std::size_t r = num_classes();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      const Cyclotomic ip = hermitian_sum(*this, irr_[i], irr_[j]);
      if (ip != Cyclotomic(i == j ? 1 : 0))
        throw Error(ErrorKind::LiftVerificationFailed, "row orthogonality fails for characters " + std::to_string(i) +
                                                           ", " + std::to_string(j));
    }
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = k; l < r; ++l) {
      Cyclotomic s;
      for (const auto& chi : irr_) s += chi.values[k] * chi.values[l].conj();
      const long long expect = k == l ? static_cast<long long>(g.order() / class_size(k)) : 0;
      if (s != Cyclotomic(expect))
        throw Error(ErrorKind::LiftVerificationFailed, "column orthogonality fails for classes " + std::to_string(k) +
                                                           ", " + std::to_string(l));
    }
}

std::size_t CharacterTable::power_class(std::size_t k, std::int64_t n) const {
  return group_->class_of(group_->power(conj_class(k).representative, n));
}

CharacterTable character_table(GroupPtr group) { return CharacterTable(std::move(group)); }

Character integer_character(const std::vector<Integer>& values) {
  Character c;
  for (const auto& v : values) c.values.emplace_back(Rational(v));
  return c;
}

int fs_indicator(const CharacterTable& t, const Character& chi) {
  require_same_length(t, chi);
  Cyclotomic s;
  for (std::size_t k = 0; k < t.num_classes(); ++k)
    s += Cyclotomic(Rational(static_cast<long long>(t.class_size(k)))) * chi.values[t.power_class(k, 2)];
  s /= Rational(static_cast<long long>(t.group().order()));
  if (!s.is_rational() || !is_integer(s.rational()))
    throw Error(ErrorKind::NonIntegralIndicator, "indicator sum " + s.str() + " is not an integer");
  return boost::multiprecision::numerator(s.rational()).convert_to<int>();
}

Rational inner_product(const CharacterTable& t, const Character& chi, const Character& psi) {
  require_same_length(t, chi);
  require_same_length(t, psi);
  const Cyclotomic s = hermitian_sum(t, chi, psi);
  if (!s.is_rational()) throw Error(ErrorKind::InvalidInput, "inner product " + s.str() + " is not rational");
  return s.rational();
}

std::vector<Integer> decompose(const CharacterTable& t, const Character& chi) {
  require_same_length(t, chi);
  std::vector<Integer> m;
  Character rebuilt;
  rebuilt.values.assign(t.num_classes(), Cyclotomic());
  for (const auto& irr : t.irreducibles()) {
    const Rational q = inner_product(t, chi, irr);
    if (!is_integer(q) || q < 0)
      throw Error(ErrorKind::NegativeMultiplicity, "multiplicity " + q.str() + " is not a nonnegative integer");
    m.push_back(boost::multiprecision::numerator(q));
    rebuilt = rebuilt + m.back() * irr;
  }
  if (!(rebuilt == chi)) throw Error(ErrorKind::NegativeMultiplicity, "class function is not a character");
  return m;
}

IrrType classify_type(const CharacterTable& t, const Character& chi) {
  if (inner_product(t, chi, chi) != 1) throw Error(ErrorKind::NotIrreducible, "character has norm other than 1");
  switch (fs_indicator(t, chi)) {
    case 1: return IrrType::R;
    case 0: return IrrType::C;
    case -1: return IrrType::H;
  }
  throw Error(ErrorKind::NotIrreducible, "indicator out of range for an irreducible character");
}

ModuleType module_type_verdict(const CharacterTable& t, const Character& chi) {
  const auto m = decompose(t, chi);
  std::optional<IrrType> common;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    const IrrType ty = classify_type(t, t.irreducible(i));
    if (common && *common != ty) return ModuleType::Mixed;
    common = ty;
  }
  if (!common) return ModuleType::Mixed;
  switch (*common) {
    case IrrType::R: return ModuleType::RT;
    case IrrType::C: return ModuleType::CT;
    case IrrType::H: return ModuleType::HT;
  }
  return ModuleType::Mixed;
}

bool is_skew(const CharacterTable& t) {
  for (const auto& chi : t.irreducibles())
    if (chi.degree() != 1 && fs_indicator(t, chi) != -1) return false;
  return true;
}

Integer fs_count_formula(const CharacterTable& t) {
  Integer s = 0;
  for (const auto& chi : t.irreducibles()) s += fs_indicator(t, chi) * chi.degree();
  return s;
}

bool principal_block_membership(const CharacterTable& t, const Character& chi, std::uint64_t p) {
  require_same_length(t, chi);
  if (!is_prime(p) || t.group().order() % p != 0)
    throw Error(ErrorKind::PrimeDoesNotDivideOrder,
                std::to_string(p) + " is not a prime divisor of |G| = " + std::to_string(t.group().order()));
  if (inner_product(t, chi, chi) != 1) throw Error(ErrorKind::NotIrreducible, "character has norm other than 1");
  const PrimeIdealReduction red(t.conductor(), p);
  const Rational deg(chi.degree());
  for (std::size_t k = 0; k < t.num_classes(); ++k) {
    const Rational size(static_cast<long long>(t.class_size(k)));
    const Cyclotomic omega = Cyclotomic(size) * chi.values[k] / deg;
    if (red.reduce(omega) != red.reduce(Cyclotomic(size))) return false;
  }
  return true;
}

Character compose(const CharacterTable& t, const Character& chi, const Automorphism& f) {
  require_same_length(t, chi);
  Character out;
  for (std::size_t k = 0; k < t.num_classes(); ++k)
    out.values.push_back(chi.values[t.group().class_of(f(t.conj_class(k).representative))]);
  return out;
}

}  // namespace holoq
