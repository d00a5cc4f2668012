#pragma once

#include "holoq/scalar.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace holoq {

/// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(std::uint64_t m);

std::uint64_t euler_phi(std::uint64_t m);

/// An element of Q(ζ_m) in the power basis 1, ζ_m, ..., ζ_m^{φ(m)-1}.
/// Binary operations between different conductors work in Q(ζ_lcm).
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(Rational q);  // NOLINT: rationals embed implicitly
  Cyclotomic(int n) : Cyclotomic(Rational(n)) {}  // NOLINT

  /// ζ_m^k.
  static Cyclotomic root_of_unity(std::uint64_t m, std::int64_t k);
  /// Σ coeffs[k] ζ_m^k for arbitrary exponents k in [0, m).
  static Cyclotomic from_exponents(std::uint64_t m, const std::vector<Rational>& coeffs);

  [[nodiscard]] std::uint64_t conductor() const noexcept { return m_; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const noexcept { return c_; }

  /// Same value written over Q(ζ_n); n must be a multiple of conductor().
  [[nodiscard]] Cyclotomic lift(std::uint64_t n) const;

  [[nodiscard]] Cyclotomic conj() const;
  [[nodiscard]] bool is_rational() const;
  /// Throws unless is_rational().
  [[nodiscard]] Rational rational() const;
  [[nodiscard]] bool is_zero() const;
  /// All power-basis coefficients integral, i.e. an element of Z[ζ_m].
  [[nodiscard]] bool is_algebraic_integer() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Rational& q);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational& q) { return a /= q; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  /// Lexicographic on coefficient vectors over the common conductor.
  friend std::strong_ordering compare(const Cyclotomic& a, const Cyclotomic& b);

  /// "1", "-1/2", "2*z8 - z8^3", with z<m> = exp(2πi/m).
  [[nodiscard]] std::string str() const;

 private:
  Cyclotomic(std::uint64_t m, std::vector<Rational> c) : m_(m), c_(std::move(c)) {}

  std::uint64_t m_ = 1;
  std::vector<Rational> c_;  // length φ(m)
};

/// Reduction of Z[ζ_m] modulo a fixed prime ideal over p. The residue field is
/// F_p[x]/(f) where f is the lexicographically first monic irreducible factor
/// of Φ_{m'} mod p, m' the p'-part of m; ζ_m maps to x^u for the u making the
/// map a ring homomorphism that kills p-power roots of unity.
class PrimeIdealReduction {
 public:
  PrimeIdealReduction(std::uint64_t m, std::uint64_t p);

  /// Residue as a coefficient vector of length deg f; throws
  /// NonIntegralCentralCharacter when x is not in Z[ζ_m].
  [[nodiscard]] std::vector<std::uint64_t> reduce(const Cyclotomic& x) const;
  [[nodiscard]] const std::vector<std::uint64_t>& modulus() const noexcept { return f_; }

 private:
  std::uint64_t m_, p_, m_prime_, u_;
  std::vector<std::uint64_t> f_;  // monic, constant term first
};

}  // namespace holoq
