#pragma once

#include "holoq/automorphism.hpp"
#include "holoq/cyclotomic.hpp"
#include "holoq/perm_group.hpp"

#include <string>
#include <vector>

namespace holoq {

/// A class function, one value per conjugacy class in the group's class order.
struct Character {
  std::vector<Cyclotomic> values;

  /// Value at the identity class, which must be a rational integer.
  [[nodiscard]] Integer degree() const;
  friend bool operator==(const Character&, const Character&) = default;
};

Character operator+(const Character& a, const Character& b);
Character operator*(const Integer& k, const Character& a);

enum class IrrType { R, C, H };
enum class ModuleType { RT, CT, HT, Mixed };
std::string to_string(IrrType t);
std::string to_string(ModuleType t);

class CharacterTable {
 public:
  explicit CharacterTable(GroupPtr group);

  [[nodiscard]] const PermGroup& group() const noexcept { return *group_; }
  [[nodiscard]] const GroupPtr& group_ptr() const noexcept { return group_; }
  [[nodiscard]] std::size_t num_classes() const noexcept { return group_->classes().size(); }
  [[nodiscard]] const ConjClass& conj_class(std::size_t k) const { return group_->classes()[k]; }
  [[nodiscard]] std::size_t class_size(std::size_t k) const { return conj_class(k).size(); }
  /// Class of rep(k)^n.
  [[nodiscard]] std::size_t power_class(std::size_t k, std::int64_t n) const;
  [[nodiscard]] std::size_t inverse_class(std::size_t k) const { return power_class(k, -1); }

  /// Sorted: by degree, the trivial character first, then by value tuples in
  /// decreasing lexicographic order.
  [[nodiscard]] const std::vector<Character>& irreducibles() const noexcept { return irr_; }
  [[nodiscard]] const Character& irreducible(std::size_t i) const { return irr_[i]; }
  /// The prime ℓ used for the modular computation.
  [[nodiscard]] std::uint64_t dixon_prime() const noexcept { return prime_; }
  [[nodiscard]] std::uint64_t conductor() const noexcept { return group_->exponent(); }

 private:
  GroupPtr group_;
  std::uint64_t prime_ = 0;
  std::vector<Character> irr_;
};

/// Dixon–Schneider: common eigenvectors of the class multiplication matrices
/// over F_ℓ, lifted to Z[ζ_e] from eigenvalue multiplicities. Throws
/// LiftVerificationFailed if the exact orthogonality relations fail.
CharacterTable character_table(GroupPtr group);

/// Character with the given rational integer values.
Character integer_character(const std::vector<Integer>& values);

/// (1/|G|) Σ_K |K| χ(rep(K)^2); NonIntegralIndicator unless an integer.
int fs_indicator(const CharacterTable& t, const Character& chi);

/// (1/|G|) Σ_K |K| χ(K) conj(ψ(K)); ClassMismatch on length mismatch.
Rational inner_product(const CharacterTable& t, const Character& chi, const Character& psi);

/// Multiplicities of the irreducibles; NegativeMultiplicity if chi is not a character.
std::vector<Integer> decompose(const CharacterTable& t, const Character& chi);

/// NotIrreducible unless ⟨χ,χ⟩ = 1.
IrrType classify_type(const CharacterTable& t, const Character& chi);
/// Type shared by all constituents, or Mixed.
ModuleType module_type_verdict(const CharacterTable& t, const Character& chi);

/// Every irreducible is linear or quaternionic.
bool is_skew(const CharacterTable& t);
/// Σ ν₂(χ)χ(1) over Irr(G).
Integer fs_count_formula(const CharacterTable& t);

/// Central characters of χ and of the trivial character agree modulo a fixed
/// prime ideal over p.
bool principal_block_membership(const CharacterTable& t, const Character& chi, std::uint64_t p);

/// χ ∘ f.
Character compose(const CharacterTable& t, const Character& chi, const Automorphism& f);

}  // namespace holoq
