#pragma once

#include "holoq/character_table.hpp"
#include "holoq/cohomology.hpp"
#include "holoq/lattice.hpp"

#include <optional>
#include <vector>

namespace holoq {

/// x ↦ A x + t.
struct AffineElement {
  IntMatrix linear;
  RatVector translation;

  [[nodiscard]] static AffineElement identity(Eigen::Index n);
  [[nodiscard]] AffineElement inverse() const;
  [[nodiscard]] AffineElement power(std::uint64_t k) const;
  [[nodiscard]] bool is_identity() const;
  friend AffineElement operator*(const AffineElement& a, const AffineElement& b);
  friend bool operator==(const AffineElement&, const AffineElement&) = default;
};

/// The extension 0 -> Z^n -> Γ -> G -> 1 defined by a lattice and a vector system.
struct CrystGroupData {
  GLattice lattice;
  Cocycle1 vector_system;

  [[nodiscard]] const PermGroup& group() const { return lattice.group(); }
  [[nodiscard]] Eigen::Index dimension() const { return lattice.rank(); }
  /// (ρ(g), f(g)).
  [[nodiscard]] AffineElement lift(ElementId g) const;
};

/// Throws InvalidCocycle unless c satisfies the cocycle identity on L.
CrystGroupData assemble(GLattice L, Cocycle1 c);

struct TorsionWitness {
  ElementId element = 0;
  IntVector shift;  // (ρ(g), f(g) + shift) has finite order
};

struct TorsionResult {
  bool torsion_free = true;
  std::optional<TorsionWitness> witness;
};

/// For each class representative g of prime order: torsion over g exists iff
/// N_g f(g) ∈ N_g Z^n, N_g = Σ ρ(g)^k.
TorsionResult is_torsion_free_direct(const CrystGroupData& gamma);

struct FlatManifoldReport {
  Eigen::Index dimension = 0;
  bool torsion_free = false;
  bool holonomy_faithful = false;
  std::size_t holonomy_order = 0;
  Eigen::Index first_betti = 0;
  ModuleType type_verdict = ModuleType::Mixed;
  std::vector<RestrictionResult> restrictions;
};

/// Throws TestDisagreement when the cohomological and affine torsion tests differ.
FlatManifoldReport report(const CharacterTable& t, const CrystGroupData& gamma);

}  // namespace holoq
