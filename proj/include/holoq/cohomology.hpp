#pragma once

#include "holoq/automorphism.hpp"
#include "holoq/lattice.hpp"
#include "holoq/words.hpp"

#include <optional>
#include <span>
#include <vector>

namespace holoq {

/// A 1-cocycle G -> Q^n/Z^n, stored by its values on the generators. The
/// cocycle identity is f(gh) = f(g) + g·f(h).
struct Cocycle1 {
  std::vector<RatVector> generator_values;

  friend bool operator==(const Cocycle1&, const Cocycle1&) = default;
};

Cocycle1 zero_cocycle(const GLattice& L);

/// f on every element, expanded along breadth-first words, reduced into [0,1)^n.
std::vector<RatVector> evaluate_all(const GLattice& L, const Cocycle1& c);
RatVector evaluate(const GLattice& L, const Cocycle1& c, ElementId g);
/// Expansion along an arbitrary word; f(s^-1) = -s^-1·f(s).
RatVector evaluate_word(const GLattice& L, const Cocycle1& c, const Word& w);

/// The cocycle identity holds modulo Z^n on every Cayley-graph edge.
bool is_cocycle(const GLattice& L, const Cocycle1& c);

/// H²(G, L) ≅ H¹(G, Q^n/Z^n) ≅ ⊕ Z/d_i.
struct CohomologyGroup {
  std::vector<Integer> invariants;   // elementary divisors > 1
  std::vector<Cocycle1> generators;  // one representative per invariant

  // Coordinates: y = V^{-1} x for the stacked generator values x; only the
  // first `relation_rank` coordinates carry class information.
  IntMatrix V_inverse;
  std::vector<Integer> divisors;  // all nonzero elementary divisors, in order

  [[nodiscard]] Integer order() const;
};

CohomologyGroup h2(const GLattice& L);

/// Class of c in ⊕ Z/d_i, one entry per invariant. Throws InvalidCocycle.
std::vector<Integer> class_coordinates(const CohomologyGroup& h, const GLattice& L, const Cocycle1& c);
bool is_coboundary(const GLattice& L, const Cocycle1& c);
bool cohomologous(const GLattice& L, const Cocycle1& a, const Cocycle1& b);

Cocycle1 operator+(const Cocycle1& a, const Cocycle1& b);
Cocycle1 operator-(const Cocycle1& a, const Cocycle1& b);
Cocycle1 operator*(const Integer& k, const Cocycle1& c);

/// Restriction to ⟨z⟩ for z of prime order is nonzero: f(z) is not in
/// (ρ(z) - I)Q^n + Z^n. Throws NotPrimeOrder.
bool restriction_nonzero(const GLattice& L, const Cocycle1& c, ElementId z);

/// (f*c)(g) = c(f(g)); a cocycle for twist(L, f).
Cocycle1 pullback(const GLattice& L, const Cocycle1& c, const Automorphism& f);

/// Concatenated values on the direct sum of the underlying lattices.
Cocycle1 direct_sum(std::span<const Cocycle1> parts);

struct RestrictionResult {
  ElementId representative = 0;
  std::uint32_t prime = 0;
  bool nonzero = false;
};

struct SpecialReport {
  bool special = false;
  std::vector<RestrictionResult> restrictions;  // one per class of prime-order elements
};

SpecialReport is_special(const GLattice& L, const Cocycle1& c);

/// H² from the bar resolution: torsion of Z^{n|G|²} / δ(Z^{n|G|}). Throws
/// GroupTooLarge above order 16.
CohomologyGroup bar_h2_oracle(const GLattice& L);

}  // namespace holoq
