#pragma once

#include "holoq/automorphism.hpp"
#include "holoq/character_table.hpp"
#include "holoq/perm_group.hpp"
#include "holoq/scalar.hpp"

#include <span>
#include <vector>

namespace holoq {

/// Z^n with a left action of G: generator s acts by an invertible integer
/// matrix, g acts on column vectors. Matrices of all elements are built along
/// the group's breadth-first tree; whether they respect the full
/// multiplication table is recorded, not assumed.
class GLattice {
 public:
  GLattice(GroupPtr group, std::vector<IntMatrix> generator_action);

  [[nodiscard]] const PermGroup& group() const noexcept { return *group_; }
  [[nodiscard]] const GroupPtr& group_ptr() const noexcept { return group_; }
  [[nodiscard]] Eigen::Index rank() const noexcept { return rank_; }
  [[nodiscard]] const IntMatrix& generator_matrix(std::size_t s) const { return generators_[s]; }
  [[nodiscard]] const std::vector<IntMatrix>& generator_matrices() const noexcept { return generators_; }
  [[nodiscard]] const IntMatrix& matrix(ElementId g) const { return elements_[g]; }
  /// ρ(xy) = ρ(x)ρ(y) for all x and all generators y.
  [[nodiscard]] bool is_module() const noexcept { return module_; }

 private:
  GroupPtr group_;
  Eigen::Index rank_ = 0;
  std::vector<IntMatrix> generators_;
  std::vector<IntMatrix> elements_;
  bool module_ = false;
};

/// Throws NotAModule unless L.is_module().
void require_module(const GLattice& L);

GLattice trivial_lattice(GroupPtr group, Eigen::Index rank = 1);

/// Z[G/H] with cosets ordered by their smallest element index.
GLattice permutation_module(GroupPtr group, std::span<const ElementId> subgroup);

/// Natural permutation lattice on a G-invariant set of points (0-based).
GLattice permutation_lattice(GroupPtr group, std::span<const Point> points);

struct IsotypicProjection {
  RatMatrix B;       // (scale·χ(1)/|G|) Σ_g conj(scale·χ(g)) ρ(g)
  IntMatrix basis;   // columns: basis of (column space of B) ∩ Z^n
  Eigen::Index rank = 0;
};

IsotypicProjection isotypic_projection(const CharacterTable& t, const GLattice& L, const Character& chi,
                                       const Integer& scale);

/// Action on the sublattice spanned by the columns of `basis` (full column
/// rank): X_s with ρ(s)·basis = basis·X_s. Throws NotStable or
/// NonIntegralInducedAction.
GLattice induced_sublattice(const GLattice& L, const IntMatrix& basis);

/// True iff the induced action on `basis` equals `claimed_action`. Throws
/// RankMismatch on shape errors and NotStable if the span is not G-stable.
bool change_basis_check(const GLattice& L, const IntMatrix& basis, const std::vector<IntMatrix>& claimed_action);

/// Both column sets span the same sublattice of Z^n.
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

/// g ·_f m = ρ(f(g)) m.
GLattice twist(const GLattice& L, const Automorphism& f);

/// Block-diagonal sum; GroupMismatch unless all summands share the group.
GLattice direct_sum(std::span<const GLattice> summands);

inline bool module_check(const GLattice& L) { return L.is_module(); }
/// Only the identity acts trivially.
bool is_faithful(const GLattice& L);
/// |ρ(G)|.
std::size_t image_order(const GLattice& L);

/// Columns: basis of the fixed sublattice L^G.
IntMatrix fixed_sublattice(const GLattice& L);
Eigen::Index first_betti(const GLattice& L);

/// Traces at class representatives.
Character lattice_character(const CharacterTable& t, const GLattice& L);

/// Σ_{k<order} ρ(g)^k.
IntMatrix norm_matrix(const GLattice& L, ElementId g);

}  // namespace holoq
