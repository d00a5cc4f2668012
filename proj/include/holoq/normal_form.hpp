#pragma once

// Hermite and Smith normal forms over the integers, and the lattice
// operations built on them.

#include "holoq/scalar.hpp"

#include <map>
#include <optional>
#include <vector>

namespace holoq {

struct HermiteForm {
  IntMatrix H;  // H = U * A
  IntMatrix U;  // unimodular
  Eigen::Index rank = 0;
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

/// Row-style Hermite normal form: the nonzero rows come first, each pivot is
/// positive and lies strictly right of the pivot above it, and entries above a
/// pivot are reduced into [0, pivot).
HermiteForm hnf(const IntMatrix& A);

/// Echelon basis of a row lattice, built one row at a time.
class HermiteAccumulator {
 public:
  explicit HermiteAccumulator(Eigen::Index cols) : cols_(cols) {}

  void add_row(IntVector v);
  /// The nonzero rows of the Hermite normal form of everything added so far.
  [[nodiscard]] IntMatrix basis() const;

 private:
  Eigen::Index cols_;
  std::map<Eigen::Index, IntVector> rows_;  // pivot column -> row
};

/// The nonzero rows of hnf(A).H without the transform, via HermiteAccumulator;
/// suits tall sparse matrices.
IntMatrix hnf_basis(const IntMatrix& A);

struct SmithForm {
  IntMatrix S;  // S = U * A * V, diagonal with d_1 | d_2 | ...
  IntMatrix U;
  IntMatrix V;
  IntMatrix V_inverse;
  Eigen::Index rank = 0;

  /// Nonzero diagonal entries, in order.
  [[nodiscard]] std::vector<Integer> divisors() const;
};

SmithForm snf(const IntMatrix& A);

/// Elementary divisors greater than one.
std::vector<Integer> torsion_invariants(const IntMatrix& A);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& A);
bool is_unimodular(const IntMatrix& A);

/// Columns form a basis of {x in Z^n : A x = 0}, in Hermite-reduced order.
IntMatrix integer_kernel(const IntMatrix& A);

/// Columns form a basis of (Q-span of the columns of A) ∩ Z^n, canonical:
/// the transpose is in Hermite normal form.
IntMatrix saturate(const IntMatrix& A);

/// Some x in Z^n with A x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& A, const IntVector& b);
/// Same, for a rational right-hand side (no solution unless b is integral).
std::optional<IntVector> solve_integer(const IntMatrix& A, const RatVector& b);

Eigen::Index rank(const RatMatrix& A);
Eigen::Index rank(const IntMatrix& A);

/// Unique x with A x = b for A square and invertible over Q.
RatVector solve_rational(const RatMatrix& A, const RatVector& b);

}  // namespace holoq
