#include "holoq/crystallographic.hpp"

#include "holoq/errors.hpp"
#include "holoq/normal_form.hpp"

namespace holoq {

AffineElement AffineElement::identity(Eigen::Index n) { return {identity_matrix(n), RatVector::Zero(n)}; }

AffineElement operator*(const AffineElement& a, const AffineElement& b) {
  return {multiply(a.linear, b.linear), RatVector(multiply(a.linear, b.translation) + a.translation)};
}

AffineElement AffineElement::inverse() const {
  // (A, t)^{-1} = (A^{-1}, -A^{-1} t); A^{-1} is integral for unimodular A
  const Eigen::Index n = linear.rows();
  const RatMatrix Aq = cast_matrix<Rational>(linear);
  RatMatrix inv(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    RatVector e = RatVector::Zero(n);
    e(j) = 1;
    inv.col(j) = solve_rational(Aq, e);
  }
  if (!is_integral(inv)) throw Error(ErrorKind::InvalidInput, "linear part is not unimodular");
  IntMatrix A(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) A(i, j) = boost::multiprecision::numerator(inv(i, j));
  return {A, RatVector(-multiply(A, translation))};
}

AffineElement AffineElement::power(std::uint64_t k) const {
  AffineElement result = identity(linear.rows()), base = *this;
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

bool AffineElement::is_identity() const { return linear == identity_matrix(linear.rows()) && translation.isZero(); }

AffineElement CrystGroupData::lift(ElementId g) const {
  return {lattice.matrix(g), evaluate(lattice, vector_system, g)};
}

CrystGroupData assemble(GLattice L, Cocycle1 c) {
  require_module(L);
  if (!is_cocycle(L, c)) throw Error(ErrorKind::InvalidCocycle, "vector system fails the cocycle identity");
  return {std::move(L), std::move(c)};
}

TorsionResult is_torsion_free_direct(const CrystGroupData& gamma) {
  const GLattice& L = gamma.lattice;
  TorsionResult r;
  for (const auto& cls : L.group().classes()) {
    if (!is_prime(cls.element_order)) continue;
    const ElementId g = cls.representative;
    const IntMatrix N = norm_matrix(L, g);
    const RatVector Nt = multiply(N, evaluate(L, gamma.vector_system, g));
    if (auto m = solve_integer(N, RatVector(-Nt))) {
      r.torsion_free = false;
      r.witness = TorsionWitness{g, *m};
      return r;
    }
  }
  return r;
}

FlatManifoldReport report(const CharacterTable& t, const CrystGroupData& gamma) {
  const GLattice& L = gamma.lattice;
  FlatManifoldReport r;
  r.dimension = L.rank();
  const SpecialReport special = is_special(L, gamma.vector_system);
  const TorsionResult direct = is_torsion_free_direct(gamma);
  if (special.special != direct.torsion_free)
    throw Error(ErrorKind::TestDisagreement, std::string("cohomological test says ") +
                                                 (special.special ? "special" : "not special") +
                                                 ", affine test says " +
                                                 (direct.torsion_free ? "torsion-free" : "torsion"));
  r.torsion_free = direct.torsion_free;
  r.restrictions = special.restrictions;
  r.holonomy_faithful = is_faithful(L);
  r.holonomy_order = image_order(L);
  r.first_betti = first_betti(L);
  r.type_verdict = module_type_verdict(t, lattice_character(t, L));
  return r;
}

}  // namespace holoq
