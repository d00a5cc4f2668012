#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holoq/errors.hpp"
#include "holoq/words.hpp"
#include "support.hpp"

using namespace holoq;
using holoq::test::fixture;

TEST_CASE("permutation module character is the induced character") {
  auto g = fixture("s3");
  const CharacterTable t(g);
  const std::vector<ElementId> trivial{PermGroup::identity()};
  const GLattice reg = permutation_module(g, trivial);
  CHECK(reg.rank() == 6);
  CHECK(reg.is_module());
  CHECK(is_faithful(reg));
  const auto mult = decompose(t, lattice_character(t, reg));
  for (std::size_t i = 0; i < mult.size(); ++i) CHECK(mult[i] == t.irreducible(i).degree());
  CHECK(first_betti(reg) == 1);
}

TEST_CASE("trivial lattice and Betti number") {
  auto g = fixture("c4");
  const GLattice L = trivial_lattice(g, 3);
  CHECK(first_betti(L) == 3);
  CHECK_FALSE(is_faithful(L));
  CHECK(image_order(L) == 1);
}

TEST_CASE("non-module actions are flagged") {
  auto g = fixture("c2");
  // a acts with order 3 but a^2 = 1
  IntMatrix m(2, 2);
  m << 0, -1, 1, -1;
  const GLattice L(g, {m});
  CHECK_FALSE(L.is_module());
  CHECK_THROWS_AS(require_module(L), Error);
  IntMatrix singular(1, 1);
  singular << 2;
  CHECK_THROWS_AS(GLattice(g, {singular}), Error);
}

TEST_CASE("isotypic projection of the regular S3 lattice") {
  auto g = fixture("s3");
  const CharacterTable t(g);
  const std::vector<ElementId> trivial{PermGroup::identity()};
  const GLattice reg = permutation_module(g, trivial);
  const Character& two = t.irreducibles().back();
  REQUIRE(two.degree() == 2);
  const auto proj = isotypic_projection(t, reg, two, Integer(1));
  CHECK(proj.rank == 4);
  // B is idempotent up to the scale
  CHECK(proj.B * proj.B == proj.B);
  const GLattice sub = induced_sublattice(reg, proj.basis);
  CHECK(sub.is_module());
  CHECK(lattice_character(t, sub) == Integer(2) * two);
  CHECK(change_basis_check(reg, proj.basis, sub.generator_matrices()));
}

TEST_CASE("printed basis of the order-64 example") {
  auto g = load_group(test::data_dir() / "paper-thm1/group.json");
  const CharacterTable t(g);
  std::vector<Point> pts(32);
  for (Point i = 0; i < 32; ++i) pts[i] = i;
  const GLattice P = permutation_lattice(g, pts);
  const ElementId a2 = evaluate(*g, parse_word("a^2", *g));
  const ElementId b2 = evaluate(*g, parse_word("b^2", *g));
  const Character* chi1 = nullptr;
  for (const auto& chi : t.irreducibles())
    if (fs_indicator(t, chi) == -1 && chi.values[g->class_of(a2)] == Cyclotomic(4) &&
        chi.values[g->class_of(b2)] == Cyclotomic(-4))
      chi1 = &chi;
  REQUIRE(chi1 != nullptr);
  const auto proj = isotypic_projection(t, P, *chi1, Integer(2));
  CHECK(proj.rank == 16);
  // the scaled projector satisfies B^2 = scale^2 B
  CHECK(proj.B * proj.B == Rational(4) * proj.B);
  const GLattice M = load_lattice(test::data_dir() / "paper-thm1/module.json", g);
  const GLattice sub = induced_sublattice(P, proj.basis);
  CHECK(lattice_character(t, sub) == lattice_character(t, M));
  CHECK(lattice_character(t, M) == Integer(4) * *chi1);
  // scale 1 gives the same sublattice
  CHECK(same_lattice(isotypic_projection(t, P, *chi1, Integer(1)).basis, proj.basis));

  // e1-e2 alone spans no G-stable sublattice
  IntMatrix one = IntMatrix::Zero(32, 1);
  one(0, 0) = 1;
  one(1, 0) = -1;
  CHECK_THROWS_AS(induced_sublattice(P, one), Error);
  CHECK_THROWS_AS(change_basis_check(P, one, M.generator_matrices()), Error);
}

TEST_CASE("projection onto a non-rational character is rejected") {
  auto g = fixture("c3");
  const CharacterTable t(g);
  const std::vector<ElementId> trivial{PermGroup::identity()};
  const GLattice reg = permutation_module(g, trivial);
  try {
    (void)isotypic_projection(t, reg, t.irreducibles().back(), Integer(1));
    FAIL("expected NonRationalCharacter");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonRationalCharacter);
  }
}

TEST_CASE("same lattice ignores the choice of basis") {
  IntMatrix a(3, 2), b(3, 2), c(3, 2);
  a << 1, 0, 0, 1, 0, 0;
  b << 1, 1, 1, 2, 0, 0;
  c << 2, 0, 0, 1, 0, 0;
  CHECK(same_lattice(a, b));
  CHECK_FALSE(same_lattice(a, c));
}

TEST_CASE("twists and direct sums") {
  auto g = fixture("v4");
  const CharacterTable t(g);
  const auto signs = test::sign_homomorphism(t);
  REQUIRE(signs);
  const GLattice L = test::sign_lattice(g, *signs);
  const auto autos = find_automorphisms(*g, {});
  CHECK(autos.size() == 6);
  for (const auto& f : autos) {
    const GLattice Lf = twist(L, f);
    CHECK(Lf.is_module());
    CHECK(lattice_character(t, Lf) == compose(t, lattice_character(t, L), f));
    for (ElementId x = 0; x < g->order(); ++x) CHECK(Lf.matrix(x) == L.matrix(f(x)));
  }
  std::vector<GLattice> parts;
  for (const auto& f : autos) parts.push_back(twist(L, f));
  const GLattice S = direct_sum(parts);
  CHECK(S.rank() == 6);
  CHECK(is_faithful(S));
  CHECK(image_order(S) == 4);
  CHECK(lattice_character(t, S) == lattice_character(t, parts[0]) + lattice_character(t, parts[1]) +
                                       lattice_character(t, parts[2]) + lattice_character(t, parts[3]) +
                                       lattice_character(t, parts[4]) + lattice_character(t, parts[5]));
  const std::vector<GLattice> mixed{L, trivial_lattice(fixture("v4"))};
  CHECK_THROWS_AS(direct_sum(mixed), Error);
}

TEST_CASE("fixed sublattice and norm matrix") {
  auto g = fixture("c2");
  IntMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  const GLattice L(g, {swap});
  const IntMatrix fixed = fixed_sublattice(L);
  REQUIRE(fixed.cols() == 1);
  CHECK(abs(fixed(0, 0)) == 1);
  CHECK(fixed(0, 0) == fixed(1, 0));
  IntMatrix n(2, 2);
  n << 1, 1, 1, 1;
  CHECK(norm_matrix(L, g->generator(0)) == n);
}
