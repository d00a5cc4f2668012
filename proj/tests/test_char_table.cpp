#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holoq/character_table.hpp"
#include "holoq/errors.hpp"
#include "holoq/io.hpp"

#include <map>
#include <string>

using namespace holoq;

namespace {

GroupPtr fixture(const std::string& name) { return load_group(std::string(HOLOQ_DATA_DIR) + "/fixtures/" + name + ".json"); }

const std::vector<std::string> kFixtures{"c1", "c2", "c3", "c4", "c6", "c8", "v4", "c2c2c2", "c4c4", "s3", "s4",
                                         "a4", "d8", "q8", "sl23", "es32minus", "es32plus", "rho1", "g64"};

Cyclotomic value_at(const CharacterTable& t, const Character& chi, ElementId x) {
  return chi.values[t.group().class_of(x)];
}

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  const auto z3 = Cyclotomic::root_of_unity(3, 1);
  CHECK(z3 * z3 * z3 == Cyclotomic(1));
  CHECK(Cyclotomic(1) + z3 + z3 * z3 == Cyclotomic(0));
  CHECK(z3.conj() == z3 * z3);
  const auto i = Cyclotomic::root_of_unity(4, 1);
  CHECK(i * i == Cyclotomic(-1));
  CHECK((i + i.conj()).is_rational());
  CHECK_FALSE(i.is_rational());
  // mixed conductors: ζ_4 ζ_3 = ζ_12^7
  CHECK(i * z3 == Cyclotomic::root_of_unity(12, 7));
  const auto x = Cyclotomic::root_of_unity(12, 5) + Cyclotomic(Rational(1, 3));
  CHECK(x.conj().conj() == x);
  CHECK(Cyclotomic::from_exponents(12, x.lift(12).coefficients()) == x);
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("cyclic group of order 2") {
  const auto t = character_table(fixture("c2"));
  REQUIRE(t.irreducibles().size() == 2);
  CHECK(t.irreducible(0).values == std::vector<Cyclotomic>{1, 1});
  CHECK(t.irreducible(1).values == std::vector<Cyclotomic>{1, -1});
}

TEST_CASE("S3 degrees agree with the regular character decomposition") {
  const auto g = fixture("s3");
  const auto t = character_table(g);
  std::vector<Integer> reg(t.num_classes(), 0);
  reg[0] = static_cast<long long>(g->order());
  const auto m = decompose(t, integer_character(reg));
  std::vector<Integer> degrees;
  for (const auto& chi : t.irreducibles()) degrees.push_back(chi.degree());
  CHECK(degrees == std::vector<Integer>{1, 1, 2});
  CHECK(m == degrees);
  CHECK_FALSE(is_skew(t));
  CHECK(fs_indicator(t, t.irreducible(2)) == 1);
}

TEST_CASE("property suite over all fixtures") {
  for (const auto& name : kFixtures) {
    CAPTURE(name);
    const auto g = fixture(name);
    const auto t = character_table(g);
    CHECK(t.irreducibles().size() == t.num_classes());
    Integer sum_sq = 0;
    for (const auto& chi : t.irreducibles()) {
      sum_sq += chi.degree() * chi.degree();
      const int nu = fs_indicator(t, chi);
      CHECK((nu == -1 || nu == 0 || nu == 1));
      if (nu == -1) CHECK(chi.degree() % 2 == 0);
    }
    CHECK(sum_sq == static_cast<long long>(g->order()));
    for (std::size_t i = 0; i < t.num_classes(); ++i)
      for (std::size_t j = 0; j < t.num_classes(); ++j)
        CHECK(inner_product(t, t.irreducible(i), t.irreducible(j)) == (i == j ? 1 : 0));
    for (std::size_t k = 0; k < t.num_classes(); ++k)
      for (std::size_t l = 0; l < t.num_classes(); ++l) {
        Cyclotomic s;
        for (const auto& chi : t.irreducibles()) s += chi.values[k] * chi.values[l].conj();
        CHECK(s == Cyclotomic(k == l ? static_cast<int>(g->order() / t.class_size(k)) : 0));
      }
    CHECK(fs_count_formula(t) == static_cast<long long>(involution_count(*g)));
    if (is_skew(t) && !is_abelian(*g)) CHECK(prime_divisors(g->order()).size() == 1);
    CHECK(t.irreducible(0) == integer_character(std::vector<Integer>(t.num_classes(), 1)));
  }
}

TEST_CASE("quaternion group indicator by direct summation") {
  const auto g = fixture("q8");
  const auto t = character_table(g);
  const Character& chi = t.irreducibles().back();
  REQUIRE(chi.degree() == 2);
  Cyclotomic s;
  for (ElementId x = 0; x < g->order(); ++x) s += value_at(t, chi, g->mul(x, x));
  CHECK(s / Rational(8) == Cyclotomic(-1));
  CHECK(fs_indicator(t, chi) == -1);
  CHECK(classify_type(t, chi) == IrrType::H);
  CHECK(involution_count(*g) == 2);
  CHECK(fs_count_formula(t) == 2);
  CHECK(involution_count(*fixture("v4")) == 4);
}

TEST_CASE("faithful linear character of C3 is of complex type") {
  const auto g = fixture("c3");
  const auto t = character_table(g);
  const Character& chi = t.irreducible(1);
  Cyclotomic s;
  for (ElementId x = 0; x < 3; ++x) s += value_at(t, chi, g->mul(x, x));
  CHECK(s == Cyclotomic(0));
  CHECK(classify_type(t, chi) == IrrType::C);
  CHECK(classify_type(t, t.irreducible(0)) == IrrType::R);
  CHECK_THROWS_AS(classify_type(t, t.irreducible(0) + t.irreducible(1)), Error);
}

TEST_CASE("order-64 group: three quaternionic characters vanishing off the center") {
  const auto g = fixture("g64");
  const auto t = character_table(g);
  CHECK(t.num_classes() == 19);
  std::size_t linear = 0;
  std::vector<const Character*> h;
  for (const auto& chi : t.irreducibles()) {
    if (chi.degree() == 1) ++linear;
    if (fs_indicator(t, chi) == -1) h.push_back(&chi);
  }
  CHECK(linear == 16);
  REQUIRE(h.size() == 3);
  const auto z = center(*g);
  for (const Character* chi : h) {
    CHECK(chi->degree() == 4);
    for (ElementId x = 0; x < g->order(); ++x)
      if (!std::binary_search(z.begin(), z.end(), x)) CHECK(value_at(t, *chi, x) == Cyclotomic(0));
  }
  // central sign patterns at a^2, b^2, a^2b^2
  std::map<std::string, ElementId> by_name;
  for (ElementId x : z) by_name[g->word_name(x)] = x;
  std::multiset<std::vector<int>> patterns;
  for (const Character* chi : h) {
    std::vector<int> p;
    for (const auto& w : {"a^2", "b^2", "a^2b^2"})
      p.push_back(static_cast<int>(value_at(t, *chi, by_name.at(w)).rational().convert_to<double>()));
    patterns.insert(p);
  }
  CHECK(patterns == std::multiset<std::vector<int>>{{4, -4, -4}, {-4, 4, -4}, {-4, -4, 4}});
  CHECK(is_skew(t));
  for (const auto& chi : t.irreducibles()) CHECK(principal_block_membership(t, chi, 2));
}

TEST_CASE("principal blocks") {
  const auto s3 = character_table(fixture("s3"));
  CHECK(principal_block_membership(s3, s3.irreducible(0), 3));
  CHECK(principal_block_membership(s3, s3.irreducible(1), 3));
  CHECK(principal_block_membership(s3, s3.irreducible(0), 2));
  CHECK_THROWS_AS(principal_block_membership(s3, s3.irreducible(0), 5), Error);
  // the degree-2 character of S3 has defect zero at p = 2 ... but not at 3
  CHECK_FALSE(principal_block_membership(s3, s3.irreducible(2), 2));
  CHECK(principal_block_membership(s3, s3.irreducible(2), 3));
  // SL(2,3) at p = 3: the faithful degree-2 characters lie outside the principal block
  const auto sl = character_table(fixture("sl23"));
  std::size_t in_principal = 0;
  for (const auto& chi : sl.irreducibles())
    if (principal_block_membership(sl, chi, 3)) ++in_principal;
  CHECK(in_principal == 3);
}

TEST_CASE("module type verdicts") {
  const auto t = character_table(fixture("q8"));
  CHECK(module_type_verdict(t, Integer(2) * t.irreducibles().back()) == ModuleType::HT);
  CHECK(module_type_verdict(t, t.irreducible(0) + t.irreducible(1)) == ModuleType::RT);
  CHECK(module_type_verdict(t, t.irreducible(0) + t.irreducibles().back()) == ModuleType::Mixed);
  Character bad = t.irreducible(1);
  bad.values[0] = Cyclotomic(-1);
  CHECK_THROWS_AS(decompose(t, bad), Error);
  Character short_char;
  short_char.values = {1, 1};
  CHECK_THROWS_AS(inner_product(t, short_char, t.irreducible(0)), Error);
}
