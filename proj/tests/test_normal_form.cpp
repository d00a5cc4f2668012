#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holoq/normal_form.hpp"

#include <random>

using namespace holoq;

namespace {

IntMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  const auto m = static_cast<Eigen::Index>(rows.size());
  const auto n = static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix a(m, n);
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (int x : r) a(i, j++) = x;
    ++i;
  }
  return a;
}

IntMatrix random_matrix(std::mt19937& rng, Eigen::Index m, Eigen::Index n, int spread) {
  std::uniform_int_distribution<int> d(-spread, spread);
  IntMatrix a(m, n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = d(rng);
  return a;
}

bool is_hermite(const HermiteForm& h) {
  const IntMatrix& H = h.H;
  for (Eigen::Index r = 0; r < H.rows(); ++r) {
    const bool zero_row = r >= h.rank;
    for (Eigen::Index c = 0; c < H.cols(); ++c) {
      if (zero_row) {
        if (H(r, c) != 0) return false;
        continue;
      }
      const Eigen::Index p = h.pivots[r];
      if (c < p && H(r, c) != 0) return false;
    }
    if (!zero_row) {
      const Eigen::Index p = h.pivots[r];
      if (H(r, p) <= 0) return false;
      if (r > 0 && h.pivots[r - 1] >= p) return false;
      for (Eigen::Index i = 0; i < r; ++i)
        if (H(i, p) < 0 || H(i, p) >= H(r, p)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("small Smith forms") {
  const IntMatrix I = identity_matrix(3);
  CHECK(snf(I).S == I);
  CHECK(hnf(I).H == I);
  const auto s = snf(from_rows({{2, 0}, {0, 3}}));
  CHECK(s.S == from_rows({{1, 0}, {0, 6}}));
  const IntMatrix Z = IntMatrix::Zero(2, 3);
  CHECK(snf(Z).S == Z);
  CHECK(hnf(Z).H == Z);
  CHECK(snf(Z).rank == 0);
}

TEST_CASE("diag(2,3) against brute force over small unimodular matrices") {
  // every 2x2 integer matrix with entries in [-3,3] and determinant +-1
  const IntMatrix A = from_rows({{2, 0}, {0, 3}});
  std::vector<IntMatrix> unimodular;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int d = -3; d <= 3; ++d)
          if (std::abs(a * d - b * c) == 1) unimodular.push_back(from_rows({{a, b}, {c, d}}));
  bool found = false;
  const IntMatrix target = from_rows({{1, 0}, {0, 6}});
  for (const auto& U : unimodular) {
    for (const auto& V : unimodular)
      if (multiply(multiply(U, A), V) == target) {
        found = true;
        break;
      }
    if (found) break;
  }
  CHECK(found);
}

TEST_CASE("random Hermite and Smith forms satisfy their contracts") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index m = 1 + trial % 6, n = 1 + (trial / 6) % 5;
    IntMatrix A = random_matrix(rng, m, n, 6);
    if (trial % 5 == 0) A.row(0) = IntVector::Zero(n).transpose();
    const HermiteForm h = hnf(A);
    CHECK(h.H == multiply(h.U, A));
    CHECK(is_unimodular(h.U));
    CHECK(is_hermite(h));
    CHECK(hnf_basis(A) == h.H.topRows(h.rank));

    const SmithForm s = snf(A);
    CHECK(s.S == multiply(multiply(s.U, A), s.V));
    CHECK(is_unimodular(s.U));
    CHECK(is_unimodular(s.V));
    CHECK(multiply(s.V, s.V_inverse) == identity_matrix(n));
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (i != j) CHECK(s.S(i, j) == 0);
    for (Eigen::Index i = 0; i + 1 < s.rank; ++i) CHECK(s.S(i + 1, i + 1) % s.S(i, i) == 0);
    CHECK(s.rank == h.rank);
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(from_rows({{2, 1}, {1, 1}})) == 1);
  CHECK(determinant(from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 5}})) == -5);
  CHECK(determinant(from_rows({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("kernel, saturation and solving") {
  const IntMatrix A = from_rows({{1, 1, 1}});
  const IntMatrix K = integer_kernel(A);
  CHECK(K.cols() == 2);
  CHECK(multiply(A, K).isZero());

  // 2*(1,1) spans a non-pure lattice; saturation recovers (1,1)
  const IntMatrix sat = saturate(from_rows({{2}, {2}}));
  CHECK(sat == from_rows({{1}, {1}}));
  const IntMatrix full = saturate(from_rows({{2, 0}, {0, 4}}));
  CHECK(snf(full).divisors() == std::vector<Integer>{1, 1});

  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const IntMatrix B = random_matrix(rng, 5, 2, 4) * Integer(1 + trial % 3);
    const IntMatrix P = saturate(B);
    for (const Integer& d : snf(P).divisors()) CHECK(d == 1);
    CHECK(P.cols() == rank(B));
  }

  const IntMatrix M = from_rows({{2, 0}, {0, 3}});
  IntVector b(2);
  b << 4, 9;
  const auto x = solve_integer(M, b);
  REQUIRE(x);
  CHECK(multiply(M, *x) == b);
  b << 3, 9;
  CHECK_FALSE(solve_integer(M, b));
  RatVector q(2);
  q << Rational(1, 2), Rational(0);
  CHECK_FALSE(solve_integer(M, q));
}

TEST_CASE("torsion invariants of tall matrices") {
  IntMatrix A(4, 2);
  A << 2, 0, 0, 2, 2, 2, 4, 6;
  CHECK(torsion_invariants(A) == std::vector<Integer>{2, 2});
}
