#include "holoq/normal_form.hpp"

#include "holoq/errors.hpp"

#include <utility>

namespace holoq {

namespace {

using Index = Eigen::Index;

// row_i -= q * row_j, skipping zero entries
void row_axpy(IntMatrix& M, Index i, Index j, const Integer& q) {
  if (q == 0) return;
  for (Index c = 0; c < M.cols(); ++c)
    if (M(j, c) != 0) M(i, c) -= q * M(j, c);
}

void col_axpy(IntMatrix& M, Index i, Index j, const Integer& q) {
  if (q == 0) return;
  for (Index r = 0; r < M.rows(); ++r)
    if (M(r, j) != 0) M(r, i) -= q * M(r, j);
}

void negate_row(IntMatrix& M, Index i) {
  for (Index c = 0; c < M.cols(); ++c) M(i, c) = -M(i, c);
}

// Replaces (row_i, row_j) by (s*row_i + t*row_j, -(b/g)*row_i + (a/g)*row_j),
// a unimodular step that clears column c of row j.
void row_gcd_step(IntMatrix& M, Index i, Index j, const Integer& s, const Integer& t, const Integer& ag,
                  const Integer& bg) {
  for (Index c = 0; c < M.cols(); ++c) {
    const Integer x = M(i, c), y = M(j, c);
    if (x == 0 && y == 0) continue;
    M(i, c) = s * x + t * y;
    M(j, c) = ag * y - bg * x;
  }
}

// g = s*a + t*b with g = gcd(a, b) >= 0
Integer ext_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
  Integer old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = tmp;
    tmp = old_t - q * cur_t;
    old_t = cur_t;
    cur_t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

}  // namespace

HermiteForm hnf(const IntMatrix& A) {
  HermiteForm out;
  out.H = A;
  out.U = identity_matrix(A.rows());
  IntMatrix& H = out.H;
  IntMatrix& U = out.U;
  const Index m = H.rows(), n = H.cols();
  Index r = 0;
  for (Index c = 0; c < n && r < m; ++c) {
    // bring gcd of column c (rows r..m-1) to row r
    for (Index i = r + 1; i < m; ++i) {
      if (H(i, c) == 0) continue;
      if (H(r, c) == 0) {
        H.row(r).swap(H.row(i));
        U.row(r).swap(U.row(i));
        continue;
      }
      if (H(i, c) % H(r, c) == 0) {
        const Integer q = H(i, c) / H(r, c);
        row_axpy(H, i, r, q);
        row_axpy(U, i, r, q);
        continue;
      }
      Integer s, t;
      const Integer a = H(r, c), b = H(i, c);
      const Integer g = ext_gcd(a, b, s, t);
      const Integer ag = a / g, bg = b / g;
      row_gcd_step(H, r, i, s, t, ag, bg);
      row_gcd_step(U, r, i, s, t, ag, bg);
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      negate_row(H, r);
      negate_row(U, r);
    }
    for (Index i = 0; i < r; ++i) {
      const Integer q = floor_div(H(i, c), H(r, c));
      row_axpy(H, i, r, q);
      row_axpy(U, i, r, q);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

void HermiteAccumulator::add_row(IntVector v) {
  const Index n = cols_;
  for (Index c = 0; c < n; ++c) {
    if (v(c) == 0) continue;
    auto it = rows_.find(c);
    if (it == rows_.end()) {
      if (v(c) < 0) v = -v;
      rows_.emplace(c, std::move(v));
      return;
    }
    IntVector& p = it->second;
    if (v(c) % p(c) == 0) {
      const Integer q = v(c) / p(c);
      for (Index k = c; k < n; ++k)
        if (p(k) != 0) v(k) -= q * p(k);
      continue;
    }
    Integer s, t;
    const Integer g = ext_gcd(p(c), v(c), s, t);
    const Integer pg = p(c) / g, vg = v(c) / g;
    for (Index k = c; k < n; ++k) {
      const Integer x = p(k), y = v(k);
      if (x == 0 && y == 0) continue;
      p(k) = s * x + t * y;
      v(k) = pg * y - vg * x;
    }
  }
}

IntMatrix HermiteAccumulator::basis() const {
  IntMatrix B(static_cast<Index>(rows_.size()), cols_);
  Index r = 0;
  for (const auto& [c, row] : rows_) B.row(r++) = row.transpose();
  return hnf(B).H;
}

IntMatrix hnf_basis(const IntMatrix& A) {
  HermiteAccumulator acc(A.cols());
  for (Index row = 0; row < A.rows(); ++row) acc.add_row(A.row(row).transpose());
  return acc.basis();
}

std::vector<Integer> SmithForm::divisors() const {
  std::vector<Integer> d;
  for (Index i = 0; i < rank; ++i) d.push_back(S(i, i));
  return d;
}

SmithForm snf(const IntMatrix& A) {
  SmithForm out;
  out.S = A;
  out.U = identity_matrix(A.rows());
  out.V = identity_matrix(A.cols());
  out.V_inverse = identity_matrix(A.cols());
  IntMatrix& S = out.S;
  const Index m = S.rows(), n = S.cols();

  auto col_op = [&](Index j, Index t, const Integer& q) {  // col_j -= q col_t
    col_axpy(S, j, t, q);
    col_axpy(out.V, j, t, q);
    row_axpy(out.V_inverse, t, j, -q);
  };
  auto swap_cols = [&](Index a, Index b) {
    S.col(a).swap(S.col(b));
    out.V.col(a).swap(out.V.col(b));
    out.V_inverse.row(a).swap(out.V_inverse.row(b));
  };
  auto row_op = [&](Index i, Index t, const Integer& q) {
    row_axpy(S, i, t, q);
    row_axpy(out.U, i, t, q);
  };
  auto swap_rows = [&](Index a, Index b) {
    S.row(a).swap(S.row(b));
    out.U.row(a).swap(out.U.row(b));
  };

  Index t = 0;
  for (; t < std::min(m, n); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    Index pi = -1, pj = -1;
    for (Index j = t; j < n; ++j)
      for (Index i = t; i < m; ++i)
        if (S(i, j) != 0 && (pi < 0 || abs(S(i, j)) < abs(S(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    if (pi != t) swap_rows(pi, t);
    if (pj != t) swap_cols(pj, t);
    for (;;) {
      bool clean = true;
      for (Index i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        row_op(i, t, S(i, t) / S(t, t));
        if (S(i, t) != 0) {
          clean = false;
          if (abs(S(i, t)) < abs(S(t, t))) swap_rows(i, t);
        }
      }
      for (Index j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        col_op(j, t, S(t, j) / S(t, t));
        if (S(t, j) != 0) {
          clean = false;
          if (abs(S(t, j)) < abs(S(t, t))) swap_cols(j, t);
        }
      }
      if (!clean) continue;
      // divisibility: fold an offending row into row t and go again
      Index bad = -1;
      for (Index i = t + 1; i < m && bad < 0; ++i)
        for (Index j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_op(t, bad, Integer(-1));
    }
    if (S(t, t) < 0) {
      negate_row(S, t);
      negate_row(out.U, t);
    }
  }
  out.rank = t;
  return out;
}

std::vector<Integer> torsion_invariants(const IntMatrix& A) {
  const IntMatrix B = A.rows() > A.cols() ? hnf_basis(A) : A;
  std::vector<Integer> out;
  for (const Integer& d : snf(B).divisors())
    if (d > 1) out.push_back(d);
  return out;
}

Integer determinant(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw Error(ErrorKind::InvalidInput, "determinant of a non-square matrix");
  const Index n = A.rows();
  if (n == 0) return 1;
  IntMatrix M = A;
  Integer sign = 1, prev = 1;
  for (Index k = 0; k < n - 1; ++k) {
    if (M(k, k) == 0) {
      Index swap = -1;
      for (Index i = k + 1; i < n; ++i)
        if (M(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      M.row(k).swap(M.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& A) {
  if (A.rows() != A.cols()) return false;
  return abs(determinant(A)) == 1;
}

IntMatrix integer_kernel(const IntMatrix& A) {
  const HermiteForm h = hnf(A.transpose());
  const Index k = h.H.rows() - h.rank;
  IntMatrix rows = h.U.bottomRows(k);
  if (k > 0) rows = hnf(rows).H;
  return rows.transpose();
}

IntMatrix saturate(const IntMatrix& A) {
  const Index n = A.rows();
  if (A.cols() == 0) return IntMatrix(n, 0);
  const IntMatrix left = integer_kernel(A.transpose());  // n x (n - r)
  if (left.cols() == 0) return identity_matrix(n);
  return integer_kernel(left.transpose());
}

std::optional<IntVector> solve_integer(const IntMatrix& A, const IntVector& b) {
  const SmithForm s = snf(A);
  const IntVector c = multiply(s.U, b);
  IntVector y = IntVector::Zero(A.cols());
  for (Index i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      if (c(i) % s.S(i, i) != 0) return std::nullopt;
      y(i) = c(i) / s.S(i, i);
    } else if (c(i) != 0) {
      return std::nullopt;
    }
  }
  return multiply(s.V, y);
}

std::optional<IntVector> solve_integer(const IntMatrix& A, const RatVector& b) {
  if (!is_integral(b)) return std::nullopt;
  IntVector bi(b.size());
  for (Index i = 0; i < b.size(); ++i) bi(i) = boost::multiprecision::numerator(b(i));
  return solve_integer(A, bi);
}

Eigen::Index rank(const RatMatrix& A) {
  RatMatrix M = A;
  Index r = 0;
  for (Index c = 0; c < M.cols() && r < M.rows(); ++c) {
    Index p = -1;
    for (Index i = r; i < M.rows(); ++i)
      if (M(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    M.row(r).swap(M.row(p));
    for (Index i = r + 1; i < M.rows(); ++i) {
      if (M(i, c) == 0) continue;
      const Rational q = M(i, c) / M(r, c);
      for (Index j = c; j < M.cols(); ++j)
        if (M(r, j) != 0) M(i, j) -= q * M(r, j);
    }
    ++r;
  }
  return r;
}

Eigen::Index rank(const IntMatrix& A) { return A.rows() > A.cols() ? hnf_basis(A).rows() : hnf(A).rank; }

RatVector solve_rational(const RatMatrix& A, const RatVector& b) {
  const Index n = A.rows();
  if (A.cols() != n || b.size() != n) throw Error(ErrorKind::InvalidInput, "solve_rational needs a square system");
  RatMatrix M(n, n + 1);
  M.leftCols(n) = A;
  M.col(n) = b;
  for (Index c = 0; c < n; ++c) {
    Index p = -1;
    for (Index i = c; i < n; ++i)
      if (M(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) throw Error(ErrorKind::InvalidInput, "singular system");
    M.row(c).swap(M.row(p));
    for (Index i = 0; i < n; ++i) {
      if (i == c || M(i, c) == 0) continue;
      const Rational q = M(i, c) / M(c, c);
      for (Index j = c; j <= n; ++j)
        if (M(c, j) != 0) M(i, j) -= q * M(c, j);
    }
  }
  RatVector x(n);
  for (Index i = 0; i < n; ++i) x(i) = M(i, n) / M(i, i);
  return x;
}

}  // namespace holoq
