#include "holoq/cohomology.hpp"

#include "holoq/errors.hpp"
#include "holoq/normal_form.hpp"

namespace holoq {

namespace {

using Index = Eigen::Index;

void require_shape(const GLattice& L, const Cocycle1& c) {
  if (c.generator_values.size() != L.group().num_generators())
    throw Error(ErrorKind::InvalidCocycle, "cocycle has " + std::to_string(c.generator_values.size()) +
                                               " generator values, group has " +
                                               std::to_string(L.group().num_generators()));
  for (const auto& v : c.generator_values)
    if (v.size() != L.rank()) throw Error(ErrorKind::InvalidCocycle, "cocycle value has the wrong dimension");
}

// f on every element without reduction
std::vector<RatVector> expand(const GLattice& L, const Cocycle1& c) {
  const PermGroup& g = L.group();
  std::vector<RatVector> f(g.order());
  f[PermGroup::identity()] = RatVector::Zero(L.rank());
  for (ElementId x = 1; x < g.order(); ++x) {
    const ElementId p = g.parent(x);
    const auto s = static_cast<std::size_t>(g.parent_generator(x));
    f[x] = f[p] + multiply(L.matrix(p), c.generator_values[s]);
  }
  return f;
}

Cocycle1 from_stacked(const RatVector& x, Index n, std::size_t k) {
  Cocycle1 c;
  for (std::size_t s = 0; s < k; ++s) c.generator_values.push_back(reduce_mod_one(x.segment(static_cast<Index>(s) * n, n)));
  return c;
}

RatVector stacked(const Cocycle1& c, Index n) {
  RatVector x(n * static_cast<Index>(c.generator_values.size()));
  for (std::size_t s = 0; s < c.generator_values.size(); ++s) x.segment(static_cast<Index>(s) * n, n) = c.generator_values[s];
  return x;
}

}  // namespace

Cocycle1 zero_cocycle(const GLattice& L) {
  return Cocycle1{std::vector<RatVector>(L.group().num_generators(), RatVector::Zero(L.rank()))};
}

std::vector<RatVector> evaluate_all(const GLattice& L, const Cocycle1& c) {
  require_module(L);
  require_shape(L, c);
  auto f = expand(L, c);
  for (auto& v : f) v = reduce_mod_one(v);
  return f;
}

RatVector evaluate(const GLattice& L, const Cocycle1& c, ElementId g) {
  require_module(L);
  require_shape(L, c);
  const PermGroup& G = L.group();
  RatVector f = RatVector::Zero(L.rank());
  ElementId x = PermGroup::identity();
  for (std::size_t s : G.word(g)) {
    f += multiply(L.matrix(x), c.generator_values[s]);
    x = G.mul_generator(x, s);
  }
  return reduce_mod_one(f);
}

RatVector evaluate_word(const GLattice& L, const Cocycle1& c, const Word& w) {
  require_module(L);
  require_shape(L, c);
  const PermGroup& G = L.group();
  RatVector f = RatVector::Zero(L.rank());
  ElementId x = PermGroup::identity();
  for (const Letter& l : w) {
    const ElementId s = G.generator(l.generator);
    if (!l.inverse) {
      f += multiply(L.matrix(x), c.generator_values[l.generator]);
      x = G.mul(x, s);
    } else {
      const ElementId si = G.inverse(s);
      f -= multiply(L.matrix(G.mul(x, si)), c.generator_values[l.generator]);
      x = G.mul(x, si);
    }
  }
  return reduce_mod_one(f);
}

bool is_cocycle(const GLattice& L, const Cocycle1& c) {
  require_module(L);
  require_shape(L, c);
  const PermGroup& g = L.group();
  const auto f = expand(L, c);
  for (ElementId x = 0; x < g.order(); ++x)
    for (std::size_t s = 0; s < g.num_generators(); ++s) {
      const RatVector d = f[x] + multiply(L.matrix(x), c.generator_values[s]) - f[g.mul_generator(x, s)];
      if (!is_integral(d)) return false;
    }
  return true;
}

Integer CohomologyGroup::order() const {
  Integer o = 1;
  for (const auto& d : invariants) o *= d;
  return o;
}

CohomologyGroup h2(const GLattice& L) {
  require_module(L);
  const PermGroup& g = L.group();
  const Index n = L.rank();
  const std::size_t k = g.num_generators();
  const Index unknowns = n * static_cast<Index>(k);

  // T_x: f(x) = T_x · (f(s_1); ...; f(s_k)) exactly, along the tree
  std::vector<IntMatrix> T(g.order());
  T[PermGroup::identity()] = IntMatrix::Zero(n, unknowns);
  for (ElementId x = 1; x < g.order(); ++x) {
    const ElementId p = g.parent(x);
    const auto s = static_cast<Index>(g.parent_generator(x));
    T[x] = T[p];
    T[x].block(0, s * n, n, n) += L.matrix(p);
  }
  // each non-tree edge x -> xs gives T_x + ρ(x)E_s - T_{xs} ∈ Z^{n x unknowns}
  HermiteAccumulator acc(unknowns);
  for (ElementId x = 0; x < g.order(); ++x)
    for (std::size_t s = 0; s < k; ++s) {
      const ElementId y = g.mul_generator(x, s);
      if (y != PermGroup::identity() && g.parent(y) == x && static_cast<std::size_t>(g.parent_generator(y)) == s)
        continue;
      IntMatrix R = T[x] - T[y];
      R.block(0, static_cast<Index>(s) * n, n, n) += L.matrix(x);
      for (Index i = 0; i < n; ++i)
        if (!R.row(i).isZero()) acc.add_row(R.row(i).transpose());
    }
  const IntMatrix H = acc.basis();
  const SmithForm sf = snf(H);

  CohomologyGroup out;
  out.V_inverse = sf.V_inverse;
  out.divisors = sf.divisors();
  for (Index i = 0; i < sf.rank; ++i) {
    const Integer& d = sf.S(i, i);
    if (d == 1) continue;
    out.invariants.push_back(d);
    RatVector x(unknowns);
    for (Index j = 0; j < unknowns; ++j) x(j) = Rational(sf.V(j, i), d);
    out.generators.push_back(from_stacked(x, n, k));
  }
  return out;
}

std::vector<Integer> class_coordinates(const CohomologyGroup& h, const GLattice& L, const Cocycle1& c) {
  require_shape(L, c);
  if (!is_cocycle(L, c)) throw Error(ErrorKind::InvalidCocycle, "values do not satisfy the cocycle identity");
  const RatVector y = h.V_inverse.cast<Rational>() * stacked(c, L.rank());
  std::vector<Integer> out;
  for (std::size_t i = 0; i < h.divisors.size(); ++i) {
    const Integer& d = h.divisors[i];
    if (d == 1) continue;
    const Rational scaled = y(static_cast<Index>(i)) * Rational(d);
    if (!is_integer(scaled)) throw Error(ErrorKind::InvalidCocycle, "cocycle coordinate outside (1/d)Z");
    out.push_back(floor_mod(boost::multiprecision::numerator(scaled), d));
  }
  return out;
}

bool is_coboundary(const GLattice& L, const Cocycle1& c) {
  const CohomologyGroup h = h2(L);
  for (const auto& x : class_coordinates(h, L, c))
    if (x != 0) return false;
  return true;
}

bool cohomologous(const GLattice& L, const Cocycle1& a, const Cocycle1& b) { return is_coboundary(L, a - b); }

Cocycle1 operator+(const Cocycle1& a, const Cocycle1& b) {
  if (a.generator_values.size() != b.generator_values.size())
    throw Error(ErrorKind::InvalidCocycle, "adding cocycles of different shapes");
  Cocycle1 out;
  for (std::size_t s = 0; s < a.generator_values.size(); ++s)
    out.generator_values.push_back(reduce_mod_one(a.generator_values[s] + b.generator_values[s]));
  return out;
}

Cocycle1 operator*(const Integer& k, const Cocycle1& c) {
  Cocycle1 out;
  for (const auto& v : c.generator_values) out.generator_values.push_back(reduce_mod_one(v * Rational(k)));
  return out;
}

Cocycle1 operator-(const Cocycle1& a, const Cocycle1& b) { return a + Integer(-1) * b; }

bool restriction_nonzero(const GLattice& L, const Cocycle1& c, ElementId z) {
  const std::uint32_t p = L.group().element_order(z);
  if (!is_prime(p)) throw Error(ErrorKind::NotPrimeOrder, "element " + L.group().word_name(z) + " has order " + std::to_string(p));
  const RatVector t = evaluate(L, c, z);
  const Index n = L.rank();
  // rows of P span the left kernel of ρ(z) - I, so (ρ(z) - I)Q^n = ker P
  const IntMatrix P = integer_kernel((L.matrix(z) - identity_matrix(n)).transpose()).transpose();
  if (P.rows() == 0) return false;
  const RatVector Pt = multiply(P, t);
  return !solve_integer(P, RatVector(-Pt)).has_value();
}

Cocycle1 pullback(const GLattice& L, const Cocycle1& c, const Automorphism& f) {
  Cocycle1 out;
  for (std::size_t s = 0; s < L.group().num_generators(); ++s)
    out.generator_values.push_back(evaluate(L, c, f(L.group().generator(s))));
  const GLattice twisted = twist(L, f);
  if (!is_cocycle(twisted, out)) throw Error(ErrorKind::InvalidCocycle, "pullback fails the cocycle identity");
  return out;
}

Cocycle1 direct_sum(std::span<const Cocycle1> parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidInput, "direct sum of no cocycles");
  Cocycle1 out;
  const std::size_t k = parts.front().generator_values.size();
  for (std::size_t s = 0; s < k; ++s) {
    Index n = 0;
    for (const auto& c : parts) n += c.generator_values.at(s).size();
    RatVector v(n);
    Index at = 0;
    for (const auto& c : parts) {
      const auto& w = c.generator_values[s];
      v.segment(at, w.size()) = w;
      at += w.size();
    }
    out.generator_values.push_back(std::move(v));
  }
  return out;
}

SpecialReport is_special(const GLattice& L, const Cocycle1& c) {
  if (!is_cocycle(L, c)) throw Error(ErrorKind::InvalidCocycle, "values do not satisfy the cocycle identity");
  SpecialReport r;
  r.special = true;
  for (const auto& cls : L.group().classes()) {
    if (!is_prime(cls.element_order)) continue;
    const bool nz = restriction_nonzero(L, c, cls.representative);
    r.restrictions.push_back({cls.representative, cls.element_order, nz});
    r.special = r.special && nz;
  }
  return r;
}

CohomologyGroup bar_h2_oracle(const GLattice& L) {
  require_module(L);
  const PermGroup& g = L.group();
  if (g.order() > 16) throw Error(ErrorKind::GroupTooLarge, "bar resolution limited to groups of order <= 16");
  const Index n = L.rank();
  const auto N = static_cast<Index>(g.order());
  // (δf)(x, y) = x·f(y) - f(xy) + f(x); rows indexed by (x, y, i), columns by (z, j)
  IntMatrix D = IntMatrix::Zero(N * N * n, N * n);
  for (ElementId x = 0; x < g.order(); ++x)
    for (ElementId y = 0; y < g.order(); ++y) {
      const Index row = (static_cast<Index>(x) * N + y) * n;
      D.block(row, static_cast<Index>(y) * n, n, n) += L.matrix(x);
      D.block(row, static_cast<Index>(g.mul(x, y)) * n, n, n) -= identity_matrix(n);
      D.block(row, static_cast<Index>(x) * n, n, n) += identity_matrix(n);
    }
  CohomologyGroup out;
  out.invariants = torsion_invariants(D);
  return out;
}

}  // namespace holoq
