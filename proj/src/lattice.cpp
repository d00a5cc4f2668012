#include "holoq/lattice.hpp"

#include "holoq/errors.hpp"
#include "holoq/normal_form.hpp"

#include <algorithm>
#include <set>

namespace holoq {

namespace {

IntMatrix sum_block(std::span<const IntMatrix> blocks) {
  Eigen::Index n = 0;
  for (const auto& b : blocks) n += b.rows();
  IntMatrix out = IntMatrix::Zero(n, n);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.block(at, at, b.rows(), b.cols()) = b;
    at += b.rows();
  }
  return out;
}

}  // namespace

GLattice::GLattice(GroupPtr group, std::vector<IntMatrix> generator_action)
    : group_(std::move(group)), generators_(std::move(generator_action)) {
  const PermGroup& g = *group_;
  if (generators_.size() != g.num_generators())
    throw Error(ErrorKind::InvalidInput, "lattice has " + std::to_string(generators_.size()) +
                                             " generator matrices, group has " + std::to_string(g.num_generators()));
  rank_ = generators_.empty() ? 0 : generators_.front().rows();
  for (std::size_t s = 0; s < generators_.size(); ++s) {
    const IntMatrix& m = generators_[s];
    if (m.rows() != rank_ || m.cols() != rank_)
      throw Error(ErrorKind::InvalidInput, "action matrix of '" + g.generator_name(s) + "' is not " +
                                               std::to_string(rank_) + "x" + std::to_string(rank_));
    if (!is_unimodular(m))
      throw Error(ErrorKind::NotAModule, "action matrix of '" + g.generator_name(s) + "' is not invertible over Z");
  }
  elements_.resize(g.order());
  elements_[PermGroup::identity()] = identity_matrix(rank_);
  for (ElementId x = 1; x < g.order(); ++x)
    elements_[x] = multiply(elements_[g.parent(x)], generators_[static_cast<std::size_t>(g.parent_generator(x))]);
  module_ = true;
  for (ElementId x = 0; x < g.order() && module_; ++x)
    for (std::size_t s = 0; s < generators_.size() && module_; ++s)
      module_ = multiply(elements_[x], generators_[s]) == elements_[g.mul_generator(x, s)];
}

void require_module(const GLattice& L) {
  if (!L.is_module()) throw Error(ErrorKind::NotAModule, "generator matrices do not define a G-module");
}

GLattice trivial_lattice(GroupPtr group, Eigen::Index rank) {
  const std::size_t k = group->num_generators();
  return GLattice(std::move(group), std::vector<IntMatrix>(k, identity_matrix(rank)));
}

GLattice permutation_module(GroupPtr group, std::span<const ElementId> subgroup) {
  const PermGroup& g = *group;
  std::vector<ElementId> h(subgroup.begin(), subgroup.end());
  std::sort(h.begin(), h.end());
  if (h.empty() || h.front() != PermGroup::identity() || g.order() % h.size() != 0)
    throw Error(ErrorKind::InvalidInput, "not a subgroup");
  // coset xH labelled by its smallest element
  std::vector<ElementId> label(g.order(), static_cast<ElementId>(-1));
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (label[x] != static_cast<ElementId>(-1)) continue;
    const auto idx = static_cast<ElementId>(reps.size());
    reps.push_back(x);
    for (ElementId y : h) {
      const ElementId xy = g.mul(x, y);
      if (label[xy] != static_cast<ElementId>(-1)) throw Error(ErrorKind::InvalidInput, "not a subgroup");
      label[xy] = idx;
    }
  }
  const auto n = static_cast<Eigen::Index>(reps.size());
  std::vector<IntMatrix> action;
  for (std::size_t s = 0; s < g.num_generators(); ++s) {
    IntMatrix m = IntMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(label[g.mul(g.generator(s), reps[i])], i) = 1;
    action.push_back(std::move(m));
  }
  return GLattice(std::move(group), std::move(action));
}

GLattice permutation_lattice(GroupPtr group, std::span<const Point> points) {
  const PermGroup& g = *group;
  std::vector<Eigen::Index> pos(g.degree(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) pos[points[i]] = static_cast<Eigen::Index>(i);
  const auto n = static_cast<Eigen::Index>(points.size());
  std::vector<IntMatrix> action;
  for (std::size_t s = 0; s < g.num_generators(); ++s) {
    const Permutation& p = g.element(g.generator(s));
    IntMatrix m = IntMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const Eigen::Index j = pos[p(points[i])];
      if (j < 0) throw Error(ErrorKind::InvalidInput, "point set is not invariant under the group");
      m(j, i) = 1;
    }
    action.push_back(std::move(m));
  }
  return GLattice(std::move(group), std::move(action));
}

IsotypicProjection isotypic_projection(const CharacterTable& t, const GLattice& L, const Character& chi,
                                       const Integer& scale) {
  require_module(L);
  const PermGroup& g = L.group();
  std::vector<Rational> values;
  for (const auto& v : chi.values) {
    const Cyclotomic sv = Cyclotomic(Rational(scale)) * v;
    if (!sv.is_rational()) throw Error(ErrorKind::NonRationalCharacter, "scaled character value " + sv.str() + " is not rational");
    values.push_back(sv.rational());
  }
  const Eigen::Index n = L.rank();
  // Σ over classes of the scaled (real) character times the class sum
  RatMatrix sum = RatMatrix::Zero(n, n);
  for (std::size_t k = 0; k < t.num_classes(); ++k) {
    if (values[k] == 0) continue;
    IntMatrix class_sum = IntMatrix::Zero(n, n);
    for (ElementId x : t.conj_class(k).members) class_sum += L.matrix(x);
    sum += cast_matrix<Rational>(class_sum) * values[k];
  }
  IsotypicProjection out;
  const Rational factor = Rational(scale * chi.degree()) / Rational(static_cast<long long>(g.order()));
  out.B = sum * factor;
  const Integer den = common_denominator(out.B);
  IntMatrix scaled(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) scaled(i, j) = boost::multiprecision::numerator(out.B(i, j) * Rational(den));
  out.basis = rank(scaled) == 0 ? IntMatrix(n, 0) : saturate(scaled);
  out.rank = out.basis.cols();
  if (out.rank > 0) induced_sublattice(L, out.basis);  // integrality guard
  return out;
}

GLattice induced_sublattice(const GLattice& L, const IntMatrix& basis) {
  const Eigen::Index k = basis.cols();
  if (basis.rows() != L.rank()) throw Error(ErrorKind::RankMismatch, "basis vectors have the wrong length");
  if (k == 0) return GLattice(L.group_ptr(), std::vector<IntMatrix>(L.group().num_generators(), IntMatrix(0, 0)));
  if (rank(basis) != k) throw Error(ErrorKind::RankMismatch, "basis vectors are linearly dependent");
  const RatMatrix Bq = cast_matrix<Rational>(basis);
  const RatMatrix gram = Bq.transpose() * Bq;
  std::vector<IntMatrix> action;
  for (std::size_t s = 0; s < L.group().num_generators(); ++s) {
    const IntMatrix image = multiply(L.generator_matrix(s), basis);
    const RatMatrix rhs = Bq.transpose() * cast_matrix<Rational>(image);
    RatMatrix X(k, k);
    for (Eigen::Index j = 0; j < k; ++j) X.col(j) = solve_rational(gram, rhs.col(j));
    if (Bq * X != cast_matrix<Rational>(image))
      throw Error(ErrorKind::NotStable, "sublattice is not stable under '" + L.group().generator_name(s) + "'");
    if (!is_integral(X))
      throw Error(ErrorKind::NonIntegralInducedAction,
                  "induced action of '" + L.group().generator_name(s) + "' is not integral");
    IntMatrix Xi(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j) Xi(i, j) = boost::multiprecision::numerator(X(i, j));
    action.push_back(std::move(Xi));
  }
  return GLattice(L.group_ptr(), std::move(action));
}

bool change_basis_check(const GLattice& L, const IntMatrix& basis, const std::vector<IntMatrix>& claimed_action) {
  if (claimed_action.size() != L.group().num_generators())
    throw Error(ErrorKind::RankMismatch, "claimed action has the wrong number of generators");
  for (const auto& m : claimed_action)
    if (m.rows() != basis.cols() || m.cols() != basis.cols())
      throw Error(ErrorKind::RankMismatch, "claimed action matrices do not match the basis size");
  const GLattice sub = induced_sublattice(L, basis);
  return sub.generator_matrices() == claimed_action;
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return false;
  return hnf_basis(a.transpose()) == hnf_basis(b.transpose());
}

GLattice twist(const GLattice& L, const Automorphism& f) {
  std::vector<IntMatrix> action;
  for (std::size_t s = 0; s < L.group().num_generators(); ++s) action.push_back(L.matrix(f(L.group().generator(s))));
  return GLattice(L.group_ptr(), std::move(action));
}

GLattice direct_sum(std::span<const GLattice> summands) {
  if (summands.empty()) throw Error(ErrorKind::InvalidInput, "direct sum of no lattices");
  const GroupPtr& g = summands.front().group_ptr();
  for (const auto& L : summands)
    if (L.group_ptr() != g) throw Error(ErrorKind::GroupMismatch, "direct summands act through different groups");
  std::vector<IntMatrix> action;
  for (std::size_t s = 0; s < g->num_generators(); ++s) {
    std::vector<IntMatrix> blocks;
    for (const auto& L : summands) blocks.push_back(L.generator_matrix(s));
    action.push_back(sum_block(blocks));
  }
  return GLattice(g, std::move(action));
}

bool is_faithful(const GLattice& L) {
  require_module(L);
  const IntMatrix I = identity_matrix(L.rank());
  for (ElementId x = 1; x < L.group().order(); ++x)
    if (L.matrix(x) == I) return false;
  return true;
}

std::size_t image_order(const GLattice& L) {
  require_module(L);
  std::set<std::vector<std::string>> seen;
  for (ElementId x = 0; x < L.group().order(); ++x) {
    const IntMatrix& m = L.matrix(x);
    std::vector<std::string> key;
    key.reserve(static_cast<std::size_t>(m.size()));
    for (Eigen::Index i = 0; i < m.size(); ++i) key.push_back(m.data()[i].str());
    seen.insert(std::move(key));
  }
  return seen.size();
}

IntMatrix fixed_sublattice(const GLattice& L) {
  require_module(L);
  const Eigen::Index n = L.rank();
  const auto k = static_cast<Eigen::Index>(L.group().num_generators());
  IntMatrix stacked(n * k, n);
  for (Eigen::Index s = 0; s < k; ++s)
    stacked.block(s * n, 0, n, n) = L.generator_matrix(static_cast<std::size_t>(s)) - identity_matrix(n);
  const IntMatrix rows = hnf_basis(stacked);
  return integer_kernel(rows.rows() == 0 ? IntMatrix(IntMatrix::Zero(1, n)) : rows);
}

Eigen::Index first_betti(const GLattice& L) { return fixed_sublattice(L).cols(); }

Character lattice_character(const CharacterTable& t, const GLattice& L) {
  require_module(L);
  if (&t.group() != &L.group()) throw Error(ErrorKind::GroupMismatch, "table and lattice belong to different groups");
  std::vector<Integer> traces;
  for (std::size_t k = 0; k < t.num_classes(); ++k) traces.push_back(L.matrix(t.conj_class(k).representative).trace());
  return integer_character(traces);
}

IntMatrix norm_matrix(const GLattice& L, ElementId g) {
  const PermGroup& G = L.group();
  IntMatrix N = IntMatrix::Zero(L.rank(), L.rank());
  ElementId x = PermGroup::identity();
  for (std::uint32_t k = 0; k < G.element_order(g); ++k) {
    N += L.matrix(x);
    x = G.mul(x, g);
  }
  return N;
}

}  // namespace holoq
