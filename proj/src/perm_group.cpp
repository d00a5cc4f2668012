#include "holoq/perm_group.hpp"

#include "holoq/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace holoq {

namespace {

constexpr std::size_t kTableLimit = 2048;

}  // namespace

std::size_t default_max_order() {
  if (const char* env = std::getenv("HOLOQ_MAX_GROUP_ORDER")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

std::shared_ptr<const PermGroup> PermGroup::create(std::size_t degree, std::vector<Generator> generators,
                                                   std::size_t max_order) {
  if (degree == 0) throw Error(ErrorKind::MalformedPermutation, "group degree must be positive");
  if (generators.empty()) throw Error(ErrorKind::InvalidInput, "a group needs at least one generator");
  auto g = std::shared_ptr<PermGroup>(new PermGroup());
  g->degree_ = degree;
  for (auto& gen : generators) {
    if (gen.perm.degree() != degree)
      throw Error(ErrorKind::MalformedPermutation, "generator '" + gen.name + "' has degree " +
                                                       std::to_string(gen.perm.degree()) + ", expected " +
                                                       std::to_string(degree));
    if (std::find(g->generator_names_.begin(), g->generator_names_.end(), gen.name) != g->generator_names_.end())
      throw Error(ErrorKind::InvalidInput, "duplicate generator name '" + gen.name + "'");
    g->generator_names_.push_back(gen.name);
  }
  std::vector<Permutation> perms;
  perms.reserve(generators.size());
  for (auto& gen : generators) perms.push_back(std::move(gen.perm));
  g->elements_.push_back(Permutation(degree));
  g->index_.emplace(g->elements_.front(), 0);
  g->parent_.push_back(0);
  g->parent_gen_.push_back(-1);
  // breadth-first closure; the queue is the element list itself
  const std::size_t k = perms.size();
  for (std::size_t head = 0; head < g->elements_.size(); ++head) {
    for (std::size_t s = 0; s < k; ++s) {
      Permutation next = g->elements_[head] * perms[s];
      auto [it, inserted] = g->index_.try_emplace(std::move(next), static_cast<ElementId>(g->elements_.size()));
      if (inserted) {
        if (g->elements_.size() >= max_order)
          throw Error(ErrorKind::EnumerationBoundExceeded,
                      "group order exceeds the enumeration bound " + std::to_string(max_order));
        g->elements_.push_back(it->first);
        g->parent_.push_back(static_cast<ElementId>(head));
        g->parent_gen_.push_back(static_cast<int>(s));
      }
      g->right_.push_back(it->second);
    }
  }
  for (const auto& p : perms) g->generator_ids_.push_back(g->index_.at(p));
  g->build_tables();
  g->compute_classes();
  return g;
}

void PermGroup::build_tables() {
  const std::size_t n = elements_.size();
  if (n <= kTableLimit) {
    table_.assign(n * n, 0);
    for (ElementId g = 0; g < n; ++g) {
      table_[g * n] = g;
      for (ElementId h = 1; h < n; ++h) table_[g * n + h] = mul_generator(table_[g * n + parent_[h]], parent_gen_[h]);
    }
  }
  inverse_.resize(n);
  for (ElementId g = 0; g < n; ++g) inverse_[g] = index_.at(elements_[g].inverse());
  orders_.resize(n);
  exponent_ = 1;
  for (ElementId g = 0; g < n; ++g) {
    std::uint32_t o = 1;
    for (ElementId x = g; x != identity(); x = mul(x, g)) ++o;
    orders_[g] = o;
    exponent_ = std::lcm(exponent_, static_cast<std::uint64_t>(o));
  }
}

void PermGroup::compute_classes() {
  const std::size_t n = order();
  class_of_.assign(n, static_cast<std::size_t>(-1));
  std::vector<std::vector<ElementId>> orbits;
  for (ElementId start = 0; start < n; ++start) {
    if (class_of_[start] != static_cast<std::size_t>(-1)) continue;
    std::vector<ElementId> orb{start};
    class_of_[start] = orbits.size();
    for (std::size_t head = 0; head < orb.size(); ++head) {
      for (ElementId s : generator_ids_) {
        const ElementId y = mul(mul(s, orb[head]), inverse(s));
        if (class_of_[y] == static_cast<std::size_t>(-1)) {
          class_of_[y] = orbits.size();
          orb.push_back(y);
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }
  std::vector<std::size_t> perm(orbits.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto oa = orders_[orbits[a].front()], ob = orders_[orbits[b].front()];
    if (oa != ob) return oa < ob;
    return orbits[a].front() < orbits[b].front();
  });
  classes_.clear();
  for (std::size_t idx : perm) {
    ConjClass c;
    c.representative = orbits[idx].front();
    c.element_order = orders_[c.representative];
    c.members = std::move(orbits[idx]);
    for (ElementId x : c.members) class_of_[x] = classes_.size();
    classes_.push_back(std::move(c));
  }
}

std::optional<std::size_t> PermGroup::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generator_names_.size(); ++i)
    if (generator_names_[i] == name) return i;
  return std::nullopt;
}

std::optional<ElementId> PermGroup::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId PermGroup::mul(ElementId g, ElementId h) const {
  const std::size_t n = order();
  if (!table_.empty()) return table_[static_cast<std::size_t>(g) * n + h];
  ElementId x = g;
  for (std::size_t s : word(h)) x = mul_generator(x, s);
  return x;
}

ElementId PermGroup::power(ElementId g, std::int64_t k) const {
  const std::int64_t o = orders_[g];
  k %= o;
  if (k < 0) k += o;
  ElementId result = identity(), base = g;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<std::size_t> PermGroup::word(ElementId g) const {
  std::vector<std::size_t> w;
  for (ElementId x = g; x != identity(); x = parent_[x]) w.push_back(static_cast<std::size_t>(parent_gen_[x]));
  std::reverse(w.begin(), w.end());
  return w;
}

std::string PermGroup::word_name(ElementId g) const {
  const auto w = word(g);
  if (w.empty()) return "1";
  const bool long_names = std::any_of(generator_names_.begin(), generator_names_.end(),
                                      [](const std::string& s) { return s.size() != 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty() && long_names) out += '*';
    out += generator_names_[w[i]];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::vector<ElementId> center(const PermGroup& g) {
  std::vector<ElementId> z;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool central = true;
    for (std::size_t s = 0; s < g.num_generators() && central; ++s)
      central = g.mul(x, g.generator(s)) == g.mul(g.generator(s), x);
    if (central) z.push_back(x);
  }
  return z;
}

bool is_abelian(const PermGroup& g) { return center(g).size() == g.order(); }

std::vector<ElementId> power_map(const PermGroup& g, std::int64_t k) {
  std::vector<ElementId> out(g.order());
  for (ElementId x = 0; x < g.order(); ++x) out[x] = g.power(x, k);
  return out;
}

std::vector<ElementId> subgroup_closure(const PermGroup& g, std::span<const ElementId> generators) {
  std::vector<bool> in(g.order(), false);
  std::vector<ElementId> elems{PermGroup::identity()};
  in[PermGroup::identity()] = true;
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (ElementId s : generators) {
      const ElementId y = g.mul(elems[head], s);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool is_normal_subset(const PermGroup& g, std::span<const ElementId> sorted_subset) {
  for (ElementId x : sorted_subset)
    for (std::size_t s = 0; s < g.num_generators(); ++s) {
      const ElementId gen = g.generator(s);
      const ElementId y = g.mul(g.mul(gen, x), g.inverse(gen));
      if (!std::binary_search(sorted_subset.begin(), sorted_subset.end(), y)) return false;
    }
  return true;
}

std::size_t involution_count(const PermGroup& g) {
  std::size_t n = 0;
  for (ElementId x = 0; x < g.order(); ++x)
    if (g.element_order(x) <= 2) ++n;
  return n;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

namespace {

void require_prime_divisor(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p) || g.order() % p != 0)
    throw Error(ErrorKind::PrimeDoesNotDivideOrder,
                std::to_string(p) + " is not a prime divisor of |G| = " + std::to_string(g.order()));
}

}  // namespace

bool has_normal_p_complement(const PermGroup& g, std::uint64_t p) {
  require_prime_divisor(g, p);
  std::vector<ElementId> coprime;
  for (ElementId x = 0; x < g.order(); ++x)
    if (g.element_order(x) % p != 0) coprime.push_back(x);
  if (coprime.size() != g.order() / p_part(g.order(), p)) return false;
  std::vector<bool> in(g.order(), false);
  for (ElementId x : coprime) in[x] = true;
  for (ElementId x : coprime)
    for (ElementId y : coprime)
      if (!in[g.mul(x, y)]) return false;
  return true;
}

bool sylow_is_cyclic(const PermGroup& g, std::uint64_t p) {
  require_prime_divisor(g, p);
  const std::uint64_t target = p_part(g.order(), p);
  for (ElementId x = 0; x < g.order(); ++x)
    if (g.element_order(x) == target) return true;
  return false;
}

std::vector<Point> orbit(const PermGroup& g, Point x) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> orb{x};
  seen[x] = true;
  for (std::size_t head = 0; head < orb.size(); ++head)
    for (std::size_t s = 0; s < g.num_generators(); ++s) {
      const Point y = g.element(g.generator(s))(orb[head]);
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<ElementId> point_stabilizer(const PermGroup& g, Point x) {
  std::vector<ElementId> out;
  for (ElementId e = 0; e < g.order(); ++e)
    if (g.element(e)(x) == x) out.push_back(e);
  return out;
}

}  // namespace holoq
