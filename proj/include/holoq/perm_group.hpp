#pragma once

#include "holoq/permutation.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace holoq {

using ElementId = std::uint32_t;

struct ConjClass {
  ElementId representative = 0;   // smallest element index in the class
  std::vector<ElementId> members;  // sorted
  std::uint32_t element_order = 1;

  [[nodiscard]] std::size_t size() const noexcept { return members.size(); }
};

/// Enumeration cap: HOLOQ_MAX_GROUP_ORDER if set, otherwise 10^6.
std::size_t default_max_order();

/// A finite permutation group held as a full element list. Elements are
/// numbered in breadth-first order over generator words (generators tried in
/// the order given), so element 0 is the identity and every element carries a
/// shortest word. Immutable after construction.
class PermGroup {
 public:
  struct Generator {
    std::string name;
    Permutation perm;
  };

  static std::shared_ptr<const PermGroup> create(std::size_t degree, std::vector<Generator> generators,
                                                 std::size_t max_order = default_max_order());

  [[nodiscard]] std::size_t degree() const noexcept { return degree_; }
  [[nodiscard]] std::size_t order() const noexcept { return elements_.size(); }
  [[nodiscard]] std::size_t num_generators() const noexcept { return generator_names_.size(); }
  [[nodiscard]] const std::string& generator_name(std::size_t i) const { return generator_names_[i]; }
  [[nodiscard]] const std::vector<std::string>& generator_names() const noexcept { return generator_names_; }
  [[nodiscard]] ElementId generator(std::size_t i) const { return generator_ids_[i]; }
  [[nodiscard]] std::optional<std::size_t> generator_index(std::string_view name) const;

  [[nodiscard]] static constexpr ElementId identity() noexcept { return 0; }
  [[nodiscard]] const Permutation& element(ElementId g) const { return elements_[g]; }
  [[nodiscard]] std::optional<ElementId> find(const Permutation& p) const;

  [[nodiscard]] ElementId mul(ElementId g, ElementId h) const;
  /// g * generator(s), read from the Cayley table.
  [[nodiscard]] ElementId mul_generator(ElementId g, std::size_t s) const { return right_[g * num_generators() + s]; }
  [[nodiscard]] ElementId inverse(ElementId g) const { return inverse_[g]; }
  [[nodiscard]] ElementId power(ElementId g, std::int64_t k) const;
  [[nodiscard]] std::uint32_t element_order(ElementId g) const { return orders_[g]; }
  [[nodiscard]] std::uint64_t exponent() const noexcept { return exponent_; }

  /// Breadth-first tree: element g = parent(g) * generator(parent_generator(g)).
  [[nodiscard]] ElementId parent(ElementId g) const { return parent_[g]; }
  [[nodiscard]] int parent_generator(ElementId g) const { return parent_gen_[g]; }
  /// Shortest word (generator indices, left to right).
  [[nodiscard]] std::vector<std::size_t> word(ElementId g) const;
  /// Printable form of word(g), e.g. "a^2b^2"; "1" for the identity.
  [[nodiscard]] std::string word_name(ElementId g) const;

  [[nodiscard]] const std::vector<ConjClass>& classes() const noexcept { return classes_; }
  [[nodiscard]] std::size_t class_of(ElementId g) const { return class_of_[g]; }

 private:
  PermGroup() = default;
  void build_tables();
  void compute_classes();

  std::size_t degree_ = 0;
  std::vector<std::string> generator_names_;
  std::vector<ElementId> generator_ids_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> right_;
  std::vector<ElementId> table_;  // full table when the group is small
  std::vector<ElementId> inverse_;
  std::vector<ElementId> parent_;
  std::vector<int> parent_gen_;
  std::vector<std::uint32_t> orders_;
  std::uint64_t exponent_ = 1;
  std::vector<ConjClass> classes_;
  std::vector<std::size_t> class_of_;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

inline const std::vector<ConjClass>& conjugacy_classes(const PermGroup& g) { return g.classes(); }

/// Elements commuting with every generator.
std::vector<ElementId> center(const PermGroup& g);
bool is_abelian(const PermGroup& g);

/// g -> g^k over all elements.
std::vector<ElementId> power_map(const PermGroup& g, std::int64_t k = 2);

/// Sorted element set of the subgroup generated by the given elements.
std::vector<ElementId> subgroup_closure(const PermGroup& g, std::span<const ElementId> generators);
bool is_normal_subset(const PermGroup& g, std::span<const ElementId> sorted_subset);

/// |{g : g^2 = 1}|, identity included.
std::size_t involution_count(const PermGroup& g);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

/// True iff the p'-elements form a subgroup of index p^a; throws
/// PrimeDoesNotDivideOrder when p does not divide |G|.
bool has_normal_p_complement(const PermGroup& g, std::uint64_t p);
/// True iff some element has order equal to the p-part of |G|.
bool sylow_is_cyclic(const PermGroup& g, std::uint64_t p);

/// Orbit of a 0-based point under the natural action, sorted.
std::vector<Point> orbit(const PermGroup& g, Point x);
std::vector<ElementId> point_stabilizer(const PermGroup& g, Point x);

}  // namespace holoq
