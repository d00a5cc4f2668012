#pragma once

#include "holoq/perm_group.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace holoq {

struct Letter {
  std::size_t generator = 0;
  bool inverse = false;
};
using Word = std::vector<Letter>;

/// Parses words such as "a^2b^-1", "[a,b]", "(ab)^3" or "1". Commutators are
/// [x,y] = x^-1 y^-1 x y. A run of letters that is not itself a generator name
/// is split into single-letter generators.
Word parse_word(std::string_view text, const PermGroup& g);
ElementId evaluate(const PermGroup& g, const Word& w);

struct RelationCheck {
  bool holds = true;
  std::optional<std::size_t> first_failure;  // index into the relation list
  std::string detail;
};

/// Each relation is "lhs=rhs" or a single word meaning "w=1".
RelationCheck verify_relations(const PermGroup& g, std::span<const std::string> relations);

}  // namespace holoq
