#pragma once

#include "holoq/cohomology.hpp"
#include "holoq/lattice.hpp"
#include "holoq/perm_group.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace holoq {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; throws InvalidInput on I/O or syntax errors.
Json read_json(const std::filesystem::path& path);

/// {"degree": n, "generators": {"a": [[1,2],...], ...}}, generator order as in the file.
GroupPtr group_from_json(const Json& j);
GroupPtr load_group(const std::filesystem::path& path);

/// {"rank": n, "action": {"a": [[row], ...], ...}}. With "convention": "right"
/// the matrices act on row vectors and are transposed on load.
GLattice lattice_from_json(const Json& j, GroupPtr group);
GLattice load_lattice(const std::filesystem::path& path, GroupPtr group);

/// {"values": {"a": ["0", "1/2", ...], ...}}.
Cocycle1 cocycle_from_json(const Json& j, const GLattice& L);
Cocycle1 load_cocycle(const std::filesystem::path& path, const GLattice& L);

Json to_json(const IntMatrix& m);
Json to_json(const RatVector& v);
Json to_json(const Cyclotomic& x);

/// Keys sorted at every level, no whitespace.
std::string canonical_dump(const Json& j);
/// Lowercase hex SHA-256 of canonical_dump(j).
std::string digest(const Json& j);

}  // namespace holoq
