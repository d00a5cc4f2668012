#include "holoq/io.hpp"

#include "holoq/errors.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace holoq {

namespace {

std::size_t generator_slot(const PermGroup& g, const std::string& name) {
  const auto idx = g.generator_index(name);
  if (!idx) throw Error(ErrorKind::UnknownGeneratorName, "'" + name + "' is not a generator of the group");
  return *idx;
}

template <typename F>
auto json_guard(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path.string() + ": " + e.what());
  }
}

GroupPtr group_from_json(const Json& j) {
  return json_guard("group file", [&] {
    const auto degree = j.at("degree").get<std::size_t>();
    std::vector<PermGroup::Generator> gens;
    for (const auto& [name, cycles_json] : j.at("generators").items()) {
      const auto cycles = cycles_json.get<std::vector<Cycle>>();
      gens.push_back({name, Permutation::from_cycles(degree, cycles)});
    }
    return PermGroup::create(degree, std::move(gens));
  });
}

GroupPtr load_group(const std::filesystem::path& path) { return group_from_json(read_json(path)); }

GLattice lattice_from_json(const Json& j, GroupPtr group) {
  return json_guard("module file", [&] {
    const auto n = j.at("rank").get<Eigen::Index>();
    const bool right = j.value("convention", std::string("left")) == "right";
    std::vector<IntMatrix> action(group->num_generators());
    std::vector<bool> seen(group->num_generators(), false);
    for (const auto& [name, rows] : j.at("action").items()) {
      const std::size_t s = generator_slot(*group, name);
      const auto data = rows.get<std::vector<std::vector<long long>>>();
      if (static_cast<Eigen::Index>(data.size()) != n)
        throw Error(ErrorKind::InvalidInput, "matrix of '" + name + "' does not have " + std::to_string(n) + " rows");
      IntMatrix m(n, n);
      for (Eigen::Index i = 0; i < n; ++i) {
        if (static_cast<Eigen::Index>(data[i].size()) != n)
          throw Error(ErrorKind::InvalidInput, "matrix of '" + name + "' is not square");
        for (Eigen::Index k = 0; k < n; ++k) m(i, k) = data[i][k];
      }
      action[s] = right ? IntMatrix(m.transpose()) : m;
      seen[s] = true;
    }
    for (std::size_t s = 0; s < seen.size(); ++s)
      if (!seen[s]) throw Error(ErrorKind::InvalidInput, "no matrix for generator '" + group->generator_name(s) + "'");
    return GLattice(std::move(group), std::move(action));
  });
}

GLattice load_lattice(const std::filesystem::path& path, GroupPtr group) {
  return lattice_from_json(read_json(path), std::move(group));
}

Cocycle1 cocycle_from_json(const Json& j, const GLattice& L) {
  return json_guard("cocycle file", [&] {
    const PermGroup& g = L.group();
    Cocycle1 c = zero_cocycle(L);
    std::vector<bool> seen(g.num_generators(), false);
    for (const auto& [name, vals] : j.at("values").items()) {
      const std::size_t s = generator_slot(g, name);
      const auto strs = vals.get<std::vector<std::string>>();
      if (static_cast<Eigen::Index>(strs.size()) != L.rank())
        throw Error(ErrorKind::InvalidInput, "value of '" + name + "' has the wrong dimension");
      for (std::size_t i = 0; i < strs.size(); ++i) c.generator_values[s](static_cast<Eigen::Index>(i)) = parse_rational(strs[i]);
      seen[s] = true;
    }
    for (std::size_t s = 0; s < seen.size(); ++s)
      if (!seen[s]) throw Error(ErrorKind::InvalidInput, "no value for generator '" + g.generator_name(s) + "'");
    return c;
  });
}

Cocycle1 load_cocycle(const std::filesystem::path& path, const GLattice& L) {
  return cocycle_from_json(read_json(path), L);
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

Json to_json(const Cyclotomic& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coefficients()) coeffs.push_back(c.str());
  return Json{{"conductor", x.conductor()}, {"coefficients", std::move(coeffs)}};
}

std::string canonical_dump(const Json& j) {
  // nlohmann::json (unordered) keeps object keys sorted
  return nlohmann::json::parse(j.dump()).dump();
}

std::string digest(const Json& j) {
  const std::string text = canonical_dump(j);
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), md.data(), &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return out.str();
}

}  // namespace holoq
