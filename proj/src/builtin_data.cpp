#include "hecke/builtin_data.hpp"

#include <algorithm>
#include <map>

#include "hecke/errors.hpp"
#include "hecke/json_io.hpp"

namespace hecke {

namespace {

struct CatalogEntry {
  const char* name;
  const char* json;
};

// Kept in sync with data/root_data/*.json; a test compares the two.
constexpr CatalogEntry kCatalog[] = {
    {"SL2",
     R"({"schema": 1, "name": "SL2", "rank": 1, "simple_roots": [[2]], "simple_coroots": [[1]]})"},
    {"GL2",
     R"({"schema": 1, "name": "GL2", "rank": 2, "simple_roots": [[1, -1]], "simple_coroots": [[1, -1]]})"},
    {"PGL2",
     R"({"schema": 1, "name": "PGL2", "rank": 1, "simple_roots": [[1]], "simple_coroots": [[2]]})"},
    {"A1xA1",
     R"({"schema": 1, "name": "A1xA1", "rank": 2, "simple_roots": [[2, 0], [0, 2]], "simple_coroots": [[1, 0], [0, 1]]})"},
    {"GL2xGL2",
     R"({"schema": 1, "name": "GL2xGL2", "rank": 4, "simple_roots": [[1, -1, 0, 0], [0, 0, 1, -1]], "simple_coroots": [[1, -1, 0, 0], [0, 0, 1, -1]]})"},
    {"SL3",
     R"({"schema": 1, "name": "SL3", "rank": 2, "simple_roots": [[2, -1], [-1, 2]], "simple_coroots": [[1, 0], [0, 1]]})"},
    {"GL3",
     R"({"schema": 1, "name": "GL3", "rank": 3, "simple_roots": [[1, -1, 0], [0, 1, -1]], "simple_coroots": [[1, -1, 0], [0, 1, -1]]})"},
    {"B2",
     R"({"schema": 1, "name": "B2", "rank": 2, "simple_roots": [[2, -2], [-1, 2]], "simple_coroots": [[1, 0], [0, 1]]})"},
    {"SO5",
     R"({"schema": 1, "name": "SO5", "rank": 2, "simple_roots": [[1, -1], [0, 1]], "simple_coroots": [[1, -1], [0, 2]]})"},
    {"G2",
     R"({"schema": 1, "name": "G2", "rank": 2, "simple_roots": [[2, -1], [-3, 2]], "simple_coroots": [[1, 0], [0, 1]]})"},
    {"GL4",
     R"({"schema": 1, "name": "GL4", "rank": 4, "simple_roots": [[1, -1, 0, 0], [0, 1, -1, 0], [0, 0, 1, -1]], "simple_coroots": [[1, -1, 0, 0], [0, 1, -1, 0], [0, 0, 1, -1]]})"},
    {"SL4",
     R"({"schema": 1, "name": "SL4", "rank": 3, "simple_roots": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]], "simple_coroots": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]})"},
};

std::string canonical_name(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(), ::toupper);
  static const std::map<std::string, std::string> aliases = {
      {"A1", "SL2"}, {"A2", "SL3"}, {"A3", "GL4"}};
  auto it = aliases.find(name);
  if (it != aliases.end()) return it->second;
  // Catalog names normalized the same way.
  for (const auto& e : kCatalog) {
    std::string n = e.name;
    std::transform(n.begin(), n.end(), n.begin(), ::toupper);
    if (n == name) return e.name;
  }
  return name;
}

}  // namespace

const char* builtin_root_datum_json(const std::string& name) {
  std::string canon = canonical_name(name);
  for (const auto& e : kCatalog)
    if (canon == e.name) return e.json;
  throw Error(Errc::SchemaError, "unknown builtin datum '" + name + "'");
}

RootDatumPtr builtin_root_datum(const std::string& name) {
  return root_datum_from_json(Json::parse(builtin_root_datum_json(name)));
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& e : kCatalog) out.push_back(e.name);
  return out;
}

}  // namespace hecke
