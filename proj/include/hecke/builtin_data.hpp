#pragma once

#include <string>
#include <vector>

#include "hecke/root_datum.hpp"

namespace hecke {

// The shipped catalog of root data; names are case-insensitive and the Cartan
// aliases A1, A2, A3, B2, G2 resolve to SL2, SL3, GL4, B2, G2. The same data
// live under data/root_data/ as JSON files.
RootDatumPtr builtin_root_datum(const std::string& name);
std::vector<std::string> builtin_names();
// Raw JSON text of one catalog entry.
const char* builtin_root_datum_json(const std::string& name);

}  // namespace hecke
