#pragma once

#include <json.hpp>

#include "hecke/classification.hpp"
#include "hecke/hecke_gl2.hpp"
#include "hecke/root_datum.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

using Json = nlohmann::json;

// Schema-versioned JSON encodings for the CLI and report files. Parsers
// throw Error(SchemaError) on malformed input.

Json root_datum_to_json(const RootDatum& rd);
RootDatumPtr root_datum_from_json(const Json& j);

Json cone_report_to_json(const ConeLemmaReport& rep);
Json coset_bruhat_report_to_json(const WeylGroup::CosetBruhatReport& rep);

Json fq_elem_to_json(const FqElem& e);
FqElem fq_elem_from_json(const Json& j, const Fq& field);

Json torus_character_to_json(const TorusCharacterDatum& d);
TorusCharacterDatum torus_character_from_json(const Json& j);

Json satake_parameter_to_json(const SatakeParameter& p);

Json descriptor_to_json(const RootDatum& rd, const IrrRepDescriptor& d);
Json enumeration_report_to_json(const RootDatum& rd, const EnumerationReport& rep);
Json principal_series_report_to_json(const RootDatum& rd,
                                     const PrincipalSeriesReport& rep);

Json monoid_element_to_json(const MonoidAlgebraElement& e);
Json changing_weight_report_to_json(const ChangingWeightReport& rep);

std::vector<SupersingularDatum> supersingular_data_from_json(const RootDatum& rd,
                                                             const Json& j);

// Helpers shared by the CLI and tests.
Json load_json_file(const std::string& path);

}  // namespace hecke
