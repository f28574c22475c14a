#include "hecke/json_io.hpp"

#include <fstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

IntVec intvec_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::SchemaError, "expected an integer array");
  IntVec v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(Errc::SchemaError, "expected an integer");
    v.push_back(x.get<Int>());
  }
  return v;
}

IntMat intmat_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::SchemaError, "expected an array of vectors");
  IntMat m;
  for (const auto& row : j) m.push_back(intvec_from_json(row));
  return m;
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(Errc::SchemaError, std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::SchemaError, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(Errc::SchemaError, std::string("invalid JSON: ") + e.what());
  }
  return j;
}

Json root_datum_to_json(const RootDatum& rd) {
  Json j;
  j["schema"] = 1;
  j["name"] = rd.name();
  j["rank"] = rd.rank();
  j["simple_roots"] = rd.simple_roots();
  j["simple_coroots"] = rd.simple_coroots();
  return j;
}

RootDatumPtr root_datum_from_json(const Json& j) {
  int rank = 0;
  if (!require(j, "rank").is_number_integer())
    throw Error(Errc::SchemaError, "rank must be an integer");
  rank = j.at("rank").get<int>();
  if (rank <= 0) throw Error(Errc::SchemaError, "rank must be positive");
  IntMat roots = intmat_from_json(require(j, "simple_roots"));
  IntMat coroots = intmat_from_json(require(j, "simple_coroots"));
  std::string name = j.value("name", std::string());
  return RootDatum::make(rank, roots, coroots, name);
}

Json cone_report_to_json(const ConeLemmaReport& rep) {
  Json j;
  j["schema"] = 1;
  j["lemma"] = rep.lemma;
  j["datum"] = rep.datum;
  if (!rep.reading.empty()) j["reading"] = rep.reading;
  if (rep.lambda_box > 0) j["lambda_box"] = rep.lambda_box;
  j["cases"] = rep.cases;
  j["counterexamples"] = Json::array();
  for (const auto& ce : rep.counterexamples) {
    Json c;
    c["lambda"] = ce.lambda;
    c["mu"] = ce.mu;
    c["note"] = ce.note;
    j["counterexamples"].push_back(c);
  }
  j["pass"] = rep.pass();
  return j;
}

Json coset_bruhat_report_to_json(const WeylGroup::CosetBruhatReport& rep) {
  Json j;
  j["schema"] = 1;
  j["lemma"] = "coset-bruhat";
  j["datum"] = rep.datum;
  j["theta"] = rep.theta.indices;
  j["cases"] = rep.triples;
  j["counterexamples"] = rep.counterexamples;
  j["pass"] = rep.pass();
  return j;
}

Json fq_elem_to_json(const FqElem& e) { return Json(e.c); }

FqElem fq_elem_from_json(const Json& j, const Fq& field) {
  if (j.is_number_integer()) return field.from_int(j.get<Int>());
  if (!j.is_array()) throw Error(Errc::SchemaError, "field element must be coefficients");
  std::vector<int> c;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(Errc::SchemaError, "bad coefficient");
    c.push_back(x.get<int>());
  }
  return field.from_coeffs(c);
}

Json torus_character_to_json(const TorusCharacterDatum& d) {
  Json j;
  j["schema"] = 1;
  j["q"] = d.q;
  j["field_degree"] = d.field->degree();
  j["basis"] = d.basis;
  Json chars = Json::array();
  for (const auto& ch : d.chars) {
    Json c;
    c["unit_exponent"] = ch.unit_exponent;
    c["pi_value"] = fq_elem_to_json(ch.pi_value);
    chars.push_back(c);
  }
  j["basis_chars"] = chars;
  return j;
}

TorusCharacterDatum torus_character_from_json(const Json& j) {
  Int q = require(j, "q").get<Int>();
  if (q < 2) throw Error(Errc::SchemaError, "q must be at least 2");
  Int p = q;  // residue characteristic: smallest prime factor
  for (Int d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  int degree = j.value("field_degree", 1);
  const Fq& field = Fq::get(p, degree);
  std::vector<SmoothCharacter> chars;
  for (const auto& c : require(j, "basis_chars")) {
    Int e = require(c, "unit_exponent").get<Int>();
    FqElem v = fq_elem_from_json(require(c, "pi_value"), field);
    if (v.is_zero()) throw Error(Errc::SchemaError, "pi_value must be nonzero");
    chars.push_back(SmoothCharacter::make(q, e, v));
  }
  // Without an explicit basis the characters sit on the standard basis of the
  // full cocharacter lattice.
  IntMat basis = j.contains("basis")
                     ? intmat_from_json(j.at("basis"))
                     : identity_matrix(static_cast<int>(chars.size()));
  if (chars.size() != basis.size())
    throw Error(Errc::SchemaError, "need one character per basis vector");
  return TorusCharacterDatum::make(q, field, basis, chars);
}

Json satake_parameter_to_json(const SatakeParameter& p) {
  Json j;
  j["levi"] = p.levi.indices;
  j["p"] = p.field->p();
  j["field_degree"] = p.field->degree();
  Json basis = Json::array();
  for (size_t i = 0; i < p.lattice.size(); ++i) {
    Json b;
    b["lattice_vector"] = p.lattice[i];
    b["pi_value"] = fq_elem_to_json(p.values[i]);
    basis.push_back(b);
  }
  j["chi_basis"] = basis;
  return j;
}

Json descriptor_to_json(const RootDatum& rd, const IrrRepDescriptor& d) {
  Json j;
  j["inducing_parabolic"] = d.inducing_parabolic.indices;
  j["label"] = d.sigma1_label;
  j["special_part"] = d.special_part.indices;
  j["satake"] = satake_parameter_to_json(d.satake);
  Json units = Json::array();
  for (const auto& [a, e] : d.coroot_unit_parts) {
    Json u;
    u["alpha"] = a;
    u["unit_exponent"] = e;
    units.push_back(u);
  }
  j["coroot_unit_parts"] = units;
  j["supersingular"] = is_supersingular_descriptor(rd, d);
  return j;
}

Json enumeration_report_to_json(const RootDatum& rd, const EnumerationReport& rep) {
  Json j;
  j["schema"] = 1;
  j["count"] = rep.entries.size();
  j["expected"] = rep.expected;
  j["injective"] = rep.injective;
  Json collisions = Json::array();
  for (const auto& [a, b] : rep.collisions) collisions.push_back(Json::array({a, b}));
  j["collisions"] = collisions;
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    Json x;
    x["pi1"] = e.parameter.pi1.indices;
    x["pi2"] = e.parameter.pi2.indices;
    x["label"] = e.parameter.sigma1.label;
    x["descriptor"] = descriptor_to_json(rd, e.descriptor);
    entries.push_back(x);
  }
  j["parameters"] = entries;
  return j;
}

Json principal_series_report_to_json(const RootDatum& rd,
                                     const PrincipalSeriesReport& rep) {
  Json j;
  j["schema"] = 1;
  j["C"] = rep.trivial_coroot_count;
  j["length"] = rep.length;
  j["irreducible"] = rep.irreducible;
  Json factors = Json::array();
  for (const auto& f : rep.factors)
    factors.push_back(descriptor_to_json(rd, f.descriptor));
  j["factors"] = factors;
  return j;
}

Json monoid_element_to_json(const MonoidAlgebraElement& e) {
  Json terms = Json::array();
  for (const auto& [la, c] : e.terms()) {
    Json t;
    t["lambda"] = la;
    t["coeff"] = fq_elem_to_json(c);
    terms.push_back(t);
  }
  Json j;
  j["terms"] = terms;
  return j;
}

Json changing_weight_report_to_json(const ChangingWeightReport& rep) {
  Json j;
  j["schema"] = 1;
  j["p"] = rep.p;
  j["m"] = rep.m;
  j["pass"] = rep.pass;
  j["c"] = fq_elem_to_json(rep.constant);
  j["transform"] = monoid_element_to_json(rep.transform);
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  return j;
}

std::vector<SupersingularDatum> supersingular_data_from_json(const RootDatum& rd,
                                                             const Json& j) {
  std::vector<SupersingularDatum> out;
  for (const auto& d : require(j, "data")) {
    std::string label = require(d, "label").get<std::string>();
    std::vector<int> idx;
    for (Int x : intvec_from_json(require(d, "levi")))
      idx.push_back(static_cast<int>(x));
    TorusCharacterDatum central = torus_character_from_json(require(d, "central"));
    out.push_back(make_supersingular_datum(rd, ParabolicSubset(idx), central, label));
  }
  return out;
}

}  // namespace hecke
