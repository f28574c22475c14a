#include <doctest.h>

#include <fstream>

#include "hecke/acceptance.hpp"
#include "hecke/builtin_data.hpp"
#include "hecke/errors.hpp"
#include "hecke/json_io.hpp"

using namespace hecke;

TEST_CASE("root datum round trip and schema errors") {
  for (const auto& name : builtin_names()) {
    auto rd = builtin_root_datum(name);
    Json j = root_datum_to_json(*rd);
    auto back = root_datum_from_json(j);
    CHECK(back->rank() == rd->rank());
    CHECK(back->simple_roots() == rd->simple_roots());
    CHECK(back->simple_coroots() == rd->simple_coroots());
  }
  CHECK_THROWS_AS(root_datum_from_json(Json::parse(R"({"rank": 1})")), Error);
  CHECK_THROWS_AS(root_datum_from_json(Json::parse(
                      R"({"rank": 0, "simple_roots": [], "simple_coroots": []})")),
                  Error);
  CHECK_THROWS_AS(builtin_root_datum("E8"), Error);
}

TEST_CASE("embedded catalog matches the data files") {
  const std::string dir = std::string(HECKE_DATA_DIR) + "/root_data/";
  const std::vector<std::pair<std::string, std::string>> files = {
      {"SL2", "sl2.json"},     {"GL2", "gl2.json"},
      {"PGL2", "pgl2.json"},   {"A1xA1", "a1xa1.json"},
      {"GL2xGL2", "gl2xgl2.json"}, {"SL3", "sl3.json"},
      {"GL3", "gl3.json"},     {"B2", "b2.json"},
      {"SO5", "so5.json"},     {"G2", "g2.json"},
      {"GL4", "gl4.json"},     {"SL4", "sl4.json"},
  };
  for (const auto& [name, file] : files) {
    Json from_file = load_json_file(dir + file);
    Json embedded = Json::parse(builtin_root_datum_json(name));
    CHECK(from_file == embedded);
  }
}

TEST_CASE("torus character round trip") {
  const Fq& f3 = Fq::get(3, 1);
  FqElem g = f3.generator();
  TorusCharacterDatum nu = TorusCharacterDatum::make(
      3, f3, identity_matrix(2),
      {SmoothCharacter::make(3, 1, g), SmoothCharacter::make(3, 0, f3.one())});
  Json j = torus_character_to_json(nu);
  TorusCharacterDatum back = torus_character_from_json(j);
  CHECK(back == nu);
  // Without a basis the standard basis of the full lattice is implied.
  TorusCharacterDatum bare = torus_character_from_json(Json::parse(
      R"({"q": 3, "field_degree": 1,
          "basis_chars": [{"unit_exponent": 1, "pi_value": [2]},
                          {"unit_exponent": 0, "pi_value": [1]}]})"));
  CHECK(bare == nu);
  CHECK_THROWS_AS(torus_character_from_json(Json::parse(R"({"q": 3})")), Error);
  CHECK_THROWS_AS(torus_character_from_json(Json::parse(
                      R"({"q": 3, "basis": [[1]], "basis_chars": []})")),
                  Error);
}

TEST_CASE("fixture file parses to the built-in fixture") {
  auto gl3 = builtin_root_datum("GL3");
  Json j = load_json_file(std::string(HECKE_DATA_DIR) +
                          "/fixtures/gl3_supersingular_six.json");
  auto data = supersingular_data_from_json(*gl3, j);
  auto expected = gl3_fixture(gl3);
  REQUIRE(data.size() == expected.size());
  for (size_t i = 0; i < data.size(); ++i) {
    CHECK(data[i].label == expected[i].label);
    CHECK(data[i].levi == expected[i].levi);
    CHECK(data[i].central == expected[i].central);
  }
  EnumerationReport rep = enumerate_parameters(gl3, data);
  CHECK(rep.expected == 11);
  CHECK(rep.injective);
}

TEST_CASE("report serialization shapes") {
  auto gl2 = builtin_root_datum("GL2");
  auto rep = verify_dominance_square(*gl2, 0, {1, 0}, 6);
  Json j = cone_report_to_json(rep);
  CHECK(j["schema"] == 1);
  CHECK(j["lemma"] == "dominance-square");
  CHECK(j["cases"] == 2);
  CHECK(j["pass"] == true);
  CHECK(j["counterexamples"].is_array());

  const Fq& f3 = Fq::get(3, 1);
  auto nu = TorusCharacterDatum::trivial(3, f3, identity_matrix(2));
  auto ps = principal_series_analyze(gl2, nu);
  Json pj = principal_series_report_to_json(*gl2, ps);
  CHECK(pj["C"] == 1);
  CHECK(pj["length"] == 2);
  CHECK(pj["factors"].size() == 2);
}
