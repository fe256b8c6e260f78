#include <algorithm>
#include <doctest.h>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "tailforge/errors.hpp"
#include "tailforge/montecarlo.hpp"
#include "tailforge/random_tables.hpp"
#include "tailforge/serialization.hpp"
#include "tailforge/toml_lite.hpp"
#include "test_helpers.hpp"

using namespace tailforge;
using nlohmann::json;

TEST_SUITE("serialization") {

TEST_CASE("function tables round-trip through JSON exactly") {
  auto eng = testutil::test_engine(50);
  for (int trial = 0; trial < 20; ++trial) {
    const ProductSpace space = random_product_space(eng, 4, 4);
    const FunctionTable table = random_table(eng, space, -3.0, 3.0);
    const FunctionTable back = table_from_json(table_to_json(table));
    CHECK(back.space() == table.space());
    CHECK(back.values() == table.values());  // shortest round-trip printing is exact
    // the flag is not serialized; the loader infers it from the values
    bool all_positive = true;
    for (double v : table.values()) all_positive = all_positive && v > 0.0;
    CHECK(back.positive() == all_positive);
  }
}

TEST_CASE("vector-valued points survive the round trip") {
  const CoordinateSpace coord({CoordinatePoint::of({0.0, 1.0}), CoordinatePoint::of({1.0, 0.0})},
                              {0.5, 0.5});
  const FunctionTable table(ProductSpace({coord}), {1.5, 2.5}, true);
  const json j = table_to_json(table);
  CHECK(j["coordinates"][0]["points"][0].is_array());
  const FunctionTable back = table_from_json(j);
  CHECK(back.space() == table.space());
  CHECK(back.values() == table.values());
}

TEST_CASE("the positivity flag is inferred from the values") {
  const json j = {{"coordinates", {{{"points", {0.0, 1.0}}, {"weights", {0.5, 0.5}}}}},
                  {"values", {1.0, -2.0}}};
  CHECK_FALSE(table_from_json(j).positive());
  const json jp = {{"coordinates", {{{"points", {0.0, 1.0}}, {"weights", {0.5, 0.5}}}}},
                   {"values", {1.0, 2.0}}};
  CHECK(table_from_json(jp).positive());
}

TEST_CASE("table parsing reports the offending location") {
  CHECK_THROWS_WITH_AS(table_from_json(json::array()), "table must be a JSON object", ParseError);

  const json missing = {{"values", {1.0}}};
  CHECK_THROWS_AS(table_from_json(missing), ParseError);

  const json unknown = {{"coordinates", json::array()}, {"values", json::array()}, {"extra", 1}};
  CHECK_THROWS_AS(table_from_json(unknown), ParseError);

  const json bad_weights = {{"coordinates", {{{"points", {0.0, 1.0}}, {"weights", {0.9, 0.9}}}}},
                            {"values", {1.0, 2.0}}};
  try {
    table_from_json(bad_weights);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("coordinates[0]") != std::string::npos);
  }

  const json bad_point = {{"coordinates", {{{"points", {0.0, "x"}}, {"weights", {0.5, 0.5}}}}},
                          {"values", {1.0, 2.0}}};
  try {
    table_from_json(bad_point);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("points[1]") != std::string::npos);
  }
}

TEST_CASE("load_table reports file and position errors") {
  CHECK_THROWS_AS(load_table("/nonexistent/table.json"), ParseError);
  const auto path = std::filesystem::temp_directory_path() / "tailforge_bad_table.json";
  write_text_file(path, "{ not json ");
  try {
    load_table(path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(path.string()) != std::string::npos);
  }
  std::filesystem::remove(path);
}

TEST_CASE("delta reports serialize choice, sup-norm, and the field") {
  const auto report = delta_squared(testutil::max_table(), PerturbationChoice::kLeftSup);
  const json j = delta_report_to_json(report);
  CHECK(j["choice"] == "left");
  CHECK(j["sup_norm"] == 2.0);
  CHECK(j["delta_sq"] == json({2.0, 0.0, 0.0, 0.0}));
}

TEST_CASE("simulation configs round-trip and reject unknown keys") {
  SimulationConfig config;
  config.ensemble = EnsembleKind::kSymmetric;
  config.n = 8;
  config.k = 2;
  config.dist = EntryDistribution::kUniformReal;
  config.samples = 12345;
  config.pilot_samples = 678;
  config.t_grid = {0.1, 0.2, 0.7};
  config.base_seed = 99;
  config.centering = Centering::kPooledMean;
  const SimulationConfig back = simulation_config_from_json(simulation_config_to_json(config));
  CHECK(back.ensemble == config.ensemble);
  CHECK(back.n == config.n);
  CHECK(back.cols == config.cols);
  CHECK(back.k == config.k);
  CHECK(back.dist == config.dist);
  CHECK(back.samples == config.samples);
  CHECK(back.pilot_samples == config.pilot_samples);
  CHECK(back.t_grid == config.t_grid);
  CHECK(back.base_seed == config.base_seed);
  CHECK(back.centering == config.centering);

  json j = simulation_config_to_json(config);
  j["typo"] = 1;
  CHECK_THROWS_AS(simulation_config_from_json(j), ParseError);
}

TEST_CASE("tail report CSV carries the documented columns") {
  SimulationConfig config;
  config.n = 2;
  config.cols = 4;
  config.samples = 200;
  config.pilot_samples = 100;
  config.t_grid = {0.5, 1.0};
  config.base_seed = 1;
  const TailReport report = tail_estimate(config, 1);
  const std::string csv = tail_report_to_csv(report);
  CHECK(csv.rfind("t,emp_right,emp_left,ci_half,bound_right,bound_left,pass_right,pass_left\n",
                  0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);  // header + one row per t

  const json j = tail_report_to_json(report);
  CHECK(j["rows"].size() == 2);
  CHECK(j.contains("config"));
  CHECK(j["center"].contains("std_error"));
  CHECK(j["all_pass"].is_boolean());

  // the CSV ci_half column is the wider of the two per-side widths
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  std::getline(lines, line);
  std::istringstream fields(line);
  std::string field;
  for (int i = 0; i < 4; ++i) std::getline(fields, field, ',');
  CHECK(std::stod(field) ==
        std::max(report.rows[0].ci_half_right, report.rows[0].ci_half_left));
}

TEST_CASE("spectra CSV lists every eigenvalue with a 1-based k") {
  Spectrum s1{{2.0, 1.0}, SpectrumScaling::kCovariance};
  Spectrum s2{{3.0, 0.5}, SpectrumScaling::kCovariance};
  const std::vector<Spectrum> spectra{s1, s2};
  CHECK(spectra_to_csv(spectra) ==
        "sample_index,k,lambda\n0,1,2\n0,2,1\n1,1,3\n1,2,0.5\n");
}

TEST_CASE("format_double prints shortest round-trip decimals") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0) == "1");
  CHECK(std::stod(format_double(0.1)) == 0.1);
  CHECK(std::stod(format_double(2.0 / 3.0)) == 2.0 / 3.0);
}

TEST_CASE("the TOML subset parses sections, arrays, and scalars") {
  const std::string text = R"(# comment
top_level = 3

[simulate]
ensemble = "covariance"  # trailing comment
n = 4
N = 16
ratio = 0.25
big = 20_000
flag = true
t_grid = [0.25, 0.5,
          0.75]
name = "with \"quotes\" and \n"

[mp_check]
threshold = 5e-2
)";
  const json doc = parse_toml(text);
  CHECK(doc[""]["top_level"] == 3);
  CHECK(doc["simulate"]["ensemble"] == "covariance");
  CHECK(doc["simulate"]["n"] == 4);
  CHECK(doc["simulate"]["N"] == 16);
  CHECK(doc["simulate"]["ratio"] == 0.25);
  CHECK(doc["simulate"]["big"] == 20000);
  CHECK(doc["simulate"]["flag"] == true);
  CHECK(doc["simulate"]["t_grid"] == json({0.25, 0.5, 0.75}));
  CHECK(doc["simulate"]["name"] == "with \"quotes\" and \n");
  CHECK(doc["mp_check"]["threshold"] == 0.05);
}

TEST_CASE("TOML integers and floats keep their types") {
  const json doc = parse_toml("a = 3\nb = 3.0\nc = -2\nd = 1e3\n");
  CHECK(doc[""]["a"].is_number_integer());
  CHECK(doc[""]["b"].is_number_float());
  CHECK(doc[""]["c"] == -2);
  CHECK(doc[""]["d"] == 1000.0);
}

TEST_CASE("TOML errors carry line numbers") {
  try {
    parse_toml("a = 1\nb = \n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_toml("a = 1\na = 2\n"), ParseError);
  CHECK_THROWS_AS(parse_toml("a = {x = 1}\n"), ParseError);
  CHECK_THROWS_AS(parse_toml("[[table]]\n"), ParseError);
  CHECK_THROWS_AS(parse_toml("a = [[1], [2]]\n"), ParseError);
  CHECK_THROWS_AS(parse_toml("a = 1979-05-27\n"), ParseError);
  CHECK_THROWS_AS(parse_toml("a = \"unterminated\n"), ParseError);
}

}  // TEST_SUITE
