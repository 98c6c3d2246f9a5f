#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <charconv>
#include <cstring>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "phasebound/errors.hpp"
#include "phasebound/io.hpp"

using namespace phasebound;
using nlohmann::json;

namespace {

std::string four_point_file(const std::string& re, const std::string& domain = "space") {
  return R"({"dimension": 1, "half_extent": [1.0], "points_per_axis": [4], "domain": ")" + domain +
         R"(", "values_re": )" + re + R"(, "values_im": [0, 0, 0, 0]})";
}

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "phasebound_test_io";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("parse a valid file") {
  const FieldFile f = parse_field_file(four_point_file("[1, 2, 3, 4.5]"));
  CHECK(f.grid == GridSpec::cube(1, 1.0, 4));
  CHECK(f.domain == Domain::space);
  REQUIRE(f.values.size() == 4);
  CHECK(f.values[3] == cplx(4.5, 0.0));

  const FieldFile s = parse_field_file(four_point_file("[1, 2, 3, 4]", "frequency"));
  CHECK(s.domain == Domain::frequency);
}

TEST_CASE("non-finite samples in every spelling are rejected") {
  CHECK_THROWS_AS(parse_field_file(four_point_file("[1, NaN, 3, 4]")), NonFiniteSample);
  CHECK_THROWS_AS(parse_field_file(four_point_file("[1, Infinity, 3, 4]")), NonFiniteSample);
  CHECK_THROWS_AS(parse_field_file(four_point_file("[1, -Infinity, 3, 4]")), NonFiniteSample);
  CHECK_THROWS_AS(parse_field_file(four_point_file("[1, null, 3, 4]")), NonFiniteSample);
  CHECK_THROWS_AS(parse_field_file(four_point_file(R"([1, "NaN", 3, 4])")), NonFiniteSample);
  CHECK_THROWS_AS(parse_field_file(four_point_file("[1, 1e999, 3, 4]")), std::invalid_argument);
}

TEST_CASE("schema violations are malformed files") {
  CHECK_THROWS_AS(parse_field_file("not json"), MalformedFile);
  CHECK_THROWS_AS(parse_field_file("[1, 2]"), MalformedFile);
  CHECK_THROWS_AS(parse_field_file(four_point_file("[1, 2, 3]")), MalformedFile);
  CHECK_THROWS_AS(parse_field_file(four_point_file("[1, 2, 3, 4]", "time")), MalformedFile);
  CHECK_THROWS_AS(parse_field_file(four_point_file(R"([1, "x", 3, 4])")), MalformedFile);
  CHECK_THROWS_AS(parse_field_file(R"({"dimension": 1, "half_extent": [1.0], "points_per_axis": [4]})"), MalformedFile);
  CHECK_THROWS_AS(parse_field_file(R"({"dimension": 1, "half_extent": [1.0], "points_per_axis": [3], "domain": "space",
                                       "values_re": [1, 2, 3], "values_im": [0, 0, 0]})"),
                  MalformedFile);
  CHECK_THROWS_AS(parse_field_file(R"({"dimension": 4, "half_extent": [1.0], "points_per_axis": [4], "domain": "space",
                                       "values_re": [1, 2, 3, 4], "values_im": [0, 0, 0, 0]})"),
                  MalformedFile);
  try {
    parse_field_file(R"({"dimension": 1})");
    FAIL("expected MalformedFile");
  } catch (const MalformedFile& e) {
    CHECK(std::string(e.what()).find("malformed file") != std::string::npos);
  }
}

TEST_CASE("field files round-trip") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n(0.0, 1.0);
  const GridSpec grid(std::vector<double>{0.7, 3.0}, std::vector<std::size_t>{8, 6});
  std::vector<cplx> values(grid.size());
  for (cplx& v : values) v = cplx(n(rng), n(rng));
  const SampledFunction f(grid, values);
  const FieldFile back = parse_field_file(field_to_json(f).dump());
  CHECK(back.grid == grid);
  CHECK(back.values == values);

  const Spectrum s = fourier_transform(f);
  const FieldFile sback = parse_field_file(field_to_json(s).dump());
  CHECK(sback.domain == Domain::frequency);
  CHECK(sback.grid == grid.dual());

  const auto path = temp_dir() / "spectrum.json";
  write_atomically(path, field_to_json(s).dump());
  const SampledFunction loaded = load_function(path);
  CHECK(loaded.grid() == grid);
  for (std::size_t i = 0; i < values.size(); ++i) CHECK(std::abs(loaded[i] - values[i]) < 1e-12);
}

TEST_CASE("missing files") {
  CHECK_THROWS_AS(read_field_file(temp_dir() / "does_not_exist.json"), MalformedFile);
}

TEST_CASE("format_double is the shortest round-trip form") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-2.5e-300) == "-2.5e-300");
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::uint64_t> bits;
  for (int i = 0; i < 10000; ++i) {
    double v;
    const std::uint64_t b = bits(rng);
    std::memcpy(&v, &b, sizeof v);
    if (!std::isfinite(v)) continue;
    const std::string s = format_double(v);
    double back = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    CHECK(back == v);
  }
}

TEST_CASE("report serialization") {
  BoundReport r;
  r.p = 1.25;
  r.lhs = 0.5;
  r.rhs = 1.0;
  r.slack = 0.5;
  const json j = to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"epsilon", "lhs", "p", "rhs", "slack", "squared_form_slack", "term_modulus",
                                         "term_smoothness", "term_translation"});
  const std::string csv = bound_report_csv(r);
  CHECK(csv.substr(0, csv.find('\n')) ==
        "epsilon,lhs,p,rhs,slack,squared_form_slack,term_modulus,term_smoothness,term_translation");
  CHECK(csv.find("\n0,0.5,1.25,1,0.5,0,0,0,0\n") != std::string::npos);

  Lemma1ScanResult scan;
  scan.radius_steps = 3;
  scan.angle_steps = 4;
  const json l = to_json(scan);
  CHECK(l["min_gap"] == 0.0);
  CHECK(l["argmin_z"] == json::array({1.0, 0.0}));
  CHECK(l["steps"] == json::array({3, 4}));

  ScalingResult s;
  s.name = "l2";
  s.parameter_values = {1, 2};
  s.observable_values = {3, 4};
  CHECK(scaling_csv({s}) == "series,parameter,observable\nl2,1,3\nl2,2,4\n");
}

TEST_CASE("atomic writes replace the target") {
  const auto path = temp_dir() / "atomic.txt";
  write_atomically(path, "first");
  write_atomically(path, "second");
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "second");
  auto tmp = path;
  tmp += ".tmp";
  CHECK_FALSE(std::filesystem::exists(tmp));
}
