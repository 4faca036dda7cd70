#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>

#include "casimir/scene.hpp"

using namespace casimir;

namespace {

const char* kTwoSpheres = R"({
  "field": {"kind": "em"},
  "bodies": [
    {"shape": {"type": "sphere_shell", "radius": 0.25, "center": [0, 0, 0]},
     "susceptibility": {"model": "constant", "chi0": 1.0}},
    {"shape": {"type": "sphere_shell", "radius": 0.25, "center": [2, 0, 0]},
     "susceptibility": {"model": "constant", "chi0": 1.0}}
  ],
  "thermal": {"mode": "zero_t", "rel_tol": 1e-8},
  "quadrature": {"angular_order": 12, "radial_order": 6},
  "task": "energy"
})";

bool has_error_containing(const ParseOutcome& out, const std::string& needle) {
  for (const auto& e : out.errors) {
    if (e.find(needle) != std::string::npos) return true;
  }
  return false;
}

std::string replace_all(std::string text, const std::string& from,
                        const std::string& to) {
  for (std::size_t pos = 0; (pos = text.find(from, pos)) != std::string::npos;
       pos += to.size()) {
    text.replace(pos, from.size(), to);
  }
  return text;
}

}  // namespace

TEST_CASE("a minimal two-sphere scene parses and runs") {
  const ParseOutcome out = parse_config(kTwoSpheres);
  REQUIRE(out.config.has_value());
  CHECK(out.errors.empty());
  std::ostringstream csv;
  CHECK(run_task(*out.config, csv) == 0);
  const std::string text = csv.str();
  CHECK(text.rfind("parameter,energy,quad_error,thermal_tail,oracle,rel_deviation\n", 0) == 0);
  // Header plus exactly one data row.
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  // With sphere shells at zero T the closed-form column is populated and close.
  const std::size_t last_comma = text.rfind(',');
  const double dev = std::stod(text.substr(last_comma + 1));
  CHECK(dev < 1e-3);
}

TEST_CASE("overlapping spheres are rejected with a path-addressed error") {
  const std::string bad = replace_all(kTwoSpheres, "[2, 0, 0]", "[0.4, 0, 0]");
  const ParseOutcome out = parse_config(bad);
  CHECK_FALSE(out.config.has_value());
  CHECK(has_error_containing(out, "bodies[1].center"));
  CHECK(has_error_containing(out, "overlap"));
}

TEST_CASE("unknown enumerations name the allowed values") {
  const ParseOutcome kind = parse_config(replace_all(kTwoSpheres, "\"em\"", "\"foo\""));
  CHECK_FALSE(kind.config.has_value());
  CHECK(has_error_containing(kind, "field.kind"));
  CHECK(has_error_containing(kind, "scalar, em, proca"));

  const ParseOutcome shape =
      parse_config(replace_all(kTwoSpheres, "sphere_shell", "cube"));
  CHECK_FALSE(shape.config.has_value());
  CHECK(has_error_containing(shape, "bodies[0].shape.type"));

  const ParseOutcome invalid = parse_config("{ not json");
  CHECK_FALSE(invalid.config.has_value());
}

TEST_CASE("dimension mismatches are caught at parse time") {
  const std::string mismatched = replace_all(
      kTwoSpheres, "{\"kind\": \"em\"}", "{\"kind\": \"scalar\", \"dim\": 2}");
  const ParseOutcome out = parse_config(mismatched);
  CHECK_FALSE(out.config.has_value());
  CHECK(has_error_containing(out, "dimension"));
}

TEST_CASE("sweep task emits a monotone energy column with oracle values") {
  std::string sweep = replace_all(kTwoSpheres, "\"task\": \"energy\"",
                                  "\"task\": \"sweep\", \"sweep\": "
                                  "{\"parameter\": \"R\", \"min\": 2.0, \"max\": 8.0, "
                                  "\"points\": 10, \"scale\": \"log\"}");
  const ParseOutcome out = parse_config(sweep);
  REQUIRE(out.config.has_value());
  std::ostringstream csv;
  CHECK(run_task(*out.config, csv) == 0);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);  // header
  int rows = 0;
  double prev = -1e300;
  while (std::getline(lines, line)) {
    ++rows;
    const std::size_t c1 = line.find(',');
    const std::size_t c2 = line.find(',', c1 + 1);
    const double energy = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    CHECK(energy < 0.0);
    CHECK(energy > prev);
    prev = energy;
  }
  CHECK(rows == 10);
}

TEST_CASE("temperature sweeps run on the finite-T path") {
  std::string sweep = replace_all(kTwoSpheres, "\"task\": \"energy\"",
                                  "\"task\": \"sweep\", \"sweep\": "
                                  "{\"parameter\": \"T\", \"min\": 0.2, \"max\": 1.0, "
                                  "\"points\": 3, \"scale\": \"linear\"}");
  const ParseOutcome out = parse_config(sweep);
  REQUIRE(out.config.has_value());
  std::ostringstream csv;
  CHECK(run_task(*out.config, csv) == 0);
  const std::string text = csv.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
  CHECK(text.find("\n0.2000") != std::string::npos);  // %.17g rendering of 0.2
  CHECK(text.find(",-") != std::string::npos);        // attractive energies
}

TEST_CASE("a vanishing susceptibility yields an exactly zero energy column") {
  const std::string zero = replace_all(kTwoSpheres, "\"chi0\": 1.0", "\"chi0\": 0.0");
  const ParseOutcome out = parse_config(zero);
  REQUIRE(out.config.has_value());
  std::ostringstream csv;
  CHECK(run_task(*out.config, csv) == 0);
  const std::string text = csv.str();
  const std::size_t c1 = text.find(',', text.find('\n'));
  CHECK(text.substr(c1 + 1, 2) == "0,");
}

TEST_CASE("identical config runs are byte-identical") {
  const ParseOutcome out = parse_config(kTwoSpheres);
  REQUIRE(out.config.has_value());
  std::ostringstream a, b;
  run_task(*out.config, a);
  run_task(*out.config, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("convergence failures surface as exit code 3") {
  // A dispersionless 1D pair at zero temperature has an infrared-divergent
  // energy; the frequency integral correctly refuses to converge.
  const char* diverging = R"({
    "field": {"kind": "scalar", "dim": 1},
    "bodies": [
      {"shape": {"type": "interval", "a": 0.0, "b": 1.0},
       "susceptibility": {"model": "constant", "chi0": 1.0}},
      {"shape": {"type": "interval", "a": 2.0, "b": 3.0},
       "susceptibility": {"model": "constant", "chi0": 1.0}}
    ],
    "thermal": {"mode": "zero_t"},
    "quadrature": {"radial_order": 4},
    "task": "energy"
  })";
  const ParseOutcome out = parse_config(diverging);
  REQUIRE(out.config.has_value());
  std::ostringstream csv;
  CHECK(run_task(*out.config, csv) == 3);
}

TEST_CASE("series task appends the log-det resummation row") {
  const std::string series = replace_all(kTwoSpheres, "\"task\": \"energy\"",
                                         "\"task\": \"series\", \"series\": {\"n_max\": 3}");
  std::string finite = replace_all(series, "{\"mode\": \"zero_t\", \"rel_tol\": 1e-8}",
                                   "{\"mode\": \"finite_t\", \"temperature\": 0.5}");
  finite = replace_all(finite, "\"angular_order\": 12, \"radial_order\": 6",
                       "\"angular_order\": 5, \"radial_order\": 4");
  const ParseOutcome out = parse_config(finite);
  REQUIRE(out.config.has_value());
  std::ostringstream csv;
  CHECK(run_task(*out.config, csv) == 0);
  // Header, three orders, one resummation row.
  const std::string text = csv.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
}
