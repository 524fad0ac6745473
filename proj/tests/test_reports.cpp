#include <fstream>
#include <set>

#include "doctest.h"
#include "fwb/error.hpp"
#include "fwb/reports.hpp"
#include "test_util.hpp"

using namespace fwb;

TEST_CASE("ring spec parsing") {
  RingSpec s = parse_ring_spec(R"({"p": 2, "vars": ["x", "y", "z"], "relations": ["x^3+y^3+z^3"]})");
  QuotientRing R = build_ring(s);
  CHECK(R.dim() == 2);
  CHECK(R.characteristic() == 2);

  QuotientRing reg = build_ring(parse_ring_spec(R"({"characteristic": 2, "variables": ["x", "y"], "relations": []})"));
  CHECK(reg.dim() == 2);

  try {
    build_ring(parse_ring_spec(R"({"p": 4, "vars": ["x"], "relations": []})"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidArgument);
    CHECK(std::string(e.what()).find("characteristic not prime") != std::string::npos);
  }
  try {
    parse_ring_spec("{\n  \"p\": 2,\n  \"vars\": [x]\n}");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(build_ring(parse_ring_spec(R"({"p": 2, "vars": ["x"], "relations": ["1+x"]})")), Error);
  CHECK_THROWS_AS(build_ring(parse_ring_spec(R"({"p": 2, "vars": ["x"], "relations": ["y"]})")), Error);
  CHECK_THROWS_AS(read_ring_spec("corpus:nope"), Error);
  CHECK_THROWS_AS(read_ring_spec("/nonexistent/ring.json"), Error);

  RingSpec round = parse_ring_spec(ring_spec_to_json(s));
  CHECK(round.variables == s.variables);
  CHECK(round.relations == s.relations);
}

TEST_CASE("bundled corpus") {
  const auto& c = corpus();
  CHECK(c.size() >= 6);
  std::set<std::string> labels;
  for (const auto& spec : c) {
    labels.insert(spec.label);
    QuotientRing R = build_ring(spec);
    CHECK(R.label() == spec.label);
    // The shipped corpus files describe the same rings.
    RingSpec file = read_ring_spec(std::string(FWB_SOURCE_DIR) + "/corpus/" + spec.label + ".json");
    CHECK(file.characteristic == spec.characteristic);
    CHECK(file.variables == spec.variables);
    CHECK(file.relations == spec.relations);
  }
  CHECK(labels.size() == c.size());
  CHECK(build_ring(read_ring_spec("corpus:two-planes")).dim() == 2);
  CHECK(build_ring(read_ring_spec("corpus:depth0")).dim() == 1);
}

TEST_CASE("report documents and tables") {
  QuotientRing R = load_ring_spec("corpus:regular");
  RunParams params;
  HslReport h = hsl_estimate(R, parse_polynomial_list("x, y", R.ambient()), 4, 2);
  Json doc = hsl_json(R, h, params);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"schema", "ring_label", "per_i", "overall", "stable", "params"});
  CHECK(doc["schema"] == "fwb.hsl/1");
  CHECK(doc["params"].contains("probe_trunc"));
  CHECK_FALSE(doc["params"].contains("jobs"));

  std::string table = render_table(doc);
  CHECK(table.find("overall") != std::string::npos);
  CHECK(table.find("per_i") != std::string::npos);

  FteScanReport scan = fte_scan(R);
  Json sdoc = fte_scan_json(R, scan, params);
  std::string stable = render_table(sdoc);
  // One row per sample, plus title, header and rule.
  std::size_t lines = 0;
  auto pos = stable.find("\nsamples\n");
  REQUIRE(pos != std::string::npos);
  for (std::size_t k = pos + 9; k < stable.size() && stable.compare(k, 2, "\n\n") != 0; ++k) {
    if (stable[k] == '\n') ++lines;
  }
  CHECK(lines == scan.samples.size() + 2);

  QuotientRing artin = build_ring(parse_ring_spec(R"({"p": 2, "vars": ["x"], "relations": ["x^2"], "label": "artin"})"));
  FteScanReport empty = fte_scan(artin);
  Json edoc = fte_scan_json(artin, empty, params);
  CHECK(edoc["samples"].is_array());
  CHECK(edoc["samples"].empty());
  CHECK(render_table(edoc).find("samples") != std::string::npos);
}
