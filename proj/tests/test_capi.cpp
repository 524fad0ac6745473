// Exercises the shared library through include/fwb.h only.
#include <cstdlib>
#include <string>
#include <thread>

#include "doctest.h"
#include "fwb.h"
#include "json.hpp"

using Json = nlohmann::json;

namespace {

Json take(char* text) {
  REQUIRE(text != nullptr);
  Json doc = Json::parse(text);
  fwb_string_free(text);
  return doc;
}

struct Ring {
  fwb_ring* handle = nullptr;
  explicit Ring(const char* source) {
    fwb_config c;
    fwb_config_default(&c);
    REQUIRE(fwb_ring_load(source, &c, &handle) == FWB_OK);
  }
  ~Ring() { fwb_ring_free(handle); }
};

}  // namespace

TEST_CASE("configuration defaults") {
  fwb_config c;
  fwb_config_default(&c);
  CHECK(c.seed == 42);
  CHECK(c.trunc == 8);
  CHECK(c.e_max == 8);
  CHECK(c.window == 2);
  CHECK(c.samples == 5);
  CHECK(c.power_max == 3);
  CHECK(c.jobs >= 1);
  CHECK(c.timestamp == 0);
  CHECK(std::string(fwb_status_name(FWB_ERR_RESOURCE_LIMIT)) == "resource_limit");
  fwb_string_free(nullptr);
  fwb_ring_free(nullptr);
}

TEST_CASE("ring handles and errors") {
  fwb_ring* r = nullptr;
  CHECK(fwb_ring_load("corpus:missing", nullptr, &r) == FWB_ERR_IO);
  CHECK(r == nullptr);
  CHECK(std::string(fwb_last_error()).find("missing") != std::string::npos);
  CHECK(fwb_ring_from_json(R"({"p": 9, "vars": ["x"]})", nullptr, &r) == FWB_ERR_INVALID_ARGUMENT);
  CHECK(std::string(fwb_last_error()).find("characteristic not prime") != std::string::npos);
  CHECK(fwb_ring_from_json("{oops", nullptr, &r) == FWB_ERR_PARSE);

  REQUIRE(fwb_ring_from_json(R"({"p": 3, "vars": ["x", "y"], "relations": ["x*y"], "label": "axes"})",
                             nullptr, &r) == FWB_OK);
  CHECK(fwb_ring_dim(r) == 1);
  char* out = nullptr;
  REQUIRE(fwb_ring_describe(r, &out) == FWB_OK);
  Json d = take(out);
  CHECK(d["ring"]["label"] == "axes");
  CHECK(fwb_gb(r, "x+", nullptr, &out) == FWB_ERR_PARSE);
  CHECK(fwb_gb(nullptr, "x", nullptr, &out) == FWB_ERR_INVALID_ARGUMENT);
  fwb_ring_free(r);

  // The last error is per thread.
  std::string other;
  std::thread([&] { other = fwb_last_error(); }).join();
  CHECK(other.empty());

  std::string path = std::string(std::getenv("FWB_CORPUS_DIR") ? std::getenv("FWB_CORPUS_DIR") : "corpus") +
                     "/fermat2.json";
  REQUIRE(fwb_ring_load(path.c_str(), nullptr, &r) == FWB_OK);
  CHECK(fwb_ring_dim(r) == 2);
  fwb_ring_free(r);
}

TEST_CASE("algebra through the C interface") {
  Ring f("corpus:fermat2");
  char* out = nullptr;
  REQUIRE(fwb_gb(f.handle, "y,z", nullptr, &out) == FWB_OK);
  Json gb = take(out);
  CHECK(gb["schema"] == "fwb.gb/1");
  CHECK(gb["basis"] == Json::array({"z", "y", "x^3"}));

  REQUIRE(fwb_fte(f.handle, "y,z", nullptr, &out) == FWB_OK);
  Json fte = take(out);
  CHECK(fte["fte"] == 1);
  CHECK(fte["closure"] == Json::array({"z", "y", "x^2"}));
  CHECK_FALSE(fte.contains("timestamp"));

  fwb_config c;
  fwb_config_default(&c);
  c.timestamp = 1;
  REQUIRE(fwb_frobenius_preimage(f.handle, "y^2,z^2", 1, FWB_ROUTE_AUTO, &c, &out) == FWB_OK);
  Json pre = take(out);
  CHECK(pre.contains("timestamp"));
  CHECK(pre["route"] == "linear-algebra");
  CHECK(pre["result"] == Json::array({"z", "y", "x^2"}));

  REQUIRE(fwb_prop34_check(f.handle, "y,z", 2, 1, 1, nullptr, &out) == FWB_OK);
  Json p = take(out);
  CHECK(p["status"] == "pass");
  CHECK(p["forward"][0]["generator"] == "x^2");

  c.trunc = 2;
  CHECK(fwb_prop34_check(f.handle, "y,z", 2, 2, 1, &c, &out) == FWB_ERR_INVALID_ARGUMENT);
  c.trunc = 0;
  CHECK(fwb_hsl(f.handle, nullptr, &c, &out) == FWB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("local cohomology through the C interface") {
  Ring t("corpus:two-planes");
  fwb_config c;
  fwb_config_default(&c);
  c.trunc = 6;
  std::uint64_t a = 1, b = 2;
  char* out = nullptr;
  REQUIRE(fwb_ns_check(t.handle, &a, &b, &c, &out) == FWB_OK);
  Json ns = take(out);
  CHECK(ns["status"] == "pass");
  CHECK(ns["per_i"][1]["stable_a"] == 1);
  CHECK(ns["seed_a"] == 1);

  Ring reg("corpus:regular");
  REQUIRE(fwb_verify_inequality(reg.handle, nullptr, &out) == FWB_OK);
  Json v = take(out);
  CHECK(v["status"] == "pass");
  CHECK(v["equal"] == true);

  REQUIRE(fwb_hsl(reg.handle, "x,y", &c, &out) == FWB_OK);
  std::string text(out);
  char* table = nullptr;
  REQUIRE(fwb_render_table(text.c_str(), &table) == FWB_OK);
  CHECK(std::string(table).find("overall") != std::string::npos);
  fwb_string_free(table);
  fwb_string_free(out);
  CHECK(fwb_render_table("not json", &table) == FWB_ERR_PARSE);

  REQUIRE(fwb_corpus(nullptr, &out) == FWB_OK);
  Json corpus = take(out);
  CHECK(corpus["entries"].size() >= 6);
}
