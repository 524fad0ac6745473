#include "fwb.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <new>
#include <thread>

#include "fwb/error.hpp"
#include "fwb/parser.hpp"
#include "fwb/reports.hpp"
#include "fwb/rng.hpp"

struct fwb_ring {
  fwb::RingSpec spec;
  fwb::QuotientRing ring;
};

namespace {

using fwb::Json;

thread_local std::string last_error;

fwb_status status_of(fwb::ErrorCode code) {
  switch (code) {
    case fwb::ErrorCode::kParse: return FWB_ERR_PARSE;
    case fwb::ErrorCode::kInvalidArgument: return FWB_ERR_INVALID_ARGUMENT;
    case fwb::ErrorCode::kRingMismatch: return FWB_ERR_RING_MISMATCH;
    case fwb::ErrorCode::kResourceLimit: return FWB_ERR_RESOURCE_LIMIT;
    case fwb::ErrorCode::kInconsistent: return FWB_ERR_INCONSISTENT;
    case fwb::ErrorCode::kIo: return FWB_ERR_IO;
  }
  return FWB_ERR_INTERNAL;
}

template <typename F>
fwb_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return FWB_OK;
  } catch (const fwb::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return FWB_ERR_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FWB_ERR_INTERNAL;
  }
}

fwb_config config_or_default(const fwb_config* config) {
  fwb_config c;
  fwb_config_default(&c);
  return config ? *config : c;
}

fwb::RunParams params_of(const fwb_config& c) {
  fwb::RunParams p;
  p.seed = c.seed;
  p.trunc = c.trunc;
  p.e_max = c.e_max;
  p.window = c.window;
  p.samples = c.samples;
  p.power_max = c.power_max;
  p.jobs = c.jobs;
  p.max_pairs = c.max_pairs;
  p.max_degree = c.max_degree;
  return p;
}

void check_config(const fwb_config& c) {
  if (c.trunc < 1 || c.e_max < 1 || c.window < 1 || c.samples < 0 || c.power_max < 1 ||
      c.jobs < 1 || c.max_pairs < 1 || c.max_degree < 1) {
    fwb::fail(fwb::ErrorCode::kInvalidArgument, "run parameters must be positive");
  }
}

fwb::ClosureOptions closure_options(const fwb_config& c) {
  fwb::ClosureOptions o;
  o.e_max = c.e_max;
  o.window = c.window;
  return o;
}

std::string timestamp_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(Json doc, const fwb_config& c, char** out) {
  if (!out) fwb::fail(fwb::ErrorCode::kInvalidArgument, "null output pointer");
  if (c.timestamp) doc["timestamp"] = timestamp_now();
  *out = copy_string(doc.dump(2));
}

const fwb::QuotientRing& ring_of(const fwb_ring* r) {
  if (!r) fwb::fail(fwb::ErrorCode::kInvalidArgument, "null ring handle");
  return r->ring;
}

std::vector<fwb::Polynomial> polys(const fwb::QuotientRing& R, const char* text) {
  if (!text) return {};
  return fwb::parse_polynomial_list(text, R.ambient());
}

std::vector<fwb::Polynomial> required_polys(const fwb::QuotientRing& R, const char* text,
                                            const char* what) {
  if (!text) fwb::fail(fwb::ErrorCode::kInvalidArgument, std::string("missing ") + what);
  return polys(R, text);
}

Json finish(Json doc, const fwb_config& c) {
  doc["params"] = fwb::params_json(params_of(c));
  return doc;
}

std::vector<fwb::Polynomial> sop_or_random(const fwb::QuotientRing& R, const char* sop,
                                           std::uint64_t seed) {
  if (sop) return polys(R, sop);
  return fwb::random_filter_regular_sop(R, seed).elements;
}

}  // namespace

extern "C" {

const char* fwb_version(void) { return "0.1.0"; }

void fwb_config_default(fwb_config* c) {
  if (!c) return;
  c->seed = 42;
  c->trunc = 8;
  c->e_max = 8;
  c->window = 2;
  c->samples = 5;
  c->power_max = 3;
  unsigned hw = std::thread::hardware_concurrency();
  c->jobs = hw ? static_cast<int>(hw) : 1;
  c->max_pairs = 50000;
  c->max_degree = 120;
  c->timestamp = 0;
}

const char* fwb_last_error(void) { return last_error.c_str(); }

const char* fwb_status_name(fwb_status status) {
  switch (status) {
    case FWB_OK: return "ok";
    case FWB_ERR_PARSE: return "parse_error";
    case FWB_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case FWB_ERR_RING_MISMATCH: return "ring_mismatch";
    case FWB_ERR_RESOURCE_LIMIT: return "resource_limit";
    case FWB_ERR_INCONSISTENT: return "inconsistent";
    case FWB_ERR_IO: return "io_error";
    case FWB_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

void fwb_string_free(char* text) { std::free(text); }

namespace {

fwb_status make_ring(fwb::RingSpec spec, const fwb_config* config, fwb_ring** out) {
  return guarded([&] {
    if (!out) fwb::fail(fwb::ErrorCode::kInvalidArgument, "null output pointer");
    fwb_config c = config_or_default(config);
    fwb::GbLimits limits;
    limits.max_pairs = c.max_pairs;
    limits.max_degree = c.max_degree;
    fwb::QuotientRing ring = fwb::build_ring(spec, limits);
    *out = new fwb_ring{std::move(spec), std::move(ring)};
  });
}

}  // namespace

fwb_status fwb_ring_load(const char* source, const fwb_config* config, fwb_ring** out) {
  fwb::RingSpec spec;
  fwb_status s = guarded([&] {
    if (!source) fwb::fail(fwb::ErrorCode::kInvalidArgument, "null ring source");
    spec = fwb::read_ring_spec(source);
  });
  if (s != FWB_OK) return s;
  return make_ring(std::move(spec), config, out);
}

fwb_status fwb_ring_from_json(const char* json, const fwb_config* config, fwb_ring** out) {
  fwb::RingSpec spec;
  fwb_status s = guarded([&] {
    if (!json) fwb::fail(fwb::ErrorCode::kInvalidArgument, "null ring spec");
    spec = fwb::parse_ring_spec(json);
  });
  if (s != FWB_OK) return s;
  return make_ring(std::move(spec), config, out);
}

void fwb_ring_free(fwb_ring* ring) { delete ring; }

int fwb_ring_dim(const fwb_ring* ring) { return ring ? ring->ring.dim() : -1; }

fwb_status fwb_ring_describe(const fwb_ring* ring, char** json_out) {
  return guarded([&] {
    ring_of(ring);
    Json doc{{"schema", "fwb.ring/1"}, {"ring_label", ring->ring.label()}};
    doc["ring"] = fwb::ring_json(ring->spec, ring->ring);
    fwb_config c = config_or_default(nullptr);
    emit(doc, c, json_out);
  });
}

fwb_status fwb_corpus(const fwb_config* config, char** json_out) {
  return guarded([&] {
    fwb_config c = config_or_default(config);
    Json entries = Json::array();
    for (const auto& spec : fwb::corpus()) entries.push_back(fwb::ring_json(spec, fwb::build_ring(spec)));
    Json doc{{"schema", "fwb.corpus/1"}, {"entries", entries}};
    emit(doc, c, json_out);
  });
}

fwb_status fwb_gb(const fwb_ring* ring, const char* ideal, const fwb_config* config,
                  char** json_out) {
  return guarded([&] {
    const fwb::QuotientRing& R = ring_of(ring);
    fwb_config c = config_or_default(config);
    auto gens = required_polys(R, ideal, "ideal");
    fwb::Ideal I = R.ideal(gens);
    Json doc = fwb::report_header("gb", R);
    doc["ideal"] = fwb::polys_json(gens);
    doc["basis"] = fwb::polys_json(I.gb());
    const fwb::GbStats& st = I.gb_stats();
    doc["stats"] = Json{{"pairs_processed", st.pairs_processed},
                        {"reductions_to_zero", st.reductions_to_zero},
                        {"max_degree", st.max_degree}};
    emit(finish(doc, c), c, json_out);
  });
}

fwb_status fwb_nf(const fwb_ring* ring, const char* poly, const char* ideal,
                  const fwb_config* config, char** json_out) {
  return guarded([&] {
    const fwb::QuotientRing& R = ring_of(ring);
    fwb_config c = config_or_default(config);
    if (!poly) fwb::fail(fwb::ErrorCode::kInvalidArgument, "missing polynomial");
    fwb::Polynomial f = fwb::parse_polynomial(poly, R.ambient());
    auto gens = polys(R, ideal);
    fwb::Ideal I = R.ideal(gens);
    fwb::Polynomial r = fwb::normal_form(f, I);
    Json doc = fwb::report_header("nf", R);
    doc["polynomial"] = f.to_string();
    doc["ideal"] = fwb::polys_json(gens);
    doc["normal_form"] = r.to_string();
    doc["member"] = r.is_zero();
    emit(finish(doc, c), c, json_out);
  });
}

fwb_status fwb_dim(const fwb_ring* ring, const char* ideal, const fwb_config* config,
                   char** json_out) {
  return guarded([&] {
    const fwb::QuotientRing& R = ring_of(ring);
    fwb_config c = config_or_default(config);
    auto gens = polys(R, ideal);
    fwb::Ideal I = R.ideal(gens);
    Json doc = fwb::report_header("dim", R);
    doc["ideal"] = fwb::polys_json(gens);
    doc["dim"] = I.is_unit() ? Json(-1) : Json(fwb::dimension(I));
    emit(finish(doc, c), c, json_out);
  });
}

fwb_status fwb_colon(const fwb_ring* ring, const char* ideal, const char* by,
                     const fwb_config* config, char** json_out) {
  return guarded([&] {
    const fwb::QuotientRing& R = ring_of(ring);
    fwb_config c = config_or_default(config);
    auto gens = required_polys(R, ideal, "ideal");
    auto by_gens = required_polys(R, by, "colon ideal");
    fwb::Ideal result = fwb::colon(R.ideal(gens), fwb::Ideal(R.ambient(), by_gens));
    Json doc = fwb::report_header("colon", R);
    doc["ideal"] = fwb::polys_json(gens);
    doc["by"] = fwb::polys_json(by_gens);
    doc["result"] = fwb::polys_json(result.gb());
    emit(finish(doc, c), c, json_out);
  });
}

fwb_status fwb_sat(const fwb_ring* ring, const char* ideal, const char* by,
                   const fwb_config* config, char** json_out) {
  return guarded([&] {
    const fwb::QuotientRing& R = ring_of(ring);
    fwb_config c = config_or_default(config);
    auto gens = required_polys(R, ideal, "ideal");
    fwb::Ideal k = by ? fwb::Ideal(R.ambient(), polys(R, by)) : fwb::Ideal::maximal(R.ambient());
    fwb::Saturation s = fwb::saturation(R.ideal(gens), k);
    Json doc = fwb::report_header("sat", R);
    doc["ideal"] = fwb::polys_json(gens);
    doc["by"] = fwb::polys_json(k.generators());
    doc["result"] = fwb::polys_json(s.ideal.gb());
    doc["exponent"] = s.exponent;
    emit(finish(doc, c), c, json_out);
  });
}

fwb_status fwb_filter_check(const fwb_ring* ring, const char* sequence, const fwb_config* config,
                            char** json_out) {
  return guarded([&] {
    const fwb::QuotientRing& R = ring_of(ring);
    fwb_config c = config_or_default(config);
    auto seq = required_polys(R, sequence, "sequence");
    fwb::FilterCheck f = fwb::check_filter_regular(R, seq);
    Json doc = fwb::report_header("filter-check", R);
    doc["sequence"] = fwb::polys_json(seq);
    doc["regular"] = f.regular;
    doc["first_failure"] = f.first_failure >= 0 ? Json(f.first_failure) : Json(nullptr);
    doc["prefix_ok"] = f.prefix_ok;
    doc["system_of_parameters"] = static_cast<int>(seq.size()) == R.dim()
                                      ? Json(fwb::is_system_of_parameters(R, seq))
                                      : Json(nullptr);
    doc["status"] = f.regular ? "pass" : "fail";
    emit(finish(doc, c), c, json_out);
  });
}

fwb_status fwb_sop_random(const fwb_ring* ring, const fwb_config* config, char** json_out) {
  return guarded([&] {
    const fwb::QuotientRing& R = ring_of(ring);
    fwb_config c = config_or_default(config);
    fwb::FilterSequence f = fwb::random_filter_regular_sop(R, c.seed);
    Json doc = fwb::report_header("sop", R);
    doc["sequence"] = fwb::polys_json(f.elements);
    doc["seed"] = f.seed;
    doc["verified"] = f.verified;
    doc["tries"] = f.tries;
    emit(finish(doc, c), c, json_out);
  });
}

fwb_status fwb_frobenius_power(const fwb_ring* ring, const char* ideal, int e,
                               const fwb_config* config, char** json_out) {
  return guarded([&] {
    const fwb::QuotientRing& R = ring_of(ring);
    fwb_config c = config_or_default(config);
    if (e < 0) fwb::fail(fwb::ErrorCode::kInvalidArgument, "e must be non-negative");
    auto gens = required_polys(R, ideal, "ideal");
    fwb::Ideal b = fwb::frobenius_power(R, R.ideal(gens), e);
    Json doc = fwb::report_header("frobenius-power", R);
    doc["ideal"] = fwb::polys_json(gens);
    doc["e"] = e;
    doc["result"] = fwb::polys_json(b.gb());
    emit(finish(doc, c), c, json_out);
  });
}

fwb_status fwb_frobenius_preimage(const fwb_ring* ring, const char* ideal, int e, fwb_route route,
                                  const fwb_config* config, char** json_out) {
  return guarded([&] {
    const fwb::QuotientRing& R = ring_of(ring);
    fwb_config c = config_or_default(config);
    if (e < 0) fwb::fail(fwb::ErrorCode::kInvalidArgument, "e must be non-negative");
    auto gens = required_polys(R, ideal, "ideal");
    fwb::Ideal k = R.ideal(gens);
    fwb::PreimageRoute r = route == FWB_ROUTE_ELIMINATION      ? fwb::PreimageRoute::kElimination
                           : route == FWB_ROUTE_LINEAR_ALGEBRA ? fwb::PreimageRoute::kLinearAlgebra
                                                               : fwb::PreimageRoute::kAuto;
    if (r == fwb::PreimageRoute::kAuto) {
      r = fwb::linear_algebra_route_applies(k) ? fwb::PreimageRoute::kLinearAlgebra
                                               : fwb::PreimageRoute::kElimination;
    }
    fwb::Ideal pre = fwb::qpower_preimage(k, e, r);
    Json doc = fwb::report_header("preimage", R);
    doc["ideal"] = fwb::polys_json(gens);
    doc["e"] = e;
    doc["route"] = fwb::to_string(r);
    doc["result"] = fwb::polys_json(pre.gb());
    emit(finish(doc, c), c, json_out);
  });
}

fwb_status fwb_frobenius_closure(const fwb_ring* ring, const char* ideal, const fwb_config* config,
                                 char** json_out) {
  return guarded([&] {
    const fwb::QuotientRing& R = ring_of(ring);
    fwb_config c = config_or_default(config);
    check_config(c);
    auto gens = required_polys(R, ideal, "ideal");
    fwb::ClosureResult cl = fwb::frobenius_closure(R, R.ideal(gens), closure_options(c));
    Json doc = fwb::report_header("closure", R);
    doc["ideal"] = fwb::polys_json(gens);
    doc.update(fwb::closure_json(cl));
    emit(finish(doc, c), c, json_out);
  });
}

fwb_status fwb_fte(const fwb_ring* ring, const char* ideal, const fwb_config* config,
                   char** json_out) {
  return guarded([&] {
    const fwb::QuotientRing& R = ring_of(ring);
    fwb_config c = config_or_default(config);
    check_config(c);
    auto gens = required_polys(R, ideal, "ideal");
    fwb::Ideal I = R.ideal(gens);
    fwb::ClosureResult cl = fwb::frobenius_closure(R, I, closure_options(c));
    int fte = fwb::fte_of_ideal(R, I, cl, c.e_max);
    Json doc = fwb::report_header("fte", R);
    doc["ideal"] = fwb::polys_json(gens);
    doc["fte"] = fte;
    doc.update(fwb::closure_json(cl));
    emit(finish(doc, c), c, json_out);
  });
}

namespace {

fwb::FteScanReport run_scan(const fwb::QuotientRing& R, const fwb_config& c) {
  fwb::ScanOptions o;
  o.seed = c.seed;
  o.n_random = c.samples;
  o.power_family_max = c.power_max;
  o.jobs = c.jobs;
  o.closure = closure_options(c);
  return fwb::fte_scan(R, o);
}

}  // namespace

fwb_status fwb_fte_scan(const fwb_ring* ring, const fwb_config* config, char** json_out) {
  return guarded([&] {
    const fwb::QuotientRing& R = ring_of(ring);
    fwb_config c = config_or_default(config);
    check_config(c);
    emit(fwb::fte_scan_json(R, run_scan(R, c), params_of(c)), c, json_out);
  });
}

fwb_status fwb_hsl(const fwb_ring* ring, const char* sop, const fwb_config* config,
                   char** json_out) {
  return guarded([&] {
    const fwb::QuotientRing& R = ring_of(ring);
    fwb_config c = config_or_default(config);
    check_config(c);
    auto seq = sop_or_random(R, sop, fwb::derive_seed(c.seed, 0));
    fwb::HslReport h = fwb::hsl_estimate(R, seq, c.trunc, c.e_max, c.jobs);
    emit(fwb::hsl_json(R, h, params_of(c)), c, json_out);
  });
}

fwb_status fwb_ns_check(const fwb_ring* ring, const uint64_t* seed_a_in, const uint64_t* seed_b_in,
                        const fwb_config* config, char** json_out) {
  return guarded([&] {
    const fwb::QuotientRing& R = ring_of(ring);
    fwb_config c = config_or_default(config);
    check_config(c);
    std::uint64_t seed_a = seed_a_in ? *seed_a_in : fwb::derive_seed(c.seed, 0);
    std::uint64_t seed_b = seed_b_in ? *seed_b_in : fwb::derive_seed(c.seed, 1);
    auto a = fwb::random_filter_regular_sop(R, seed_a).elements;
    auto b = fwb::random_filter_regular_sop(R, seed_b).elements;
    fwb::NsReport ns = fwb::ns_consistency_check(R, a, b, c.trunc);
    Json doc = fwb::ns_json(R, ns, params_of(c));
    doc["seed_a"] = seed_a;
    doc["seed_b"] = seed_b;
    emit(doc, c, json_out);
  });
}

fwb_status fwb_prop34_check(const fwb_ring* ring, const char* sop, int t, int n, int e,
                            const fwb_config* config, char** json_out) {
  return guarded([&] {
    const fwb::QuotientRing& R = ring_of(ring);
    fwb_config c = config_or_default(config);
    check_config(c);
    auto seq = sop_or_random(R, sop, fwb::derive_seed(c.seed, 0));
    fwb::Prop34Report r = fwb::prop34_check(R, seq, t, n, e, c.trunc, closure_options(c));
    Json doc = fwb::prop34_json(R, r, params_of(c));
    doc["params"]["sop"] = fwb::polys_json(seq);
    emit(doc, c, json_out);
  });
}

fwb_status fwb_verify_inequality(const fwb_ring* ring, const fwb_config* config, char** json_out) {
  return guarded([&] {
    const fwb::QuotientRing& R = ring_of(ring);
    fwb_config c = config_or_default(config);
    check_config(c);
    fwb::FteScanReport scan = run_scan(R, c);
    fwb::HslReport h = fwb::hsl_estimate(R, scan.base_sop, c.trunc, c.e_max, c.jobs);
    fwb::InequalityReport r = fwb::verify_inequality(R, scan, h);
    emit(fwb::inequality_json(R, r, scan, h, params_of(c)), c, json_out);
  });
}

fwb_status fwb_render_table(const char* json, char** text_out) {
  return guarded([&] {
    if (!json || !text_out) fwb::fail(fwb::ErrorCode::kInvalidArgument, "null argument");
    Json doc;
    try {
      doc = Json::parse(json);
    } catch (const Json::parse_error& e) {
      fwb::fail(fwb::ErrorCode::kParse, std::string("report is not JSON: ") + e.what());
    }
    *text_out = copy_string(fwb::render_table(doc));
  });
}

}  // extern "C"
