// Command-line front end over the C interface.
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fwb.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kSuccess = 0, kCheckFailed = 1, kUsage = 2, kResource = 3 };

int exit_for(fwb_status s) {
  switch (s) {
    case FWB_OK: return kSuccess;
    case FWB_ERR_RESOURCE_LIMIT: return kResource;
    case FWB_ERR_INCONSISTENT:
    case FWB_ERR_INTERNAL: return kCheckFailed;
    default: return kUsage;
  }
}

struct Options {
  std::string ring;
  bool json = false;
  fwb_config config{};
  std::string ideal, poly, by, seq, sop, route = "auto";
  int e = 1;
  std::optional<int> t;
  int n = 1;
  std::optional<std::uint64_t> seed_a, seed_b;
};

int report_error(const Options& o, const std::string& code, const std::string& message, int exit_code) {
  if (o.json) {
    Json doc{{"schema", "fwb.error/1"},
             {"error", {{"code", code}, {"message", message}}},
             {"exit_code", exit_code}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cerr << "error (" << code << "): " << message << "\n";
  }
  return exit_code;
}

int fail_status(const Options& o, fwb_status s) {
  return report_error(o, fwb_status_name(s), fwb_last_error(), exit_for(s));
}

// Prints the report and maps a "fail" verdict to exit code 1.
int emit(const Options& o, char* text) {
  std::string doc_text(text);
  fwb_string_free(text);
  int code = kSuccess;
  Json doc = Json::parse(doc_text);
  if (doc.contains("status") && doc["status"] == "fail") code = kCheckFailed;
  if (o.json) {
    std::cout << doc_text << "\n";
  } else {
    char* table = nullptr;
    fwb_status s = fwb_render_table(doc_text.c_str(), &table);
    if (s != FWB_OK) return fail_status(o, s);
    std::cout << table;
    fwb_string_free(table);
  }
  return code;
}

using RingCommand = std::function<fwb_status(const fwb_ring*, const Options&, char**)>;

int run_on_ring(const Options& o, const RingCommand& cmd) {
  if (o.ring.empty()) return report_error(o, "usage", "--ring is required", kUsage);
  fwb_ring* ring = nullptr;
  fwb_status s = fwb_ring_load(o.ring.c_str(), &o.config, &ring);
  if (s != FWB_OK) return fail_status(o, s);
  char* out = nullptr;
  s = cmd(ring, o, &out);
  fwb_ring_free(ring);
  if (s != FWB_OK) return fail_status(o, s);
  return emit(o, out);
}

const char* opt(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

}  // namespace

int main(int argc, char** argv) {
  Options o;
  fwb_config_default(&o.config);
  o.config.timestamp = 1;

  CLI::App app{"Prime-characteristic commutative algebra workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--ring", o.ring, "ring spec JSON file or corpus:<label>");
  app.add_flag("--json", o.json, "emit a JSON document");
  app.add_option("--seed", o.config.seed, "random seed")->capture_default_str();
  app.add_option("--trunc", o.config.trunc, "truncation level N")->check(CLI::PositiveNumber);
  app.add_option("--emax", o.config.e_max, "largest Frobenius exponent")->check(CLI::PositiveNumber);
  app.add_option("--window", o.config.window, "closure stabilization window")->check(CLI::PositiveNumber);
  app.add_option("--samples", o.config.samples, "random sops in fte-scan")->check(CLI::NonNegativeNumber);
  app.add_option("--power-max", o.config.power_max, "largest n in prefix-power families")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", o.config.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-pairs", o.config.max_pairs, "S-pair cap per Groebner basis")->check(CLI::PositiveNumber);
  app.add_option("--max-degree", o.config.max_degree, "S-pair degree cap")->check(CLI::PositiveNumber);
  app.add_flag("--no-timestamp", [&o](std::int64_t) { o.config.timestamp = 0; },
               "omit the timestamp field");

  std::function<int()> action;
  auto ring_cmd = [&](CLI::App* sub, RingCommand cmd) {
    sub->callback([&o, &action, cmd] { action = [&o, cmd] { return run_on_ring(o, cmd); }; });
  };

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal (relations added)");
  gb->add_option("--ideal", o.ideal)->required();
  ring_cmd(gb, [](const fwb_ring* r, const Options& x, char** out) {
    return fwb_gb(r, x.ideal.c_str(), &x.config, out);
  });

  auto* nf = app.add_subcommand("nf", "normal form modulo an ideal");
  nf->add_option("--poly", o.poly)->required();
  nf->add_option("--ideal", o.ideal);
  ring_cmd(nf, [](const fwb_ring* r, const Options& x, char** out) {
    return fwb_nf(r, x.poly.c_str(), opt(x.ideal), &x.config, out);
  });

  auto* dim = app.add_subcommand("dim", "Krull dimension of R/I");
  dim->add_option("--ideal", o.ideal);
  ring_cmd(dim, [](const fwb_ring* r, const Options& x, char** out) {
    return fwb_dim(r, opt(x.ideal), &x.config, out);
  });

  auto* colon = app.add_subcommand("colon", "ideal quotient (I : K)");
  colon->add_option("--ideal", o.ideal)->required();
  colon->add_option("--by", o.by)->required();
  ring_cmd(colon, [](const fwb_ring* r, const Options& x, char** out) {
    return fwb_colon(r, x.ideal.c_str(), x.by.c_str(), &x.config, out);
  });

  auto* sat = app.add_subcommand("sat", "saturation (I : K^inf), K defaults to m");
  sat->add_option("--ideal", o.ideal)->required();
  sat->add_option("--by", o.by);
  ring_cmd(sat, [](const fwb_ring* r, const Options& x, char** out) {
    return fwb_sat(r, x.ideal.c_str(), opt(x.by), &x.config, out);
  });

  auto* fc = app.add_subcommand("filter-check", "test an m-filter regular sequence");
  fc->add_option("--seq", o.seq)->required();
  ring_cmd(fc, [](const fwb_ring* r, const Options& x, char** out) {
    return fwb_filter_check(r, x.seq.c_str(), &x.config, out);
  });

  auto* sr = app.add_subcommand("sop-random", "random filter regular system of parameters");
  ring_cmd(sr, [](const fwb_ring* r, const Options& x, char** out) {
    return fwb_sop_random(r, &x.config, out);
  });

  auto* frob = app.add_subcommand("frobenius", "Frobenius powers, preimages, closures");
  frob->require_subcommand(1);
  auto* fp = frob->add_subcommand("power", "bracket power I^[p^e]");
  fp->add_option("--ideal", o.ideal)->required();
  fp->add_option("--e", o.e)->check(CLI::NonNegativeNumber);
  ring_cmd(fp, [](const fwb_ring* r, const Options& x, char** out) {
    return fwb_frobenius_power(r, x.ideal.c_str(), x.e, &x.config, out);
  });
  auto* fpre = frob->add_subcommand("preimage", "{x : x^(p^e) in I}");
  fpre->add_option("--ideal", o.ideal)->required();
  fpre->add_option("--e", o.e)->check(CLI::NonNegativeNumber);
  fpre->add_option("--route", o.route)->check(CLI::IsMember({"auto", "elimination", "linear-algebra"}));
  ring_cmd(fpre, [](const fwb_ring* r, const Options& x, char** out) {
    fwb_route route = x.route == "elimination"      ? FWB_ROUTE_ELIMINATION
                      : x.route == "linear-algebra" ? FWB_ROUTE_LINEAR_ALGEBRA
                                                    : FWB_ROUTE_AUTO;
    return fwb_frobenius_preimage(r, x.ideal.c_str(), x.e, route, &x.config, out);
  });
  auto* fcl = frob->add_subcommand("closure", "Frobenius closure I^F");
  fcl->add_option("--ideal", o.ideal)->required();
  ring_cmd(fcl, [](const fwb_ring* r, const Options& x, char** out) {
    return fwb_frobenius_closure(r, x.ideal.c_str(), &x.config, out);
  });
  auto fte_cmd = [](const fwb_ring* r, const Options& x, char** out) {
    return fwb_fte(r, x.ideal.c_str(), &x.config, out);
  };
  auto* ffte = frob->add_subcommand("fte", "Frobenius test exponent of an ideal");
  ffte->add_option("--ideal", o.ideal)->required();
  ring_cmd(ffte, fte_cmd);
  auto* fte = app.add_subcommand("fte", "alias of `frobenius fte`");
  fte->add_option("--ideal", o.ideal)->required();
  ring_cmd(fte, fte_cmd);

  auto* scan = app.add_subcommand("fte-scan", "Fte over random sops and prefix-power families");
  ring_cmd(scan, [](const fwb_ring* r, const Options& x, char** out) {
    return fwb_fte_scan(r, &x.config, out);
  });

  auto* hsl = app.add_subcommand("hsl", "HSL estimate from truncated local cohomology");
  hsl->add_option("--sop", o.sop, "system of parameters (default: random from --seed)");
  ring_cmd(hsl, [](const fwb_ring* r, const Options& x, char** out) {
    return fwb_hsl(r, opt(x.sop), &x.config, out);
  });

  auto* ns = app.add_subcommand("ns-check", "compare local cohomology under two sops");
  ns->add_option("--seed-a", o.seed_a);
  ns->add_option("--seed-b", o.seed_b);
  ring_cmd(ns, [](const fwb_ring* r, const Options& x, char** out) {
    return fwb_ns_check(r, x.seed_a ? &*x.seed_a : nullptr, x.seed_b ? &*x.seed_b : nullptr,
                        &x.config, out);
  });

  auto* p34 = app.add_subcommand("prop34-check", "closure quotients versus nilpotent classes");
  p34->add_option("--sop", o.sop);
  p34->add_option("--t", o.t, "prefix length (default: dim R)");
  p34->add_option("--n", o.n)->check(CLI::PositiveNumber);
  p34->add_option("--e", o.e)->check(CLI::PositiveNumber);
  ring_cmd(p34, [](const fwb_ring* r, const Options& x, char** out) {
    int t = x.t ? *x.t : fwb_ring_dim(r);
    return fwb_prop34_check(r, opt(x.sop), t, x.n, x.e, &x.config, out);
  });

  auto* vi = app.add_subcommand("verify-inequality", "check Fte(R) >= HSL(R)");
  ring_cmd(vi, [](const fwb_ring* r, const Options& x, char** out) {
    return fwb_verify_inequality(r, &x.config, out);
  });

  auto* corpus = app.add_subcommand("corpus", "list the bundled rings");
  corpus->callback([&] {
    action = [&o] {
      char* out = nullptr;
      fwb_status s = fwb_corpus(&o.config, &out);
      if (s != FWB_OK) return fail_status(o, s);
      return emit(o, out);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error(o, "usage", e.what(), kUsage);
  }
  if (!action) return report_error(o, "usage", "no command given", kUsage);
  return action();
}
