#include "fwb/reports.hpp"

#include <algorithm>
#include <sstream>

namespace fwb {

Json params_json(const RunParams& p) {
  return Json{{"seed", p.seed},           {"trunc", p.trunc},         {"e_max", p.e_max},
              {"window", p.window},       {"samples", p.samples},     {"power_max", p.power_max},
              {"max_pairs", p.max_pairs}, {"max_degree", p.max_degree}};
}

Json polys_json(const std::vector<Polynomial>& polys) {
  Json out = Json::array();
  for (const auto& f : polys) out.push_back(f.to_string());
  return out;
}

Json report_header(const std::string& kind, const QuotientRing& ring) {
  return Json{{"schema", "fwb." + kind + "/1"}, {"ring_label", ring.label()}};
}

Json ring_json(const RingSpec& spec, const QuotientRing& ring) {
  Json out{{"label", spec.label},
           {"characteristic", spec.characteristic},
           {"variables", spec.variables},
           {"relations", spec.relations}};
  out["grading"] = spec.grading ? Json(*spec.grading) : Json(nullptr);
  out["dim"] = ring.dim();
  return out;
}

Json closure_json(const ClosureResult& c) {
  return Json{{"closure", polys_json(c.closure.gb())},
              {"stabilized_at", c.stabilized_at},
              {"window_checked", c.window_checked},
              {"certified", c.certified},
              {"closure_status", to_string(c.status)},
              {"chain_lengths", c.chain_lengths}};
}

Json sample_json(const FteSample& s) {
  return Json{{"family", s.family},
              {"t", s.t},
              {"n", s.n},
              {"seed", s.seed},
              {"generators", polys_json(s.generators)},
              {"fte", s.fte ? Json(*s.fte) : Json(nullptr)},
              {"closure_nontrivial", s.closure_nontrivial},
              {"stabilized_at", s.stabilized_at},
              {"closure_status", to_string(s.status)},
              {"closure_extra", polys_json(s.closure_extra)},
              {"error", s.error}};
}

Json fte_scan_json(const QuotientRing& ring, const FteScanReport& scan, const RunParams& params) {
  Json out = report_header("fte-scan", ring);
  Json samples = Json::array();
  for (const auto& s : scan.samples) samples.push_back(sample_json(s));
  out["samples"] = samples;
  out["max_fte"] = scan.max_fte;
  out["base_sop"] = polys_json(scan.base_sop);
  out["base_seed"] = scan.base_seed;
  out["params"] = params_json(params);
  return out;
}

namespace {

Json classes_json(const std::vector<NilpotentClass>& classes) {
  Json out = Json::array();
  for (const auto& c : classes) {
    out.push_back(Json{{"level", c.level},
                       {"order", c.order},
                       {"representative", c.representative.to_string()}});
  }
  return out;
}

Json optional_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json hsl_json(const QuotientRing& ring, const HslReport& hsl, const RunParams& params) {
  Json out = report_header("hsl", ring);
  Json per_i = Json::array();
  for (const auto& c : hsl.per_i) {
    per_i.push_back(Json{{"i", c.i},
                         {"value", c.value},
                         {"probe_value", c.probe_value},
                         {"stable", c.stable},
                         {"lengths", c.lengths},
                         {"witnesses", classes_json(c.witnesses)},
                         {"error", c.error}});
  }
  out["per_i"] = per_i;
  out["overall"] = hsl.overall;
  out["stable"] = hsl.stable;
  Json p = params_json(params);
  p["trunc"] = hsl.top;
  p["e_max"] = hsl.e_max;
  p["probe_trunc"] = hsl.probe_top;
  p["probe_e_max"] = hsl.probe_e_max;
  p["sop"] = polys_json(hsl.sop);
  out["params"] = p;
  return out;
}

Json ns_json(const QuotientRing& ring, const NsReport& ns, const RunParams& params) {
  Json out = report_header("ns-check", ring);
  Json per_i = Json::array();
  for (const auto& c : ns.per_i) {
    per_i.push_back(Json{{"i", c.i},
                         {"lengths_a", c.lengths_a},
                         {"lengths_b", c.lengths_b},
                         {"stable_a", optional_size(c.stable_a)},
                         {"stable_b", optional_size(c.stable_b)},
                         {"koszul_totals", c.koszul_totals},
                         {"koszul_n", c.koszul_n},
                         {"status", to_string(c.status)},
                         {"detail", c.detail}});
  }
  out["per_i"] = per_i;
  out["sop_a"] = polys_json(ns.sop_a);
  out["sop_b"] = polys_json(ns.sop_b);
  out["status"] = to_string(ns.status);
  out["first_disagreement"] = ns.first_disagreement;
  Json p = params_json(params);
  p["trunc"] = ns.top;
  out["params"] = p;
  return out;
}

Json prop34_json(const QuotientRing& ring, const Prop34Report& r, const RunParams& params) {
  Json out = report_header("prop34", ring);
  out["t"] = r.t;
  out["n"] = r.n;
  out["e"] = r.e;
  Json fwd = Json::array();
  for (const auto& f : r.forward) {
    fwd.push_back(Json{{"generator", f.generator.to_string()},
                       {"order", f.order ? Json(*f.order) : Json(nullptr)},
                       {"evidence", f.evidence}});
  }
  Json bwd = Json::array();
  for (const auto& b : r.backward) {
    bwd.push_back(Json{{"level", b.level},
                       {"order", b.order},
                       {"representative", b.representative.to_string()},
                       {"traced_to", b.traced_to ? Json(*b.traced_to) : Json(nullptr)}});
  }
  out["forward"] = fwd;
  out["backward"] = bwd;
  out["forward_ok"] = r.forward_ok;
  out["backward_ok"] = r.backward_ok;
  out["status"] = r.pass ? "pass" : "fail";
  Json p = params_json(params);
  p["trunc"] = r.top;
  out["params"] = p;
  return out;
}

Json inequality_json(const QuotientRing& ring, const InequalityReport& r, const FteScanReport& scan,
                     const HslReport& hsl, const RunParams& params) {
  Json out = report_header("inequality", ring);
  out["max_fte"] = r.max_fte;
  out["hsl"] = r.hsl;
  out["hsl_stable"] = r.hsl_stable;
  out["equal"] = r.equal;
  out["status"] = to_string(r.status);
  Json families = Json::array();
  for (const auto& s : scan.samples) {
    families.push_back(Json{{"family", s.family},
                            {"t", s.t},
                            {"n", s.n},
                            {"fte", s.fte ? Json(*s.fte) : Json(nullptr)},
                            {"error", s.error}});
  }
  out["families"] = families;
  Json mech = Json::array();
  for (const auto& m : r.mechanism) {
    mech.push_back(Json{{"n", m.n},
                        {"fte", m.fte},
                        {"generator", m.generator.to_string()},
                        {"order", m.order},
                        {"ok", m.ok}});
  }
  out["mechanism"] = mech;
  out["mechanism_ok"] = r.mechanism_ok;
  Json hsl_part = Json::array();
  for (const auto& c : hsl.per_i) {
    hsl_part.push_back(Json{{"i", c.i}, {"value", c.value}, {"stable", c.stable}, {"error", c.error}});
  }
  out["hsl_per_i"] = hsl_part;
  Json p = params_json(params);
  p["sop"] = polys_json(hsl.sop);
  out["params"] = p;
  return out;
}

// ---------------------------------------------------------------------------
// Tables

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) {
      if (!s.empty()) s += ", ";
      s += cell(x);
    }
    return "[" + s + "]";
  }
  if (v.is_object()) return v.dump();
  return v.dump();
}

bool is_table(const Json& v) {
  return v.is_array() && !v.empty() &&
         std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_object(); });
}

void render_rows(std::ostringstream& os, const std::string& title, const Json& rows) {
  std::vector<std::string> cols;
  for (const auto& row : rows) {
    for (const auto& [k, v] : row.items()) {
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    }
  }
  std::vector<std::vector<std::string>> grid;
  grid.push_back(cols);
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (const auto& c : cols) line.push_back(row.contains(c) ? cell(row.at(c)) : "");
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width(cols.size(), 0);
  for (const auto& line : grid) {
    for (std::size_t k = 0; k < line.size(); ++k) width[k] = std::max(width[k], line[k].size());
  }
  os << title << "\n";
  for (std::size_t r = 0; r < grid.size(); ++r) {
    os << " ";
    for (std::size_t k = 0; k < grid[r].size(); ++k) {
      os << " " << grid[r][k];
      if (k + 1 < grid[r].size()) os << std::string(width[k] - grid[r][k].size() + 1, ' ');
    }
    os << "\n";
    if (r == 0) {
      os << " ";
      for (std::size_t k = 0; k < width.size(); ++k) os << " " << std::string(width[k], '-') << (k + 1 < width.size() ? " " : "");
      os << "\n";
    }
  }
}

void render_object(std::ostringstream& os, const Json& doc, const std::string& prefix) {
  std::size_t key_width = 0;
  for (const auto& [k, v] : doc.items()) {
    if (!v.is_object() && !is_table(v)) key_width = std::max(key_width, prefix.size() + k.size());
  }
  for (const auto& [k, v] : doc.items()) {
    if (v.is_object() || is_table(v)) continue;
    std::string key = prefix + k;
    os << key << std::string(key_width - key.size() + 2, ' ') << cell(v) << "\n";
  }
  for (const auto& [k, v] : doc.items()) {
    if (v.is_object()) render_object(os, v, prefix + k + ".");
  }
  for (const auto& [k, v] : doc.items()) {
    if (is_table(v)) {
      os << "\n";
      render_rows(os, prefix + k, v);
    }
  }
}

}  // namespace

std::string render_table(const Json& doc) {
  std::ostringstream os;
  if (doc.is_object()) {
    render_object(os, doc, "");
  } else {
    os << cell(doc) << "\n";
  }
  return os.str();
}

}  // namespace fwb
