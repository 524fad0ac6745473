#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fwb/filter_regular.hpp"
#include "fwb/frobenius.hpp"
#include "fwb/localcoh.hpp"
#include "fwb/ring_spec.hpp"
#include "json.hpp"

namespace fwb {

using Json = nlohmann::ordered_json;

/// Run parameters echoed into every report. `jobs` is deliberately not
/// serialized: it never changes a result.
struct RunParams {
  std::uint64_t seed = 42;
  int trunc = 8;
  int e_max = 8;
  int window = 2;
  int samples = 5;
  int power_max = 3;
  int jobs = 1;
  std::int64_t max_pairs = 50000;
  int max_degree = 120;
};

Json params_json(const RunParams& params);
Json polys_json(const std::vector<Polynomial>& polys);
/// Header shared by all documents: {"schema": "fwb.<kind>/1", "ring_label": ...}.
Json report_header(const std::string& kind, const QuotientRing& ring);

Json ring_json(const RingSpec& spec, const QuotientRing& ring);
Json closure_json(const ClosureResult& c);
Json sample_json(const FteSample& s);
Json fte_scan_json(const QuotientRing& ring, const FteScanReport& scan, const RunParams& params);
Json hsl_json(const QuotientRing& ring, const HslReport& hsl, const RunParams& params);
Json ns_json(const QuotientRing& ring, const NsReport& ns, const RunParams& params);
Json prop34_json(const QuotientRing& ring, const Prop34Report& r, const RunParams& params);
Json inequality_json(const QuotientRing& ring, const InequalityReport& r, const FteScanReport& scan,
                     const HslReport& hsl, const RunParams& params);

/// Human-readable rendering of any report document: scalars as aligned
/// "key  value" lines, arrays of objects as tables (one row per element).
std::string render_table(const Json& doc);

}  // namespace fwb
