#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fwb/quotient_ring.hpp"

namespace fwb {

/// I^[p^e] in a bare polynomial ring: generators raised termwise.
Ideal frobenius_power(const Ideal& ideal, int e);
/// I^[p^e] for a lifted ideal of R: generators raised, relations of R
/// re-added un-raised.
Ideal frobenius_power(const QuotientRing& ring, const Ideal& ideal, int e);

enum class PreimageRoute {
  kAuto,
  /// Eliminate x from K S[y] + (y_i - x_i^q) and rename y -> x.
  kElimination,
  /// Homogeneous zero-dimensional K only: degreewise kernels of the F_p-linear
  /// map v -> NF_K(v^q), plus every monomial of degree > top/q.
  kLinearAlgebra,
};

const char* to_string(PreimageRoute route);

/// Whether the linear-algebra route is available for K (standard grading,
/// homogeneous, zero-dimensional, proper).
bool linear_algebra_route_applies(const Ideal& k);

/// {x in S : x^q in K} for q = p^e. kAuto uses the linear-algebra route when
/// it applies and elimination otherwise.
Ideal qpower_preimage(const Ideal& k, int e, PreimageRoute route = PreimageRoute::kAuto);

struct ClosureOptions {
  int e_max = 8;
  int window = 2;
  PreimageRoute route = PreimageRoute::kAuto;
};

enum class ClosureStatus { kStable, kUnstable };
const char* to_string(ClosureStatus status);

struct ClosureResult {
  Ideal closure;
  /// Last e at which the chain grew (0 if it never did).
  int stabilized_at = 0;
  int window_checked = 0;
  /// closure == I, in which case the answer is exact.
  bool certified = false;
  ClosureStatus status = ClosureStatus::kUnstable;
  /// Reduced GB sizes of J_0, J_1, ...
  std::vector<int> chain_lengths;
  /// J_e = {x : x^(p^e) in I^[p^e]}, e = 0..last computed.
  std::vector<Ideal> chain;
  /// I^[p^e] (lifted), e = 0..last computed.
  std::vector<Ideal> brackets;
};

/// Ascending chain J_e stopped after `window` consecutive equalities or at
/// e_max. Throws Error(kInconsistent) if J_e is not contained in J_{e+1}.
ClosureResult frobenius_closure(const QuotientRing& ring, const Ideal& ideal,
                                const ClosureOptions& options = {});

/// Smallest e <= e_max with g^(p^e) in I^[p^e] for every generator g of the
/// computed closure. Throws Error(kInconsistent) if there is none.
int fte_of_ideal(const QuotientRing& ring, const Ideal& ideal, const ClosureResult& closure,
                 int e_max);

struct FteSample {
  /// "random" (a random filter regular sop) or "prefix-power".
  std::string family;
  int t = 0;
  int n = 1;
  std::uint64_t seed = 0;
  /// Generators in the coordinates of the input ring.
  std::vector<Polynomial> generators;
  std::optional<int> fte;
  bool closure_nontrivial = false;
  int stabilized_at = 0;
  ClosureStatus status = ClosureStatus::kUnstable;
  /// Closure generators beyond the ideal itself (input coordinates).
  std::vector<Polynomial> closure_extra;
  std::string error;
};

struct ScanOptions {
  std::uint64_t seed = 42;
  int n_random = 5;
  int power_family_max = 3;
  int jobs = 1;
  ClosureOptions closure;
};

struct FteScanReport {
  std::vector<FteSample> samples;
  /// Max over successful samples: a lower bound for Fte(R).
  int max_fte = 0;
  /// The fixed sop from which the prefix-power families are built.
  std::vector<Polynomial> base_sop;
  std::uint64_t base_seed = 0;
  ScanOptions options;
};

/// Fte over n_random random filter regular sops and the families
/// (x_1^n..x_t^n, x_{t+1}..x_d) of one fixed sop, 1 <= t <= d, n <= power_family_max.
FteScanReport fte_scan(const QuotientRing& ring, const ScanOptions& options = {});

}  // namespace fwb
