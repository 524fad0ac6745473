#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fwb/quotient_ring.hpp"

namespace fwb {

struct FilterCheck {
  bool regular = true;
  /// 0-based index of the first failing element, or -1.
  int first_failure = -1;
  /// prefix_ok[i]: element i passes the colon-saturation criterion against
  /// the ideal of the elements before it.
  std::vector<bool> prefix_ok;
};

/// Tests whether `seq` is a `target`-filter regular sequence on R (target
/// defaults to m) by the criterion (J_{i-1} : x_i) subset (J_{i-1} : target^inf),
/// J_{i-1} the lifted ideal of x_1..x_{i-1}. Throws Error(kInvalidArgument) if
/// an element is outside the target ideal.
FilterCheck check_filter_regular(const QuotientRing& ring, const std::vector<Polynomial>& seq,
                                 const std::optional<Ideal>& target = std::nullopt);

/// dim R/(seq) = 0. Throws Error(kInvalidArgument) when the length differs
/// from dim R.
bool is_system_of_parameters(const QuotientRing& ring, const std::vector<Polynomial>& seq);

struct FilterSequence {
  std::vector<Polynomial> elements;
  std::vector<bool> verified;
  std::uint64_t seed = 0;
  /// Total random draws spent, over all prefixes.
  int tries = 0;
};

/// d random F_p-linear forms forming an m-filter regular system of
/// parameters; each prefix is redrawn up to `max_tries` times. Throws
/// Error(kResourceLimit) when the tries are exhausted.
FilterSequence random_filter_regular_sop(const QuotientRing& ring, std::uint64_t seed,
                                         int max_tries = 64);

}  // namespace fwb
