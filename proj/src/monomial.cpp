#include "fwb/monomial.hpp"

#include <algorithm>
#include <limits>

#include "fwb/error.hpp"

namespace fwb {

Monomial::Monomial(std::span<const Exponent> exps) {
  if (exps.size() > kMaxVars) {
    fail(ErrorCode::kInvalidArgument, "too many variables for a monomial");
  }
  exps_.fill(0);
  std::copy(exps.begin(), exps.end(), exps_.begin());
  for (Exponent e : exps) {
    if (e < 0) fail(ErrorCode::kInvalidArgument, "negative exponent");
  }
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::int64_t Monomial::total_degree() const {
  std::int64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

std::int64_t Monomial::weighted_degree(std::span<const int> weights) const {
  if (weights.empty()) return total_degree();
  std::int64_t d = 0;
  for (std::size_t i = 0; i < weights.size() && i < kMaxVars; ++i) {
    d += static_cast<std::int64_t>(weights[i]) * exps_[i];
  }
  return d;
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t mask = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    if (exps_[static_cast<std::size_t>(i)] != 0) mask |= 1U << std::min(i, 31);
  }
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

namespace {

Exponent checked(std::int64_t v) {
  if (v > std::numeric_limits<Exponent>::max()) {
    fail(ErrorCode::kInvalidArgument, "exponent overflow");
  }
  return static_cast<Exponent>(v);
}

}  // namespace

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = checked(static_cast<std::int64_t>(exps_[i]) + other.exps_[i]);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = exps_[i] - divisor.exps_[i];
  return r;
}

Monomial Monomial::scaled(std::int64_t factor) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = checked(static_cast<std::int64_t>(exps_[i]) * factor);
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  }
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (Exponent e : exps_) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(e));
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

int weight_at(const std::vector<int>& w, int i) {
  return w.empty() ? 1 : w[static_cast<std::size_t>(i)];
}

std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi,
                                   const std::vector<int>& w) {
  std::int64_t da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += static_cast<std::int64_t>(weight_at(w, i)) * a[i];
    db += static_cast<std::int64_t>(weight_at(w, i)) * b[i];
  }
  if (da != db) return da <=> db;
  // Reverse lexicographic tie-break: the smaller trailing exponent is larger.
  for (int i = hi - 1; i >= lo; --i) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b,
                                            int nvars) const {
  switch (kind) {
    case OrderKind::kLex:
      for (int i = 0; i < nvars; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case OrderKind::kBlock: {
      auto c = grevlex_range(a, b, 0, block, weights);
      if (c != 0) return c;
      return grevlex_range(a, b, block, nvars, weights);
    }
    case OrderKind::kGrevlex:
    default:
      return grevlex_range(a, b, 0, nvars, weights);
  }
}

}  // namespace fwb
