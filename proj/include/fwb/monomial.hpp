#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace fwb {

/// Hard ceiling on variables in any ring, including the auxiliary rings built
/// for elimination (2n variables) and tag-variable tricks (n + 1).
inline constexpr int kMaxVars = 16;
/// User-facing rings leave room for the doubled elimination ring.
inline constexpr int kMaxAmbientVars = kMaxVars / 2;

using Exponent = std::int32_t;

/// Exponent vector. Slots past the ring's variable count are always zero, so
/// equality and hashing need no knowledge of the ring.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  explicit Monomial(std::span<const Exponent> exps);

  Exponent operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  Exponent& operator[](int i) { return exps_[static_cast<std::size_t>(i)]; }

  bool is_one() const;
  std::int64_t total_degree() const;
  std::int64_t weighted_degree(std::span<const int> weights) const;
  /// Bit i set iff variable i occurs (variables >= 32 fold into bit 31).
  std::uint32_t support_mask() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; `divisor` must divide *this.
  Monomial operator/(const Monomial& divisor) const;
  /// Raises every exponent to `factor` times itself; throws on int32 overflow.
  Monomial scaled(std::int64_t factor) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const;
  const std::array<Exponent, kMaxVars>& exponents() const { return exps_; }

 private:
  std::array<Exponent, kMaxVars> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { kGrevlex, kLex, kBlock };

/// A multiplicative well-order on monomials.
///  - kGrevlex: weighted degree, ties broken reverse-lexicographically.
///  - kLex: plain lexicographic with x_0 > x_1 > ...
///  - kBlock: the first `block` variables are compared (weighted grevlex)
///    before the rest (weighted grevlex); eliminates the first block.
struct MonomialOrder {
  OrderKind kind = OrderKind::kGrevlex;
  int block = 0;
  /// Positive per-variable weights for the degree comparisons; empty means 1.
  std::vector<int> weights;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::kLex, 0, {}}; }
  static MonomialOrder elimination(int block, std::vector<int> weights = {}) {
    return {OrderKind::kBlock, block, std::move(weights)};
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b, int nvars) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

}  // namespace fwb
