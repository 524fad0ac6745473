#pragma once

#include <cstdint>

namespace fwb {

using Coeff = std::uint32_t;

/// The prime field F_p for 2 <= p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  /// Throws Error(kInvalidArgument) unless p is a prime below 2^31.
  explicit PrimeField(std::int64_t p);

  Coeff characteristic() const noexcept { return p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;
  /// Multiplicative inverse; a must be nonzero.
  Coeff inv(Coeff a) const;
  /// Reduces an arbitrary signed integer into [0, p).
  Coeff from_int(std::int64_t v) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Coeff p_;
};

bool is_prime(std::int64_t n);

}  // namespace fwb
