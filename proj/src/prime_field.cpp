#include "fwb/prime_field.hpp"

#include "fwb/error.hpp"

namespace fwb {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kRingMismatch: return "ring_mismatch";
    case ErrorCode::kResourceLimit: return "resource_limit";
    case ErrorCode::kInconsistent: return "inconsistent";
    case ErrorCode::kIo: return "io_error";
  }
  return "unknown";
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p)) {
    fail(ErrorCode::kInvalidArgument,
         "characteristic not prime (or not below 2^31): " + std::to_string(p));
  }
  p_ = static_cast<Coeff>(p);
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept {
  Coeff result = 1 % p_;
  Coeff base = a % p_;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) fail(ErrorCode::kInvalidArgument, "inverse of zero in F_p");
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Coeff>(t);
}

Coeff PrimeField::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

}  // namespace fwb
