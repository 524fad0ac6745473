#pragma once

#include <optional>
#include <vector>

#include "fwb/linalg.hpp"
#include "fwb/quotient_ring.hpp"

namespace fwb {

/// Linear automorphism sigma of S sending given independent linear forms
/// l_1..l_t to the last t variables (the remaining variables are a subset of
/// the original ones, kept in order). Frobenius commutes with sigma, so
/// closures, test exponents and local cohomology may be computed on
/// sigma(R) = S/sigma(J) and pulled back.
class LinearChange {
 public:
  /// nullopt unless the grading is standard and the forms are independent
  /// linear forms without constant term.
  static std::optional<LinearChange> straighten(const QuotientRing& ring,
                                                const std::vector<Polynomial>& forms);

  const QuotientRing& target() const { return *target_; }
  const QuotientRingPtr& target_ptr() const { return target_; }
  /// Index of the variable that l_1 is sent to.
  int offset() const { return offset_; }

  Polynomial forward(const Polynomial& f) const { return substitute(f, forward_images_); }
  Polynomial backward(const Polynomial& f) const { return substitute(f, backward_images_); }
  Ideal forward(const Ideal& ideal) const;
  Ideal backward(const Ideal& ideal) const;

 private:
  QuotientRingPtr target_;
  int offset_ = 0;
  std::vector<Polynomial> forward_images_;
  std::vector<Polynomial> backward_images_;
};

}  // namespace fwb
