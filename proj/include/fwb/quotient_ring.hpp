#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fwb/groebner.hpp"

namespace fwb {

/// R = S/J for S = F_p[x_1..x_n], treated as local at m = (x_1..x_n).
/// Ideals of R are always carried as their full preimage in S.
class QuotientRing {
 public:
  /// Throws Error(kInvalidArgument) if J is the unit ideal or not contained
  /// in m.
  QuotientRing(RingPtr ambient, std::vector<Polynomial> relations, std::string label = "");

  const RingPtr& ambient() const { return ambient_; }
  const Ideal& relations() const { return relations_; }
  int dim() const { return dim_; }
  const std::string& label() const { return label_; }
  Coeff characteristic() const { return ambient_->characteristic(); }
  int nvars() const { return ambient_->nvars(); }

  /// Lifted ideal generated by `gens` and the relations.
  Ideal ideal(std::vector<Polynomial> gens) const;
  /// Lift of m.
  Ideal maximal_ideal() const { return ideal(Ideal::maximal(ambient_).generators()); }

  /// Relations homogeneous for the grading and the grading is positive.
  bool is_graded() const { return graded_; }
  /// All grading weights are 1.
  bool is_standard_graded() const;

 private:
  RingPtr ambient_;
  Ideal relations_;
  int dim_ = 0;
  bool graded_ = false;
  std::string label_;
};

using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

}  // namespace fwb
