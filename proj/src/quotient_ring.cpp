#include "fwb/quotient_ring.hpp"

#include <algorithm>

#include "fwb/error.hpp"

namespace fwb {

QuotientRing::QuotientRing(RingPtr ambient, std::vector<Polynomial> relations, std::string label)
    : ambient_(std::move(ambient)), relations_(ambient_, std::move(relations)),
      label_(std::move(label)) {
  for (const auto& f : relations_.generators()) {
    if (f.coefficient(Monomial{}) != 0) {
      fail(ErrorCode::kInvalidArgument,
           "relation " + f.to_string() + " is not contained in the maximal ideal");
    }
  }
  if (relations_.is_unit()) fail(ErrorCode::kInvalidArgument, "relations generate the unit ideal");
  dim_ = dimension(relations_);
  const auto& w = ambient_->grading();
  graded_ = std::all_of(w.begin(), w.end(), [](int x) { return x > 0; }) &&
            relations_.is_homogeneous();
}

Ideal QuotientRing::ideal(std::vector<Polynomial> gens) const {
  for (const auto& r : relations_.generators()) gens.push_back(r);
  return Ideal(ambient_, std::move(gens));
}

bool QuotientRing::is_standard_graded() const {
  const auto& w = ambient_->grading();
  return graded_ && std::all_of(w.begin(), w.end(), [](int x) { return x == 1; });
}

}  // namespace fwb
