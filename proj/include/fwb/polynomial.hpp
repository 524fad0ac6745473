#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fwb/monomial.hpp"
#include "fwb/prime_field.hpp"

namespace fwb {

/// Caps applied to every Groebner computation in a ring. Hitting a cap raises
/// Error(kResourceLimit); no partial basis is ever returned.
struct GbLimits {
  std::int64_t max_pairs = 50'000;
  std::int64_t max_degree = 120;
  friend bool operator==(const GbLimits&, const GbLimits&) = default;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// F_p[x_1..x_n] with a fixed monomial order and a grading. The grading drives
/// sugar degrees and homogeneity tests; it may differ from the order weights
/// (auxiliary tag variables get grading weight 0).
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> names,
           MonomialOrder order = MonomialOrder::grevlex(), std::vector<int> grading = {},
           GbLimits limits = {});

  static RingPtr make(PrimeField field, std::vector<std::string> names,
                      MonomialOrder order = MonomialOrder::grevlex(),
                      std::vector<int> grading = {}, GbLimits limits = {}) {
    return std::make_shared<const PolyRing>(field, std::move(names), std::move(order),
                                            std::move(grading), limits);
  }

  const PrimeField& field() const { return field_; }
  Coeff characteristic() const { return field_.characteristic(); }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<int>& grading() const { return grading_; }
  const GbLimits& limits() const { return limits_; }
  /// Index of the named variable, or -1.
  int index_of(const std::string& name) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b, nvars());
  }
  std::int64_t degree(const Monomial& m) const { return m.weighted_degree(grading_); }

  std::string monomial_to_string(const Monomial& m) const;

  /// Same field and variables with a different order, grading, or limits.
  RingPtr with_order(MonomialOrder order) const;
  RingPtr with_limits(GbLimits limits) const;

  /// Structural equality (field, variable names, order, grading).
  bool same_as(const PolyRing& other) const;

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::vector<int> grading_;
  GbLimits limits_;
};

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Sparse polynomial in canonical form: nonzero coefficients, distinct
/// monomials, terms sorted in descending monomial order.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial from_monomial(RingPtr ring, Monomial m, Coeff c = 1);
  static Polynomial variable(RingPtr ring, int index);
  /// Accepts terms in any order with repeats and zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const;

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  Coeff leading_coeff() const { return terms_.front().coeff; }

  /// Maximum graded degree over terms; -1 for zero.
  std::int64_t degree() const;
  /// Every term has the same graded degree (zero counts as homogeneous).
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(Coeff c) const;
  Polynomial times_term(const Monomial& m, Coeff c) const;
  Polynomial monic() const;
  Polynomial pow(std::uint64_t k) const;

  /// Coefficient of `m` (zero if absent).
  Coeff coefficient(const Monomial& m) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Returns f^(p^e), computed termwise: sum c * mu^(p^e) (coefficients in F_p
/// are fixed by Frobenius). Exponent overflow is a checked error.
Polynomial frobenius_raise(const Polynomial& f, int e);

/// p^e as a checked 64-bit integer.
std::int64_t prime_power(Coeff p, int e);

/// Re-embeds `f` into `target`, sending variable i of f's ring to variable
/// `index_map[i]` of `target`.
Polynomial map_variables(const Polynomial& f, const RingPtr& target,
                         const std::vector<int>& index_map);

/// Polynomial in variables `names` evaluated by substituting `images[i]` for
/// variable i (all images must live in one ring).
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images);

/// Merge a*(sorted terms) + b*(sorted terms) in descending order.
std::vector<Term> merge_terms(const PolyRing& ring, const std::vector<Term>& a,
                              const std::vector<Term>& b, Coeff b_scale);

}  // namespace fwb
