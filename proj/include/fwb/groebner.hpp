#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "fwb/polynomial.hpp"

namespace fwb {

struct GbStats {
  std::int64_t pairs_processed = 0;
  std::int64_t reductions_to_zero = 0;
  std::int64_t max_degree = 0;
  double wall_ms = 0.0;
};

struct GbResult {
  /// Reduced Groebner basis: monic, auto-reduced, sorted by ascending leading
  /// monomial. {1} for the unit ideal, empty for the zero ideal.
  std::vector<Polynomial> basis;
  GbStats stats;
};

/// Buchberger's algorithm with sugar-degree pair selection and the
/// Gebauer-Moeller criteria. Respects the ring's GbLimits.
GbResult buchberger(const RingPtr& ring, std::vector<Polynomial> generators);

/// Fully reduced remainder of f modulo `basis` (any finite set, not
/// necessarily a Groebner basis).
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Audit: every S-polynomial of `basis` reduces to zero modulo `basis`.
bool s_pair_criterion_holds(const std::vector<Polynomial>& basis);

/// Exact quotient h / f; throws Error(kInconsistent) if f does not divide h.
Polynomial divide_exact(const Polynomial& h, const Polynomial& f);

/// An ideal of a polynomial ring given by generators, with a lazily computed
/// reduced Groebner basis. Copies share the cache; the cache is write-once and
/// safe to populate from several threads.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  /// The ideal (x_1, ..., x_n) of all variables.
  static Ideal maximal(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  const std::vector<Polynomial>& gb() const { return result().basis; }
  const GbStats& gb_stats() const { return result().stats; }
  bool is_unit() const;
  bool is_zero() const { return gb().empty(); }
  bool is_homogeneous() const;

  std::string to_string() const;

 private:
  const GbResult& result() const;

  struct Cache {
    std::mutex mutex;
    std::shared_ptr<const GbResult> value;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

Polynomial normal_form(const Polynomial& f, const Ideal& ideal);
bool is_member(const Polynomial& f, const Ideal& ideal);
/// K is contained in I.
bool contains(const Ideal& ideal, const Ideal& sub);
bool ideal_equal(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);

/// (I : f) = {r : r f in I}, via I cap (f) computed with a tag variable.
Ideal colon(const Ideal& ideal, const Polynomial& f);
/// (I : K), intersected over the generators of K.
Ideal colon(const Ideal& ideal, const Ideal& by);

struct Saturation {
  Ideal ideal;
  /// Least s with (I : K^s) = (I : K^(s+1)).
  int exponent;
};

/// (I : K^infinity) by iterating colon until two consecutive iterates agree.
Saturation saturation(const Ideal& ideal, const Ideal& by);

/// I cap F_p[keep]; the result lives in a new ring on the kept variables (in
/// their original relative order).
Ideal eliminate(const Ideal& ideal, const std::vector<int>& keep);

/// Krull dimension of S/I from a maximal independent set of the initial ideal.
/// Throws Error(kInvalidArgument) for the unit ideal.
int dimension(const Ideal& ideal);

/// Minimal generators of the initial ideal (leading monomials of the GB).
std::vector<Monomial> leading_monomials(const Ideal& ideal);

/// Whether `m` lies in the monomial ideal generated by `gens`.
bool in_monomial_ideal(const Monomial& m, const std::vector<Monomial>& gens);

/// All monomials of graded degree `degree` (grading weights of the ring).
std::vector<Monomial> monomials_of_degree(const PolyRing& ring, std::int64_t degree);

/// Standard monomials of I of the given graded degree, in descending order.
std::vector<Monomial> standard_monomials(const Ideal& ideal, std::int64_t degree);

/// For zero-dimensional I: the largest graded degree of a standard monomial
/// (-1 for the unit ideal). Throws if I is not zero-dimensional.
std::int64_t top_standard_degree(const Ideal& ideal);

}  // namespace fwb
