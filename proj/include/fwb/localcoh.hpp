#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fwb/coordinates.hpp"
#include "fwb/frobenius.hpp"
#include "fwb/linalg.hpp"
#include "fwb/quotient_ring.hpp"

namespace fwb {

/// (Q : m^inf)/Q with an explicit F_p-basis. Basis elements are monic,
/// reduced modulo Q, and have pairwise distinct leading monomials.
class TorsionQuotient {
 public:
  TorsionQuotient(Ideal q, Ideal saturated, int saturation_exponent,
                  std::vector<Polynomial> basis);

  const Ideal& q() const { return q_; }
  const Ideal& saturated() const { return saturated_; }
  int saturation_exponent() const { return saturation_exponent_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  std::size_t length() const { return basis_.size(); }
  /// Graded dimension counts (degree of each basis element).
  std::map<std::int64_t, std::size_t> degree_table() const;

  /// Coordinates of the class of a; throws Error(kInconsistent) if a is not
  /// in (Q : m^inf).
  Vector coordinates(const Polynomial& a) const;
  Polynomial element(const Vector& v) const;

 private:
  Ideal q_;
  Ideal saturated_;
  int saturation_exponent_;
  std::vector<Polynomial> basis_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// Throws Error(kResourceLimit) when the basis exceeds max_length.
TorsionQuotient torsion_quotient(const QuotientRing& ring, const Ideal& q,
                                 std::size_t max_length = 200000);

/// Truncated direct system L_n = (Q_n : m^inf)/Q_n, Q_n = (x_1^n..x_i^n) + J,
/// n = 1..N, with transitions by x_1...x_i and Frobenius maps L_n -> L_pn.
/// When the sop consists of linear forms the system is built on sigma(R) for
/// the coordinate change sending the sop to variables.
class LimitSystem {
 public:
  const QuotientRing& work_ring() const { return *work_; }
  const std::optional<LinearChange>& change() const { return change_; }
  int i() const { return i_; }
  int top() const { return top_; }
  Coeff p() const { return work_->characteristic(); }
  /// Prefix x_1..x_i in working coordinates.
  const std::vector<Polynomial>& prefix() const { return prefix_; }
  const Polynomial& prefix_product() const { return prefix_product_; }

  const TorsionQuotient& level(int n) const { return levels_.at(static_cast<std::size_t>(n - 1)); }
  std::vector<std::size_t> lengths() const;
  /// Stored one-step transition L_n -> L_{n+1}.
  const Matrix& step(int n) const { return steps_.at(static_cast<std::size_t>(n - 1)); }
  Matrix& mutable_step(int n) { return steps_.at(static_cast<std::size_t>(n - 1)); }
  /// Transition L_from -> L_to recomputed from polynomials.
  Matrix transition(int from, int to) const;
  /// Product of stored steps from -> to.
  Matrix composed_steps(int from, int to) const;
  bool has_frobenius(int n) const { return frobenius_.count(n) > 0; }
  /// phi_n : L_n -> L_pn.
  const Matrix& frobenius(int n) const { return frobenius_.at(n); }
  /// phi chain L_n -> L_{n p^e}.
  Matrix frobenius_chain(int n, int e) const;

  /// Class representative in the input ring's coordinates.
  Polynomial to_input(const Polynomial& f) const { return change_ ? change_->backward(f) : f; }
  Polynomial from_input(const Polynomial& f) const { return change_ ? change_->forward(f) : f; }

  const std::vector<std::string>& warnings() const { return warnings_; }

  friend LimitSystem build_limit_system(const QuotientRing&, const std::vector<Polynomial>&, int,
                                        int);

 private:
  LimitSystem() = default;

  QuotientRingPtr work_;
  std::optional<LinearChange> change_;
  int i_ = 0;
  int top_ = 0;
  std::vector<Polynomial> prefix_;
  Polynomial prefix_product_{nullptr};
  std::vector<TorsionQuotient> levels_;
  std::vector<Matrix> steps_;
  std::map<int, Matrix> frobenius_;
  std::vector<std::string> warnings_;
};

LimitSystem build_limit_system(const QuotientRing& ring, const std::vector<Polynomial>& sop, int i,
                               int top);

/// Audit of the system against the commuting diagram: stored steps against
/// direct recomputation, and phi after transition against transition after phi.
struct SystemAudit {
  bool ok = true;
  std::string witness;
};
SystemAudit audit_limit_system(const LimitSystem& sys);

struct NilpotentClass {
  int level = 0;
  int order = 0;
  Vector coordinates;
  /// Representative in the input ring's coordinates.
  Polynomial representative{nullptr};
};

struct NilpotentPart {
  std::vector<NilpotentClass> classes;
  int max_order = 0;
  /// Levels where n p^e_max exceeds the truncation, so larger orders there
  /// could not be examined.
  std::vector<int> undetermined_levels;
};

/// Classes v of L_n with M_e v = 0 for M_e = T_{np^e -> N} o phi^e, nonzero at
/// level N, and not in the span of the kernels of M_0..M_{e-1}. `top` defaults
/// to the system's truncation.
NilpotentPart nilpotent_part(const LimitSystem& sys, int e_max, int top = 0);

struct HslComponent {
  int i = 0;
  int value = 0;
  int probe_value = 0;
  bool stable = false;
  std::vector<std::size_t> lengths;
  std::vector<NilpotentClass> witnesses;
  std::string error;
};

struct HslReport {
  std::vector<HslComponent> per_i;
  int overall = 0;
  bool stable = false;
  int top = 0;
  int e_max = 0;
  int probe_top = 0;
  int probe_e_max = 0;
  std::vector<Polynomial> sop;
};

/// Per-i witnessed HSL lower bounds at (N, e_max), probed at (N + p, e_max + 1).
HslReport hsl_estimate(const QuotientRing& ring, const std::vector<Polynomial>& sop, int top,
                       int e_max, int jobs = 1);

struct KoszulTable {
  std::map<std::int64_t, std::size_t> dims;
  std::size_t total = 0;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// Degreewise dimensions of H^i of the Koszul cochain complex of R on the
/// homogeneous elements f, for degrees in [lo, hi]. Basis vectors e_S are
/// shifted so that H^t = R/(f) keeps the grading of R.
KoszulTable graded_koszul_cohomology(const QuotientRing& ring, const std::vector<Polynomial>& f,
                                     int i, std::int64_t lo, std::int64_t hi);

enum class CheckStatus { kPass, kFail, kInconclusive };
const char* to_string(CheckStatus status);

struct NsComponent {
  int i = 0;
  std::vector<std::size_t> lengths_a;
  std::vector<std::size_t> lengths_b;
  std::optional<std::size_t> stable_a;
  std::optional<std::size_t> stable_b;
  /// Koszul totals: for i < d a single entry at level koszul_n; for i = d one
  /// per level.
  std::vector<std::size_t> koszul_totals;
  int koszul_n = 0;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

struct NsReport {
  std::vector<NsComponent> per_i;
  std::vector<Polynomial> sop_a;
  std::vector<Polynomial> sop_b;
  int top = 0;
  CheckStatus status = CheckStatus::kPass;
  std::string first_disagreement;
};

NsReport ns_consistency_check(const QuotientRing& ring, const std::vector<Polynomial>& sop_a,
                              const std::vector<Polynomial>& sop_b, int top);
/// Comparison on prebuilt systems (index = i); exposed for negative controls.
NsReport ns_compare(const QuotientRing& ring, const std::vector<LimitSystem>& a,
                    const std::vector<LimitSystem>& b, const std::vector<Polynomial>& sop_a,
                    const std::vector<Polynomial>& sop_b);

struct Prop34Forward {
  Polynomial generator{nullptr};
  std::optional<int> order;
  /// "exact" (membership and matrix), "membership", or "undetermined".
  std::string evidence;
};

struct Prop34Backward {
  int level = 0;
  int order = 0;
  Polynomial representative{nullptr};
  std::optional<int> traced_to;
};

struct Prop34Report {
  int t = 0;
  int n = 0;
  int e = 0;
  int top = 0;
  std::vector<Prop34Forward> forward;
  std::vector<Prop34Backward> backward;
  bool forward_ok = true;
  bool backward_ok = true;
  bool pass = true;
};

Prop34Report prop34_check(const QuotientRing& ring, const std::vector<Polynomial>& sop, int t,
                          int n, int e, int top, const ClosureOptions& closure = {});

struct MechanismCheck {
  int n = 0;
  int fte = 0;
  Polynomial generator{nullptr};
  int order = 0;
  bool ok = true;
};

struct InequalityReport {
  int max_fte = 0;
  int hsl = 0;
  bool hsl_stable = false;
  bool equal = false;
  CheckStatus status = CheckStatus::kPass;
  std::vector<MechanismCheck> mechanism;
  bool mechanism_ok = true;
};

/// max_fte >= HSL plus, for each uniform-power family (t = d) of the scan,
/// closure generators killed by at most Fte Frobenius steps.
InequalityReport verify_inequality(const QuotientRing& ring, const FteScanReport& scan,
                                   const HslReport& hsl);

}  // namespace fwb
