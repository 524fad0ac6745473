#include "fwb/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "fwb/error.hpp"

namespace fwb {

PolyRing::PolyRing(PrimeField field, std::vector<std::string> names, MonomialOrder order,
                   std::vector<int> grading, GbLimits limits)
    : field_(field),
      names_(std::move(names)),
      order_(std::move(order)),
      grading_(std::move(grading)),
      limits_(limits) {
  if (names_.size() > static_cast<std::size_t>(kMaxVars)) {
    fail(ErrorCode::kInvalidArgument,
         "at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) fail(ErrorCode::kInvalidArgument, "duplicate variable name");
  if (grading_.empty()) grading_.assign(names_.size(), 1);
  if (grading_.size() != names_.size()) {
    fail(ErrorCode::kInvalidArgument, "grading length must equal the variable count");
  }
  for (int w : grading_) {
    if (w < 0) fail(ErrorCode::kInvalidArgument, "grading weights must be non-negative");
  }
  if (!order_.weights.empty()) {
    if (order_.weights.size() != names_.size()) {
      fail(ErrorCode::kInvalidArgument, "order weights must match the variable count");
    }
    for (int w : order_.weights) {
      if (w <= 0) fail(ErrorCode::kInvalidArgument, "order weights must be positive");
    }
  }
  if (order_.kind == OrderKind::kBlock &&
      (order_.block < 0 || order_.block > static_cast<int>(names_.size()))) {
    fail(ErrorCode::kInvalidArgument, "elimination block out of range");
  }
}

int PolyRing::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

std::string PolyRing::monomial_to_string(const Monomial& m) const {
  std::string out;
  for (int i = 0; i < nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names_[static_cast<std::size_t>(i)];
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

RingPtr PolyRing::with_order(MonomialOrder order) const {
  return make(field_, names_, std::move(order), grading_, limits_);
}

RingPtr PolyRing::with_limits(GbLimits limits) const {
  return make(field_, names_, order_, grading_, limits);
}

bool PolyRing::same_as(const PolyRing& other) const {
  return field_ == other.field_ && names_ == other.names_ && order_ == other.order_ &&
         grading_ == other.grading_;
}

// ---------------------------------------------------------------------------

std::vector<Term> merge_terms(const PolyRing& ring, const std::vector<Term>& a,
                              const std::vector<Term>& b, Coeff b_scale) {
  const PrimeField& k = ring.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = ring.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Coeff v = k.mul(b[j].coeff, b_scale);
      if (v != 0) out.push_back({b[j].mono, v});
      ++j;
    } else {
      Coeff v = k.add(a[i].coeff, k.mul(b[j].coeff, b_scale));
      if (v != 0) out.push_back({a[i].mono, v});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    Coeff v = k.mul(b[j].coeff, b_scale);
    if (v != 0) out.push_back({b[j].mono, v});
  }
  return out;
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Polynomial f(ring);
  Coeff v = ring->field().from_int(c);
  if (v != 0) f.terms_.push_back({Monomial{}, v});
  return f;
}

Polynomial Polynomial::from_monomial(RingPtr ring, Monomial m, Coeff c) {
  Polynomial f(ring);
  c %= ring->characteristic();
  if (c != 0) f.terms_.push_back({m, c});
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  if (index < 0 || index >= ring->nvars()) {
    fail(ErrorCode::kInvalidArgument, "variable index out of range");
  }
  Monomial m;
  m[index] = 1;
  return from_monomial(std::move(ring), m, 1);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial f(ring);
  const PolyRing& r = *ring;
  std::sort(terms.begin(), terms.end(),
            [&r](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
  for (const Term& t : terms) {
    Coeff c = t.coeff % r.characteristic();
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      f.terms_.back().coeff = r.field().add(f.terms_.back().coeff, c);
      if (f.terms_.back().coeff == 0) f.terms_.pop_back();
    } else if (c != 0) {
      f.terms_.push_back({t.mono, c});
    }
  }
  return f;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

std::int64_t Polynomial::degree() const {
  std::int64_t d = -1;
  for (const Term& t : terms_) d = std::max(d, ring_->degree(t.mono));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::int64_t d = ring_->degree(terms_.front().mono);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return ring_->degree(t.mono) == d; });
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (ring_ != other.ring_ && !ring_->same_as(*other.ring_)) {
    fail(ErrorCode::kRingMismatch, "polynomials live in different rings");
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_ring(other);
  Polynomial r(ring_);
  r.terms_ = merge_terms(*ring_, terms_, other.terms_, 1);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  check_ring(other);
  Polynomial r(ring_);
  r.terms_ = merge_terms(*ring_, terms_, other.terms_, ring_->characteristic() - 1);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(ring_->characteristic() - 1); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_ring(other);
  if (is_zero() || other.is_zero()) return Polynomial(ring_);
  const Polynomial& small = size() <= other.size() ? *this : other;
  const Polynomial& big = size() <= other.size() ? other : *this;
  if (small.size() == 1) return big.times_term(small.terms_[0].mono, small.terms_[0].coeff);
  std::vector<Term> all;
  all.reserve(small.size() * big.size());
  const PrimeField& k = ring_->field();
  for (const Term& a : small.terms_) {
    for (const Term& b : big.terms_) all.push_back({a.mono * b.mono, k.mul(a.coeff, b.coeff)});
  }
  return from_terms(ring_, std::move(all));
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= ring_->characteristic();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono, ring_->field().mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, Coeff c) const {
  c %= ring_->characteristic();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Monomial orders are multiplicative, so the order is preserved.
  for (const Term& t : terms_) r.terms_.push_back({t.mono * m, ring_->field().mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  for (const Term& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return 0;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += '+';
    bool unit_mono = t.mono.is_one();
    if (t.coeff != 1 || unit_mono) {
      out += std::to_string(t.coeff);
      if (!unit_mono) out += '*';
    }
    if (!unit_mono) out += ring_->monomial_to_string(t.mono);
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono)) {
      return false;
    }
  }
  return a.ring_ == b.ring_ || a.ring_->same_as(*b.ring_);
}

std::int64_t prime_power(Coeff p, int e) {
  if (e < 0) fail(ErrorCode::kInvalidArgument, "negative Frobenius exponent");
  std::int64_t q = 1;
  for (int i = 0; i < e; ++i) {
    if (q > std::numeric_limits<Exponent>::max() / static_cast<std::int64_t>(p)) {
      fail(ErrorCode::kInvalidArgument,
           "exponent overflow: p^e exceeds the machine exponent range");
    }
    q *= p;
  }
  return q;
}

Polynomial frobenius_raise(const Polynomial& f, int e) {
  std::int64_t q = prime_power(f.ring()->characteristic(), e);
  if (q == 1) return f;
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const Term& t : f.terms()) terms.push_back({t.mono.scaled(q), t.coeff});
  // mu -> mu^q is strictly monotone for monomial orders, so order is kept;
  // from_terms is still used for a single canonicalization path.
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

Polynomial map_variables(const Polynomial& f, const RingPtr& target,
                         const std::vector<int>& index_map) {
  if (static_cast<int>(index_map.size()) != f.ring()->nvars()) {
    fail(ErrorCode::kInvalidArgument, "variable map has the wrong length");
  }
  if (target->characteristic() != f.ring()->characteristic()) {
    fail(ErrorCode::kRingMismatch, "cannot map between different characteristics");
  }
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const Term& t : f.terms()) {
    Monomial m;
    for (int i = 0; i < f.ring()->nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      int dst = index_map[static_cast<std::size_t>(i)];
      if (dst < 0 || dst >= target->nvars()) {
        fail(ErrorCode::kInvalidArgument, "variable map drops a variable that occurs");
      }
      m[dst] += t.mono[i];
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
  if (static_cast<int>(images.size()) != f.ring()->nvars() || images.empty()) {
    fail(ErrorCode::kInvalidArgument, "substitution needs one image per variable");
  }
  const RingPtr& target = images.front().ring();
  Polynomial result(target);
  for (const Term& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (int i = 0; i < f.ring()->nvars(); ++i) {
      if (t.mono[i] > 0) term = term * images[static_cast<std::size_t>(i)].pow(t.mono[i]);
    }
    result = result + term;
  }
  return result;
}

}  // namespace fwb
