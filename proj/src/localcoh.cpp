#include "fwb/localcoh.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <thread>
#include <unordered_set>

#include "fwb/error.hpp"

namespace fwb {

// ---------------------------------------------------------------------------
// Torsion quotients

TorsionQuotient::TorsionQuotient(Ideal q, Ideal saturated, int saturation_exponent,
                                 std::vector<Polynomial> basis)
    : q_(std::move(q)), saturated_(std::move(saturated)),
      saturation_exponent_(saturation_exponent), basis_(std::move(basis)) {
  for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k].leading_monomial(), k);
}

std::map<std::int64_t, std::size_t> TorsionQuotient::degree_table() const {
  std::map<std::int64_t, std::size_t> out;
  for (const auto& b : basis_) ++out[b.ring()->degree(b.leading_monomial())];
  return out;
}

Vector TorsionQuotient::coordinates(const Polynomial& a) const {
  Vector v(basis_.size(), 0);
  Polynomial r = normal_form(a, q_);
  while (!r.is_zero()) {
    auto it = index_.find(r.leading_monomial());
    if (it == index_.end()) {
      fail(ErrorCode::kInconsistent, "element " + a.to_string() + " is not in (Q : m^inf)");
    }
    Coeff c = r.leading_coeff();
    v[it->second] = c;
    r = r - basis_[it->second].scaled(c);
  }
  return v;
}

Polynomial TorsionQuotient::element(const Vector& v) const {
  Polynomial out(q_.ring());
  for (std::size_t k = 0; k < v.size() && k < basis_.size(); ++k) {
    if (v[k] != 0) out = out + basis_[k].scaled(v[k]);
  }
  return out;
}

TorsionQuotient torsion_quotient(const QuotientRing& ring, const Ideal& q, std::size_t max_length) {
  Ideal lifted = ring.ideal(q.generators());
  lifted = Ideal(lifted.ring(), lifted.gb());
  Saturation sat = saturation(lifted, ring.maximal_ideal());
  const RingPtr& r = ring.ambient();
  std::vector<Monomial> in_q = leading_monomials(lifted);
  const auto& sgb = sat.ideal.gb();

  std::unordered_set<Monomial, MonomialHash> seen;
  std::deque<Monomial> queue;
  for (const auto& h : sgb) {
    const Monomial& m = h.leading_monomial();
    if (!in_monomial_ideal(m, in_q) && seen.insert(m).second) queue.push_back(m);
  }
  std::vector<Polynomial> basis;
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    const Polynomial* h = nullptr;
    for (const auto& g : sgb) {
      if (g.leading_monomial().divides(m)) {
        h = &g;
        break;
      }
    }
    basis.push_back(normal_form(h->times_term(m / h->leading_monomial(), 1), lifted).monic());
    if (basis.size() > max_length) {
      fail(ErrorCode::kResourceLimit, "torsion quotient exceeds " + std::to_string(max_length) +
                                          " basis elements");
    }
    for (int v = 0; v < r->nvars(); ++v) {
      Monomial next = m;
      next[v] += 1;
      if (!in_monomial_ideal(next, in_q) && seen.insert(next).second) queue.push_back(next);
    }
  }
  std::sort(basis.begin(), basis.end(), [&r](const Polynomial& a, const Polynomial& b) {
    std::int64_t da = r->degree(a.leading_monomial());
    std::int64_t db = r->degree(b.leading_monomial());
    if (da != db) return da < db;
    return r->compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return TorsionQuotient(lifted, sat.ideal, sat.exponent, std::move(basis));
}

// ---------------------------------------------------------------------------
// Limit systems

std::vector<std::size_t> LimitSystem::lengths() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels_) out.push_back(l.length());
  return out;
}

Matrix LimitSystem::transition(int from, int to) const {
  const TorsionQuotient& src = level(from);
  if (from == to) return Matrix::identity(src.length());
  const TorsionQuotient& dst = level(to);
  Polynomial g = prefix_product_.pow(static_cast<std::uint64_t>(to - from));
  Matrix m(dst.length(), src.length());
  for (std::size_t c = 0; c < src.length(); ++c) m.set_column(c, dst.coordinates(g * src.basis()[c]));
  return m;
}

Matrix LimitSystem::composed_steps(int from, int to) const {
  Matrix m = Matrix::identity(level(from).length());
  for (int n = from; n < to; ++n) m = multiply(work_->ambient()->field(), step(n), m);
  return m;
}

Matrix LimitSystem::frobenius_chain(int n, int e) const {
  Matrix m = Matrix::identity(level(n).length());
  int cur = n;
  for (int k = 0; k < e; ++k) {
    m = multiply(work_->ambient()->field(), frobenius(cur), m);
    cur *= static_cast<int>(p());
  }
  return m;
}

LimitSystem build_limit_system(const QuotientRing& ring, const std::vector<Polynomial>& sop, int i,
                               int top) {
  if (i < 0 || i > static_cast<int>(sop.size())) {
    fail(ErrorCode::kInvalidArgument, "cohomological index outside 0..length of the sequence");
  }
  if (top < 1) fail(ErrorCode::kInvalidArgument, "truncation level must be positive");
  LimitSystem sys;
  sys.i_ = i;
  sys.top_ = top;
  sys.change_ = LinearChange::straighten(ring, sop);
  sys.work_ = sys.change_ ? sys.change_->target_ptr() : std::make_shared<const QuotientRing>(ring);
  const RingPtr& s = sys.work_->ambient();
  for (int k = 0; k < i; ++k) {
    sys.prefix_.push_back(sys.change_ ? Polynomial::variable(s, sys.change_->offset() + k)
                                      : sop[static_cast<std::size_t>(k)]);
  }
  sys.prefix_product_ = Polynomial::constant(s, 1);
  for (const auto& x : sys.prefix_) sys.prefix_product_ = sys.prefix_product_ * x;

  for (int n = 1; n <= top; ++n) {
    std::vector<Polynomial> gens;
    for (const auto& x : sys.prefix_) gens.push_back(x.pow(static_cast<std::uint64_t>(n)));
    sys.levels_.push_back(torsion_quotient(*sys.work_, sys.work_->ideal(gens)));
  }
  for (int n = 1; n < top; ++n) sys.steps_.push_back(sys.transition(n, n + 1));
  const int p = static_cast<int>(sys.p());
  for (int n = 1; p * n <= top; ++n) {
    const TorsionQuotient& src = sys.level(n);
    const TorsionQuotient& dst = sys.level(p * n);
    Matrix m(dst.length(), src.length());
    for (std::size_t c = 0; c < src.length(); ++c) {
      m.set_column(c, dst.coordinates(frobenius_raise(src.basis()[c], 1)));
    }
    sys.frobenius_.emplace(n, std::move(m));
  }
  if (sys.frobenius_.empty()) {
    sys.warnings_.push_back("truncation " + std::to_string(top) +
                            " is below p; no Frobenius matrix is available");
  }
  return sys;
}

SystemAudit audit_limit_system(const LimitSystem& sys) {
  SystemAudit out;
  const PrimeField& k = sys.work_ring().ambient()->field();
  for (int n = 1; n < sys.top(); ++n) {
    if (!(sys.step(n) == sys.transition(n, n + 1))) {
      out.ok = false;
      out.witness = "i=" + std::to_string(sys.i()) + ": stored transition L_" + std::to_string(n) +
                    " -> L_" + std::to_string(n + 1) + " differs from multiplication by " +
                    sys.prefix_product().to_string();
      return out;
    }
  }
  const int p = static_cast<int>(sys.p());
  for (int n = 1; n < sys.top(); ++n) {
    if (!sys.has_frobenius(n) || !sys.has_frobenius(n + 1)) continue;
    Matrix lhs = multiply(k, sys.frobenius(n + 1), sys.step(n));
    Matrix rhs = multiply(k, sys.composed_steps(p * n, p * (n + 1)), sys.frobenius(n));
    if (!(lhs == rhs)) {
      out.ok = false;
      out.witness = "i=" + std::to_string(sys.i()) + ": Frobenius does not commute with the " +
                    "transition at level " + std::to_string(n);
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Nilpotent parts and HSL

NilpotentPart nilpotent_part(const LimitSystem& sys, int e_max, int top) {
  const int big_n = top > 0 ? top : sys.top();
  if (big_n > sys.top()) fail(ErrorCode::kInvalidArgument, "evaluation level beyond truncation");
  const PrimeField& k = sys.work_ring().ambient()->field();
  const int p = static_cast<int>(sys.p());
  NilpotentPart out;
  for (int n = 1; n <= big_n; ++n) {
    const TorsionQuotient& lvl = sys.level(n);
    if (lvl.length() == 0) continue;
    EchelonSpan dead(k, lvl.length());
    for (Vector& v : kernel(k, sys.transition(n, big_n))) dead.insert(std::move(v));
    int target = n;
    for (int e = 1; e <= e_max; ++e) {
      target *= p;
      if (target > big_n) {
        out.undetermined_levels.push_back(n);
        break;
      }
      Matrix m = multiply(k, sys.transition(target, big_n), sys.frobenius_chain(n, e));
      for (Vector& v : kernel(k, m)) {
        if (!dead.insert(v)) continue;
        NilpotentClass c;
        c.level = n;
        c.order = e;
        c.representative = sys.to_input(lvl.element(v));
        c.coordinates = std::move(v);
        out.max_order = std::max(out.max_order, e);
        out.classes.push_back(std::move(c));
      }
    }
  }
  return out;
}

namespace {

template <typename F>
void parallel_for(int count, int jobs, F&& body) {
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int idx = next++; idx < count; idx = next++) body(idx);
  };
  int threads_wanted = std::max(1, std::min(jobs, count));
  std::vector<std::thread> threads;
  for (int j = 1; j < threads_wanted; ++j) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
}

}  // namespace

HslReport hsl_estimate(const QuotientRing& ring, const std::vector<Polynomial>& sop, int top,
                       int e_max, int jobs) {
  if (static_cast<int>(sop.size()) != ring.dim()) {
    fail(ErrorCode::kInvalidArgument, "HSL needs a system of parameters of length dim R");
  }
  if (e_max < 1) fail(ErrorCode::kInvalidArgument, "e_max must be positive");
  HslReport report;
  report.top = top;
  report.e_max = e_max;
  report.probe_top = top + static_cast<int>(ring.characteristic());
  report.probe_e_max = e_max + 1;
  report.sop = sop;
  const int d = ring.dim();
  report.per_i.resize(static_cast<std::size_t>(d + 1));
  parallel_for(d + 1, jobs, [&](int i) {
    HslComponent& c = report.per_i[static_cast<std::size_t>(i)];
    c.i = i;
    try {
      LimitSystem sys = build_limit_system(ring, sop, i, report.probe_top);
      NilpotentPart base = nilpotent_part(sys, e_max, top);
      NilpotentPart probe = nilpotent_part(sys, report.probe_e_max, report.probe_top);
      c.value = base.max_order;
      c.probe_value = probe.max_order;
      c.stable = c.value == c.probe_value;
      std::vector<std::size_t> lengths = sys.lengths();
      c.lengths.assign(lengths.begin(), lengths.begin() + top);
      c.witnesses = std::move(base.classes);
    } catch (const Error& e) {
      c.error = std::string(to_string(e.code())) + ": " + e.what();
    }
  });
  report.stable = true;
  for (const auto& c : report.per_i) {
    report.overall = std::max(report.overall, c.value);
    if (!c.stable || !c.error.empty()) report.stable = false;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Graded Koszul cohomology

namespace {

class GradedPieces {
 public:
  explicit GradedPieces(const Ideal& relations) : relations_(relations) {}

  struct Piece {
    std::vector<Monomial> basis;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  };

  const Piece& piece(std::int64_t degree) {
    auto it = pieces_.find(degree);
    if (it != pieces_.end()) return it->second;
    Piece p;
    if (degree >= 0) p.basis = standard_monomials(relations_, degree);
    for (std::size_t k = 0; k < p.basis.size(); ++k) p.index.emplace(p.basis[k], k);
    return pieces_.emplace(degree, std::move(p)).first->second;
  }

  Polynomial reduce(const Polynomial& f) { return normal_form(f, relations_); }

 private:
  const Ideal& relations_;
  std::map<std::int64_t, Piece> pieces_;
};

}  // namespace

KoszulTable graded_koszul_cohomology(const QuotientRing& ring, const std::vector<Polynomial>& f,
                                     int i, std::int64_t lo, std::int64_t hi) {
  if (!ring.is_graded()) fail(ErrorCode::kInvalidArgument, "Koszul oracle needs a graded ring");
  const int t = static_cast<int>(f.size());
  if (t > 16) fail(ErrorCode::kInvalidArgument, "too many Koszul elements");
  if (i < 0 || i > t) fail(ErrorCode::kInvalidArgument, "Koszul index out of range");
  std::vector<std::int64_t> deg;
  for (const auto& g : f) {
    if (g.is_zero() || !g.is_homogeneous()) {
      fail(ErrorCode::kInvalidArgument, "Koszul elements must be nonzero and homogeneous");
    }
    deg.push_back(g.degree());
  }
  const PrimeField& k = ring.ambient()->field();
  GradedPieces pieces(ring.relations());
  // r e_S sits in degree deg r - (sum of deg f_k over the complement of S),
  // so the top cohomology is R/(f) in its own grading.
  std::int64_t total_degree = 0;
  for (auto x : deg) total_degree += x;
  auto shift = [&](std::uint32_t set) {
    std::int64_t s = -total_degree;
    for (int j = 0; j < t; ++j) {
      if (set & (1U << j)) s += deg[static_cast<std::size_t>(j)];
    }
    return s;
  };
  auto subsets = [&](int size) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < (1U << t); ++s) {
      if (__builtin_popcount(s) == size) out.push_back(s);
    }
    return out;
  };
  // Matrix of d^j in degree delta (rows K^{j+1}, columns K^j).
  auto differential = [&](int j, std::int64_t delta, std::size_t& dim_src) {
    std::vector<std::uint32_t> src = subsets(j);
    std::vector<std::uint32_t> dst = j < t ? subsets(j + 1) : std::vector<std::uint32_t>{};
    std::map<std::uint32_t, std::size_t> dst_offset;
    std::size_t rows = 0;
    for (auto s : dst) {
      dst_offset[s] = rows;
      rows += pieces.piece(delta + shift(s)).basis.size();
    }
    dim_src = 0;
    for (auto s : src) dim_src += pieces.piece(delta + shift(s)).basis.size();
    Matrix m(rows, dim_src);
    std::size_t col = 0;
    for (auto s : src) {
      const auto& basis = pieces.piece(delta + shift(s)).basis;
      for (const Monomial& mu : basis) {
        for (int kk = 0; kk < t && j < t; ++kk) {
          if (s & (1U << kk)) continue;
          std::uint32_t target = s | (1U << kk);
          bool negative = __builtin_popcount(s & ((1U << kk) - 1)) % 2 == 1;
          Polynomial img = pieces.reduce(f[static_cast<std::size_t>(kk)].times_term(mu, 1));
          const auto& tp = pieces.piece(delta + shift(target));
          for (const Term& term : img.terms()) {
            auto it = tp.index.find(term.mono);
            if (it == tp.index.end()) fail(ErrorCode::kInconsistent, "Koszul image outside basis");
            Coeff c = negative ? k.neg(term.coeff) : term.coeff;
            m(dst_offset[target] + it->second, col) = c;
          }
        }
        ++col;
      }
    }
    return m;
  };

  KoszulTable table;
  table.lo = lo;
  table.hi = hi;
  for (std::int64_t delta = lo; delta <= hi; ++delta) {
    std::size_t dim_i = 0, dim_prev = 0;
    Matrix di = differential(i, delta, dim_i);
    std::size_t r_out = di.rows() ? rank(k, di) : 0;
    std::size_t r_in = 0;
    if (i > 0) {
      Matrix dp = differential(i - 1, delta, dim_prev);
      r_in = dp.rows() && dp.cols() ? rank(k, dp) : 0;
    }
    std::size_t h = dim_i - r_out - r_in;
    if (h > 0) table.dims[delta] = h;
    table.total += h;
  }
  return table;
}

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Independence of the system of parameters

namespace {

// Stabilized length: the last two levels agree and the last transition is an
// isomorphism (rank computed from the stored step).
std::optional<std::size_t> stabilized_length(const LimitSystem& sys) {
  const int top = sys.top();
  if (top < 2) return std::nullopt;
  std::size_t a = sys.level(top - 1).length();
  std::size_t b = sys.level(top).length();
  if (a != b) return std::nullopt;
  if (b == 0) return b;
  if (rank(sys.work_ring().ambient()->field(), sys.step(top - 1)) != b) return std::nullopt;
  return b;
}

// First level from which lengths equal the stabilized value.
int stabilization_level(const std::vector<std::size_t>& lengths) {
  int n = static_cast<int>(lengths.size());
  while (n > 1 && lengths[static_cast<std::size_t>(n - 2)] == lengths.back()) --n;
  return n;
}

KoszulTable koszul_totals(const QuotientRing& ring, const std::vector<Polynomial>& f, int i) {
  std::int64_t sum = 0;
  for (const auto& g : f) sum += g.degree();
  std::int64_t rel = 0;
  for (const auto& g : ring.relations().generators()) rel = std::max(rel, g.degree());
  return graded_koszul_cohomology(ring, f, i, -sum, sum + rel * ring.nvars() + 2);
}

std::vector<Polynomial> powers_of(const std::vector<Polynomial>& sop, int n) {
  std::vector<Polynomial> out;
  for (const auto& x : sop) out.push_back(x.pow(static_cast<std::uint64_t>(n)));
  return out;
}

}  // namespace

NsReport ns_compare(const QuotientRing& ring, const std::vector<LimitSystem>& a,
                    const std::vector<LimitSystem>& b, const std::vector<Polynomial>& sop_a,
                    const std::vector<Polynomial>& sop_b) {
  NsReport report;
  report.sop_a = sop_a;
  report.sop_b = sop_b;
  const int d = ring.dim();
  if (static_cast<int>(a.size()) != d + 1 || static_cast<int>(b.size()) != d + 1) {
    fail(ErrorCode::kInvalidArgument, "one limit system per cohomological index is required");
  }
  report.top = a.front().top();
  auto record_fail = [&](NsComponent& c, const std::string& why) {
    c.status = CheckStatus::kFail;
    c.detail = why;
    if (report.first_disagreement.empty()) report.first_disagreement = why;
  };
  for (int i = 0; i <= d; ++i) {
    const LimitSystem& sa = a[static_cast<std::size_t>(i)];
    const LimitSystem& sb = b[static_cast<std::size_t>(i)];
    NsComponent c;
    c.i = i;
    c.lengths_a = sa.lengths();
    c.lengths_b = sb.lengths();
    SystemAudit audit_a = audit_limit_system(sa);
    SystemAudit audit_b = audit_limit_system(sb);
    if (!audit_a.ok || !audit_b.ok) {
      record_fail(c, "sequence " + std::string(audit_a.ok ? "b" : "a") + ", " +
                         (audit_a.ok ? audit_b.witness : audit_a.witness));
      report.per_i.push_back(std::move(c));
      continue;
    }
    if (i < d) {
      c.stable_a = stabilized_length(sa);
      c.stable_b = stabilized_length(sb);
      if (!c.stable_a || !c.stable_b) {
        c.status = CheckStatus::kInconclusive;
        c.detail = "lengths not stabilized within the truncation";
      } else if (*c.stable_a != *c.stable_b) {
        record_fail(c, "H^" + std::to_string(i) + " lengths differ: " + std::to_string(*c.stable_a) +
                           " vs " + std::to_string(*c.stable_b));
      } else if (ring.is_graded()) {
        c.koszul_n = std::min(stabilization_level(c.lengths_a) + 1, sa.top());
        std::vector<Polynomial> f = powers_of(sop_a, c.koszul_n);
        KoszulTable kt = koszul_totals(ring, f, i);
        c.koszul_totals.push_back(kt.total);
        if (kt.total != *c.stable_a) {
          record_fail(c, "H^" + std::to_string(i) + " Koszul oracle gives " +
                             std::to_string(kt.total) + " but the limit system gives " +
                             std::to_string(*c.stable_a));
        }
      }
    } else if (ring.is_graded()) {
      for (int n = 1; n <= sa.top(); ++n) {
        std::vector<Polynomial> f = powers_of(sop_a, n);
        KoszulTable kt = koszul_totals(ring, f, i);
        c.koszul_totals.push_back(kt.total);
        if (kt.total != c.lengths_a[static_cast<std::size_t>(n - 1)] &&
            c.status == CheckStatus::kPass) {
          record_fail(c, "H^" + std::to_string(i) + " level " + std::to_string(n) +
                             ": Koszul oracle gives " + std::to_string(kt.total) +
                             " but the limit system gives " +
                             std::to_string(c.lengths_a[static_cast<std::size_t>(n - 1)]));
        }
      }
    }
    report.per_i.push_back(std::move(c));
  }
  report.status = CheckStatus::kPass;
  for (const auto& c : report.per_i) {
    if (c.status == CheckStatus::kFail) {
      report.status = CheckStatus::kFail;
      break;
    }
    if (c.status == CheckStatus::kInconclusive) report.status = CheckStatus::kInconclusive;
  }
  return report;
}

NsReport ns_consistency_check(const QuotientRing& ring, const std::vector<Polynomial>& sop_a,
                              const std::vector<Polynomial>& sop_b, int top) {
  std::vector<LimitSystem> a, b;
  for (int i = 0; i <= ring.dim(); ++i) {
    a.push_back(build_limit_system(ring, sop_a, i, top));
    b.push_back(build_limit_system(ring, sop_b, i, top));
  }
  return ns_compare(ring, a, b, sop_a, sop_b);
}

// ---------------------------------------------------------------------------
// Closure quotients against nilpotent classes

Prop34Report prop34_check(const QuotientRing& ring, const std::vector<Polynomial>& sop, int t,
                          int n, int e, int top, const ClosureOptions& closure_options) {
  if (t < 1 || t > static_cast<int>(sop.size())) {
    fail(ErrorCode::kInvalidArgument, "t must lie in 1..length of the sequence");
  }
  const std::int64_t reach = static_cast<std::int64_t>(n) * prime_power(ring.characteristic(), e);
  if (n < 1 || e < 1 || reach > top) {
    fail(ErrorCode::kInvalidArgument, "the check needs n * p^e <= truncation level");
  }
  Prop34Report report;
  report.t = t;
  report.n = n;
  report.e = e;
  report.top = top;
  LimitSystem sys = build_limit_system(ring, sop, t, top);
  const QuotientRing& work = sys.work_ring();
  const int p = static_cast<int>(ring.characteristic());
  auto q_level = [&](std::int64_t level) {
    return work.ideal(powers_of(sys.prefix(), static_cast<int>(level)));
  };

  // Forward: generators of Q_n^F / Q_n are killed by at most e Frobenius steps.
  Ideal qn = q_level(n);
  ClosureResult closure = frobenius_closure(work, qn, closure_options);
  const TorsionQuotient& ln = sys.level(n);
  for (const auto& g : closure.closure.gb()) {
    if (is_member(g, qn)) continue;
    Prop34Forward f;
    f.generator = sys.to_input(g);
    for (int k = 1; k <= e && !f.order; ++k) {
      if (is_member(frobenius_raise(g, k), q_level(n * prime_power(p, k)))) f.order = k;
    }
    if (!f.order) {
      f.evidence = "undetermined";
      report.forward_ok = false;
    } else if (is_member(g, ln.saturated())) {
      Vector v = ln.coordinates(g);
      Vector w = apply(work.ambient()->field(), sys.frobenius_chain(n, *f.order), v);
      if (is_zero(w)) {
        f.evidence = "exact";
      } else {
        f.evidence = "matrix disagrees with membership";
        report.forward_ok = false;
      }
    } else {
      f.evidence = "membership";
    }
    report.forward.push_back(std::move(f));
  }

  // Backward: each nilpotent class, pushed to some level n2, lies in the
  // image of Q_{n2}^F / Q_{n2}.
  NilpotentPart nil = nilpotent_part(sys, e, top);
  std::map<int, Ideal> closures;
  for (const auto& c : nil.classes) {
    Prop34Backward b;
    b.level = c.level;
    b.order = c.order;
    b.representative = c.representative;
    Polynomial a = sys.level(c.level).element(c.coordinates);
    const std::int64_t q = prime_power(p, c.order);
    const int last = std::max<int>(c.level, static_cast<int>((top + q - 1) / q));
    for (int n2 = c.level; n2 <= last && !b.traced_to; ++n2) {
      Polynomial w = sys.prefix_product().pow(static_cast<std::uint64_t>(n2 - c.level)) * a;
      if (!is_member(frobenius_raise(w, c.order), q_level(n2 * q))) continue;
      auto it = closures.find(n2);
      if (it == closures.end()) {
        it = closures.emplace(n2, frobenius_closure(work, q_level(n2), closure_options).closure).first;
      }
      if (is_member(w, it->second)) b.traced_to = n2;
    }
    if (!b.traced_to) report.backward_ok = false;
    report.backward.push_back(std::move(b));
  }
  report.pass = report.forward_ok && report.backward_ok;
  return report;
}

// ---------------------------------------------------------------------------
// Fte >= HSL

InequalityReport verify_inequality(const QuotientRing& ring, const FteScanReport& scan,
                                   const HslReport& hsl) {
  auto same_ring = [&ring](const std::vector<Polynomial>& polys) {
    for (const auto& f : polys) {
      if (f.ring() != ring.ambient() && !f.ring()->same_as(*ring.ambient())) return false;
    }
    return true;
  };
  if (!same_ring(scan.base_sop) || !same_ring(hsl.sop)) {
    fail(ErrorCode::kRingMismatch, "scan and HSL reports were computed on a different ring");
  }
  InequalityReport report;
  report.max_fte = scan.max_fte;
  report.hsl = hsl.overall;
  report.hsl_stable = hsl.stable;
  report.equal = report.max_fte == report.hsl;
  const int d = ring.dim();
  for (const auto& s : scan.samples) {
    if (s.family != "prefix-power" || s.t != d || !s.fte) continue;
    Ideal q = ring.ideal(s.generators);
    for (const auto& g : s.closure_extra) {
      MechanismCheck m;
      m.n = s.n;
      m.fte = *s.fte;
      m.generator = g;
      m.ok = false;
      for (int e = 1; e <= *s.fte; ++e) {
        if (is_member(frobenius_raise(g, e), frobenius_power(ring, q, e))) {
          m.order = e;
          m.ok = true;
          break;
        }
      }
      if (!m.ok) report.mechanism_ok = false;
      report.mechanism.push_back(std::move(m));
    }
  }
  if (report.max_fte < report.hsl || !report.mechanism_ok) {
    report.status = hsl.stable ? CheckStatus::kFail : CheckStatus::kInconclusive;
  } else {
    report.status = hsl.stable ? CheckStatus::kPass : CheckStatus::kInconclusive;
  }
  return report;
}

}  // namespace fwb
