#include "fwb/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <unordered_set>

#include "fwb/error.hpp"

namespace fwb {

namespace {

// Divisor lookup over a set of polynomials keyed by their leading monomials.
class Reducer {
 public:
  explicit Reducer(const PolyRing& ring) : ring_(ring) {}

  void add(const Polynomial* p) {
    polys_.push_back(p);
    masks_.push_back(p->leading_monomial().support_mask());
  }

  void clear() {
    polys_.clear();
    masks_.clear();
  }

  const Polynomial* find(const Monomial& m) const {
    std::uint32_t mask = m.support_mask();
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if ((masks_[i] & ~mask) == 0 && polys_[i]->leading_monomial().divides(m)) return polys_[i];
    }
    return nullptr;
  }

  // Full reduction: every remaining term is irreducible.
  std::vector<Term> reduce(std::vector<Term> h) const {
    const PrimeField& k = ring_.field();
    std::vector<Term> rem;
    std::vector<Term> next;
    std::size_t pos = 0;
    while (pos < h.size()) {
      const Term t = h[pos];
      const Polynomial* g = find(t.mono);
      if (g == nullptr) {
        rem.push_back(t);
        ++pos;
        continue;
      }
      Coeff c = k.mul(t.coeff, k.inv(g->leading_coeff()));
      Coeff neg_c = k.neg(c);
      Monomial shift = t.mono / g->leading_monomial();
      const auto& gt = g->terms();
      next.clear();
      next.reserve(h.size() - pos + gt.size());
      std::size_t i = pos + 1, j = 1;
      while (i < h.size() && j < gt.size()) {
        Monomial gm = gt[j].mono * shift;
        auto cmp = ring_.compare(h[i].mono, gm);
        if (cmp > 0) {
          next.push_back(h[i++]);
        } else if (cmp < 0) {
          next.push_back({gm, k.mul(gt[j].coeff, neg_c)});
          ++j;
        } else {
          Coeff v = k.add(h[i].coeff, k.mul(gt[j].coeff, neg_c));
          if (v != 0) next.push_back({h[i].mono, v});
          ++i;
          ++j;
        }
      }
      for (; i < h.size(); ++i) next.push_back(h[i]);
      for (; j < gt.size(); ++j) next.push_back({gt[j].mono * shift, k.mul(gt[j].coeff, neg_c)});
      h.swap(next);
      pos = 0;
    }
    return rem;
  }

 private:
  const PolyRing& ring_;
  std::vector<const Polynomial*> polys_;
  std::vector<std::uint32_t> masks_;
};

void check_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a != b && !a->same_as(*b)) fail(ErrorCode::kRingMismatch, "operands live in different rings");
}

std::vector<int> positive_weights(const PolyRing& ring) {
  std::vector<int> w = ring.grading();
  for (int& x : w) x = std::max(x, 1);
  return w;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::int64_t sugar;
};

class Buchberger {
 public:
  explicit Buchberger(const RingPtr& ring) : ring_(ring), reducer_(*ring) {}

  GbResult run(std::vector<Polynomial> inputs) {
    auto start = std::chrono::steady_clock::now();
    std::vector<std::pair<std::int64_t, Polynomial>> pending;
    for (Polynomial& f : inputs) {
      check_same_ring(f.ring(), ring_);
      if (!f.is_zero()) {
        std::int64_t d = f.degree();
        pending.emplace_back(d, f.monic());
      }
    }
    const PolyRing& r = *ring_;
    std::stable_sort(pending.begin(), pending.end(), [&r](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return r.compare(a.second.leading_monomial(), b.second.leading_monomial()) < 0;
    });
    std::size_t next_input = 0;
    bool unit = false;

    while (!unit && (next_input < pending.size() || !pairs_.empty())) {
      std::optional<std::size_t> best_pair = select_pair();
      bool take_input = next_input < pending.size() &&
                        (!best_pair || pending[next_input].first <= pairs_[*best_pair].sugar);
      std::int64_t sugar = 0;
      std::vector<Term> h;
      if (take_input) {
        sugar = pending[next_input].first;
        h = pending[next_input].second.terms();
        ++next_input;
      } else {
        Pair p = pairs_[*best_pair];
        pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(*best_pair));
        sugar = p.sugar;
        h = s_polynomial(basis_[p.i], basis_[p.j]).terms();
      }
      ++stats_.pairs_processed;
      stats_.max_degree = std::max(stats_.max_degree, sugar);
      if (stats_.pairs_processed > r.limits().max_pairs) {
        fail(ErrorCode::kResourceLimit,
             "Groebner basis aborted: pair cap " + std::to_string(r.limits().max_pairs) +
                 " exceeded");
      }
      if (!take_input && sugar > r.limits().max_degree) {
        fail(ErrorCode::kResourceLimit,
             "Groebner basis aborted: degree cap " + std::to_string(r.limits().max_degree) +
                 " exceeded (sugar " + std::to_string(sugar) + ")");
      }
      std::vector<Term> reduced = reducer_.reduce(std::move(h));
      if (reduced.empty()) {
        ++stats_.reductions_to_zero;
        continue;
      }
      Polynomial poly = Polynomial::from_terms(ring_, std::move(reduced)).monic();
      if (poly.leading_monomial().is_one()) {
        unit = true;
        break;
      }
      insert(std::move(poly), sugar);
    }

    GbResult result;
    if (unit) {
      result.basis.push_back(Polynomial::constant(ring_, 1));
    } else {
      result.basis = finalize();
    }
    result.stats = stats_;
    result.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
  }

 private:
  std::optional<std::size_t> select_pair() const {
    if (pairs_.empty()) return std::nullopt;
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      auto c = ring_->compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
    }
    return best;
  }

  void insert(Polynomial h, std::int64_t sugar) {
    const std::size_t hidx = basis_.size();
    const Monomial lh = h.leading_monomial();
    basis_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(false);

    struct Candidate {
      std::size_t k;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> cands;
    for (std::size_t k = 0; k < hidx; ++k) {
      if (!active_[k]) continue;
      const Monomial& lk = basis_[k].leading_monomial();
      cands.push_back({k, lcm(lk, lh), coprime(lk, lh)});
    }
    // Gebauer-Moeller: chain criterion among new pairs, then product criterion.
    std::vector<Candidate> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      const Candidate& c = cands[a];
      bool keep = true;
      if (!c.coprime) {
        for (std::size_t b = a + 1; b < cands.size() && keep; ++b) {
          if (cands[b].lcm.divides(c.lcm)) keep = false;
        }
        for (const Candidate& d : kept) {
          if (!keep) break;
          if (d.lcm.divides(c.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(c);
    }
    // Criterion B on old pairs.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      Monomial li = lcm(basis_[p.i].leading_monomial(), lh);
      Monomial lj = lcm(basis_[p.j].leading_monomial(), lh);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    const PolyRing& r = *ring_;
    for (const Candidate& c : kept) {
      if (c.coprime) continue;
      const Monomial& lk = basis_[c.k].leading_monomial();
      std::int64_t s = std::max(sugar_[c.k] + r.degree(c.lcm / lk), sugar + r.degree(c.lcm / lh));
      pairs_.push_back({c.k, hidx, c.lcm, s});
    }
    for (std::size_t k = 0; k < hidx; ++k) {
      if (active_[k] && lh.divides(basis_[k].leading_monomial())) active_[k] = false;
    }
    active_[hidx] = true;
    rebuild_reducer();
  }

  void rebuild_reducer() {
    reducer_.clear();
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (active_[k]) reducer_.add(&basis_[k]);
    }
  }

  std::vector<Polynomial> finalize() {
    std::vector<Polynomial> out;
    rebuild_reducer();
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!active_[k]) continue;
      const auto& terms = basis_[k].terms();
      std::vector<Term> tail(terms.begin() + 1, terms.end());
      std::vector<Term> reduced = reducer_.reduce(std::move(tail));
      reduced.insert(reduced.begin(), terms.front());
      out.push_back(Polynomial::from_terms(ring_, std::move(reduced)).monic());
    }
    const PolyRing& r = *ring_;
    std::sort(out.begin(), out.end(), [&r](const Polynomial& a, const Polynomial& b) {
      return r.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return out;
  }

  RingPtr ring_;
  Reducer reducer_;
  std::vector<Polynomial> basis_;
  std::vector<std::int64_t> sugar_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  GbStats stats_;
};

}  // namespace

GbResult buchberger(const RingPtr& ring, std::vector<Polynomial> generators) {
  return Buchberger(ring).run(std::move(generators));
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis) {
  Reducer reducer(*f.ring());
  for (const Polynomial& g : basis) {
    check_same_ring(g.ring(), f.ring());
    if (!g.is_zero()) reducer.add(&g);
  }
  return Polynomial::from_terms(f.ring(), reducer.reduce(f.terms()));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f.ring(), g.ring());
  const PrimeField& k = f.ring()->field();
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.times_term(l / f.leading_monomial(), k.inv(f.leading_coeff()));
  Polynomial b = g.times_term(l / g.leading_monomial(), k.inv(g.leading_coeff()));
  return a - b;
}

bool s_pair_criterion_holds(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!reduce(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

Polynomial divide_exact(const Polynomial& h, const Polynomial& f) {
  check_same_ring(h.ring(), f.ring());
  if (f.is_zero()) fail(ErrorCode::kInvalidArgument, "division by zero polynomial");
  const PrimeField& k = h.ring()->field();
  Coeff inv_lc = k.inv(f.leading_coeff());
  std::vector<Term> quotient;
  Polynomial rest = h;
  while (!rest.is_zero()) {
    const Term& t = rest.leading_term();
    if (!f.leading_monomial().divides(t.mono)) {
      fail(ErrorCode::kInconsistent, "divide_exact: divisor does not divide");
    }
    Monomial m = t.mono / f.leading_monomial();
    Coeff c = k.mul(t.coeff, inv_lc);
    quotient.push_back({m, c});
    rest = rest - f.times_term(m, c);
  }
  return Polynomial::from_terms(h.ring(), std::move(quotient));
}

// ---------------------------------------------------------------------------

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (Polynomial& g : generators) {
    check_same_ring(g.ring(), ring_);
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::maximal(RingPtr ring) {
  std::vector<Polynomial> vars;
  for (int i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(std::move(ring), std::move(vars));
}

const GbResult& Ideal::result() const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->value) {
    cache_->value = std::make_shared<const GbResult>(buchberger(ring_, generators_));
  }
  return *cache_->value;
}

bool Ideal::is_unit() const {
  const auto& g = gb();
  return g.size() == 1 && g.front().leading_monomial().is_one();
}

bool Ideal::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& f) { return f.is_homogeneous(); });
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i > 0) out += ", ";
    out += generators_[i].to_string();
  }
  return out + ")";
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal) {
  check_same_ring(f.ring(), ideal.ring());
  return reduce(f, ideal.gb());
}

bool is_member(const Polynomial& f, const Ideal& ideal) {
  return normal_form(f, ideal).is_zero();
}

bool contains(const Ideal& ideal, const Ideal& sub) {
  check_same_ring(ideal.ring(), sub.ring());
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](const Polynomial& g) { return is_member(g, ideal); });
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  check_same_ring(a.ring(), b.ring());
  const auto& ga = a.gb();
  const auto& gb = b.gb();
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i) {
    if (!(ga[i] == gb[i])) return false;
  }
  return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  check_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

namespace {

// Ring (t, x_1..x_n) eliminating t; t has grading weight 0 so that t*f and
// (1-t)*g stay homogeneous when f and g are.
RingPtr tag_ring(const PolyRing& base) {
  std::vector<std::string> names{"_tag"};
  names.insert(names.end(), base.names().begin(), base.names().end());
  std::vector<int> order_w{1};
  std::vector<int> pw = positive_weights(base);
  order_w.insert(order_w.end(), pw.begin(), pw.end());
  std::vector<int> grading{0};
  grading.insert(grading.end(), base.grading().begin(), base.grading().end());
  return PolyRing::make(base.field(), std::move(names),
                        MonomialOrder::elimination(1, std::move(order_w)), std::move(grading),
                        base.limits());
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  check_same_ring(a.ring(), b.ring());
  const RingPtr& base = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(base);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  RingPtr tr = tag_ring(*base);
  std::vector<int> up(static_cast<std::size_t>(base->nvars()));
  for (int i = 0; i < base->nvars(); ++i) up[static_cast<std::size_t>(i)] = i + 1;
  Polynomial t = Polynomial::variable(tr, 0);
  Polynomial one_minus_t = Polynomial::constant(tr, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * map_variables(f, tr, up));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * map_variables(g, tr, up));
  GbResult gb = buchberger(tr, std::move(gens));
  std::vector<int> down(static_cast<std::size_t>(tr->nvars()));
  down[0] = -1;
  for (int i = 1; i < tr->nvars(); ++i) down[static_cast<std::size_t>(i)] = i - 1;
  std::vector<Polynomial> out;
  for (const auto& g : gb.basis) {
    if (g.leading_monomial()[0] == 0) out.push_back(map_variables(g, base, down));
  }
  return Ideal(base, std::move(out));
}

Ideal colon(const Ideal& ideal, const Polynomial& f) {
  check_same_ring(ideal.ring(), f.ring());
  if (f.is_zero() || is_member(f, ideal)) return Ideal::unit(ideal.ring());
  Ideal meet = intersect(ideal, Ideal(ideal.ring(), {f}));
  std::vector<Polynomial> gens;
  for (const auto& h : meet.generators()) gens.push_back(divide_exact(h, f));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal colon(const Ideal& ideal, const Ideal& by) {
  check_same_ring(ideal.ring(), by.ring());
  std::optional<Ideal> acc;
  for (const auto& g : by.generators()) {
    if (is_member(g, ideal)) continue;
    Ideal c = colon(ideal, g);
    acc = acc ? intersect(*acc, c) : c;
  }
  return acc ? *acc : Ideal::unit(ideal.ring());
}

namespace {

bool is_all_variables(const Ideal& by) {
  const PolyRing& r = *by.ring();
  std::vector<bool> seen(static_cast<std::size_t>(r.nvars()), false);
  for (const auto& g : by.generators()) {
    if (g.size() != 1 || g.leading_coeff() == 0) return false;
    const Monomial& m = g.leading_monomial();
    if (m.total_degree() != 1) return false;
    for (int i = 0; i < r.nvars(); ++i) {
      if (m[i] == 1) seen[static_cast<std::size_t>(i)] = true;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool standard_grading(const PolyRing& r) {
  return std::all_of(r.grading().begin(), r.grading().end(), [](int w) { return w == 1; });
}

}  // namespace

Saturation saturation(const Ideal& ideal, const Ideal& by) {
  check_same_ring(ideal.ring(), by.ring());
  if (ideal.is_unit()) return {ideal, 0};
  // A homogeneous zero-dimensional ideal is primary to the irrelevant ideal:
  // its saturation by all variables is the unit ideal, reached once m^s lies
  // in it, i.e. s = (top standard degree) + 1.
  if (is_all_variables(by) && standard_grading(*ideal.ring()) && ideal.is_homogeneous() &&
      dimension(ideal) == 0) {
    return {Ideal::unit(ideal.ring()), static_cast<int>(top_standard_degree(ideal)) + 1};
  }
  Ideal current = ideal;
  int steps = 0;
  for (;;) {
    Ideal next = colon(current, by);
    if (ideal_equal(next, current)) return {current, steps};
    current = Ideal(next.ring(), next.gb());
    ++steps;
  }
}

Ideal eliminate(const Ideal& ideal, const std::vector<int>& keep) {
  const PolyRing& base = *ideal.ring();
  std::vector<bool> kept(static_cast<std::size_t>(base.nvars()), false);
  for (int k : keep) {
    if (k < 0 || k >= base.nvars()) fail(ErrorCode::kInvalidArgument, "eliminate: bad index");
    kept[static_cast<std::size_t>(k)] = true;
  }
  std::vector<int> order_idx;  // eliminated first, then kept
  for (int i = 0; i < base.nvars(); ++i) {
    if (!kept[static_cast<std::size_t>(i)]) order_idx.push_back(i);
  }
  const int n_elim = static_cast<int>(order_idx.size());
  for (int i = 0; i < base.nvars(); ++i) {
    if (kept[static_cast<std::size_t>(i)]) order_idx.push_back(i);
  }
  std::vector<std::string> names;
  std::vector<int> weights, grading, to_elim(static_cast<std::size_t>(base.nvars()));
  std::vector<int> pw = positive_weights(base);
  for (std::size_t pos = 0; pos < order_idx.size(); ++pos) {
    auto src = static_cast<std::size_t>(order_idx[pos]);
    names.push_back(base.names()[src]);
    weights.push_back(pw[src]);
    grading.push_back(base.grading()[src]);
    to_elim[src] = static_cast<int>(pos);
  }
  RingPtr er = PolyRing::make(base.field(), names, MonomialOrder::elimination(n_elim, weights),
                              grading, base.limits());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(map_variables(g, er, to_elim));
  GbResult gb = buchberger(er, std::move(gens));

  std::vector<std::string> sub_names(names.begin() + n_elim, names.end());
  std::vector<int> sub_grading(grading.begin() + n_elim, grading.end());
  std::vector<int> sub_weights(weights.begin() + n_elim, weights.end());
  RingPtr sub = PolyRing::make(
      base.field(), sub_names,
      MonomialOrder{OrderKind::kGrevlex, 0, standard_grading(base) ? std::vector<int>{} : sub_weights},
      sub_grading, base.limits());
  std::vector<int> down(names.size(), -1);
  for (std::size_t pos = static_cast<std::size_t>(n_elim); pos < names.size(); ++pos) {
    down[pos] = static_cast<int>(pos) - n_elim;
  }
  std::vector<Polynomial> out;
  for (const auto& g : gb.basis) {
    bool free_of_elim = true;
    for (int i = 0; i < n_elim; ++i) {
      if (g.leading_monomial()[i] != 0) free_of_elim = false;
    }
    if (free_of_elim) out.push_back(map_variables(g, sub, down));
  }
  return Ideal(sub, std::move(out));
}

std::vector<Monomial> leading_monomials(const Ideal& ideal) {
  std::vector<Monomial> out;
  for (const auto& g : ideal.gb()) out.push_back(g.leading_monomial());
  return out;
}

bool in_monomial_ideal(const Monomial& m, const std::vector<Monomial>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

int dimension(const Ideal& ideal) {
  if (ideal.is_unit()) {
    fail(ErrorCode::kInvalidArgument, "dimension of the zero ring (improper ideal)");
  }
  const int n = ideal.ring()->nvars();
  std::vector<std::uint32_t> masks;
  for (const Monomial& m : leading_monomials(ideal)) masks.push_back(m.support_mask());
  int best = 0;
  const std::uint32_t limit = 1U << n;
  for (std::uint32_t subset = 0; subset < limit; ++subset) {
    int size = __builtin_popcount(subset);
    if (size <= best) continue;
    bool independent = std::all_of(masks.begin(), masks.end(),
                                   [&](std::uint32_t m) { return (m & ~subset) != 0; });
    if (independent) best = size;
  }
  return best;
}

std::vector<Monomial> monomials_of_degree(const PolyRing& ring, std::int64_t degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  const auto& w = ring.grading();
  for (int x : w) {
    if (x <= 0) fail(ErrorCode::kInvalidArgument, "monomial enumeration needs positive grading");
  }
  Monomial m;
  auto rec = [&](auto&& self, int var, std::int64_t left) -> void {
    if (var == ring.nvars() - 1) {
      if (left % w[static_cast<std::size_t>(var)] == 0) {
        m[var] = static_cast<Exponent>(left / w[static_cast<std::size_t>(var)]);
        out.push_back(m);
        m[var] = 0;
      }
      return;
    }
    for (std::int64_t e = left / w[static_cast<std::size_t>(var)]; e >= 0; --e) {
      m[var] = static_cast<Exponent>(e);
      self(self, var + 1, left - e * w[static_cast<std::size_t>(var)]);
    }
    m[var] = 0;
  };
  if (ring.nvars() == 0) {
    if (degree == 0) out.push_back(m);
    return out;
  }
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(),
            [&ring](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; });
  return out;
}

std::vector<Monomial> standard_monomials(const Ideal& ideal, std::int64_t degree) {
  std::vector<Monomial> lms = leading_monomials(ideal);
  std::vector<Monomial> out;
  for (const Monomial& m : monomials_of_degree(*ideal.ring(), degree)) {
    if (!in_monomial_ideal(m, lms)) out.push_back(m);
  }
  return out;
}

std::int64_t top_standard_degree(const Ideal& ideal) {
  if (ideal.is_unit()) return -1;
  if (dimension(ideal) != 0) {
    fail(ErrorCode::kInvalidArgument, "top_standard_degree needs a zero-dimensional ideal");
  }
  const PolyRing& r = *ideal.ring();
  std::vector<Monomial> lms = leading_monomials(ideal);
  std::unordered_set<Monomial, MonomialHash> seen{Monomial{}};
  std::deque<Monomial> queue{Monomial{}};
  std::int64_t top = 0;
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    top = std::max(top, r.degree(m));
    for (int i = 0; i < r.nvars(); ++i) {
      Monomial next = m;
      next[i] += 1;
      if (in_monomial_ideal(next, lms) || seen.count(next)) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  return top;
}

}  // namespace fwb
