#include "fwb/frobenius.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <map>
#include <thread>

#include "fwb/coordinates.hpp"
#include "fwb/error.hpp"
#include "fwb/filter_regular.hpp"
#include "fwb/linalg.hpp"
#include "fwb/rng.hpp"

namespace fwb {

Ideal frobenius_power(const Ideal& ideal, int e) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(frobenius_raise(g, e));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal frobenius_power(const QuotientRing& ring, const Ideal& ideal, int e) {
  return ring.ideal(frobenius_power(ideal, e).generators());
}

const char* to_string(PreimageRoute route) {
  switch (route) {
    case PreimageRoute::kAuto: return "auto";
    case PreimageRoute::kElimination: return "elimination";
    case PreimageRoute::kLinearAlgebra: return "linear-algebra";
  }
  return "?";
}

const char* to_string(ClosureStatus status) {
  return status == ClosureStatus::kStable ? "stable" : "unstable";
}

bool linear_algebra_route_applies(const Ideal& k) {
  const auto& w = k.ring()->grading();
  if (!std::all_of(w.begin(), w.end(), [](int x) { return x == 1; })) return false;
  if (!k.is_homogeneous() || k.is_unit()) return false;
  return dimension(k) == 0;
}

namespace {

Ideal preimage_by_elimination(const Ideal& k, std::int64_t q) {
  const RingPtr& base = k.ring();
  const int n = base->nvars();
  if (2 * n > kMaxVars) {
    fail(ErrorCode::kInvalidArgument, "q-power preimage by elimination needs at most " +
                                          std::to_string(kMaxVars / 2) + " variables");
  }
  std::vector<std::string> names = base->names();
  std::vector<int> grading = base->grading();
  for (int i = 0; i < n; ++i) {
    names.push_back("_y" + std::to_string(i));
    std::int64_t w = q * base->grading()[static_cast<std::size_t>(i)];
    if (w > INT_MAX) fail(ErrorCode::kInvalidArgument, "grading weight overflow");
    grading.push_back(static_cast<int>(std::max<std::int64_t>(w, 1)));
  }
  RingPtr big = PolyRing::make(base->field(), names, MonomialOrder::grevlex(), grading,
                               base->limits());
  std::vector<int> up(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)] = i;
  std::vector<Polynomial> gens;
  for (const auto& g : k.generators()) gens.push_back(map_variables(g, big, up));
  for (int i = 0; i < n; ++i) {
    Monomial xq;
    xq[i] = static_cast<Exponent>(q);
    gens.push_back(Polynomial::variable(big, n + i) - Polynomial::from_monomial(big, xq));
  }
  std::vector<int> keep;
  for (int i = 0; i < n; ++i) keep.push_back(n + i);
  Ideal in_y = eliminate(Ideal(big, std::move(gens)), keep);
  std::vector<Polynomial> out;
  for (const auto& g : in_y.generators()) out.push_back(map_variables(g, base, up));
  return Ideal(base, std::move(out));
}

Ideal preimage_by_linear_algebra(const Ideal& k, std::int64_t q) {
  const RingPtr& ring = k.ring();
  const int n = ring->nvars();
  const PrimeField& field = ring->field();
  // Upper bound for the top standard degree from the pure powers in in(K).
  std::vector<Monomial> lms = leading_monomials(k);
  std::int64_t top = 0;
  for (int i = 0; i < n; ++i) {
    Exponent best = 0;
    for (const Monomial& m : lms) {
      if (m.support_mask() == (1U << i) && (best == 0 || m[i] < best)) best = m[i];
    }
    if (best == 0) fail(ErrorCode::kInconsistent, "ideal is not zero-dimensional");
    top += best - 1;
  }
  const std::int64_t k0 = top / q + 1;
  std::vector<Polynomial> gens;
  for (std::int64_t d = 0; d < k0; ++d) {
    std::vector<Monomial> mons = monomials_of_degree(*ring, d);
    std::vector<Polynomial> images;
    std::map<Monomial, std::size_t, bool (*)(const Monomial&, const Monomial&)> index(
        [](const Monomial& a, const Monomial& b) {
          return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(),
                                              b.exponents().begin(), b.exponents().end());
        });
    for (const Monomial& m : mons) {
      Polynomial img = normal_form(Polynomial::from_monomial(ring, m.scaled(q)), k);
      for (const Term& t : img.terms()) index.emplace(t.mono, index.size());
      images.push_back(std::move(img));
    }
    Matrix a(index.size(), mons.size());
    for (std::size_t c = 0; c < mons.size(); ++c) {
      for (const Term& t : images[c].terms()) a(index.at(t.mono), c) = t.coeff;
    }
    for (const Vector& v : kernel(field, a)) {
      std::vector<Term> terms;
      for (std::size_t c = 0; c < v.size(); ++c) {
        if (v[c] != 0) terms.push_back({mons[c], v[c]});
      }
      gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
  }
  for (const Monomial& m : monomials_of_degree(*ring, k0)) {
    gens.push_back(Polynomial::from_monomial(ring, m));
  }
  return Ideal(ring, std::move(gens));
}

}  // namespace

Ideal qpower_preimage(const Ideal& k, int e, PreimageRoute route) {
  if (e < 0) fail(ErrorCode::kInvalidArgument, "negative Frobenius exponent");
  if (e == 0) return k;
  std::int64_t q = prime_power(k.ring()->characteristic(), e);
  if (route == PreimageRoute::kAuto) {
    route = linear_algebra_route_applies(k) ? PreimageRoute::kLinearAlgebra
                                            : PreimageRoute::kElimination;
  }
  if (route == PreimageRoute::kLinearAlgebra) {
    if (!linear_algebra_route_applies(k)) {
      fail(ErrorCode::kInvalidArgument,
           "linear-algebra preimage needs a homogeneous zero-dimensional ideal");
    }
    return preimage_by_linear_algebra(k, q);
  }
  return preimage_by_elimination(k, q);
}

ClosureResult frobenius_closure(const QuotientRing& ring, const Ideal& ideal,
                                const ClosureOptions& options) {
  if (options.e_max < 1 || options.window < 1) {
    fail(ErrorCode::kInvalidArgument, "closure needs e_max >= 1 and window >= 1");
  }
  Ideal lifted = ring.ideal(ideal.generators());
  ClosureResult out{lifted, 0, options.window, false, ClosureStatus::kUnstable, {}, {}, {}};
  out.window_checked = options.window;
  out.chain.push_back(lifted);
  out.brackets.push_back(lifted);
  out.chain_lengths.push_back(static_cast<int>(lifted.gb().size()));
  int equal_run = 0;
  for (int e = 1; e <= options.e_max; ++e) {
    Ideal bracket = frobenius_power(ring, lifted, e);
    Ideal je = qpower_preimage(bracket, e, options.route);
    je = Ideal(je.ring(), je.gb());
    const Ideal& prev = out.chain.back();
    if (!contains(je, prev)) {
      fail(ErrorCode::kInconsistent,
           "Frobenius closure chain failed to ascend at e = " + std::to_string(e));
    }
    bool same = ideal_equal(je, prev);
    out.chain.push_back(je);
    out.brackets.push_back(bracket);
    out.chain_lengths.push_back(static_cast<int>(je.gb().size()));
    if (same) {
      ++equal_run;
    } else {
      equal_run = 0;
      out.stabilized_at = e;
    }
    if (equal_run >= options.window) {
      out.status = ClosureStatus::kStable;
      break;
    }
  }
  out.closure = out.chain.back();
  out.certified = ideal_equal(out.closure, lifted);
  return out;
}

int fte_of_ideal(const QuotientRing& ring, const Ideal& ideal, const ClosureResult& closure,
                 int e_max) {
  Ideal lifted = ring.ideal(ideal.generators());
  const auto& gens = closure.closure.gb();
  for (int e = 0; e <= e_max; ++e) {
    Ideal bracket = static_cast<std::size_t>(e) < closure.brackets.size()
                        ? closure.brackets[static_cast<std::size_t>(e)]
                        : frobenius_power(ring, lifted, e);
    bool all = std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) {
      return is_member(frobenius_raise(g, e), bracket);
    });
    if (all) return e;
  }
  fail(ErrorCode::kInconsistent,
       "Frobenius test exponent exceeds e_max = " + std::to_string(e_max) +
           " although the closure was computed");
}

namespace {

struct SampleSpec {
  std::string family;
  int t = 0;
  int n = 1;
  std::uint64_t seed = 0;
  std::vector<Polynomial> sop;
};

FteSample run_sample(const QuotientRing& ring, const SampleSpec& spec,
                     const ClosureOptions& options) {
  FteSample out;
  out.family = spec.family;
  out.t = spec.t;
  out.n = spec.n;
  out.seed = spec.seed;
  const int d = static_cast<int>(spec.sop.size());
  for (int k = 0; k < d; ++k) {
    out.generators.push_back(k < spec.t ? spec.sop[static_cast<std::size_t>(k)].pow(static_cast<std::uint64_t>(spec.n))
                                        : spec.sop[static_cast<std::size_t>(k)]);
  }
  try {
    std::optional<LinearChange> change = LinearChange::straighten(ring, spec.sop);
    const QuotientRing& work = change ? change->target() : ring;
    std::vector<Polynomial> gens;
    for (const auto& g : out.generators) gens.push_back(change ? change->forward(g) : g);
    Ideal ideal = work.ideal(gens);
    ClosureResult closure = frobenius_closure(work, ideal, options);
    out.fte = fte_of_ideal(work, ideal, closure, options.e_max);
    out.stabilized_at = closure.stabilized_at;
    out.status = closure.status;
    for (const auto& g : closure.closure.gb()) {
      if (!is_member(g, ideal)) {
        out.closure_extra.push_back(change ? change->backward(g) : g);
      }
    }
    out.closure_nontrivial = !out.closure_extra.empty();
  } catch (const Error& e) {
    out.error = std::string(to_string(e.code())) + ": " + e.what();
  }
  return out;
}

}  // namespace

FteScanReport fte_scan(const QuotientRing& ring, const ScanOptions& options) {
  FteScanReport report;
  report.options = options;
  if (ring.dim() == 0) return report;
  report.base_seed = derive_seed(options.seed, 0);
  FilterSequence base = random_filter_regular_sop(ring, report.base_seed);
  report.base_sop = base.elements;
  const int d = ring.dim();

  std::vector<SampleSpec> specs;
  for (int k = 1; k <= options.n_random; ++k) {
    std::uint64_t s = derive_seed(options.seed, static_cast<std::uint64_t>(k));
    FilterSequence f = random_filter_regular_sop(ring, s);
    specs.push_back({"random", d, 1, s, f.elements});
  }
  specs.push_back({"prefix-power", d, 1, report.base_seed, base.elements});
  for (int t = 1; t <= d; ++t) {
    for (int n = 2; n <= options.power_family_max; ++n) {
      specs.push_back({"prefix-power", t, n, report.base_seed, base.elements});
    }
  }

  report.samples.resize(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      report.samples[i] = run_sample(ring, specs[i], options.closure);
    }
  };
  int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(specs.size())));
  std::vector<std::thread> threads;
  for (int j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& th : threads) th.join();

  for (const auto& s : report.samples) {
    if (s.fte) report.max_fte = std::max(report.max_fte, *s.fte);
  }
  return report;
}

}  // namespace fwb
