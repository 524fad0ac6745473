#include "fwb/filter_regular.hpp"

#include "fwb/error.hpp"
#include "fwb/rng.hpp"

namespace fwb {

namespace {

bool prefix_passes(const QuotientRing& ring, const std::vector<Polynomial>& prefix,
                   const Polynomial& next, const Ideal& target) {
  Ideal j = ring.ideal(prefix);
  Ideal quotient = colon(j, next);
  if (ideal_equal(quotient, j)) return true;
  return contains(saturation(j, target).ideal, quotient);
}

}  // namespace

FilterCheck check_filter_regular(const QuotientRing& ring, const std::vector<Polynomial>& seq,
                                 const std::optional<Ideal>& target) {
  Ideal t = target ? ring.ideal(target->generators()) : ring.maximal_ideal();
  for (const auto& x : seq) {
    if (!is_member(x, t)) {
      fail(ErrorCode::kInvalidArgument, "element " + x.to_string() + " lies outside the target ideal");
    }
  }
  FilterCheck out;
  std::vector<Polynomial> prefix;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    bool ok = prefix_passes(ring, prefix, seq[i], t);
    out.prefix_ok.push_back(ok);
    if (!ok && out.regular) {
      out.regular = false;
      out.first_failure = static_cast<int>(i);
    }
    prefix.push_back(seq[i]);
  }
  return out;
}

bool is_system_of_parameters(const QuotientRing& ring, const std::vector<Polynomial>& seq) {
  if (static_cast<int>(seq.size()) != ring.dim()) {
    fail(ErrorCode::kInvalidArgument, "sequence length " + std::to_string(seq.size()) +
                                          " differs from dim R = " + std::to_string(ring.dim()));
  }
  Ideal q = ring.ideal(seq);
  if (q.is_unit()) return false;
  return dimension(q) == 0;
}

FilterSequence random_filter_regular_sop(const QuotientRing& ring, std::uint64_t seed,
                                         int max_tries) {
  const RingPtr& s = ring.ambient();
  const int d = ring.dim();
  const Coeff p = ring.characteristic();
  Rng rng(seed);
  Ideal m = ring.maximal_ideal();
  FilterSequence out;
  out.seed = seed;
  // A filter regular prefix need not extend to a system of parameters over a
  // small field (e.g. three F_2-rational lines admit no parameter), so a dead
  // end restarts the whole sequence.
  for (int restart = 0; restart < max_tries; ++restart) {
    out.elements.clear();
    out.verified.clear();
    bool dead_end = false;
    for (int i = 0; i < d && !dead_end; ++i) {
      bool found = false;
      for (int attempt = 0; attempt < max_tries && !found; ++attempt) {
        ++out.tries;
        std::vector<Term> terms;
        for (int v = 0; v < s->nvars(); ++v) {
          Monomial mono;
          mono[v] = 1;
          terms.push_back({mono, static_cast<Coeff>(rng.below(p))});
        }
        Polynomial form = Polynomial::from_terms(s, std::move(terms));
        if (form.is_zero()) continue;
        std::vector<Polynomial> candidate = out.elements;
        candidate.push_back(form);
        Ideal j = ring.ideal(candidate);
        if (j.is_unit() || dimension(j) != d - i - 1) continue;
        if (!prefix_passes(ring, out.elements, form, m)) continue;
        out.elements.push_back(form);
        out.verified.push_back(true);
        found = true;
      }
      dead_end = !found;
    }
    if (!dead_end) return out;
  }
  fail(ErrorCode::kResourceLimit,
       "no filter regular system of parameters found after " + std::to_string(out.tries) +
           " draws; raise the characteristic or supply the sequence manually");
}

}  // namespace fwb
