#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fwb/groebner.hpp"
#include "fwb/parser.hpp"

namespace fwb::testing {

inline RingPtr ring(std::int64_t p, std::vector<std::string> names,
                    MonomialOrder order = MonomialOrder::grevlex()) {
  return PolyRing::make(PrimeField(p), std::move(names), std::move(order));
}

inline Polynomial P(const RingPtr& r, const std::string& text) { return parse_polynomial(text, r); }

inline Ideal I(const RingPtr& r, const std::string& text) {
  return Ideal(r, parse_polynomial_list(text, r));
}

inline Polynomial random_poly(const RingPtr& r, std::mt19937_64& rng, int max_terms, int max_exp) {
  std::vector<Term> terms;
  std::uniform_int_distribution<int> nt(0, max_terms);
  std::uniform_int_distribution<int> ex(0, max_exp);
  std::uniform_int_distribution<std::uint32_t> co(0, r->characteristic() - 1);
  int n = nt(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m;
    for (int i = 0; i < r->nvars(); ++i) m[i] = ex(rng);
    terms.push_back({m, co(rng)});
  }
  return Polynomial::from_terms(r, std::move(terms));
}

// Rank over F_p of a dense row set (Gaussian elimination written
// independently of the library's linear algebra).
inline std::size_t naive_rank(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  std::size_t rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    std::uint64_t a = rows[rank][c] % p, inv = 1, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * a % p;
      a = a * a % p;
      e >>= 1;
    }
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] % p == 0) continue;
      std::uint64_t f = rows[r][c] % p;
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = (rows[r][k] + (p - f) * rows[rank][k]) % p;
    }
    ++rank;
  }
  return rank;
}

// dim_F (I)_d for a homogeneous ideal, spanned by monomial multiples of the
// generators (Macaulay matrix). Independent of Groebner bases.
inline std::size_t macaulay_dim(const Ideal& ideal, std::int64_t d) {
  const RingPtr& r = ideal.ring();
  std::vector<Monomial> basis = monomials_of_degree(*r, d);
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& g : ideal.generators()) {
    std::int64_t dg = g.degree();
    if (dg > d) continue;
    for (const Monomial& m : monomials_of_degree(*r, d - dg)) {
      Polynomial h = g.times_term(m, 1);
      std::vector<std::uint64_t> row(basis.size(), 0);
      for (std::size_t k = 0; k < basis.size(); ++k) row[k] = h.coefficient(basis[k]);
      rows.push_back(std::move(row));
    }
  }
  return naive_rank(std::move(rows), r->characteristic());
}

}  // namespace fwb::testing

#include "fwb/quotient_ring.hpp"

namespace fwb::testing {

inline QuotientRing qring(std::int64_t p, std::vector<std::string> names, const std::string& rel,
                          const std::string& label = "") {
  auto r = ring(p, std::move(names));
  return QuotientRing(r, parse_polynomial_list(rel, r), label);
}

inline Ideal RI(const QuotientRing& R, const std::string& text) {
  return R.ideal(parse_polynomial_list(text, R.ambient()));
}

}  // namespace fwb::testing
