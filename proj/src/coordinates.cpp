#include "fwb/coordinates.hpp"

#include <algorithm>

namespace fwb {

namespace {

bool is_linear_form(const Polynomial& f) {
  if (f.is_zero()) return false;
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [](const Term& t) { return t.mono.total_degree() == 1; });
}

Vector coefficients_of(const Polynomial& f, int n) {
  Vector v(static_cast<std::size_t>(n), 0);
  for (const Term& t : f.terms()) {
    for (int i = 0; i < n; ++i) {
      if (t.mono[i] == 1) v[static_cast<std::size_t>(i)] = t.coeff;
    }
  }
  return v;
}

std::vector<Polynomial> linear_images(const RingPtr& ring, const Matrix& m) {
  // image of x_j = sum_k m(j, k) x_k
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < m.rows(); ++j) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (m(j, k) == 0) continue;
      Monomial mono;
      mono[static_cast<int>(k)] = 1;
      terms.push_back({mono, m(j, k)});
    }
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return out;
}

}  // namespace

std::optional<LinearChange> LinearChange::straighten(const QuotientRing& ring,
                                                     const std::vector<Polynomial>& forms) {
  const RingPtr& s = ring.ambient();
  const int n = s->nvars();
  const auto& w = s->grading();
  if (!std::all_of(w.begin(), w.end(), [](int x) { return x == 1; })) return std::nullopt;
  if (static_cast<int>(forms.size()) > n) return std::nullopt;
  const PrimeField& k = s->field();
  EchelonSpan span(k, static_cast<std::size_t>(n));
  std::vector<Vector> form_rows;
  for (const auto& f : forms) {
    if (!is_linear_form(f)) return std::nullopt;
    Vector v = coefficients_of(f, n);
    if (!span.insert(v)) return std::nullopt;
    form_rows.push_back(std::move(v));
  }
  std::vector<Vector> rows;
  for (int j = 0; j < n && span.size() < static_cast<std::size_t>(n); ++j) {
    Vector e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j)] = 1;
    if (span.insert(e)) rows.push_back(std::move(e));
  }
  rows.insert(rows.end(), form_rows.begin(), form_rows.end());
  Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  std::optional<Matrix> b = inverse(k, m);
  if (!b) return std::nullopt;

  LinearChange change;
  change.offset_ = n - static_cast<int>(forms.size());
  change.forward_images_ = linear_images(s, *b);
  change.backward_images_ = linear_images(s, m);
  std::vector<Polynomial> rel;
  for (const auto& g : ring.relations().generators()) rel.push_back(change.forward(g));
  change.target_ = std::make_shared<const QuotientRing>(s, std::move(rel), ring.label());
  return change;
}

Ideal LinearChange::forward(const Ideal& ideal) const {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(forward(g));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal LinearChange::backward(const Ideal& ideal) const {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(backward(g));
  return Ideal(ideal.ring(), std::move(gens));
}

}  // namespace fwb
