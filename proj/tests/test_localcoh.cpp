#include "doctest.h"
#include "fwb/error.hpp"
#include "fwb/filter_regular.hpp"
#include "fwb/localcoh.hpp"
#include "test_util.hpp"

using namespace fwb;
using namespace fwb::testing;

namespace {

std::vector<Polynomial> polys(const QuotientRing& R, const std::string& text) {
  return parse_polynomial_list(text, R.ambient());
}

QuotientRing two_planes() { return qring(2, {"x", "y", "u", "v"}, "x*u, x*v, y*u, y*v", "two-planes"); }

}  // namespace

TEST_CASE("torsion quotients") {
  auto R = qring(2, {"x", "y"}, "");
  TorsionQuotient a = torsion_quotient(R, RI(R, "x, y"));
  REQUIRE(a.length() == 1);
  CHECK(a.basis()[0] == P(R.ambient(), "1"));
  CHECK(torsion_quotient(R, RI(R, "x")).length() == 0);

  auto D = qring(2, {"x", "y"}, "x^2, x*y");
  TorsionQuotient h0 = torsion_quotient(D, RI(D, "0"));
  REQUIRE(h0.length() == 1);
  CHECK(h0.basis()[0] == P(D.ambient(), "x"));
  CHECK_THROWS_AS(h0.coordinates(P(D.ambient(), "y")), Error);

  TorsionQuotient s = torsion_quotient(R, RI(R, "x^2, y^3"));
  CHECK(s.length() == 6);
  auto table = s.degree_table();
  CHECK(table[0] == 1);
  CHECK(table[1] == 2);
  CHECK(table[2] == 2);
  CHECK(table[3] == 1);
  Vector v = s.coordinates(P(R.ambient(), "x*y^2 + x^2 + 1"));
  CHECK(s.element(v) == P(R.ambient(), "x*y^2 + 1"));
}

TEST_CASE("limit system lengths") {
  auto R = qring(2, {"x", "y"}, "");
  LimitSystem h1 = build_limit_system(R, polys(R, "x, y"), 1, 4);
  for (auto l : h1.lengths()) CHECK(l == 0);
  LimitSystem h2 = build_limit_system(R, polys(R, "x, y"), 2, 4);
  std::vector<std::size_t> squares{1, 4, 9, 16};
  CHECK(h2.lengths() == squares);
  CHECK(h2.has_frobenius(2));
  CHECK_FALSE(h2.has_frobenius(3));

  LimitSystem low = build_limit_system(R, polys(R, "x, y"), 2, 1);
  CHECK(low.warnings().size() == 1);

  auto T = two_planes();
  FilterSequence f = random_filter_regular_sop(T, 7);
  LimitSystem t1 = build_limit_system(T, f.elements, 1, 6);
  auto lengths = t1.lengths();
  CHECK(lengths[4] == 1);
  CHECK(lengths[5] == 1);
}

TEST_CASE("torsion annihilation and diagram commutation (property)") {
  std::vector<QuotientRing> rings{qring(2, {"x", "y"}, ""), two_planes(),
                                  qring(2, {"x", "y", "z"}, "x^3+y^3+z^3")};
  for (const auto& R : rings) {
    FilterSequence f = random_filter_regular_sop(R, 3);
    for (int i = 0; i <= R.dim(); ++i) {
      LimitSystem sys = build_limit_system(R, f.elements, i, 4);
      CHECK(audit_limit_system(sys).ok);
      const QuotientRing& W = sys.work_ring();
      for (int n = 1; n <= 4; ++n) {
        const TorsionQuotient& l = sys.level(n);
        int k = l.saturation_exponent();
        for (const auto& b : l.basis()) {
          for (const Monomial& m : monomials_of_degree(*W.ambient(), k)) {
            CHECK(is_member(b.times_term(m, 1), l.q()));
          }
        }
      }
      // Frobenius is additive and p-linear on classes.
      if (sys.has_frobenius(1) && sys.level(1).length() >= 2) {
        const PrimeField& k = W.ambient()->field();
        const TorsionQuotient& l1 = sys.level(1);
        Polynomial sum = l1.basis()[0] + l1.basis()[1];
        Vector lhs = sys.level(static_cast<int>(sys.p())).coordinates(frobenius_raise(sum, 1));
        Vector rhs = apply(k, sys.frobenius(1), l1.coordinates(sum));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("top lengths grow and transitions are injective on regular rings") {
  auto R = qring(3, {"x", "y", "z"}, "");
  LimitSystem s = build_limit_system(R, polys(R, "x, y, z"), 3, 4);
  auto l = s.lengths();
  for (std::size_t k = 1; k < l.size(); ++k) CHECK(l[k] > l[k - 1]);
  for (int n = 1; n < 4; ++n) CHECK(rank(R.ambient()->field(), s.step(n)) == l[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("nilpotent parts") {
  auto R = qring(2, {"x", "y"}, "");
  LimitSystem reg = build_limit_system(R, polys(R, "x, y"), 2, 8);
  CHECK(nilpotent_part(reg, 2).classes.empty());
  LimitSystem zero = build_limit_system(R, polys(R, "x, y"), 1, 8);
  CHECK(nilpotent_part(zero, 2).classes.empty());

  auto F = qring(2, {"x", "y", "z"}, "x^3+y^3+z^3");
  FilterSequence f = random_filter_regular_sop(F, 42);
  LimitSystem top = build_limit_system(F, f.elements, 2, 8);
  NilpotentPart nil = nilpotent_part(top, 2);
  CHECK(nil.max_order == 1);
  REQUIRE_FALSE(nil.classes.empty());
  for (const auto& c : nil.classes) {
    // Independent check of the order: the raised representative lies in the
    // bracket power, and the class survives to level N.
    const TorsionQuotient& l = top.level(c.level);
    Polynomial a = l.element(c.coordinates);
    CHECK_FALSE(is_zero(apply(F.ambient()->field(), top.transition(c.level, 8), c.coordinates)));
    Vector image = apply(F.ambient()->field(), top.frobenius(c.level), c.coordinates);
    CHECK(is_zero(apply(F.ambient()->field(), top.transition(2 * c.level, 8), image)));
    CHECK(top.to_input(a) == c.representative);
  }

  auto D = qring(2, {"x", "y"}, "x^2, x*y");
  FilterSequence g = random_filter_regular_sop(D, 1);
  LimitSystem h0 = build_limit_system(D, g.elements, 0, 4);
  NilpotentPart n0 = nilpotent_part(h0, 2);
  CHECK(n0.max_order == 1);
  // One class per level n with 2n <= 4; n * 4 > 4 leaves levels 2..4 open.
  CHECK(n0.classes.size() == 2);
  CHECK(n0.undetermined_levels == std::vector<int>{2, 3, 4});
}

TEST_CASE("HSL estimates") {
  auto R = qring(2, {"x", "y"}, "");
  HslReport reg = hsl_estimate(R, polys(R, "x, y"), 8, 2);
  CHECK(reg.overall == 0);
  CHECK(reg.stable);

  auto F2 = qring(2, {"x", "y", "z"}, "x^3+y^3+z^3");
  HslReport f2 = hsl_estimate(F2, random_filter_regular_sop(F2, 42).elements, 8, 2, 2);
  CHECK(f2.overall == 1);
  CHECK(f2.stable);
  CHECK(f2.per_i.size() == 3);
  CHECK(f2.per_i[2].value == 1);

  auto F7 = qring(7, {"x", "y", "z"}, "x^3+y^3+z^3");
  HslReport f7 = hsl_estimate(F7, random_filter_regular_sop(F7, 42).elements, 8, 2, 2);
  CHECK(f7.overall == 0);
  CHECK(f7.stable);
  for (const auto& c : f7.per_i) CHECK_MESSAGE(c.error.empty(), c.error);

  auto D = qring(2, {"x", "y"}, "x^2, x*y");
  HslReport d = hsl_estimate(D, random_filter_regular_sop(D, 42).elements, 8, 2);
  CHECK(d.overall == 1);
  CHECK(d.stable);

  auto T = two_planes();
  HslReport t = hsl_estimate(T, random_filter_regular_sop(T, 42).elements, 6, 2);
  CHECK(t.overall == 0);
  CHECK(t.stable);
}

TEST_CASE("graded Koszul cohomology") {
  auto R = qring(2, {"x", "y"}, "");
  auto xy = polys(R, "x, y");
  CHECK(graded_koszul_cohomology(R, xy, 0, 0, 6).total == 0);
  CHECK(graded_koszul_cohomology(R, xy, 1, 0, 6).total == 0);
  KoszulTable top = graded_koszul_cohomology(R, xy, 2, 0, 6);
  CHECK(top.total == 1);
  CHECK(top.dims.size() == 1);
  CHECK(top.dims.at(0) == 1);

  auto T = two_planes();
  auto l = polys(T, "x+u");
  for (int n = 1; n <= 3; ++n) {
    auto ln = std::vector<Polynomial>{l[0].pow(static_cast<std::uint64_t>(n))};
    KoszulTable k = graded_koszul_cohomology(T, ln, 1, 0, 8);
    Ideal q = T.ideal(ln);
    for (std::int64_t delta = 0; delta <= 8; ++delta) {
      std::size_t expect = standard_monomials(q, delta).size();
      std::size_t got = k.dims.count(delta) ? k.dims.at(delta) : 0;
      CHECK(got == expect);
    }
  }
  CHECK_THROWS_AS(graded_koszul_cohomology(R, polys(R, "x + y^2"), 0, 0, 2), Error);
}

TEST_CASE("local cohomology does not depend on the sop") {
  auto R = qring(2, {"x", "y"}, "");
  auto ra = random_filter_regular_sop(R, 1).elements;
  auto rb = random_filter_regular_sop(R, 2).elements;
  NsReport reg = ns_consistency_check(R, ra, rb, 4);
  CHECK(reg.status == CheckStatus::kPass);
  std::vector<std::size_t> squares{1, 4, 9, 16};
  CHECK(reg.per_i[2].lengths_a == squares);
  CHECK(reg.per_i[2].lengths_b == squares);

  auto T = two_planes();
  auto ta = random_filter_regular_sop(T, 1).elements;
  auto tb = random_filter_regular_sop(T, 2).elements;
  NsReport tp = ns_consistency_check(T, ta, tb, 6);
  CHECK_MESSAGE(tp.status == CheckStatus::kPass, tp.first_disagreement);
  REQUIRE(tp.per_i.size() == 3);
  CHECK(tp.per_i[1].stable_a == std::optional<std::size_t>(1));
  CHECK(tp.per_i[1].stable_b == std::optional<std::size_t>(1));

  auto D = qring(2, {"x", "y"}, "x^2, x*y");
  auto da = random_filter_regular_sop(D, 1).elements;
  auto db = random_filter_regular_sop(D, 2).elements;
  NsReport dp = ns_consistency_check(D, da, db, 6);
  CHECK_MESSAGE(dp.status == CheckStatus::kPass, dp.first_disagreement);
  CHECK(dp.per_i[0].stable_a == std::optional<std::size_t>(1));

  // Negative control: a corrupted transition matrix is caught.
  std::vector<LimitSystem> a, b;
  for (int i = 0; i <= T.dim(); ++i) {
    a.push_back(build_limit_system(T, ta, i, 6));
    b.push_back(build_limit_system(T, tb, i, 6));
  }
  Matrix& m = a[2].mutable_step(3);
  m(0, 0) = (m(0, 0) + 1) % 2;
  NsReport bad = ns_compare(T, a, b, ta, tb);
  CHECK(bad.status == CheckStatus::kFail);
  CHECK_FALSE(bad.first_disagreement.empty());
}

TEST_CASE("closure quotients and nilpotent classes") {
  auto F = qring(2, {"x", "y", "z"}, "x^3+y^3+z^3");
  Prop34Report r = prop34_check(F, polys(F, "y, z"), 2, 1, 1, 8);
  CHECK(r.pass);
  REQUIRE(r.forward.size() == 1);
  CHECK(r.forward[0].generator == P(F.ambient(), "x^2"));
  CHECK(r.forward[0].order == std::optional<int>(1));
  CHECK(r.forward[0].evidence == "exact");
  CHECK_FALSE(r.backward.empty());
  for (const auto& b : r.backward) CHECK(b.traced_to.has_value());

  auto R = qring(2, {"x", "y"}, "");
  Prop34Report v = prop34_check(R, polys(R, "x, y"), 2, 1, 1, 8);
  CHECK(v.pass);
  CHECK(v.forward.empty());
  CHECK(v.backward.empty());
  CHECK_THROWS_AS(prop34_check(R, polys(R, "x, y"), 2, 3, 2, 8), Error);
}

TEST_CASE("Fte >= HSL on the corpus rings") {
  struct Case {
    QuotientRing ring;
    bool cohen_macaulay;
  };
  std::vector<Case> cases{{qring(2, {"x", "y"}, ""), true},
                          {qring(2, {"x", "y", "z"}, "x^3+y^3+z^3"), true},
                          {qring(7, {"x", "y", "z"}, "x^3+y^3+z^3"), true},
                          {qring(2, {"x", "y"}, "x^2, x*y"), false},
                          {two_planes(), false}};
  for (const auto& c : cases) {
    ScanOptions opts;
    opts.jobs = 2;
    FteScanReport scan = fte_scan(c.ring, opts);
    HslReport hsl = hsl_estimate(c.ring, scan.base_sop, 6, 2, 2);
    InequalityReport r = verify_inequality(c.ring, scan, hsl);
    CHECK(r.status == CheckStatus::kPass);
    CHECK(r.mechanism_ok);
    if (c.cohen_macaulay) CHECK(r.equal);
  }
  auto a = qring(2, {"x", "y"}, "");
  auto b = qring(3, {"x", "y"}, "");
  FteScanReport scan = fte_scan(a);
  HslReport hsl = hsl_estimate(a, scan.base_sop, 4, 2);
  CHECK_THROWS_AS(verify_inequality(b, scan, hsl), Error);
}
