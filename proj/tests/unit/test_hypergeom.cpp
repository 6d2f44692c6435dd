#include "doctest.h"

#include "rook/walks/walks.hpp"
#include "rook/hypergeom/hypergeom.hpp"

using namespace rook;

namespace {

const Vars kX{"x"};

RatFun rx(const char* s) { return parse_ratfun(s, kX); }
mono::Key dk(unsigned k) { return mono::make({k, 0, 0, 0}); }

const std::vector<Integer>& dp_terms() {
  static const auto t = diagonal_sequence(DirectionSet::rook(), 40).terms;
  return t;
}

const HypergeomSpec kClosed{Rational(1, 3), Rational(2, 3), 2};

const PointReport& at(const SingularityReport& r, const std::optional<Rational>& p) {
  for (const auto& q : r.points)
    if (p ? (!q.infinity && q.location == *p) : q.infinity) return q;
  FAIL("point not reported");
  return r.points.front();
}

}  // namespace

TEST_CASE("2F1 series") {
  auto g = f21_series({1, 1, 1}, 10);
  for (unsigned n = 0; n <= 10; ++n) CHECK(g[n] == 1);
  auto h = f21_series(kClosed, 5);
  CHECK(h[0] == 1);
  CHECK(h[1] == Rational(1, 9));
  CHECK(h[2] == Rational(10, 243));  // (1/3)_2 (2/3)_2 / ((2)_2 2!)
  CHECK(f21_series({Rational(2, 7), Rational(-5, 3), Rational(3, 4)}, 12) ==
        f21_series({Rational(-5, 3), Rational(2, 7), Rational(3, 4)}, 12));
  CHECK(f21_series({Rational(1, 2), 5, Rational(-7, 2)}, 0)[0] == 1);
  CHECK_THROWS_AS(f21_series({1, 1, -3}, 5), std::domain_error);
  CHECK_NOTHROW(f21_series({1, 1, -3}, 2));
}

TEST_CASE("closed form against walk counts") {
  auto r = closed_form_check(30, dp_terms());
  CHECK(r.pass);
  auto bad = closed_form_check(30, dp_terms(), rx("7/((1-4*x)*(1-64*x))"));
  CHECK(!bad.pass);
  CHECK(bad.order == 0);
  auto s = symbolic_solution_check(rook_p2(), closed_form_prefactor(), kClosed, closed_form_argument());
  CHECK(s.pass);
}

TEST_CASE("symbolic solution check") {
  DiffOp P2 = rook_p2();
  RatFun f = closed_form_argument();
  CHECK(symbolic_solution_check(P2, closed_form_prefactor() * Rational(-5, 11), kClosed, f).pass);
  CHECK(!symbolic_solution_check(P2, closed_form_prefactor() * rx("x"), kClosed, f).pass);
  CHECK(!symbolic_solution_check(P2, closed_form_prefactor(), {Rational(1, 3), Rational(2, 3), 1}, f).pass);
  // Any pullback operator annihilates y(f).
  HypergeomSpec s{Rational(1, 5), Rational(3, 4), Rational(2, 3)};
  RatFun g = rx("(x^2-3)/(2*x+1)");
  CHECK(symbolic_solution_check(operator_pullback(s, g), RatFun(kX, 1), s, g).pass);
}

TEST_CASE("local exponents of the rook operator") {
  auto rep = local_exponents(rook_p2());
  REQUIRE(rep.points.size() == 6);
  // Differences (1, 2, 1, 1, 1), all with logarithms.
  std::pair<Rational, int> diffs[] = {{0, 1}, {1, 2}, {Rational(1, 64), 1}, {Rational(2, 3), 1}};
  for (const auto& [p, d] : diffs) {
    const auto& q = at(rep, p);
    CHECK(q.cls == PointClass::logarithmic);
    CHECK(q.difference == d);
  }
  CHECK(at(rep, std::nullopt).cls == PointClass::logarithmic);
  CHECK(at(rep, std::nullopt).difference == 1);
  const auto& r = at(rep, Rational(-1, 6));
  CHECK(r.cls == PointClass::removable);
  CHECK(r.difference == 2);
  CHECK(r.e2 == 0);
  CHECK(analyze_point(rook_p2(), Rational(5)).cls == PointClass::ordinary);

  DiffOp d2 = DiffOp::d(kX, "x", 2);
  for (auto p : {Rational(0), Rational(-3, 7), Rational(12)}) {
    auto q = analyze_point(d2, p);
    CHECK(q.cls == PointClass::ordinary);
    CHECK(q.difference == 1);
  }
  auto inf = analyze_point(d2, std::nullopt);
  CHECK(inf.difference == 1);
  CHECK(inf.cls == PointClass::removable);

  // x^3 y'' + y is irregular at 0.
  DiffOp irr(kX);
  irr.add_term(dk(2), rx("x^3"));
  irr.add_term(0, RatFun(kX, 1));
  CHECK_THROWS_AS(analyze_point(irr, Rational(0)), NotRegularSingular);
  DiffOp irrat(kX);
  irrat.add_term(dk(2), rx("x^2-2"));
  irrat.add_term(0, RatFun(kX, 1));
  CHECK_THROWS_AS(local_exponents(irrat), std::domain_error);
}

TEST_CASE("pullback operators") {
  HypergeomSpec s{Rational(1, 3), Rational(2, 3), 2};
  DiffOp gauss(kX);
  gauss.add_term(dk(2), rx("x*(1-x)"));
  gauss.add_term(dk(1), rx("2-2*x"));
  gauss.add_term(0, rx("-2/9"));
  CHECK(operator_pullback(s, rx("x")) == normalized_operator(gauss));
  CHECK_THROWS_AS(operator_pullback(s, rx("3")), std::invalid_argument);

  // Gauss exponents at 0 are {0, 1 - c}.
  for (auto c : {Rational(2), Rational(1, 2), Rational(-3, 5)}) {
    auto q = analyze_point(operator_pullback({Rational(1, 7), Rational(2, 5), c}, rx("x")), Rational(0));
    CHECK(((q.e1 == 0 && q.e2 == 1 - c) || (q.e2 == 0 && q.e1 == 1 - c)));
  }

  // Exponent differences of the closed-form pullback match the rook operator.
  auto mine = local_exponents(operator_pullback(s, closed_form_argument()));
  auto rook = local_exponents(rook_p2());
  for (const auto& p : rook.points) {
    if (p.cls == PointClass::removable) continue;
    auto q = p.infinity ? analyze_point(operator_pullback(s, closed_form_argument()), std::nullopt)
                        : analyze_point(operator_pullback(s, closed_form_argument()), p.location);
    CHECK(q.difference == p.difference);
  }
  CHECK(!mine.points.empty());

  // Multiplicity law: a root of multiplicity m gives difference m e0.
  HypergeomSpec t{Rational(1, 4), Rational(1, 3), Rational(5, 6)};
  Rational e0 = 1 - t.c;
  const char* maps[] = {"(x-2)*(x+1)", "(x-2)^2*(x+1)", "(x-2)^3/(x+5)", "(x-2)^4*(3*x+1)/(x^2+1)"};
  for (unsigned m = 1; m <= 4; ++m) {
    auto q = analyze_point(operator_pullback(t, rx(maps[m - 1])), Rational(2));
    CHECK(q.difference == e0 * m);
  }
}

TEST_CASE("perfect powers") {
  UniPoly cube{Rational(-8), 12, -6, 1};  // (x-2)^3
  auto r = perfect_power_root(cube, 3);
  REQUIRE(r);
  CHECK(*r == UniPoly{-2, 1});
  UniPoly scaled = cube;
  for (auto& c : scaled) c *= Rational(-7, 3);
  CHECK(perfect_power_root(scaled, 3));
  CHECK(!perfect_power_root(UniPoly{-7, 12, -6, 1}, 3));
  CHECK(!perfect_power_root(UniPoly{1, 0, 1}, 3));
}

TEST_CASE("pullback search finds the closed form") {
  std::vector<Rational> sing{0, 1, Rational(2, 3), Rational(1, 64)};
  CHECK(spec_for_triple({0, 0, Rational(1, 3)}).c == 1);
  auto tr = spec_for_triple({1, 1, Rational(1, 3)});
  CHECK(tr.a == Rational(1, 3));
  CHECK(tr.b == Rational(2, 3));
  CHECK(tr.c == 2);

  CHECK(pullback_search(sing, {0, 0, 0}, 6).empty());
  auto found = pullback_search(sing, {0, 0, Rational(1, 3)}, 3);
  // The exchange of 0 and infinity gives the reciprocal map as well.
  REQUIRE(found.size() == 2);
  const auto& c = found[0];
  CHECK(found[1].search_map == c.search_map.inverse());
  CHECK(found[1].exponents == std::vector<int>{-1, 2, -1, 1});
  CHECK(c.exponents == std::vector<int>{1, -2, 1, -1});
  CHECK(c.c == Rational(-81, 64));
  CHECK(c.search_map == rx("-81*x*(x-2/3)/(64*(x-1)^2*(x-1/64))"));
  CHECK(c.f == closed_form_argument());
  CHECK(c.params.a == Rational(1, 3));
  CHECK(c.params.b == Rational(2, 3));

  auto wide = pullback_search(sing, {0, 0, Rational(1, 3)}, 6);
  bool again = false;
  for (const auto& w : wide) {
    auto n = (w.search_map - RatFun(kX, 1)).num();
    CHECK(perfect_power_root(to_unipoly(n), 3));
    again = again || w.f == closed_form_argument();
  }
  CHECK(again);
  CHECK_THROWS_AS(pullback_search(sing, {Rational(1, 2), 0, Rational(1, 3)}, 3), std::invalid_argument);
}

TEST_CASE("numerics") {
  CHECK(decimal(pi_approx(30), 20) == "3.14159265358979323846");
  CHECK(decimal(sqrt_approx(3, 30), 20) == "1.73205080756887729353");
  CHECK(decimal(Rational(-1, 8), 2) == "-0.13");
  // 2F1(1,1;3;1) = 2.
  CHECK(decimal(f21_at_one({1, 1, 3}, 15), 12) == "2.000000000000");
  CHECK_THROWS_AS(f21_at_one({Rational(1, 2), Rational(1, 2), 1}, 10), std::domain_error);
  auto r = asymptotics_check(2000, 1e-2);
  CHECK(r.gauss.pass);
  CHECK(r.gauss_value.substr(0, 8) == "1.240490");
  CHECK(r.growth.pass);
  CHECK(r.ratio.pass);
  CHECK(r.pass());
  CHECK(!asymptotics_check(200, 1e-6).growth.pass);
}

TEST_CASE("identity suite") {
  auto r = identity_checks(30, 25, dp_terms());
  REQUIRE(r.size() == 3);
  for (const auto& c : r) CHECK_MESSAGE(c.pass, c.check << ": " << c.detail);
  auto bad = dp_terms();
  bad[10] += 1;
  CHECK(!identity_checks(5, 25, bad)[2].pass);
}
