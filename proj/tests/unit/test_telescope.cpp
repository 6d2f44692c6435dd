#include "doctest.h"

#include "rook/diagonal/diagonal.hpp"
#include "rook/telescope/telescope.hpp"
#include "rook/walks/walks.hpp"

using namespace rook;

namespace {

const Vars kV = xst_vars();

RatFun rf(const char* s) { return parse_ratfun(s, kV); }
mono::Key dk(unsigned i, unsigned j) { return mono::make({i, j, 0, 0}); }

const char* kEta3 = "x*(x-1)*(64*x-1)*(3*x-2)*(6*x+1)";

// The whole pipeline is a few seconds; compute it once.
const RookPipeline& pipeline() {
  static const RookPipeline p = rook_pipeline();
  return p;
}

// Degrees in (x, s, t) of r * scale, which must be a polynomial.
mono::Exponents poly_degrees(const RatFun& r, const RatFun& scale) {
  RatFun u = r * scale;
  REQUIRE(u.is_polynomial());
  return u.num().degrees();
}

}  // namespace

TEST_CASE("parametrized solver on small systems") {
  Vars v = kV;
  // y' = e: y = e t + const.
  ExactMatrix A(v, 1, 1), B(v, 1, 1);
  B(0, 0) = RatFun(v, 1);
  auto r = solve_parametrized_system(A, B, ZPoly(v, 1), 3, "t");
  REQUIRE(r.basis.size() == 2);
  for (const auto& s : r.basis) CHECK(s.y[0].derivative("t") == s.e[0]);
  // A = B = 0: constants for y, e free.
  ExactMatrix Z(v, 1, 0);
  auto z = solve_parametrized_system(A, ExactMatrix(v, 1, 2), ZPoly(v, 1), 2, "t");
  CHECK(z.basis.size() == 3);
  for (const auto& s : z.basis) CHECK(!s.y[0].depends_on(2));
  // y' + y/t = 0 has y = 1/t, outside the polynomial ansatz but inside den = t.
  A(0, 0) = rf("1/t");
  auto none = solve_parametrized_system(A, Z, ZPoly(v, 1), 4, "t");
  CHECK(none.basis.empty());
  CHECK(none.filtered);
  auto one = solve_parametrized_system(A, Z, rf("t").num(), 4, "t");
  REQUIRE(one.basis.size() == 1);
  CHECK(one.basis[0].y[0] == rf("1/t"));
  // Parameters in K: y' + y/t = s e needs y = s t e / 2.
  ExactMatrix Bs(v, 1, 1);
  Bs(0, 0) = rf("s");
  auto ks = solve_parametrized_system(A, Bs, ZPoly(v, 1), 3, "t");
  bool found = false;
  for (const auto& s : ks.basis)
    if (!s.e[0].is_zero()) found = s.y[0] == s.e[0] * rf("s*t/2");
  CHECK(found);
  CHECK_THROWS_AS(solve_parametrized_system(ExactMatrix(v, 1, 2), B, ZPoly(v, 1), 2, "t"),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_parametrized_system(A, ExactMatrix(v, 2, 1), ZPoly(v, 1), 2, "t"),
                  std::invalid_argument);
}

TEST_CASE("denominator candidates") {
  auto c = denominator_candidates({rf("t-x").num(), rf("t^2+s").num(), rf("s-1").num()}, 2, 3);
  CHECK(c.size() == 16);
  CHECK(c[0].is_one());
  CHECK(c[1] == rf("t-x").num());
  for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i - 1].degree(2) <= c[i].degree(2));
}

TEST_CASE("discriminant of q1") {
  RatFun F = residue_embedding(step_generating_function(DirectionSet::rook()));
  auto f = rook_factors(F);
  CHECK(RatFun(f.q1) == rf("-(-s*t+2*s^2*t+2*t^2+2*x*s-3*s*t^2-3*x*t-3*x*s^2+4*x*s*t)"));
  RatFun ratio(f.disc_computed, reference_disc());
  CHECK(ratio.is_constant());
  CHECK(f.disc == reference_disc());
  CHECK(F.den() == rf("s*t").num() * f.q1);
}

TEST_CASE("stage A gives the reference operators") {
  const auto& p = pipeline();
  CHECK(verify_stage_a(p.a1, p.F));
  CHECK(p.a1.P.coeff(0) == rf("2*(s-1)*(3*s^2-6*s+2)"));
  CHECK(p.a1.P.coeff(dk(1, 0)) == rf("6*x*s^3-2*s^3-10*x*s^2+s^2-4*x^2*s+10*x*s+3*x^2-4*x"));
  CHECK(p.a1.phi == rf("-t*(s-1)*(-6*x*s^2+6*s^2*t-s^2+11*x*s-9*s*t-4*x-x*t+4*t)/(t-x)"));
  CHECK(p.a1.P.terms().size() == 3);

  CHECK(verify_stage_a(p.a2, p.F));
  CHECK(p.a2.P.coeff(0).is_zero());
  CHECK(p.a2.P.coeff(dk(1, 0)) == rf("-2*(-19*s^2-9*x+13*s^3+7*s-16*x*s^2+24*x*s)"));
  CHECK(p.a2.phi ==
        rf("-t*(3*s-2)*(s-1)*(2*s^2-4*s*t-s+3*t)*(s-t)^2/"
           "((t-x)*(-s*t+2*s^2*t+2*t^2+2*x*s-3*s*t^2-3*x*t-3*x*s^2+4*x*s*t))"));
  CHECK(p.order0.empty());
}

TEST_CASE("stage B gives the reference telescoper") {
  const auto& p = pipeline();
  CHECK(!p.b[0]);
  CHECK(!p.b[1]);
  CHECK(!p.b[2]);
  const auto& b = *p.b[3];
  CHECK(b.P.coeff(0).is_zero());
  CHECK(b.P.coeff(dk(1, 0)) == rf("4*(576*x^3-801*x^2-108*x+74)"));
  CHECK(b.P.coeff(dk(2, 0)) == rf("4608*x^4+813*x^2-6372*x^3+514*x-4"));
  CHECK(b.P.coeff(dk(3, 0)) == rf(kEta3));
  CHECK(b.Q.coeff(0) == rf("(53+108*x)*(3*s-2)*s/(s-1)"));
  RatFun disc(reference_disc());
  auto g = poly_degrees(b.Q.coeff(dk(1, 0)), rf("2*(s-1)^2") * disc);
  CHECK(g[0] == 5);
  CHECK(g[1] == 7);
  CHECK(g[2] == 0);
  // The denominator cannot be simplified.
  RatFun gamma = b.Q.coeff(dk(1, 0)) * rf("2*(s-1)^2") * disc;
  CHECK(gcd(gamma.num(), reference_disc()).is_one());
  CHECK(gcd(gamma.num(), rf("s-1").num()).is_one());
}

TEST_CASE("stage C reconstruction and the key equation") {
  const auto& p = pipeline();
  const auto& c = p.c;
  CHECK(c.division_exact);
  RatFun disc(reference_disc());
  CHECK(c.division.A1.coeff(0) == rf("-(108*x+53)/(2*(s-1)^3)"));
  auto g1 = poly_degrees(c.division.A1.coeff(dk(1, 0)), rf("4*s*(3*s-2)*(s-1)^4") * disc);
  CHECK(g1[0] == 5);
  CHECK(g1[1] == 7);
  auto g2 = poly_degrees(c.division.A2.coeff(0), rf("4*s*(3*s-2)*(s-1)^4") * disc * disc);
  CHECK(g2[0] == 7);
  CHECK(g2[1] == 10);
  CHECK(c.division.A2.coeff(dk(1, 0)) == rf(kEta3) / disc);
  CHECK(c.division.A1.terms().size() == 2);
  CHECK(c.division.A2.terms().size() == 2);

  RatFun q1(rook_factors(p.F).q1);
  RatFun st = rf("s-t");
  auto u = poly_degrees(c.cert.S, rf("2*s*t") * q1.pow(2) * disc / st);
  CHECK(u[0] == 5);
  CHECK(u[1] == 8);
  CHECK(u[2] == 3);
  auto v = poly_degrees(c.cert.T, rf("2*s^2") * q1.pow(3) * disc.pow(2) / st);
  CHECK(v[0] == 8);
  CHECK(v[1] == 14);
  CHECK(v[2] == 5);

  CHECK(c.cert.verified);
  CHECK(verify_key_equation(c.cert, p.F).pass);
  Certificate bad = c.cert;
  bad.T = RatFun(bad.T.num() + ZPoly(kV, 1), bad.T.den());
  auto rep = verify_key_equation(bad, p.F);
  CHECK(!rep.pass);
  CHECK(!rep.residual.is_zero());
}

TEST_CASE("key equation on a trivial instance") {
  Certificate c{DiffOp::d(kV, "s"), rf("s"), RatFun(kV), false, {}};
  CHECK(verify_key_equation(c, rf("s")).pass);
  c.S = rf("s^2");
  CHECK(!verify_key_equation(c, rf("s")).pass);
}

TEST_CASE("telescoper gives the annihilating recurrence") {
  const auto& p = pipeline();
  DiffOp P = p.c.cert.P.change_vars(Vars{"x"});
  RecOp r = diffop_to_rec(P);
  CHECK(r.normalized() == erickson_recurrence().normalized());
  auto a = diagonal_sequence(DirectionSet::rook(), 40).terms;
  for (long n = r.max_shift(); n <= 40; ++n) CHECK(sgn(r.apply_at(a, n)) == 0);
}

TEST_CASE("counting bounds") {
  auto l = lipshitz_bounds();
  CHECK(l.first_N == 425);
  CHECK(l.first_unknowns == Integer("1391641251"));
  CHECK(l.refined_N == 36);
  CHECK(l.rows == 8917);
  CHECK(l.cols == 9139);
  CHECK(binomial(4, 4) == 1);
}
