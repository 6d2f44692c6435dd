#include <stdexcept>

#include "rook/exactmath/gcd.hpp"
#include "rook/hypergeom/hypergeom.hpp"

namespace rook {
namespace {

mono::Key dkey(unsigned k) { return mono::make({k, 0, 0, 0}); }

void require_order2(const DiffOp& L) {
  if (L.vars().size() != 1) throw std::invalid_argument("expected a univariate operator");
  if (L.order(0) != 2) throw std::invalid_argument("expected an operator of order 2");
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  Integer n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_sqrt(n.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), d.get_mpz_t());
  return Rational(n, d);
}

bool analytic_at_zero(const RatFun& r) { return sgn(r.den().constant_term()) != 0; }

Rational value_at_zero(const RatFun& r) {
  Rational v(r.num().constant_term(), r.den().constant_term());
  v.canonicalize();
  return v;
}

struct Local {
  RatFun q2, q1, q0;
};

// Coefficients after moving the point to 0 (x -> x + p, or x -> 1/x).
Local localize(const DiffOp& L, const std::optional<Rational>& p) {
  const Vars& v = L.vars();
  RatFun l2 = L.coeff(dkey(2)), l1 = L.coeff(dkey(1)), l0 = L.coeff(0);
  RatFun x(ZPoly::variable(v, 0));
  if (p) {
    RatFun to = x + RatFun(v, *p);
    return {l2.substitute(0, to), l1.substitute(0, to), l0.substitute(0, to)};
  }
  RatFun inv = x.inverse();
  RatFun s2 = l2.substitute(0, inv), s1 = l1.substitute(0, inv);
  return {x.pow(4) * s2, x.pow(3) * s2 * Rational(2) - x.pow(2) * s1, l0.substitute(0, inv)};
}

}  // namespace

std::string to_string(PointClass c) {
  switch (c) {
    case PointClass::ordinary: return "ordinary";
    case PointClass::removable: return "removable";
    case PointClass::logarithmic: return "logarithmic";
    case PointClass::other: return "non-removable-other";
  }
  return "?";
}

std::string PointReport::label() const {
  std::string s = infinity ? "infinity" : location.get_str();
  if (!rational_exponents) return s + ": irrational exponents, " + to_string(cls);
  return s + ": exponents {" + e2.get_str() + ", " + e1.get_str() + "}, difference " + difference.get_str() +
         ", " + to_string(cls);
}

PointReport analyze_point(const DiffOp& L, std::optional<Rational> p) {
  require_order2(L);
  PointReport r;
  r.infinity = !p;
  if (p) r.location = *p;
  Local q = localize(L, p);
  RatFun a1 = q.q1 / q.q2, a0 = q.q0 / q.q2;
  if (analytic_at_zero(a1) && analytic_at_zero(a0)) {
    r.e1 = 1;
    r.e2 = 0;
    r.difference = 1;
    return r;
  }
  RatFun z(ZPoly::variable(L.vars(), 0));
  RatFun A = z * a1, B = z * z * a0;
  if (!analytic_at_zero(A) || !analytic_at_zero(B))
    throw NotRegularSingular(p ? p->get_str() : std::string("infinity"));
  Rational A0 = value_at_zero(A), B0 = value_at_zero(B);
  // Indicial polynomial e^2 + (A0 - 1) e + B0.
  Rational disc = (A0 - 1) * (A0 - 1) - 4 * B0;
  auto d = rational_sqrt(disc);
  if (!d) {
    r.rational_exponents = false;
    r.cls = PointClass::other;
    return r;
  }
  r.e1 = (1 - A0 + *d) / 2;
  r.e2 = (1 - A0 - *d) / 2;
  r.difference = *d;
  if (sgn(*d) == 0) {
    r.cls = PointClass::logarithmic;
    return r;
  }
  if (d->get_den() != 1) {
    r.cls = PointClass::other;
    return r;
  }
  // Frobenius at the smaller exponent: the step n = d is consistent iff
  // there is no logarithm.
  unsigned D = static_cast<unsigned>(d->get_num().get_ui());
  PowerSeries As = PowerSeries::from_ratfun(A, D), Bs = PowerSeries::from_ratfun(B, D);
  auto indicial = [&](const Rational& e) -> Rational { return e * (e - 1) + A0 * e + B0; };
  std::vector<Rational> c(D + 1);
  c[0] = 1;
  for (unsigned n = 1; n <= D; ++n) {
    Rational rhs = 0;
    for (unsigned k = 1; k <= n; ++k) rhs -= (As[k] * (r.e2 + Rational(n - k)) + Bs[k]) * c[n - k];
    if (n < D) c[n] = rhs / indicial(r.e2 + Rational(n));
    else r.cls = sgn(rhs) == 0 ? PointClass::removable : PointClass::logarithmic;
  }
  return r;
}

DiffOp normalized_operator(const DiffOp& L) {
  require_order2(L);
  const Vars& v = L.vars();
  ZPoly den(v, 1);
  for (const auto& [k, c] : L.terms()) {
    ZPoly g = gcd(den, c.den());
    den = den * divide_or_throw(c.den(), g);
  }
  std::vector<std::pair<mono::Key, ZPoly>> polys;
  ZPoly g(v);
  for (const auto& [k, c] : L.terms()) {
    polys.emplace_back(k, c.num() * divide_or_throw(den, c.den()));
    g = gcd(g, polys.back().second);
  }
  // gcd is primitive with positive leading coefficient; fix the sign by d^2.
  ZPoly lead = divide_or_throw(L.coeff(dkey(2)).num() * divide_or_throw(den, L.coeff(dkey(2)).den()), g);
  if (sgn(lead.leading_coeff()) < 0) g = -g;
  DiffOp out(v);
  for (const auto& [k, p] : polys) out.add_term(k, RatFun(divide_or_throw(p, g)));
  return out;
}

SingularityReport local_exponents(const DiffOp& L0) {
  DiffOp L = normalized_operator(L0);
  UniPoly lead = to_unipoly(L.coeff(dkey(2)).num());
  auto roots = rational_roots(lead);
  unsigned total = 0;
  for (const auto& r : roots) total += root_multiplicity(lead, r);
  if (total + 1 != lead.size())
    throw std::domain_error("leading coefficient has non-rational roots");
  SingularityReport rep;
  for (const auto& r : roots) rep.points.push_back(analyze_point(L, r));
  rep.points.push_back(analyze_point(L, std::nullopt));
  return rep;
}

DiffOp operator_pullback(const HypergeomSpec& s, const RatFun& f) {
  if (f.is_constant()) throw std::invalid_argument("pullback by a constant map");
  const Vars& v = f.vars();
  if (v.size() != 1) throw std::invalid_argument("pullback map must be univariate");
  RatFun one(v, 1);
  RatFun f1 = f.derivative(0), f2 = f1.derivative(0);
  RatFun w = f * (one - f);
  RatFun r1 = f2 / f1 - f1 * (RatFun(v, s.c) - f * (s.a + s.b + 1)) / w;
  RatFun r0 = f1 * f1 * (s.a * s.b) / w;
  DiffOp L(v);
  L.add_term(dkey(2), one);
  L.add_term(dkey(1), -r1);
  L.add_term(0, -r0);
  return normalized_operator(L);
}

namespace {

// alpha w(f) + beta w'(f) for a solution w of the Gauss equation.
struct Pair {
  RatFun alpha, beta;
};

}  // namespace

CheckReport symbolic_solution_check(const DiffOp& L0, const RatFun& prefactor, const HypergeomSpec& s,
                                    const RatFun& f0) {
  require_order2(L0);
  const Vars& v = L0.vars();
  RatFun f = f0.change_vars(v), g = prefactor.change_vars(v);
  RatFun one(v, 1);
  RatFun w = f * (one - f);
  RatFun f1 = f.derivative(0);
  // w'' = g1 w' + g0 w along f.
  RatFun g1 = -(RatFun(v, s.c) - f * (s.a + s.b + 1)) / w;
  RatFun g0 = RatFun(v, s.a * s.b) / w;
  auto D = [&](const Pair& p) {
    return Pair{p.alpha.derivative(0) + p.beta * f1 * g0, p.alpha * f1 + p.beta.derivative(0) + p.beta * f1 * g1};
  };
  Pair y0{g, RatFun(v)};
  Pair y1 = D(y0), y2 = D(y1);
  RatFun l2 = L0.coeff(dkey(2)), l1 = L0.coeff(dkey(1)), l0 = L0.coeff(0);
  RatFun alpha = l2 * y2.alpha + l1 * y1.alpha + l0 * y0.alpha;
  RatFun beta = l2 * y2.beta + l1 * y1.beta + l0 * y0.beta;
  CheckReport r{"symbolic-solution", alpha.is_zero() && beta.is_zero(), "", -1};
  auto clip = [](std::string t) { return t.size() > 120 ? t.substr(0, 117) + "..." : t; };
  r.detail = "alpha = " + clip(alpha.to_string()) + ", beta = " + clip(beta.to_string());
  return r;
}

}  // namespace rook
