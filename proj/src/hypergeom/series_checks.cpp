#include <stdexcept>

#include "rook/hypergeom/hypergeom.hpp"

namespace rook {
namespace {

const Vars kX{"x"};

RatFun rx(const char* s) { return parse_ratfun(s, kX); }

PowerSeries expand(const char* s, unsigned order) { return PowerSeries::from_ratfun(rx(s), order); }

CheckReport compare(std::string name, const PowerSeries& lhs, const PowerSeries& rhs, unsigned order) {
  CheckReport r{std::move(name), true, "", static_cast<long>(order)};
  for (unsigned n = 0; n <= order; ++n) {
    if (lhs.coeff(n) != rhs.coeff(n)) {
      r.pass = false;
      r.order = n;
      r.detail = "coefficient " + std::to_string(n) + ": " + lhs.coeff(n).get_str() + " vs " +
                 rhs.coeff(n).get_str();
      return r;
    }
  }
  r.detail = "coefficients 0.." + std::to_string(order) + " agree";
  return r;
}

}  // namespace

PowerSeries f21_series(const HypergeomSpec& spec, unsigned order, const std::string& var) {
  for (unsigned n = 0; n <= order; ++n)
    if (sgn(spec.c + Rational(n)) == 0) throw std::domain_error("2F1 parameter c is a pole");
  std::vector<Rational> c(order + 1);
  c[0] = 1;
  for (unsigned n = 0; n < order; ++n)
    c[n + 1] = c[n] * (spec.a + n) * (spec.b + n) / ((spec.c + n) * Rational(n + 1));
  return PowerSeries(var, std::move(c), order);
}

DiffOp rook_p2() {
  DiffOp L(kX);
  L.add_term(mono::make({2, 0, 0, 0}), rx("x*(x-1)*(64*x-1)*(3*x-2)*(6*x+1)"));
  L.add_term(mono::make({1, 0, 0, 0}), rx("4608*x^4-6372*x^3+813*x^2+514*x-4"));
  L.add_term(0, rx("4*(576*x^3-801*x^2-108*x+74)"));
  return L;
}

RatFun closed_form_prefactor() { return rx("6/((1-4*x)*(1-64*x))"); }
RatFun closed_form_argument() { return rx("27*x*(2-3*x)/(1-4*x)^3"); }

CheckReport closed_form_check(unsigned n_max, const std::vector<Integer>& a, const RatFun& prefactor) {
  if (a.size() < n_max + 1) throw std::invalid_argument("closed form check needs a_0..a_n_max");
  CheckReport r{"closed-form", true, "", static_cast<long>(n_max)};
  if (n_max == 0) return r;
  unsigned order = n_max - 1;
  PowerSeries pre = PowerSeries::from_ratfun(prefactor.change_vars(kX), order);
  PowerSeries arg = PowerSeries::from_ratfun(closed_form_argument(), order);
  PowerSeries rhs = pre * series_compose(f21_series({Rational(1, 3), Rational(2, 3), 2}, order), arg);
  for (unsigned n = 0; n < n_max; ++n) {
    Rational want(a[n + 1] * (n + 1));
    if (rhs[n] != want) {
      r.pass = false;
      r.order = n;
      r.detail = "coefficient " + std::to_string(n) + ": series " + rhs[n].get_str() + ", (n+1)a_(n+1) " +
                 want.get_str();
      return r;
    }
  }
  r.detail = "coefficients 0.." + std::to_string(order) + " equal (n+1)a_(n+1)";
  return r;
}

std::vector<CheckReport> identity_checks(unsigned order, unsigned beukers_order,
                                         const std::vector<Integer>& a) {
  if (a.size() < beukers_order + 2) throw std::invalid_argument("identity checks need a_0..a_(m+1)");
  const HypergeomSpec f1{Rational(1, 3), Rational(2, 3), 1}, f2{Rational(1, 3), Rational(2, 3), 2},
      g{Rational(1, 12), Rational(5, 12), 1};
  std::vector<CheckReport> out;

  PowerSeries lhs = expand("9*(1-x)/2", order) * f21_series(f1, order + 1).derivative();
  out.push_back(compare("gauss-contiguity", lhs, f21_series(f2, order), order));

  PowerSeries psi = expand("64*x^3*(1-x)/(9-8*x)^3", order);
  PowerSeries chi = series_nth_root(expand("1-8*x/9", order).inverse(), 4);
  out.push_back(compare("goursat", f21_series(f1, order), series_compose(f21_series(g, order), psi) * chi,
                        order));

  unsigned m = beukers_order, M = m + 1;
  const char* g2 = "(1-4*x)*(1-60*x+120*x^2-64*x^3)";
  std::string inv_j = "1728*(1-x)^2*x^3*(2-3*x)^3*(1-64*x)/(" + std::string(g2) + ")^3";
  PowerSeries H = series_nth_root(expand(g2, M).inverse(), 4) *
                  series_compose(f21_series(g, M), expand(inv_j.c_str(), M));
  PowerSeries rhs = expand("(1-x)/(2*(1+6*x))", m) *
                    (expand("1-4*x", m) * H.derivative() - Rational(4) * H.truncated(m));
  std::vector<Rational> dg(m + 1);
  for (unsigned n = 0; n <= m; ++n) dg[n] = Rational(a[n + 1] * (n + 1));
  out.push_back(compare("beukers", PowerSeries("x", dg, m), rhs, m));
  return out;
}

}  // namespace rook
