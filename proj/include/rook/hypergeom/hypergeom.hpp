#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rook/exactmath/roots.hpp"
#include "rook/exactmath/series.hpp"
#include "rook/ore/ore.hpp"

namespace rook {

struct HypergeomSpec {
  Rational a, b, c;
};

// 2F1(a, b; c; v) through v^order. Rejects c in {0, -1, ..., -order}.
PowerSeries f21_series(const HypergeomSpec& spec, unsigned order, const std::string& var = "x");

// The order-2 operator annihilating the derivative of the rook diagonal.
DiffOp rook_p2();

// Generic outcome of a check.
struct CheckReport {
  std::string check;
  bool pass = false;
  std::string detail;
  long order = -1;  // the order or index probed, -1 if not applicable
};

// The prefactor 6/((1-4x)(1-64x)) and argument 27x(2-3x)/(1-4x)^3.
RatFun closed_form_prefactor();
RatFun closed_form_argument();

// Expands prefactor * 2F1(1/3, 2/3; 2; argument) and compares the
// coefficient of x^n with (n+1) a_{n+1} for n < n_max. a must hold a_0..a_{n_max}.
CheckReport closed_form_check(unsigned n_max, const std::vector<Integer>& a,
                              const RatFun& prefactor = closed_form_prefactor());

enum class PointClass { ordinary, removable, logarithmic, other };
std::string to_string(PointClass c);

struct PointReport {
  bool infinity = false;
  Rational location;
  bool rational_exponents = true;
  Rational e1, e2;      // e1 >= e2 when rational
  Rational difference;  // e1 - e2
  PointClass cls = PointClass::ordinary;
  std::string label() const;
};

struct SingularityReport {
  std::vector<PointReport> points;  // finite singular points ascending, then infinity
};

struct NotRegularSingular : std::domain_error {
  explicit NotRegularSingular(const std::string& where)
      : std::domain_error("not regular singular at " + where) {}
};

// Local data of an order-2 operator at a point (nullopt = infinity).
PointReport analyze_point(const DiffOp& L, std::optional<Rational> p);
// Rational roots of the leading coefficient, plus infinity. Throws
// std::domain_error when the leading coefficient has non-rational roots.
SingularityReport local_exponents(const DiffOp& L);

// Order-2 operator with polynomial coefficients, integer content 1 and
// positive leading coefficient of its d^2 coefficient.
DiffOp normalized_operator(const DiffOp& L);

// Annihilator of y(f(x)) for solutions y of the Gauss equation.
DiffOp operator_pullback(const HypergeomSpec& spec, const RatFun& f);

// Applies L to prefactor * y(f) with y'' reduced by the Gauss equation.
// Passes iff both coefficients of y(f) and y'(f) vanish.
CheckReport symbolic_solution_check(const DiffOp& L, const RatFun& prefactor,
                                    const HypergeomSpec& spec, const RatFun& f);

using Triple = std::array<Rational, 3>;  // (e0, e1, e_inf)

// Parameters with exponent differences (1-c, c-a-b, a-b) = triple, a <= b.
HypergeomSpec spec_for_triple(const Triple& t);

struct PullbackCandidate {
  std::vector<int> exponents;  // aligned with the singular set
  Rational c;
  RatFun search_map;  // c * prod (x - p)^n_p
  RatFun f;           // after the Mobius step, when one was applied
  Triple triple;
  HypergeomSpec params;
};

// Monic Q with p = lc(p) * Q^k, if one exists.
std::optional<UniPoly> perfect_power_root(const UniPoly& p, unsigned k);

// Candidate maps f whose fibres over the logarithmic points of the Gauss
// equation are exactly sing ∪ {infinity}, with the remaining fibre's
// multiplicities divisible by k for a triple entry 1/k.
std::vector<PullbackCandidate> pullback_search(const std::vector<Rational>& sing, const Triple& triple,
                                               unsigned max_degree);

struct AsymptoticsReport {
  CheckReport gauss;   // numeric 2F1(1/3,2/3;2;1) against 9 sqrt(3)/(4 pi)
  CheckReport growth;  // a_n n / 64^n against 9 sqrt(3)/(40 pi)
  CheckReport ratio;   // a_{n+1}/a_n against 64
  std::string gauss_value, constant_value, scaled_value;
  bool pass() const { return gauss.pass && growth.pass && ratio.pass; }
};

AsymptoticsReport asymptotics_check(unsigned n_probe, double tolerance);

// 2F1(a,b;c;1) for a positive integer c - a - b: exact partial sums at
// N = 64, 128, ... and Richardson extrapolation in powers of 1/N, stopped
// once successive estimates agree to 10^-(digits+2). The result is exact
// rational; decimal() prints it with the given number of decimals.
Rational f21_at_one(const HypergeomSpec& spec, unsigned digits);
std::string decimal(const Rational& x, unsigned digits);
// Rational approximations within 10^-digits.
Rational pi_approx(unsigned digits);
Rational sqrt_approx(unsigned n, unsigned digits);

// The contiguity and Goursat identities to the given order, and Beukers'
// expression against G' = sum (n+1) a_{n+1} x^n to beukers_order; a must
// hold a_0..a_{beukers_order+1}.
std::vector<CheckReport> identity_checks(unsigned order, unsigned beukers_order,
                                         const std::vector<Integer>& a);

}  // namespace rook
