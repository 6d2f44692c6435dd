#pragma once

#include <string>
#include <vector>

#include "rook/exactmath/ratfun.hpp"
#include "rook/exactmath/rational.hpp"

namespace rook {

// Truncated univariate power series sum_{k <= order} c_k v^k + O(v^(order+1)).
class PowerSeries {
 public:
  static constexpr unsigned kDefaultOrder = 64;

  PowerSeries() : PowerSeries("x", kDefaultOrder) {}
  PowerSeries(std::string var, unsigned order);
  PowerSeries(std::string var, std::vector<Rational> coeffs, unsigned order);

  static PowerSeries constant(std::string var, const Rational& c, unsigned order);
  static PowerSeries variable(std::string var, unsigned order);
  // Expansion of a univariate rational function; the denominator must not
  // vanish at 0.
  static PowerSeries from_ratfun(const RatFun& f, unsigned order);
  static PowerSeries from_poly(const MPoly& p, unsigned order);

  const std::string& var() const { return var_; }
  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](std::size_t k) const { return c_[k]; }
  Rational coeff(std::size_t k) const { return k <= order_ ? c_[k] : Rational(0); }
  // Index of the first nonzero coefficient; order+1 if all are zero.
  unsigned valuation() const;
  bool is_zero() const { return valuation() > order_; }

  PowerSeries truncated(unsigned order) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const Rational& c);
  friend PowerSeries operator*(const Rational& c, const PowerSeries& a) { return a * c; }
  // Rejects a divisor of positive valuation.
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
  PowerSeries operator-() const { return *this * Rational(-1); }
  // Same truncation and coefficients.
  friend bool operator==(const PowerSeries& a, const PowerSeries& b);

  PowerSeries inverse() const;
  PowerSeries derivative() const;
  // Antiderivative with zero constant term; the order grows by one.
  PowerSeries integral() const;
  // p^alpha for constant term 1.
  PowerSeries pow(const Rational& alpha) const;
  PowerSeries pow(unsigned n) const;
  // Multiply by v^k (order grows by k).
  PowerSeries shifted(unsigned k) const;

  std::string to_string(unsigned terms = 8) const;

 private:
  std::string var_;
  std::vector<Rational> c_;
  unsigned order_;
};

// outer(inner(v)); inner must have positive valuation.
PowerSeries series_compose(const PowerSeries& outer, const PowerSeries& inner);
// Series r with r^k = p and r(0) = 1; p(0) must be 1.
PowerSeries series_nth_root(const PowerSeries& p, unsigned k);
// True iff a and b agree through the smaller of their orders.
bool agree(const PowerSeries& a, const PowerSeries& b);

}  // namespace rook
