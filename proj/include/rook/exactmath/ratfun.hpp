#pragma once

#include <string>
#include <string_view>

#include "rook/exactmath/gcd.hpp"
#include "rook/exactmath/poly.hpp"

namespace rook {

// Rational function num/den over Z[vars], kept reduced: gcd(num, den) = 1,
// integer content of the pair is 1, den has positive leading coefficient,
// zero is 0/1.
class RatFun {
 public:
  RatFun() : RatFun(Vars()) {}
  explicit RatFun(Vars vars) : num_(vars), den_(vars, 1) {}
  RatFun(Vars vars, const Rational& c);
  RatFun(Vars vars, long c) : RatFun(vars, Rational(c)) {}
  explicit RatFun(const ZPoly& p) : num_(p), den_(p.vars(), 1) { normalize_content(); }
  explicit RatFun(const MPoly& p);
  RatFun(const ZPoly& num, const ZPoly& den);

  static RatFun variable(Vars vars, std::string_view name) {
    return RatFun(ZPoly::variable(vars, name));
  }
  // Caller guarantees the pair is already normalized.
  static RatFun from_normalized(ZPoly num, ZPoly den);

  const Vars& vars() const { return num_.vars(); }
  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  Rational constant_value() const;
  // Requires is_polynomial().
  MPoly as_polynomial() const;

  bool depends_on(std::size_t var) const { return num_.depends_on(var) || den_.depends_on(var); }

  RatFun operator-() const { return from_normalized(-num_, den_); }
  RatFun inverse() const;

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }
  friend RatFun operator*(const RatFun& a, const Rational& c);
  friend RatFun operator*(const Rational& c, const RatFun& a) { return a * c; }
  RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
  RatFun& operator-=(const RatFun& b) { return *this = *this - b; }
  RatFun& operator*=(const RatFun& b) { return *this = *this * b; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  RatFun pow(int n) const;
  RatFun derivative(std::size_t var) const;
  RatFun derivative(std::string_view name) const { return derivative(vars().require(name)); }
  RatFun substitute(std::size_t var, const RatFun& value) const;
  RatFun evaluate(std::size_t var, const Rational& value) const;
  RatFun change_vars(Vars target) const;

  // "(num)/(den)", or just num when den = 1.
  std::string to_string() const;

 private:
  void normalize();
  void normalize_content();

  ZPoly num_;
  ZPoly den_;
};

// Parses +, -, *, /, ^ (integer exponents), parentheses, rationals, and the
// ring's variable names. Throws std::invalid_argument on malformed input.
RatFun parse_ratfun(std::string_view text, Vars vars);
MPoly parse_mpoly(std::string_view text, Vars vars);

}  // namespace rook
