#include "rook/exactmath/ratfun.hpp"

#include <cctype>
#include <stdexcept>

namespace rook {

RatFun::RatFun(Vars vars, const Rational& c) : num_(vars, c.get_num()), den_(vars, c.get_den()) {}

RatFun::RatFun(const MPoly& p) {
  Integer d;
  num_ = clear_denominators(p, &d);
  den_ = ZPoly(p.vars(), d);
  normalize_content();
}

RatFun::RatFun(const ZPoly& num, const ZPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.vars() != den_.vars()) {
    if (num_.is_constant() && num_.vars().size() == 0) num_ = num_.change_vars(den_.vars());
    else if (den_.is_constant() && den_.vars().size() == 0) den_ = den_.change_vars(num_.vars());
    else throw std::invalid_argument("rational function ring mismatch");
  }
  normalize();
}

RatFun RatFun::from_normalized(ZPoly num, ZPoly den) {
  RatFun r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

void RatFun::normalize_content() {
  if (num_.is_zero()) {
    den_ = ZPoly(num_.vars(), 1);
    return;
  }
  Integer c = content(num_), d = content(den_), g;
  mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  if (sgn(den_.leading_coeff()) < 0) g = -g;
  if (g != 1) {
    num_ = divide_exact_integer(num_, g);
    den_ = divide_exact_integer(den_, g);
  }
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = ZPoly(num_.vars(), 1);
    return;
  }
  if (!den_.is_constant()) {
    ZPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divide_or_throw(num_, g);
      den_ = divide_or_throw(den_, g);
    }
  }
  normalize_content();
}

Rational RatFun::constant_value() const {
  if (!is_constant()) throw std::domain_error("rational function is not constant");
  Rational r(num_.constant_term(), den_.constant_term());
  r.canonicalize();
  return r;
}

MPoly RatFun::as_polynomial() const {
  if (!is_polynomial()) throw std::domain_error("rational function is not a polynomial");
  MPoly p = to_rational(num_);
  Integer d = den_.constant_term();
  if (d != 1) p *= Rational(Integer(1), d);
  return p;
}

RatFun RatFun::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero rational function");
  RatFun r = from_normalized(den_, num_);
  if (sgn(r.den_.leading_coeff()) < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_ && a.den_.is_constant()) {
    RatFun r = RatFun::from_normalized(a.num_ + b.num_, a.den_);
    r.normalize_content();
    return r;
  }
  ZPoly g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    RatFun r = RatFun::from_normalized(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    r.normalize_content();
    return r;
  }
  ZPoly ad = divide_or_throw(a.den_, g), bd = divide_or_throw(b.den_, g);
  ZPoly t = a.num_ * bd + b.num_ * ad;
  if (t.is_zero()) return RatFun(a.vars());
  ZPoly g2 = gcd(t, g);
  RatFun r;
  if (g2.is_one()) {
    r = RatFun::from_normalized(std::move(t), ad * b.den_);
  } else {
    r = RatFun::from_normalized(divide_or_throw(t, g2), ad * divide_or_throw(b.den_, g2));
  }
  r.normalize_content();
  return r;
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  ZPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_constant()) {
    ZPoly g1 = gcd(an, bd);
    if (!g1.is_one()) {
      an = divide_or_throw(an, g1);
      bd = divide_or_throw(bd, g1);
    }
  }
  if (!ad.is_constant()) {
    ZPoly g2 = gcd(bn, ad);
    if (!g2.is_one()) {
      bn = divide_or_throw(bn, g2);
      ad = divide_or_throw(ad, g2);
    }
  }
  RatFun r = RatFun::from_normalized(an * bn, ad * bd);
  r.normalize_content();
  return r;
}

RatFun operator*(const RatFun& a, const Rational& c) {
  if (sgn(c) == 0) return RatFun(a.vars());
  RatFun r = RatFun::from_normalized(a.num_ * c.get_num(), a.den_ * c.get_den());
  r.normalize_content();
  return r;
}

RatFun RatFun::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  // Powers of coprime polynomials stay coprime.
  RatFun r = from_normalized(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
  r.normalize_content();
  return r;
}

RatFun RatFun::derivative(std::size_t var) const {
  if (num_.is_zero()) return *this;
  ZPoly dn = num_.derivative(var);
  if (!den_.depends_on(var)) return RatFun(dn, den_);
  // (n/d)' = (n' (d/g) - n (d'/g)) / (d (d/g)) with g = gcd(d, d').
  ZPoly dd = den_.derivative(var);
  ZPoly g = gcd(den_, dd);
  ZPoly dg = divide_or_throw(den_, g);
  ZPoly ddg = divide_or_throw(dd, g);
  ZPoly top = dn * dg - num_ * ddg;
  ZPoly bottom = den_ * dg;
  // Factors of d involving var cannot cancel; var-free ones (the content of
  // g with respect to var) can.
  if (!g.is_constant()) {
    ZPoly w = content_in(g, var);
    if (!w.is_constant()) {
      ZPoly h = gcd(top, w);
      if (!h.is_one()) {
        top = divide_or_throw(top, h);
        bottom = divide_or_throw(bottom, h);
      }
    }
  }
  RatFun r = from_normalized(std::move(top), std::move(bottom));
  r.normalize_content();
  return r;
}

namespace {

// Homogenized evaluation: returns sum c_k p^k q^(deg-k) as a polynomial.
ZPoly homogeneous_eval(const ZPoly& f, std::size_t var, const ZPoly& p, const ZPoly& q,
                       unsigned deg) {
  auto cs = f.coefficients_in(var);
  std::vector<ZPoly> qpow{ZPoly(p.vars(), 1)};
  for (unsigned k = 1; k <= deg; ++k) qpow.push_back(qpow.back() * q);
  ZPoly acc(p.vars());
  ZPoly ppow(p.vars(), 1);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (!cs[k].is_zero()) acc += cs[k] * ppow * qpow[deg - k];
    if (k + 1 < cs.size()) ppow = ppow * p;
  }
  return acc;
}

}  // namespace

RatFun RatFun::substitute(std::size_t var, const RatFun& value) const {
  if (!depends_on(var)) return *this;
  const ZPoly& p = value.num_;
  const ZPoly& q = value.den_;
  unsigned dn = num_.degree(var), dd = den_.degree(var);
  ZPoly top = homogeneous_eval(num_, var, p, q, dn);
  ZPoly bottom = homogeneous_eval(den_, var, p, q, dd);
  if (dd > dn) top = top * q.pow(dd - dn);
  else if (dn > dd) bottom = bottom * q.pow(dn - dd);
  return RatFun(top, bottom);
}

RatFun RatFun::evaluate(std::size_t var, const Rational& value) const {
  return substitute(var, RatFun(vars(), value));
}

RatFun RatFun::change_vars(Vars target) const {
  return RatFun(num_.change_vars(target), den_.change_vars(target));
}

std::string RatFun::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, Vars vars) : text_(text), vars_(vars) {}

  RatFun parse() {
    RatFun r = expression();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at " + std::to_string(pos_) + ": " + what + " in \"" +
                                std::string(text_) + "\"");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFun expression() {
    skip();
    RatFun r(vars_);
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    r = term();
    if (negate) r = -r;
    for (;;) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }

  RatFun term() {
    RatFun r = factor();
    for (;;) {
      if (eat('*')) r *= factor();
      else if (eat('/')) {
        RatFun d = factor();
        if (d.is_zero()) fail("division by zero");
        r = r / d;
      } else {
        return r;
      }
    }
  }

  RatFun factor() {
    RatFun base = primary();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  RatFun primary() {
    skip();
    if (eat('(')) {
      RatFun r = expression();
      if (!eat(')')) fail("expected )");
      return r;
    }
    if (eat('-')) return -factor();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RatFun(vars_, Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (!vars_.index_of(name)) fail("unknown variable " + name);
      return RatFun::variable(vars_, name);
    }
    fail("unexpected character");
  }

  std::string_view text_;
  Vars vars_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFun parse_ratfun(std::string_view text, Vars vars) { return Parser(text, vars).parse(); }

MPoly parse_mpoly(std::string_view text, Vars vars) {
  RatFun r = parse_ratfun(text, vars);
  if (!r.is_polynomial()) throw std::invalid_argument("expected a polynomial: " + std::string(text));
  return r.as_polynomial();
}

}  // namespace rook
