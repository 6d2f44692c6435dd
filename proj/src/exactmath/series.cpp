#include "rook/exactmath/series.hpp"

#include <stdexcept>

namespace rook {

PowerSeries::PowerSeries(std::string var, unsigned order)
    : var_(std::move(var)), c_(order + 1), order_(order) {}

PowerSeries::PowerSeries(std::string var, std::vector<Rational> coeffs, unsigned order)
    : var_(std::move(var)), c_(std::move(coeffs)), order_(order) {
  c_.resize(order + 1);
}

PowerSeries PowerSeries::constant(std::string var, const Rational& c, unsigned order) {
  PowerSeries p(std::move(var), order);
  p.c_[0] = c;
  return p;
}

PowerSeries PowerSeries::variable(std::string var, unsigned order) {
  PowerSeries p(std::move(var), order);
  if (order >= 1) p.c_[1] = 1;
  return p;
}

PowerSeries PowerSeries::from_poly(const MPoly& p, unsigned order) {
  if (p.vars().size() > 1) throw std::invalid_argument("series from multivariate polynomial");
  std::string var = p.vars().size() == 1 ? p.vars().name(0) : "x";
  PowerSeries s(var, order);
  for (const auto& [m, c] : p.terms()) {
    unsigned e = mono::exponent(m, 0);
    if (e <= order) s.c_[e] += c;
  }
  return s;
}

PowerSeries PowerSeries::from_ratfun(const RatFun& f, unsigned order) {
  PowerSeries n = from_poly(to_rational(f.num()), order);
  PowerSeries d = from_poly(to_rational(f.den()), order);
  if (sgn(d[0]) == 0) throw std::domain_error("rational function has a pole at 0");
  return n / d;
}

unsigned PowerSeries::valuation() const {
  for (unsigned k = 0; k <= order_; ++k)
    if (sgn(c_[k]) != 0) return k;
  return order_ + 1;
}

PowerSeries PowerSeries::truncated(unsigned order) const {
  if (order > order_) throw std::invalid_argument("cannot raise truncation order");
  return PowerSeries(var_, std::vector<Rational>(c_.begin(), c_.begin() + order + 1), order);
}

namespace {
void check_var(const PowerSeries& a, const PowerSeries& b) {
  if (a.var() != b.var()) throw std::invalid_argument("series variable mismatch");
}
}  // namespace

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  check_var(a, b);
  unsigned n = std::min(a.order_, b.order_);
  PowerSeries r(a.var_, n);
  for (unsigned k = 0; k <= n; ++k) r.c_[k] = a.c_[k] + b.c_[k];
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  check_var(a, b);
  unsigned n = std::min(a.order_, b.order_);
  PowerSeries r(a.var_, n);
  for (unsigned k = 0; k <= n; ++k) r.c_[k] = a.c_[k] - b.c_[k];
  return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  check_var(a, b);
  unsigned n = std::min(a.order_, b.order_);
  PowerSeries r(a.var_, n);
  for (unsigned i = 0; i <= n; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (unsigned j = 0; i + j <= n; ++j)
      if (sgn(b.c_[j]) != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

PowerSeries operator*(const PowerSeries& a, const Rational& c) {
  PowerSeries r = a;
  for (auto& x : r.c_) x *= c;
  return r;
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
  check_var(a, b);
  if (sgn(b.c_[0]) == 0) throw std::domain_error("series division by positive valuation");
  unsigned n = std::min(a.order_, b.order_);
  PowerSeries q(a.var_, n);
  Rational inv = 1 / b.c_[0];
  for (unsigned k = 0; k <= n; ++k) {
    Rational acc = a.c_[k];
    for (unsigned j = 1; j <= k; ++j)
      if (sgn(b.c_[j]) != 0) acc -= b.c_[j] * q.c_[k - j];
    q.c_[k] = acc * inv;
  }
  return q;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
  return a.var_ == b.var_ && a.order_ == b.order_ && a.c_ == b.c_;
}

PowerSeries PowerSeries::inverse() const {
  return constant(var_, 1, order_) / *this;
}

PowerSeries PowerSeries::derivative() const {
  if (order_ == 0) throw std::domain_error("derivative of an order-0 series");
  PowerSeries r(var_, order_ - 1);
  for (unsigned k = 1; k <= order_; ++k) r.c_[k - 1] = c_[k] * k;
  return r;
}

PowerSeries PowerSeries::integral() const {
  PowerSeries r(var_, order_ + 1);
  for (unsigned k = 0; k <= order_; ++k) r.c_[k + 1] = c_[k] / Rational(k + 1);
  return r;
}

PowerSeries PowerSeries::pow(const Rational& alpha) const {
  if (c_[0] != 1) throw std::domain_error("series power needs constant term 1");
  // n q_n = sum_{j=1}^n (alpha j - (n - j)) p_j q_{n-j}
  PowerSeries q(var_, order_);
  q.c_[0] = 1;
  for (unsigned n = 1; n <= order_; ++n) {
    Rational acc = 0;
    for (unsigned j = 1; j <= n; ++j)
      if (sgn(c_[j]) != 0) acc += (alpha * j - Rational(n - j)) * c_[j] * q.c_[n - j];
    q.c_[n] = acc / Rational(n);
  }
  return q;
}

PowerSeries PowerSeries::pow(unsigned n) const {
  PowerSeries result = constant(var_, 1, order_);
  PowerSeries base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

PowerSeries PowerSeries::shifted(unsigned k) const {
  PowerSeries r(var_, order_ + k);
  for (unsigned i = 0; i <= order_; ++i) r.c_[i + k] = c_[i];
  return r;
}

std::string PowerSeries::to_string(unsigned terms) const {
  std::string out;
  unsigned shown = 0;
  for (unsigned k = 0; k <= order_ && shown < terms; ++k) {
    if (sgn(c_[k]) == 0) continue;
    if (!out.empty()) out += " + ";
    out += rook::to_string(c_[k]);
    if (k > 0) out += "*" + var_ + (k > 1 ? "^" + std::to_string(k) : "");
    ++shown;
  }
  if (out.empty()) out = "0";
  return out + " + O(" + var_ + "^" + std::to_string(order_ + 1) + ")";
}

PowerSeries series_compose(const PowerSeries& outer, const PowerSeries& inner) {
  if (inner.valuation() == 0) throw std::domain_error("composition needs inner valuation >= 1");
  unsigned n = std::min(outer.order(), inner.order());
  PowerSeries in = inner.truncated(n);
  PowerSeries r = PowerSeries::constant(inner.var(), outer[n], n);
  for (unsigned k = n; k-- > 0;) r = r * in + PowerSeries::constant(inner.var(), outer[k], n);
  return r;
}

PowerSeries series_nth_root(const PowerSeries& p, unsigned k) {
  if (k == 0) throw std::invalid_argument("root index must be positive");
  if (p[0] != 1) throw std::domain_error("root needs constant term 1");
  return p.pow(Rational(1, k));
}

bool agree(const PowerSeries& a, const PowerSeries& b) {
  unsigned n = std::min(a.order(), b.order());
  for (unsigned k = 0; k <= n; ++k)
    if (a[k] != b[k]) return false;
  return true;
}

}  // namespace rook
