#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rook/exactmath/rational.hpp"
#include "rook/exactmath/vars.hpp"

namespace rook {

// Packed monomial: four 12-bit exponent fields (variable i at bit 12*i) and
// the total degree in the top 16 bits. Unsigned comparison of two keys is
// graded lexicographic order with later variables more significant, and
// multiplication of monomials is addition of keys.
namespace mono {

constexpr unsigned kBits = 12;
constexpr std::uint64_t kFieldMask = (std::uint64_t{1} << kBits) - 1;
constexpr unsigned kDegreeShift = 48;
constexpr unsigned kMaxExponent = (1u << kBits) - 1;

using Key = std::uint64_t;
using Exponents = std::array<unsigned, 4>;

inline unsigned exponent(Key m, std::size_t var) {
  return static_cast<unsigned>((m >> (kBits * var)) & kFieldMask);
}
inline unsigned degree(Key m) { return static_cast<unsigned>(m >> kDegreeShift); }

inline Key make(const Exponents& e) {
  Key m = 0;
  unsigned d = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (e[i] > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
    m |= Key{e[i]} << (kBits * i);
    d += e[i];
  }
  return m | (Key{d} << kDegreeShift);
}

inline Key unit(std::size_t var, unsigned e) {
  if (e > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
  return (Key{e} << (kBits * var)) | (Key{e} << kDegreeShift);
}

inline Exponents unpack(Key m) {
  return {exponent(m, 0), exponent(m, 1), exponent(m, 2), exponent(m, 3)};
}

inline bool divides(Key a, Key b) {
  for (std::size_t i = 0; i < 4; ++i)
    if (exponent(a, i) > exponent(b, i)) return false;
  return true;
}

// Requires divides(a, b).
inline Key quotient(Key b, Key a) { return b - a; }

inline Key without(Key m, std::size_t var) {
  unsigned e = exponent(m, var);
  return m - unit(var, e);
}

}  // namespace mono

template <class C>
class Poly;

using ZPoly = Poly<Integer>;
using MPoly = Poly<Rational>;

namespace detail {
// Product kernel over the integers; terms sorted descending.
std::vector<std::pair<mono::Key, Integer>> multiply_terms(
    const std::vector<std::pair<mono::Key, Integer>>& a,
    const std::vector<std::pair<mono::Key, Integer>>& b);
std::string format_terms_integer(const Vars& vars,
                                 const std::vector<std::pair<mono::Key, Integer>>& t);
std::string format_terms_rational(const Vars& vars,
                                  const std::vector<std::pair<mono::Key, Rational>>& t);
}  // namespace detail

// Sparse multivariate polynomial with coefficients in C (Integer or Rational).
// Terms are kept sorted by decreasing monomial and never store zero.
template <class C>
class Poly {
 public:
  using Term = std::pair<mono::Key, C>;

  Poly() = default;
  explicit Poly(Vars vars) : vars_(vars) {}
  Poly(Vars vars, const C& c) : vars_(vars) {
    if (sgn(c) != 0) terms_.emplace_back(0, c);
  }
  Poly(Vars vars, long c) : Poly(vars, C(c)) {}

  static Poly variable(Vars vars, std::size_t var) {
    Poly p(vars);
    p.terms_.emplace_back(mono::unit(var, 1), C(1));
    return p;
  }
  static Poly variable(Vars vars, std::string_view name) {
    return variable(vars, vars.require(name));
  }
  static Poly monomial(Vars vars, mono::Key m, const C& c) {
    Poly p(vars);
    if (sgn(c) != 0) p.terms_.emplace_back(m, c);
    return p;
  }
  // Sorts, merges equal monomials, and drops zeros.
  static Poly from_terms(Vars vars, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first > b.first; });
    Poly p(vars);
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
        if (sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
      } else if (sgn(t.second) != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }
  // Terms already strictly decreasing with nonzero coefficients.
  static Poly from_sorted(Vars vars, std::vector<Term> terms) {
    Poly p(vars);
    p.terms_ = std::move(terms);
    return p;
  }

  const Vars& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }
  bool is_monomial() const { return terms_.size() == 1; }

  C constant_term() const {
    if (!terms_.empty() && terms_.back().first == 0) return terms_.back().second;
    return C(0);
  }
  const C& leading_coeff() const { return terms_.front().second; }
  mono::Key leading_monomial() const { return terms_.front().first; }

  C coeff(mono::Key m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, mono::Key k) { return t.first > k; });
    if (it != terms_.end() && it->first == m) return it->second;
    return C(0);
  }

  unsigned total_degree() const { return terms_.empty() ? 0 : mono::degree(terms_.front().first); }
  unsigned degree(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, mono::exponent(t.first, var));
    return d;
  }
  unsigned degree(std::string_view name) const { return degree(vars_.require(name)); }
  unsigned min_degree(std::size_t var) const {
    if (terms_.empty()) return 0;
    unsigned d = mono::kMaxExponent;
    for (const auto& t : terms_) d = std::min(d, mono::exponent(t.first, var));
    return d;
  }
  mono::Exponents degrees() const {
    mono::Exponents d{0, 0, 0, 0};
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < 4; ++i) d[i] = std::max(d[i], mono::exponent(t.first, i));
    return d;
  }
  // Componentwise minimum exponent (the largest monomial dividing every term).
  mono::Key monomial_content() const {
    if (terms_.empty()) return 0;
    mono::Exponents e{mono::kMaxExponent, mono::kMaxExponent, mono::kMaxExponent, mono::kMaxExponent};
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < 4; ++i) e[i] = std::min(e[i], mono::exponent(t.first, i));
    for (std::size_t i = vars_.size(); i < 4; ++i) e[i] = 0;
    return mono::make(e);
  }
  bool depends_on(std::size_t var) const {
    for (const auto& t : terms_)
      if (mono::exponent(t.first, var) != 0) return true;
    return false;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  Poly& operator+=(const Poly& o) { return *this = add(*this, o, false); }
  Poly& operator-=(const Poly& o) { return *this = add(*this, o, true); }
  Poly& operator*=(const Poly& o) { return *this = (*this) * o; }
  Poly& operator*=(const C& c) {
    if (sgn(c) == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= c;
    }
    return *this;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return add(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return add(a, b, true); }
  friend Poly operator*(const Poly& a, const C& c) {
    Poly r = a;
    r *= c;
    return r;
  }
  friend Poly operator*(const C& c, const Poly& a) { return a * c; }
  friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Multiply by a monomial.
  Poly shifted(mono::Key m, const C& c = C(1)) const {
    Poly r(vars_);
    if (sgn(c) == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      for (std::size_t i = 0; i < 4; ++i)
        if (mono::exponent(t.first, i) + mono::exponent(m, i) > mono::kMaxExponent)
          throw std::overflow_error("monomial exponent overflow");
      r.terms_.emplace_back(t.first + m, t.second * c);
    }
    return r;
  }

  Poly derivative(std::size_t var) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      unsigned e = mono::exponent(t.first, var);
      if (e == 0) continue;
      out.emplace_back(t.first - mono::unit(var, 1), t.second * C(e));
    }
    // Subtracting the same unit from keys that all contain it keeps their order.
    return from_sorted(vars_, std::move(out));
  }

  // Coefficients with respect to var: result[k] is the coefficient of var^k,
  // a polynomial free of var.
  std::vector<Poly> coefficients_in(std::size_t var) const {
    std::vector<std::vector<Term>> buckets(terms_.empty() ? 0 : degree(var) + 1);
    for (const auto& t : terms_) {
      unsigned e = mono::exponent(t.first, var);
      buckets[e].emplace_back(t.first - mono::unit(var, e), t.second);
    }
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(from_sorted(vars_, std::move(b)));
    return out;
  }

  static Poly from_coefficients(Vars vars, std::size_t var, const std::vector<Poly>& c) {
    std::vector<Term> out;
    for (std::size_t k = 0; k < c.size(); ++k)
      for (const auto& t : c[k].terms_) out.emplace_back(t.first + mono::unit(var, k), t.second);
    return from_terms(vars, std::move(out));
  }

  // Substitute var := value (value free of var's role is not required).
  Poly substitute(std::size_t var, const Poly& value) const {
    auto cs = coefficients_in(var);
    Poly r(vars_);
    for (std::size_t k = cs.size(); k-- > 0;) r = r * value + cs[k];
    return r;
  }
  Poly evaluate(std::size_t var, const C& value) const {
    return substitute(var, Poly(vars_, value));
  }
  // Full evaluation at a point given for every variable.
  C evaluate_all(std::span<const C> point) const {
    C acc(0);
    for (const auto& t : terms_) {
      C term = t.second;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        unsigned e = mono::exponent(t.first, i);
        for (unsigned j = 0; j < e; ++j) term *= point[i];
      }
      acc += term;
    }
    return acc;
  }

  Poly pow(unsigned n) const {
    Poly result(vars_, C(1));
    Poly base = *this;
    while (n) {
      if (n & 1) result = result * base;
      n >>= 1;
      if (n) base = base * base;
    }
    return result;
  }

  // Re-express in another ring, matching variables by name.
  Poly change_vars(Vars target) const {
    if (target == vars_) return *this;
    std::array<int, 4> map{-1, -1, -1, -1};
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (auto j = target.index_of(vars_.name(i))) map[i] = static_cast<int>(*j);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      mono::Exponents e{0, 0, 0, 0};
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        unsigned k = mono::exponent(t.first, i);
        if (k == 0) continue;
        if (map[i] < 0)
          throw std::invalid_argument("variable " + vars_.name(i) + " missing from target ring");
        e[static_cast<std::size_t>(map[i])] = k;
      }
      out.emplace_back(mono::make(e), t.second);
    }
    return from_terms(target, std::move(out));
  }

  std::string to_string() const;

 private:
  static Poly add(const Poly& a, const Poly& b, bool subtract) {
    check_ring(a, b);
    Poly r(a.vars_.size() >= b.vars_.size() ? a.vars_ : b.vars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first > j->first)) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->first > i->first) {
        r.terms_.emplace_back(j->first, subtract ? C(-j->second) : j->second);
        ++j;
      } else {
        C c = subtract ? C(i->second - j->second) : C(i->second + j->second);
        if (sgn(c) != 0) r.terms_.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  static void check_ring(const Poly& a, const Poly& b) {
    if (a.vars_ == b.vars_) return;
    // Constants from the empty ring mix freely.
    if ((a.vars_.size() == 0 && a.is_constant()) || (b.vars_.size() == 0 && b.is_constant())) return;
    throw std::invalid_argument("polynomial ring mismatch");
  }

  static Poly multiply(const Poly& a, const Poly& b);

  Vars vars_;
  std::vector<Term> terms_;
};

// Integer content (positive gcd of coefficients); zero for the zero polynomial.
Integer content(const ZPoly& p);
ZPoly primitive_part(const ZPoly& p);
// Clears denominators: p = result / den with den > 0 minimal.
ZPoly clear_denominators(const MPoly& p, Integer* den = nullptr);
MPoly to_rational(const ZPoly& p);
// Requires all coefficients integral.
ZPoly to_integer(const MPoly& p);
// Exact integer division of every coefficient.
ZPoly divide_exact_integer(const ZPoly& p, const Integer& c);

template <>
inline ZPoly ZPoly::multiply(const ZPoly& a, const ZPoly& b) {
  check_ring(a, b);
  Vars v = a.vars_.size() >= b.vars_.size() ? a.vars_ : b.vars_;
  if (a.is_zero() || b.is_zero()) return ZPoly(v);
  if (b.terms_.size() == 1) {
    ZPoly r = a.shifted(b.terms_[0].first, b.terms_[0].second);
    r.vars_ = v;
    return r;
  }
  if (a.terms_.size() == 1) {
    ZPoly r = b.shifted(a.terms_[0].first, a.terms_[0].second);
    r.vars_ = v;
    return r;
  }
  return from_sorted(v, detail::multiply_terms(a.terms_, b.terms_));
}

template <>
inline MPoly MPoly::multiply(const MPoly& a, const MPoly& b) {
  check_ring(a, b);
  Vars v = a.vars_.size() >= b.vars_.size() ? a.vars_ : b.vars_;
  if (a.is_zero() || b.is_zero()) return MPoly(v);
  Integer da, db;
  ZPoly za = clear_denominators(a, &da), zb = clear_denominators(b, &db);
  MPoly r = to_rational(za * zb);
  Integer d = da * db;
  if (d != 1) r *= Rational(Integer(1), d);
  r.vars_ = v;
  return r;
}

template <>
inline std::string ZPoly::to_string() const {
  return detail::format_terms_integer(vars_, terms_);
}
template <>
inline std::string MPoly::to_string() const {
  return detail::format_terms_rational(vars_, terms_);
}

}  // namespace rook
