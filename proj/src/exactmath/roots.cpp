#include "rook/exactmath/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace rook {
namespace {

void trim(UniPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UniPoly remainder(UniPoly a, const UniPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

UniPoly quotient(UniPoly a, const UniPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  UniPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

UniPoly derivative(const UniPoly& p) {
  UniPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(i));
  return d;
}

UniPoly monic_gcd(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UniPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  Rational lc = a.back();
  for (auto& c : a) c /= lc;
  return a;
}

int sign_at(const UniPoly& p, const Integer& y) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * y + p[i];
  return sgn(acc);
}

unsigned variations(const std::vector<UniPoly>& chain, const Integer& y) {
  unsigned v = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, y);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

void isolate(const std::vector<UniPoly>& chain, const Integer& a, const Integer& b, unsigned va,
             unsigned vb, std::vector<Integer>& out) {
  if (va == vb) return;
  if (b - a == 1) {
    if (sign_at(chain[0], b) == 0) out.push_back(b);
    return;
  }
  Integer mid;
  Integer sum = a + b;
  mpz_fdiv_q_2exp(mid.get_mpz_t(), sum.get_mpz_t(), 1);
  unsigned vm = variations(chain, mid);
  isolate(chain, a, mid, va, vm, out);
  isolate(chain, mid, b, vm, vb, out);
}

}  // namespace

UniPoly to_unipoly(const MPoly& p) {
  if (p.vars().size() > 1) {
    std::size_t used = 0;
    for (std::size_t i = 0; i < p.vars().size(); ++i) used += p.depends_on(i);
    if (used > 1) throw std::invalid_argument("expected a univariate polynomial");
  }
  UniPoly u;
  for (const auto& [m, c] : p.terms()) {
    unsigned e = mono::degree(m);
    if (u.size() <= e) u.resize(e + 1);
    u[e] += c;
  }
  return u;
}

UniPoly to_unipoly(const ZPoly& p) { return to_unipoly(to_rational(p)); }

Rational eval(const UniPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

std::vector<Rational> rational_roots(const UniPoly& p0) {
  UniPoly p = p0;
  trim(p);
  if (p.empty()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (sgn(p[low]) == 0) ++low;
  if (low > 0) {
    roots.push_back(0);
    p.erase(p.begin(), p.begin() + static_cast<long>(low));
  }
  if (p.size() <= 1) return roots;
  // Squarefree part, then integer primitive form.
  UniPoly g = monic_gcd(p, derivative(p));
  if (g.size() > 1) p = quotient(p, g);
  Integer l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> z;
  for (const auto& c : p) z.push_back(Integer(c * l));
  std::size_t n = z.size() - 1;
  Integer an = z[n];
  // Q(y) = an^(n-1) P(y/an) is monic with integer coefficients.
  UniPoly q(n + 1);
  Integer scale = 1;
  for (std::size_t i = n; i-- > 0;) {
    q[i] = Rational(z[i] * scale);
    scale *= an;
  }
  q[n] = 1;
  std::vector<UniPoly> chain{q, derivative(q)};
  while (chain.back().size() > 1) {
    UniPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  Integer bound = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (mpz_cmpabs(q[i].get_num_mpz_t(), bound.get_mpz_t()) > 0) bound = abs(q[i].get_num());
  bound += 1;
  Integer lo = -bound - 1;
  std::vector<Integer> ys;
  isolate(chain, lo, bound, variations(chain, lo), variations(chain, bound), ys);
  for (const auto& y : ys) roots.push_back(Rational(y, an));
  for (auto& r : roots) r.canonicalize();
  std::sort(roots.begin(), roots.end());
  return roots;
}

unsigned root_multiplicity(UniPoly p, const Rational& r) {
  trim(p);
  unsigned m = 0;
  while (!p.empty() && sgn(eval(p, r)) == 0) {
    // Synthetic division by (x - r).
    UniPoly q(p.size() - 1);
    Rational carry = 0;
    for (std::size_t i = p.size(); i-- > 1;) {
      carry = carry * r + p[i];
      q[i - 1] = carry;
    }
    p = std::move(q);
    ++m;
  }
  return m;
}

}  // namespace rook
