#include "rook/exactmath/gcd.hpp"

#include <functional>
#include <map>

namespace rook {
namespace {

Integer max_norm(const ZPoly& p) {
  Integer m = 0;
  for (const auto& [k, c] : p.terms())
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  return m;
}

// Divide every term by the monomial m, which must divide all of them.
ZPoly unshift(const ZPoly& p, mono::Key m) {
  if (m == 0) return p;
  std::vector<ZPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [k, c] : p.terms()) out.emplace_back(k - m, c);
  return ZPoly::from_sorted(p.vars(), std::move(out));
}

mono::Key min_monomial(mono::Key a, mono::Key b) {
  mono::Exponents e{};
  for (std::size_t i = 0; i < 4; ++i) e[i] = std::min(mono::exponent(a, i), mono::exponent(b, i));
  return mono::make(e);
}

Integer eval_point_value(std::size_t i) {
  static const long pts[4] = {7, 11, 13, 17};
  return Integer(pts[i]);
}

// Necessary condition for b | a: b(pt) divides a(pt) at an integer point.
bool passes_evaluation_filter(const ZPoly& a, const ZPoly& b) {
  std::vector<Integer> pt;
  for (std::size_t i = 0; i < a.vars().size(); ++i) pt.push_back(eval_point_value(i));
  Integer vb = b.evaluate_all(pt);
  if (vb == 0) return true;
  Integer va = a.evaluate_all(pt);
  return mpz_divisible_p(va.get_mpz_t(), vb.get_mpz_t()) != 0;
}

ZPoly full_gcd(const ZPoly& a, const ZPoly& b);

// Symmetric remainder in (-xi/2, xi/2].
Integer smod(const Integer& c, const Integer& xi) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
  if (2 * r > xi) r -= xi;
  return r;
}

// Recover a polynomial in var from its image at var = xi (xi-adic digits).
ZPoly interpolate(ZPoly gamma, const Integer& xi, std::size_t var, Vars vars) {
  std::vector<ZPoly> digits;
  while (!gamma.is_zero()) {
    std::vector<ZPoly::Term> g;
    std::vector<ZPoly::Term> rest;
    for (const auto& [k, c] : gamma.terms()) {
      Integer d = smod(c, xi);
      if (d != 0) g.emplace_back(k, d);
      Integer q;
      mpz_divexact(q.get_mpz_t(), Integer(c - d).get_mpz_t(), xi.get_mpz_t());
      if (q != 0) rest.emplace_back(k, std::move(q));
    }
    digits.push_back(ZPoly::from_sorted(vars, std::move(g)));
    gamma = ZPoly::from_sorted(vars, std::move(rest));
    if (digits.size() > mono::kMaxExponent) break;
  }
  return ZPoly::from_coefficients(vars, var, digits);
}

std::size_t top_variable(const ZPoly& a, const ZPoly& b) {
  for (std::size_t v = a.vars().size(); v-- > 0;)
    if (a.depends_on(v) || b.depends_on(v)) return v;
  return 0;
}

// Heuristic gcd by evaluation and interpolation; inputs primitive, depending
// on the same variables. The result is primitive.
std::optional<ZPoly> heuristic_gcd(const ZPoly& a, const ZPoly& b) {
  std::size_t v = top_variable(a, b);
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  unsigned deg = std::max(a.degree(v), b.degree(v));
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * deg > 400000) return std::nullopt;
    ZPoly av = a.evaluate(v, xi), bv = b.evaluate(v, xi);
    ZPoly gamma = full_gcd(av, bv);
    ZPoly g = sign_normalized(primitive_part(interpolate(gamma, xi, v, a.vars())));
    if (!g.is_zero() && g.degree(v) <= deg && divide_exact(a, g) && divide_exact(b, g)) return g;
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b, std::size_t v) {
  unsigned db = b.degree(v);
  ZPoly lcb = leading_coeff_in(b, v);
  ZPoly r = a;
  int e = static_cast<int>(a.degree(v)) - static_cast<int>(db) + 1;
  while (!r.is_zero() && r.degree(v) >= db) {
    ZPoly lcr = leading_coeff_in(r, v);
    r = lcb * r - (lcr * b).shifted(mono::unit(v, r.degree(v) - db));
    --e;
  }
  if (e > 0) r = lcb.pow(static_cast<unsigned>(e)) * r;
  return r;
}

// Subresultant PRS in the top variable with recursive contents.
ZPoly subresultant_gcd(const ZPoly& a0, const ZPoly& b0) {
  std::size_t v = top_variable(a0, b0);
  ZPoly ca = content_in(a0, v), cb = content_in(b0, v);
  ZPoly c = gcd(ca, cb);
  ZPoly a = divide_or_throw(a0, ca), b = divide_or_throw(b0, cb);
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  if (b.degree(v) == 0) return sign_normalized(primitive_part(c));
  ZPoly g(a.vars(), 1), h(a.vars(), 1);
  for (;;) {
    unsigned d = a.degree(v) - b.degree(v);
    ZPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) break;
    if (r.degree(v) == 0) {
      b = ZPoly(a.vars(), 1);
      break;
    }
    a = b;
    b = divide_or_throw(r, g * h.pow(d));
    g = leading_coeff_in(a, v);
    if (d == 0) {
      // h unchanged
    } else if (d == 1) {
      h = g;
    } else {
      h = divide_or_throw(g.pow(d), h.pow(d - 1));
    }
  }
  ZPoly pb = b.degree(v) == 0 ? ZPoly(a.vars(), 1) : divide_or_throw(b, content_in(b, v));
  return sign_normalized(primitive_part(pb * c));
}

// Full gcd keeping the integer content, positive leading coefficient.
ZPoly full_gcd(const ZPoly& a0, const ZPoly& b0) {
  if (a0.is_zero()) return sign_normalized(b0);
  if (b0.is_zero()) return sign_normalized(a0);
  Vars vars = a0.vars().size() >= b0.vars().size() ? a0.vars() : b0.vars();
  Integer ca = content(a0), cb = content(b0), ic;
  mpz_gcd(ic.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a0.is_constant() || b0.is_constant()) return ZPoly(vars, ic);
  ZPoly a = divide_exact_integer(a0, ca), b = divide_exact_integer(b0, cb);
  mono::Key mc = min_monomial(a.monomial_content(), b.monomial_content());
  a = unshift(a, a.monomial_content());
  b = unshift(b, b.monomial_content());
  // Variables occurring in only one argument can be eliminated by contents.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (a.is_constant() || b.is_constant()) break;
      bool da = a.depends_on(v), db = b.depends_on(v);
      if (da && !db) {
        a = content_in(a, v);
        changed = true;
      } else if (db && !da) {
        b = content_in(b, v);
        changed = true;
      }
    }
  }
  ZPoly g(vars, 1);
  if (!a.is_constant() && !b.is_constant()) {
    if (a == b) {
      g = sign_normalized(a);
    } else if (auto q = divide_exact(a, b)) {
      g = sign_normalized(b);
    } else if (auto q2 = divide_exact(b, a)) {
      g = sign_normalized(a);
    } else if (auto h = heuristic_gcd(a, b)) {
      g = *h;
    } else {
      g = subresultant_gcd(a, b);
    }
  }
  return g.shifted(mc, ic);
}

}  // namespace

ZPoly sign_normalized(const ZPoly& p) {
  if (!p.is_zero() && sgn(p.leading_coeff()) < 0) return -p;
  return p;
}

ZPoly leading_coeff_in(const ZPoly& p, std::size_t var) {
  if (p.is_zero()) return p;
  return p.coefficients_in(var).back();
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return ZPoly(a.vars());
  const auto& [lm, lc] = b.terms().front();
  if (b.is_monomial()) {
    std::vector<ZPoly::Term> out;
    out.reserve(a.size());
    for (const auto& [k, c] : a.terms()) {
      if (!mono::divides(lm, k) || !mpz_divisible_p(c.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
      Integer q;
      mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), lc.get_mpz_t());
      out.emplace_back(k - lm, std::move(q));
    }
    return ZPoly::from_sorted(a.vars(), std::move(out));
  }
  auto da = a.degrees(), db = b.degrees();
  for (std::size_t i = 0; i < 4; ++i)
    if (db[i] > da[i]) return std::nullopt;
  if (!passes_evaluation_filter(a, b)) return std::nullopt;
  std::map<mono::Key, Integer, std::greater<>> rem;
  for (const auto& [k, c] : a.terms()) rem.emplace_hint(rem.end(), k, c);
  std::vector<ZPoly::Term> q;
  Integer qc;
  while (!rem.empty()) {
    auto it = rem.begin();
    mono::Key m = it->first;
    if (!mono::divides(lm, m) || !mpz_divisible_p(it->second.get_mpz_t(), lc.get_mpz_t()))
      return std::nullopt;
    mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lc.get_mpz_t());
    mono::Key qm = m - lm;
    for (std::size_t i = 0; i < 4; ++i)
      if (mono::exponent(qm, i) > da[i] - db[i]) return std::nullopt;
    rem.erase(it);
    for (std::size_t j = 1; j < b.size(); ++j) {
      const auto& [bk, bc] = b.terms()[j];
      auto [slot, inserted] = rem.try_emplace(qm + bk);
      mpz_submul(slot->second.get_mpz_t(), qc.get_mpz_t(), bc.get_mpz_t());
      if (sgn(slot->second) == 0) rem.erase(slot);
    }
    q.emplace_back(qm, qc);
  }
  return ZPoly::from_sorted(a.vars(), std::move(q));
}

ZPoly divide_or_throw(const ZPoly& a, const ZPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::domain_error("inexact polynomial division");
  return *q;
}

ZPoly gcd_with_content(const ZPoly& a, const ZPoly& b) { return full_gcd(a, b); }

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() && b.is_zero()) return a;
  return sign_normalized(primitive_part(full_gcd(a, b)));
}

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
  return to_rational(gcd(clear_denominators(a), clear_denominators(b)));
}

ZPoly content_in(const ZPoly& p, std::size_t var) {
  if (p.is_zero()) return p;
  auto cs = p.coefficients_in(var);
  // Start from the sparsest coefficient to reach 1 early.
  std::sort(cs.begin(), cs.end(), [](const ZPoly& x, const ZPoly& y) { return x.size() < y.size(); });
  ZPoly g(p.vars());
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

ZPoly resultant(const ZPoly& a, const ZPoly& b, std::size_t var) {
  auto ca = a.coefficients_in(var), cb = b.coefficients_in(var);
  if (a.is_zero() || b.is_zero()) return ZPoly(a.vars());
  std::size_t m = ca.size() - 1, n = cb.size() - 1;
  std::size_t size = m + n;
  Vars vars = a.vars();
  if (size == 0) return ZPoly(vars, 1);
  std::vector<std::vector<ZPoly>> M(size, std::vector<ZPoly>(size, ZPoly(vars)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) M[i][i + k] = ca[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) M[n + i][i + k] = cb[n - k];
  // Bareiss fraction-free determinant.
  ZPoly prev(vars, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < size && M[r][k].is_zero()) ++r;
      if (r == size) return ZPoly(vars);
      std::swap(M[k], M[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j)
        M[i][j] = divide_or_throw(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
      M[i][k] = ZPoly(vars);
    }
    prev = M[k][k];
  }
  ZPoly det = M[size - 1][size - 1];
  return negate ? -det : det;
}

ZPoly discriminant(const ZPoly& a, std::size_t var) {
  unsigned n = a.degree(var);
  ZPoly r = resultant(a, a.derivative(var), var);
  ZPoly d = divide_or_throw(r, leading_coeff_in(a, var));
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

}  // namespace rook
