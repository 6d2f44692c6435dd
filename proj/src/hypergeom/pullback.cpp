#include <stdexcept>

#include "rook/exactmath/gcd.hpp"
#include "rook/hypergeom/hypergeom.hpp"

namespace rook {
namespace {

const Vars kX{"x"};
const Vars kC{"c"};

void trim(UniPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Rational at(const UniPoly& p, unsigned j) { return j < p.size() ? p[j] : Rational(0); }

UniPoly mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

UniPoly linear_power(const Rational& p, unsigned n) {
  UniPoly r{1};
  for (unsigned i = 0; i < n; ++i) r = mul(r, UniPoly{-p, 1});
  return r;
}

RatFun to_ratfun(const UniPoly& p) {
  MPoly m(kX);
  for (std::size_t i = 0; i < p.size(); ++i)
    m += MPoly::monomial(kX, mono::make({static_cast<unsigned>(i), 0, 0, 0}), p[i]);
  return RatFun(m);
}

// Dense power of a polynomial with coefficients in Q(c).
std::vector<RatFun> power(const std::vector<RatFun>& q, unsigned k) {
  std::vector<RatFun> r{RatFun(kC, 1)};
  for (unsigned e = 0; e < k; ++e) {
    std::vector<RatFun> t(r.size() + q.size() - 1, RatFun(kC));
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j)
        if (!r[i].is_zero() && !q[j].is_zero()) t[i + j] += r[i] * q[j];
    r = std::move(t);
  }
  return r;
}

struct Split {
  UniPoly A{1}, B{1};  // monic, from positive and negative exponents
  unsigned pos = 0, neg = 0;
};

Split split(const std::vector<Rational>& sing, const std::vector<int>& n) {
  Split s;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] > 0) {
      s.A = mul(s.A, linear_power(sing[i], n[i]));
      s.pos += n[i];
    } else if (n[i] < 0) {
      s.B = mul(s.B, linear_power(sing[i], -n[i]));
      s.neg += -n[i];
    }
  }
  return s;
}

RatFun search_map(const std::vector<Rational>& sing, const std::vector<int>& n, const Rational& c) {
  Split s = split(sing, n);
  return to_ratfun(s.A) / to_ratfun(s.B) * c;
}

// Calls visit on every vector in [-m, m]^size.
template <class F>
void for_each_vector(std::size_t size, int m, F&& visit) {
  std::vector<int> n(size, -m);
  for (;;) {
    visit(n);
    std::size_t i = 0;
    while (i < size && n[i] == m) n[i++] = -m;
    if (i == size) return;
    ++n[i];
  }
}

// Roots of p (nonzero) all lie in the given set.
bool roots_within(UniPoly p, const std::vector<Rational>& set) {
  trim(p);
  unsigned total = 0;
  for (const auto& r : set) total += root_multiplicity(p, r);
  return total + 1 == p.size();
}

// Cube-type search: c A - B = lambda Q^k with Q monic.
void power_search(const std::vector<Rational>& sing, unsigned k, unsigned max_degree,
                  std::vector<std::pair<std::vector<int>, Rational>>& out) {
  RatFun cv = RatFun::variable(kC, "c");
  for_each_vector(sing.size(), static_cast<int>(max_degree), [&](const std::vector<int>& n) {
    for (int e : n)
      if (e == 0) return;
    Split s = split(sing, n);
    if (s.pos == s.neg) return;
    unsigned D = std::max(s.pos, s.neg);
    if (D > max_degree || D % k != 0) return;
    std::vector<RatFun> N(D + 1, RatFun(kC));
    for (unsigned j = 0; j <= D; ++j) N[j] = cv * at(s.A, j) - RatFun(kC, at(s.B, j));
    RatFun lambda = s.pos > s.neg ? cv : RatFun(kC, -1);
    unsigned q = D / k;
    std::vector<RatFun> u(q + 1, RatFun(kC));
    u[q] = RatFun(kC, 1);
    for (unsigned j = 1; j <= q; ++j) {
      u[q - j] = RatFun(kC);
      RatFun cur = power(u, k)[D - j];
      u[q - j] = (N[D - j] / lambda - cur) * Rational(1, k);
    }
    auto P = power(u, k);
    ZPoly g(kC);
    for (unsigned j = 0; j + q < D; ++j) {
      RatFun r = N[j] - lambda * P[j];
      if (!r.is_zero()) g = gcd(g, r.num());
    }
    if (g.is_zero() || g.is_constant()) return;
    for (const auto& c : rational_roots(to_unipoly(g))) {
      if (sgn(c) == 0) continue;
      UniPoly Nc(D + 1);
      for (unsigned j = 0; j <= D; ++j)
        Nc[j] = c * at(s.A, j) - at(s.B, j);
      if (perfect_power_root(Nc, k)) out.emplace_back(n, c);
    }
  });
}

}  // namespace

std::optional<UniPoly> perfect_power_root(const UniPoly& p0, unsigned k) {
  UniPoly p = p0;
  trim(p);
  if (p.empty() || k == 0) return std::nullopt;
  unsigned D = static_cast<unsigned>(p.size() - 1);
  if (D % k != 0) return std::nullopt;
  Rational lc = p.back();
  for (auto& c : p) c /= lc;
  unsigned q = D / k;
  UniPoly Q(q + 1);
  Q[q] = 1;
  // Top-down: the coefficient of x^(D-j) in Q^k is k u_(q-j) plus earlier terms.
  for (unsigned j = 1; j <= q; ++j) {
    Q[q - j] = 0;
    UniPoly t{1};
    for (unsigned e = 0; e < k; ++e) t = mul(t, Q);
    Q[q - j] = (p[D - j] - t[D - j]) / Rational(k);
  }
  UniPoly t{1};
  for (unsigned e = 0; e < k; ++e) t = mul(t, Q);
  return t == p ? std::optional<UniPoly>(Q) : std::nullopt;
}

HypergeomSpec spec_for_triple(const Triple& t) {
  Rational c = 1 + t[0];
  Rational a = (c - t[1] + t[2]) / 2, b = (c - t[1] - t[2]) / 2;
  if (b < a) std::swap(a, b);
  return {a, b, c};
}

std::vector<PullbackCandidate> pullback_search(const std::vector<Rational>& sing, const Triple& triple,
                                               unsigned max_degree) {
  std::vector<PullbackCandidate> out;
  int nonzero = -1;
  for (int i = 0; i < 3; ++i) {
    if (sgn(triple[i]) == 0) continue;
    if (nonzero >= 0 || triple[i].get_num() != 1 || triple[i].get_den() < 2)
      throw std::invalid_argument("supported triples: (0,0,0) or one entry 1/k");
    nonzero = i;
  }
  HypergeomSpec params = spec_for_triple(triple);
  RatFun one(kX, 1);

  if (nonzero >= 0) {
    unsigned k = static_cast<unsigned>(triple[nonzero].get_den().get_ui());
    std::vector<std::pair<std::vector<int>, Rational>> found;
    power_search(sing, k, max_degree, found);
    for (auto& [n, c] : found) {
      RatFun g = search_map(sing, n, c);
      // The ramified fibre is over 1; move it to the requested point.
      RatFun f = nonzero == 1 ? g : nonzero == 2 ? g / (g - one) : one - g;
      out.push_back({n, c, g, f, triple, params});
    }
    return out;
  }

  // (0,0,0): every point of sing and infinity lies over 0, 1 or infinity.
  for_each_vector(sing.size(), static_cast<int>(max_degree), [&](const std::vector<int>& n) {
    Split s = split(sing, n);
    unsigned D = std::max(s.pos, s.neg);
    if (D == 0 || D > max_degree) return;
    std::vector<Rational> zero_set;
    for (std::size_t i = 0; i < n.size(); ++i)
      if (n[i] == 0) zero_set.push_back(sing[i]);
    auto accept = [&](const Rational& c) {
      UniPoly N(D + 1);
      for (unsigned j = 0; j <= D; ++j) N[j] = c * at(s.A, j) - at(s.B, j);
      trim(N);
      if (N.empty() || !roots_within(N, zero_set)) return;
      for (const auto& z : zero_set)
        if (root_multiplicity(N, z) == 0) return;
      RatFun f = search_map(sing, n, c);
      out.push_back({n, c, f, f, triple, params});
    };
    if (s.pos == s.neg) {
      accept(1);  // f(infinity) = 1
      return;
    }
    if (zero_set.empty()) return;
    // c A - B = lambda prod (x - z)^m: each choice of m fixes c linearly.
    std::vector<unsigned> m(zero_set.size(), 1);
    for (;;) {
      unsigned sum = 0;
      for (unsigned e : m) sum += e;
      if (sum == D) {
        UniPoly P{1};
        for (std::size_t i = 0; i < m.size(); ++i) P = mul(P, linear_power(zero_set[i], m[i]));
        std::optional<Rational> c;
        bool ok = true;
        for (unsigned j = 0; j <= D && ok; ++j) {
          // lambda = c: (A_j - P_j) c = B_j; lambda = -1: A_j c = B_j - P_j.
          Rational lhs = s.pos > s.neg ? at(s.A, j) - P[j] : at(s.A, j);
          Rational rhs = s.pos > s.neg ? at(s.B, j) : at(s.B, j) - P[j];
          if (sgn(lhs) == 0) ok = sgn(rhs) == 0;
          else if (!c) c = rhs / lhs;
          else ok = *c == rhs / lhs;
        }
        if (ok && c && sgn(*c) != 0) accept(*c);
      }
      std::size_t i = 0;
      while (i < m.size() && m[i] == D) m[i++] = 1;
      if (i == m.size()) break;
      ++m[i];
    }
  });
  return out;
}

}  // namespace rook
