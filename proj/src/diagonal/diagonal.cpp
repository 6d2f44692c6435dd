#include "rook/diagonal/diagonal.hpp"

#include <stdexcept>

namespace rook {

Vars xst_vars() { return Vars{"x", "s", "t"}; }

SeqTable expand_diagonal(const RatFun& f, unsigned n_max) {
  if (f.vars().size() != 3) throw std::invalid_argument("expected a trivariate rational function");
  const ZPoly& den = f.den();
  Integer d0 = den.constant_term();
  if (d0 == 0) throw std::domain_error("denominator vanishes at the origin");
  const std::size_t n = n_max + 1;
  auto idx = [n](unsigned i, unsigned j, unsigned k) { return (i * n + j) * n + k; };
  // c * den = num, solved cell by cell in increasing order of i, j, k.
  std::vector<Rational> c(n * n * n);
  for (const auto& [m, v] : f.num().terms()) {
    unsigned i = mono::exponent(m, 0), j = mono::exponent(m, 1), k = mono::exponent(m, 2);
    if (i <= n_max && j <= n_max && k <= n_max) c[idx(i, j, k)] = Rational(v);
  }
  std::vector<std::pair<std::array<unsigned, 3>, Integer>> rest;
  for (const auto& [m, v] : den.terms())
    if (m != 0) rest.push_back({{mono::exponent(m, 0), mono::exponent(m, 1), mono::exponent(m, 2)}, v});
  Rational inv(Integer(1), d0);
  inv.canonicalize();
  for (unsigned i = 0; i <= n_max; ++i)
    for (unsigned j = 0; j <= n_max; ++j)
      for (unsigned k = 0; k <= n_max; ++k) {
        Rational& cell = c[idx(i, j, k)];
        for (const auto& [e, v] : rest)
          if (e[0] <= i && e[1] <= j && e[2] <= k) cell -= v * c[idx(i - e[0], j - e[1], k - e[2])];
        cell *= inv;
      }
  SeqTable out{"diagonal", {}, "series"};
  for (unsigned i = 0; i <= n_max; ++i) {
    const Rational& v = c[idx(i, i, i)];
    if (v.get_den() != 1) throw std::domain_error("diagonal coefficient is not an integer");
    out.terms.push_back(v.get_num());
  }
  return out;
}

RatFun residue_embedding(const RatFun& f) {
  if (f.vars().size() != 3) throw std::invalid_argument("expected a rational function in (s,t,u)");
  const auto& names = f.vars().names();
  Vars wide{"x", names[0], names[1], names[2]};
  RatFun g = f.change_vars(wide);
  RatFun x = RatFun::variable(wide, "x");
  RatFun s = RatFun::variable(wide, names[0]);
  RatFun t = RatFun::variable(wide, names[1]);
  // Substitute t -> t/s first so the t introduced by u -> x/t is untouched.
  g = g.substitute(wide.require(names[1]), t / s);
  g = g.substitute(wide.require(names[2]), x / t);
  g = g / (s * t);
  Vars target{"x", names[0], names[1]};
  return g.change_vars(target);
}

}  // namespace rook
