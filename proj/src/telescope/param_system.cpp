#include <map>
#include <stdexcept>

#include "rook/telescope/telescope.hpp"

namespace rook {
namespace {

using u64 = std::uint64_t;
constexpr u64 kPrime = 2305843009213693951ull;  // 2^61 - 1

u64 mulmod(u64 a, u64 b) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % kPrime); }
u64 addmod(u64 a, u64 b) {
  u64 r = a + b;
  return r >= kPrime ? r - kPrime : r;
}
u64 powmod(u64 a, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}
u64 invmod(u64 a) { return powmod(a, kPrime - 2); }

u64 reduce(const Integer& c) {
  return mpz_fdiv_ui(c.get_mpz_t(), kPrime);
}

u64 eval_mod(const ZPoly& p, const std::array<u64, 4>& pt) {
  u64 acc = 0;
  for (const auto& [m, c] : p.terms()) {
    u64 term = reduce(c);
    for (std::size_t i = 0; i < 4; ++i)
      if (unsigned e = mono::exponent(m, i)) term = mulmod(term, powmod(pt[i], e));
    acc = addmod(acc, term);
  }
  return acc;
}

// Indices of a maximal set of rows independent modulo p; independence there
// implies independence over the fraction field.
std::vector<std::size_t> independent_rows(const std::vector<std::vector<ZPoly>>& m,
                                          std::size_t cols, const std::array<u64, 4>& pt) {
  std::vector<std::vector<u64>> basis;  // reduced rows
  std::vector<std::size_t> pivots, chosen;
  for (std::size_t i = 0; i < m.size() && chosen.size() < cols; ++i) {
    std::vector<u64> r(cols);
    for (std::size_t j = 0; j < cols; ++j) r[j] = m[i][j].is_zero() ? 0 : eval_mod(m[i][j], pt);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      u64 f = r[pivots[b]];
      if (!f) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (basis[b][j]) r[j] = addmod(r[j], kPrime - mulmod(f, basis[b][j]));
    }
    std::size_t p = 0;
    while (p < cols && r[p] == 0) ++p;
    if (p == cols) continue;
    u64 inv = invmod(r[p]);
    for (auto& e : r) e = mulmod(e, inv);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      u64 f = basis[b][p];
      if (!f) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (r[j]) basis[b][j] = addmod(basis[b][j], kPrime - mulmod(f, r[j]));
    }
    basis.push_back(std::move(r));
    pivots.push_back(p);
    chosen.push_back(i);
  }
  return chosen;
}

ZPoly lcm(const ZPoly& a, const ZPoly& b) {
  if (b.is_constant()) return a;
  ZPoly g = gcd(a, b);
  return a * divide_or_throw(b, g);
}

// c * M as a polynomial, where den(c) divides M.
ZPoly scaled(const RatFun& c, const ZPoly& M) {
  if (c.is_zero()) return ZPoly(M.vars());
  return c.num() * divide_or_throw(M, c.den());
}

bool in_kernel(const std::vector<std::vector<ZPoly>>& m, const std::vector<ZPoly>& v) {
  for (const auto& row : m) {
    ZPoly acc(v.front().vars());
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero() && !v[j].is_zero()) acc += row[j] * v[j];
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace

ParamSystemResult solve_parametrized_system(const ExactMatrix& A, const ExactMatrix& B,
                                            const ZPoly& den, unsigned bound,
                                            std::string_view var_name) {
  std::size_t n = A.rows();
  if (n == 0 || A.cols() != n) throw std::invalid_argument("A must be square");
  if (B.rows() != n) throw std::invalid_argument("B must have as many rows as A");
  if (den.is_zero()) throw std::invalid_argument("zero ansatz denominator");
  Vars vars = A.vars();
  if (B.vars() != vars || den.vars() != vars) throw std::invalid_argument("ring mismatch");
  std::size_t v = vars.require(var_name);
  std::size_t d = B.cols();

  // Unknowns: c_{l,k} (l < n, k <= bound) then e_j.
  std::size_t nc = n * (bound + 1);
  std::size_t cols = nc + d;
  ZPoly dv = den.derivative(v);
  ZPoly den2 = den * den;
  std::vector<std::vector<ZPoly>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    ZPoly M(vars, 1);
    for (std::size_t l = 0; l < n; ++l) M = lcm(M, A(i, l).den());
    for (std::size_t j = 0; j < d; ++j) M = lcm(M, B(i, j).den());
    // Equation i times den^2 M: M (z_i' den - z_i den') + sum_l A_il M den z_l - sum_j B_ij M den^2 e_j.
    std::vector<ZPoly> col(cols, ZPoly(vars));
    ZPoly Mden = M * den, Mdv = M * dv;
    for (std::size_t l = 0; l < n; ++l) {
      ZPoly amd = scaled(A(i, l), M) * den;
      for (unsigned k = 0; k <= bound; ++k) {
        ZPoly e = amd.shifted(mono::unit(v, k));
        if (l == i) {
          if (k > 0) e += Mden.shifted(mono::unit(v, k - 1), Integer(k));
          e -= Mdv.shifted(mono::unit(v, k));
        }
        col[l * (bound + 1) + k] = std::move(e);
      }
    }
    for (std::size_t j = 0; j < d; ++j) col[nc + j] = -(scaled(B(i, j), M) * den2);
    // Split by powers of v.
    std::map<unsigned, std::vector<ZPoly>> by_power;
    for (std::size_t c = 0; c < cols; ++c) {
      auto cs = col[c].coefficients_in(v);
      for (unsigned m = 0; m < cs.size(); ++m) {
        if (cs[m].is_zero()) continue;
        auto [it, fresh] = by_power.try_emplace(m, cols, ZPoly(vars));
        it->second[c] = std::move(cs[m]);
      }
    }
    for (auto& [m, r] : by_power) rows.push_back(std::move(r));
  }

  ParamSystemResult out;
  out.unknowns = cols;
  out.equations = rows.size();
  std::array<u64, 4> pt{1000003, 1000033, 1000037, 1000039};
  auto sel = independent_rows(rows, cols, pt);
  if (sel.size() == cols) {
    out.filtered = true;
    return out;
  }
  std::vector<std::vector<ZPoly>> sub;
  for (auto i : sel) sub.push_back(rows[i]);
  auto basis = polynomial_nullspace(sub, cols, vars);
  bool ok = true;
  for (const auto& b : basis) ok = ok && in_kernel(rows, b);
  if (!ok) basis = polynomial_nullspace(rows, cols, vars);

  for (const auto& b : basis) {
    ParamSolution s;
    for (std::size_t l = 0; l < n; ++l) {
      std::vector<ZPoly> cs(b.begin() + static_cast<long>(l * (bound + 1)),
                            b.begin() + static_cast<long>((l + 1) * (bound + 1)));
      s.y.emplace_back(ZPoly::from_coefficients(vars, v, cs), den);
    }
    for (std::size_t j = 0; j < d; ++j) s.e.emplace_back(b[nc + j]);
    out.basis.push_back(std::move(s));
  }
  return out;
}

}  // namespace rook
