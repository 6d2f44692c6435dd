#include "rook/exactmath/matrix.hpp"

#include <stdexcept>

namespace rook {

std::vector<RatFun> ExactMatrix::apply(const std::vector<RatFun>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<RatFun> out(rows_, RatFun(vars_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

namespace {

bool smaller(const ZPoly& a, const ZPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  return mpz_sizeinbase(a.leading_coeff().get_mpz_t(), 2) <
         mpz_sizeinbase(b.leading_coeff().get_mpz_t(), 2);
}

}  // namespace

std::vector<std::vector<ZPoly>> polynomial_nullspace(std::vector<std::vector<ZPoly>> m,
                                                     std::size_t cols, Vars vars) {
  std::size_t rows = m.size();
  for (auto& r : m)
    if (r.size() != cols) throw std::invalid_argument("ragged matrix");
  // Drop zero rows up front.
  std::erase_if(m, [](const std::vector<ZPoly>& r) {
    for (const auto& e : r)
      if (!e.is_zero()) return false;
    return true;
  });
  rows = m.size();
  std::vector<std::size_t> pivot_cols;
  ZPoly prev(vars, 1);
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols && k < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = k; i < rows; ++i)
      if (!m[i][c].is_zero() && (best == rows || smaller(m[i][c], m[best][c]))) best = i;
    if (best == rows) continue;
    std::swap(m[k], m[best]);
    const ZPoly p = m[k][c];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == k) continue;
      ZPoly f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == c) continue;
        ZPoly e = p * m[i][j];
        if (!f.is_zero() && !m[k][j].is_zero()) e -= f * m[k][j];
        m[i][j] = prev.is_one() || e.is_zero() ? std::move(e) : divide_or_throw(e, prev);
      }
      m[i][c] = ZPoly(vars);
    }
    prev = p;
    pivot_cols.push_back(c);
    ++k;
  }
  // After elimination all pivots equal prev.
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivot_cols) is_pivot[c] = 1;
  std::vector<std::vector<ZPoly>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<ZPoly> v(cols, ZPoly(vars));
    v[f] = prev;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m[i][f];
    ZPoly g(vars);
    for (const auto& e : v) {
      if (e.is_zero()) continue;
      g = gcd_with_content(g, e);
      if (g.is_one()) break;
    }
    bool negate = false;
    for (const auto& e : v)
      if (!e.is_zero()) {
        negate = sgn(e.leading_coeff()) < 0;
        break;
      }
    if (negate) g = -g;
    for (auto& e : v)
      if (!e.is_zero()) e = divide_or_throw(e, g);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<RatFun>> linear_nullspace(const ExactMatrix& a) {
  Vars vars = a.vars();
  std::vector<std::vector<ZPoly>> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    ZPoly l(vars, 1);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const ZPoly& d = a(i, j).den();
      if (d.is_constant()) {
        Integer c = d.constant_term(), lc = content(l), g;
        mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), lc.get_mpz_t());
        if (c != g) l = l * Integer(c / g);
      } else {
        ZPoly g = gcd_with_content(l, d);
        l = l * divide_or_throw(d, g);
      }
    }
    std::vector<ZPoly> row;
    for (std::size_t j = 0; j < a.cols(); ++j)
      row.push_back(a(i, j).num() * divide_or_throw(l, a(i, j).den()));
    rows.push_back(std::move(row));
  }
  std::vector<std::vector<RatFun>> out;
  for (auto& v : polynomial_nullspace(std::move(rows), a.cols(), vars)) {
    std::vector<RatFun> w;
    for (auto& e : v) w.emplace_back(e);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace rook
