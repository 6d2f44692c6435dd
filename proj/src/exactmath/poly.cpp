#include "rook/exactmath/poly.hpp"

#include <unordered_map>

namespace rook {
namespace detail {
namespace {

using ZTerms = std::vector<std::pair<mono::Key, Integer>>;

// Dense accumulation into the bounding box of the product when it is small
// relative to the number of term pairs; otherwise hash the monomials.
ZTerms multiply_dense(const ZTerms& a, const ZTerms& b, const mono::Exponents& dims,
                      std::size_t box) {
  std::array<std::size_t, 4> stride{};
  std::size_t s = 1;
  for (std::size_t i = 0; i < 4; ++i) {
    stride[i] = s;
    s *= dims[i];
  }
  auto index = [&](mono::Key m) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < 4; ++i) idx += mono::exponent(m, i) * stride[i];
    return idx;
  };
  std::vector<mpz_class> acc(box);
  std::vector<std::size_t> ia(a.size()), ib(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) ia[i] = index(a[i].first);
  for (std::size_t j = 0; j < b.size(); ++j) ib[j] = index(b[j].first);
  std::vector<char> touched(box, 0);
  std::vector<std::pair<std::size_t, mono::Key>> cells;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t k = ia[i] + ib[j];
      if (!touched[k]) {
        touched[k] = 1;
        cells.emplace_back(k, a[i].first + b[j].first);
      }
      mpz_addmul(acc[k].get_mpz_t(), a[i].second.get_mpz_t(), b[j].second.get_mpz_t());
    }
  }
  std::sort(cells.begin(), cells.end(),
            [](const auto& x, const auto& y) { return x.second > y.second; });
  ZTerms out;
  out.reserve(cells.size());
  for (const auto& [k, m] : cells)
    if (sgn(acc[k]) != 0) out.emplace_back(m, std::move(acc[k]));
  return out;
}

ZTerms multiply_hashed(const ZTerms& a, const ZTerms& b) {
  std::unordered_map<mono::Key, mpz_class> acc;
  acc.reserve(a.size() * b.size() / 2 + 16);
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      auto& slot = acc[ma + mb];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  ZTerms out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) out.emplace_back(m, std::move(c));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  return out;
}

void append_monomial(std::string& out, const Vars& vars, mono::Key m) {
  bool first = true;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    unsigned e = mono::exponent(m, i);
    if (e == 0) continue;
    if (!first) out += '*';
    first = false;
    out += vars.name(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
}

template <class C>
std::string format_terms(const Vars& vars, const std::vector<std::pair<mono::Key, C>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    bool negative = sgn(c) < 0;
    C mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m == 0) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      append_monomial(out, vars, m);
    }
  }
  return out;
}

}  // namespace

ZTerms multiply_terms(const ZTerms& a, const ZTerms& b) {
  mono::Exponents da{0, 0, 0, 0}, db{0, 0, 0, 0};
  for (const auto& t : a)
    for (std::size_t i = 0; i < 4; ++i) da[i] = std::max(da[i], mono::exponent(t.first, i));
  for (const auto& t : b)
    for (std::size_t i = 0; i < 4; ++i) db[i] = std::max(db[i], mono::exponent(t.first, i));
  mono::Exponents dims{};
  double box = 1;
  for (std::size_t i = 0; i < 4; ++i) {
    if (da[i] + db[i] > mono::kMaxExponent) throw std::overflow_error("monomial exponent overflow");
    dims[i] = da[i] + db[i] + 1;
    box *= dims[i];
  }
  double pairs = static_cast<double>(a.size()) * static_cast<double>(b.size());
  if (box <= double(1 << 22) && box <= 32 * pairs + 4096)
    return multiply_dense(a, b, dims, static_cast<std::size_t>(box));
  return multiply_hashed(a, b);
}

std::string format_terms_integer(const Vars& vars, const ZTerms& t) { return format_terms(vars, t); }

std::string format_terms_rational(const Vars& vars,
                                  const std::vector<std::pair<mono::Key, Rational>>& t) {
  return format_terms(vars, t);
}

}  // namespace detail

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly divide_exact_integer(const ZPoly& p, const Integer& c) {
  if (c == 1) return p;
  std::vector<ZPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [m, v] : p.terms()) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    out.emplace_back(m, std::move(q));
  }
  return ZPoly::from_sorted(p.vars(), std::move(out));
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.is_zero()) return p;
  return divide_exact_integer(p, content(p));
}

ZPoly clear_denominators(const MPoly& p, Integer* den) {
  Integer l = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<ZPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    out.emplace_back(m, q * c.get_num());
  }
  if (den) *den = l;
  return ZPoly::from_sorted(p.vars(), std::move(out));
}

MPoly to_rational(const ZPoly& p) {
  std::vector<MPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) out.emplace_back(m, Rational(c));
  return MPoly::from_sorted(p.vars(), std::move(out));
}

ZPoly to_integer(const MPoly& p) {
  std::vector<ZPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    if (c.get_den() != 1) throw std::domain_error("polynomial has non-integral coefficient");
    out.emplace_back(m, c.get_num());
  }
  return ZPoly::from_sorted(p.vars(), std::move(out));
}

}  // namespace rook
