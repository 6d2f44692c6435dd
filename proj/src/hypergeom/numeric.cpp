#include <stdexcept>

#include "rook/hypergeom/hypergeom.hpp"

namespace rook {
namespace {

Integer pow10(unsigned d) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, d);
  return r;
}

Rational abs_q(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

// arctan(1/m) to within 10^-digits.
Rational arctan_inverse(unsigned m, unsigned digits) {
  Rational sum = 0, eps(Integer(1), pow10(digits + 2));
  Integer mpow = m, m2 = Integer(m) * m;
  for (unsigned k = 0;; ++k) {
    Rational term(Integer(1), mpow * (2 * k + 1));
    term.canonicalize();
    if (term < eps) break;
    sum += (k % 2 == 0) ? term : Rational(-term);
    mpow *= m2;
  }
  return sum;
}

}  // namespace

Rational pi_approx(unsigned digits) {
  // Machin: pi = 16 arctan(1/5) - 4 arctan(1/239).
  return 16 * arctan_inverse(5, digits + 2) - 4 * arctan_inverse(239, digits + 2);
}

Rational sqrt_approx(unsigned n, unsigned digits) {
  Integer s = Integer(n) * pow10(2 * digits);
  mpz_sqrt(s.get_mpz_t(), s.get_mpz_t());
  Rational r(s, pow10(digits));
  r.canonicalize();
  return r;
}

std::string decimal(const Rational& x, unsigned digits) {
  Rational y = abs_q(x) * Rational(pow10(digits)) + Rational(1, 2);
  Integer n = y.get_num() / y.get_den();
  std::string s = n.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out = (sgn(x) < 0 ? "-" : "") + s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  return out;
}

Rational f21_at_one(const HypergeomSpec& spec, unsigned digits) {
  Rational gap = spec.c - spec.a - spec.b;
  if (gap.get_den() != 1 || sgn(gap) <= 0)
    throw std::domain_error("2F1 at 1 needs a positive integer c - a - b");
  if (spec.c.get_den() == 1 && sgn(spec.c) <= 0) throw std::domain_error("2F1 parameter c is a pole");
  const Integer an = spec.a.get_num(), ad = spec.a.get_den(), bn = spec.b.get_num(), bd = spec.b.get_den(),
                cn = spec.c.get_num(), cd = spec.c.get_den();
  // The sum so far is s / den and the current term p / den.
  Integer p = 1, s = 1, den = 1;
  unsigned n = 0, N = 64;
  Rational eps(Integer(1), pow10(digits + 2));
  std::vector<std::vector<Rational>> R;
  for (unsigned level = 0; level < 16; ++level, N *= 2) {
    for (; n < N; ++n) {
      Integer up = (an + n * ad) * (bn + n * bd) * cd;
      Integer down = (cn + n * cd) * (n + 1) * ad * bd;
      p *= up;
      s *= down;
      den *= down;
      s += p;
    }
    Rational partial(s, den);
    partial.canonicalize();
    // Error expansion in powers of 1/N with N doubling per level.
    std::vector<Rational> row{partial};
    Integer two = 1;
    for (std::size_t m = 1; m <= level; ++m) {
      two *= 2;
      row.push_back((Rational(two) * row[m - 1] - R[level - 1][m - 1]) / Rational(two - 1));
    }
    R.push_back(std::move(row));
    if (level >= 3 && abs_q(R[level].back() - R[level - 1].back()) < eps) return R[level].back();
  }
  throw std::runtime_error("2F1 at 1 did not converge");
}

AsymptoticsReport asymptotics_check(unsigned n_probe, double tolerance) {
  if (n_probe < 100) throw std::invalid_argument("asymptotics needs n_probe >= 100");
  AsymptoticsReport r;
  const unsigned kDigits = 40;
  Rational pi = pi_approx(kDigits), root3 = sqrt_approx(3, kDigits);

  Rational F = f21_at_one({Rational(1, 3), Rational(2, 3), 2}, 20);
  Rational gauss = 9 * root3 / (4 * pi);
  Rational err = abs_q(F - gauss) / gauss;
  r.gauss_value = decimal(F, 15);
  r.gauss = {"gauss-value", err < Rational(Integer(1), pow10(10)), "", -1};
  r.gauss.detail = "2F1(1/3,2/3;2;1) = " + r.gauss_value + ", 9 sqrt(3)/(4 pi) = " + decimal(gauss, 15);

  SeqTable init{"rook", {1, 6, 222}, "recurrence"};
  auto a = rec_unroll(short_recurrence(), init, n_probe + 1).terms;
  Integer p64;
  mpz_ui_pow_ui(p64.get_mpz_t(), 64, n_probe);
  Rational scaled(a[n_probe] * n_probe, p64);
  scaled.canonicalize();
  Rational K = 9 * root3 / (40 * pi);
  Rational rel = abs_q(scaled - K) / K;
  r.constant_value = decimal(K, 15);
  r.scaled_value = decimal(scaled, 15);
  r.growth = {"growth-constant", rel < Rational(tolerance), "", static_cast<long>(n_probe)};
  r.growth.detail = "a_n n / 64^n = " + r.scaled_value + ", 9 sqrt(3)/(40 pi) = " + r.constant_value +
                    ", relative error " + decimal(rel, 8);

  Rational ratio(a[n_probe + 1], a[n_probe]);
  ratio.canonicalize();
  r.ratio = {"growth-ratio", abs_q(ratio / 64 - 1) < Rational(1, 100), "", static_cast<long>(n_probe)};
  r.ratio.detail = "a_(n+1)/a_n = " + decimal(ratio, 8);
  return r;
}

}  // namespace rook
