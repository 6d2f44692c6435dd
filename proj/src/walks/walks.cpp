#include "rook/walks/walks.hpp"

#include <numeric>
#include <stdexcept>

namespace rook {

DirectionSet DirectionSet::rook() { return {"rook", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, true}; }

DirectionSet DirectionSet::queen() {
  return {"queen",
          {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}},
          true};
}

void DirectionSet::validate() const {
  if (directions.empty()) throw std::invalid_argument("empty direction set");
  for (const auto& d : directions) {
    unsigned g = std::gcd(d[0], std::gcd(d[1], d[2]));
    if (g == 0) throw std::invalid_argument("zero step direction");
    if (repeat && g != 1) throw std::invalid_argument("step direction is not primitive");
  }
}

CountTable::CountTable(Step bound)
    : bound_(bound),
      v_(static_cast<std::size_t>(bound[0] + 1) * (bound[1] + 1) * (bound[2] + 1)) {}

CountTable count_paths(const DirectionSet& dirs, Step bound) {
  dirs.validate();
  CountTable r(bound);
  // acc[d](p) = r(p) + r(p - d) + r(p - 2d) + ..., the sum along the ray
  // through p in direction -d; then r(p) = sum_d acc[d](p - d).
  std::vector<CountTable> acc(dirs.directions.size(), CountTable(bound));
  for (unsigned i = 0; i <= bound[0]; ++i)
    for (unsigned j = 0; j <= bound[1]; ++j)
      for (unsigned k = 0; k <= bound[2]; ++k) {
        Integer& cell = r.at(i, j, k);
        if (i == 0 && j == 0 && k == 0) cell = 1;
        for (std::size_t d = 0; d < dirs.directions.size(); ++d) {
          const Step& s = dirs.directions[d];
          if (i < s[0] || j < s[1] || k < s[2]) continue;
          const CountTable& src = dirs.repeat ? acc[d] : r;
          cell += src.at(i - s[0], j - s[1], k - s[2]);
        }
        if (!dirs.repeat) continue;
        for (std::size_t d = 0; d < dirs.directions.size(); ++d) {
          const Step& s = dirs.directions[d];
          Integer& a = acc[d].at(i, j, k);
          a = cell;
          if (i >= s[0] && j >= s[1] && k >= s[2]) a += acc[d].at(i - s[0], j - s[1], k - s[2]);
        }
      }
  return r;
}

SeqTable diagonal_sequence(const DirectionSet& dirs, unsigned n_max) {
  CountTable r = count_paths(dirs, {n_max, n_max, n_max});
  SeqTable out{dirs.name, {}, "dp"};
  for (unsigned n = 0; n <= n_max; ++n) out.terms.push_back(r.at(n, n, n));
  return out;
}

Vars step_vars() { return Vars{"s", "t", "u"}; }

RatFun step_generating_function(const DirectionSet& dirs) {
  dirs.validate();
  Vars v = step_vars();
  RatFun sum(v);
  for (const auto& d : dirs.directions) {
    ZPoly m = ZPoly::monomial(v, mono::make({d[0], d[1], d[2], 0}), Integer(1));
    if (dirs.repeat) {
      sum += RatFun(m, ZPoly(v, 1) - m);
    } else {
      sum += RatFun(m);
    }
  }
  return (RatFun(v, 1) - sum).inverse();
}

Rational queens_equation_verbatim(const Rational& x) {
  Rational x2 = x * x, x3 = x2 * x;
  return 1 - 3 * x / (x - 1) - 3 * x2 / (1 - x2) - x3 / (1 - x3);
}

Rational queens_equation_normalized(const Rational& x) {
  Rational x2 = x * x, x3 = x2 * x;
  return 1 - 3 * x / (1 - x) - 3 * x2 / (1 - x2) - x3 / (1 - x3);
}

namespace {

// Scan (0,1) on a grid for the first sign change, then bisect.
bool bracket(Rational (*g)(const Rational&), Rational& lo, Rational& hi) {
  const int steps = 1000;
  Rational prev_x(1, steps);
  int prev = sgn(g(prev_x));
  for (int i = 2; i < steps; ++i) {
    Rational x(i, steps);
    int s = sgn(g(x));
    if (s == 0) {
      lo = hi = x;
      return true;
    }
    if (s != prev) {
      lo = prev_x;
      hi = x;
      return true;
    }
    prev = s;
    prev_x = x;
  }
  return false;
}

}  // namespace

QueensRootReport queens_dominant_root() {
  QueensRootReport rep;
  Rational lo, hi;
  auto g = &queens_equation_verbatim;
  rep.verbatim_has_root = bracket(g, lo, hi);
  rep.reading = "verbatim";
  if (!rep.verbatim_has_root) {
    g = &queens_equation_normalized;
    rep.reading = "sign-normalized";
    if (!bracket(g, lo, hi)) throw std::runtime_error("no sign change in (0,1)");
  }
  Rational width(1);
  mpq_div_2exp(width.get_mpq_t(), width.get_mpq_t(), 60);
  int slo = sgn(g(lo));
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    int s = sgn(g(mid));
    if (s == 0) {
      lo = hi = mid;
      break;
    }
    if (s == slo) lo = mid;
    else hi = mid;
  }
  rep.lo = lo;
  rep.hi = hi;
  Rational mid = (lo + hi) / 2;
  rep.c = to_decimal(mid, 15);
  rep.c_cubed = to_decimal(mid * mid * mid, 15);
  rep.residual = g(mid);
  return rep;
}

}  // namespace rook
