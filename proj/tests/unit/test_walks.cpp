#include "doctest.h"

#include <functional>

#include "rook/diagonal/diagonal.hpp"
#include "rook/walks/walks.hpp"

using namespace rook;

namespace {

// Naive enumeration: every step is a positive multiple of a direction.
Integer brute_force(const DirectionSet& dirs, Step target) {
  std::function<Integer(Step)> walk = [&](Step p) -> Integer {
    if (p == Step{0, 0, 0}) return 1;
    Integer total = 0;
    for (const auto& d : dirs.directions)
      for (unsigned m = 1;; ++m) {
        if (d[0] * m > p[0] || d[1] * m > p[1] || d[2] * m > p[2]) break;
        total += walk({p[0] - d[0] * m, p[1] - d[1] * m, p[2] - d[2] * m});
      }
    return total;
  };
  return walk(target);
}

std::vector<Integer> ints(std::initializer_list<const char*> xs) {
  std::vector<Integer> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("rook counts") {
  auto rook = DirectionSet::rook();
  auto r = count_paths(rook, {3, 3, 3});
  CHECK(r.at(0, 0, 0) == 1);
  CHECK(r.at(1, 1, 1) == 6);
  CHECK(r.at(1, 1, 0) == 2);
  for (unsigned i = 0; i <= 3; ++i)
    for (unsigned j = 0; j <= 3; ++j)
      for (unsigned k = 0; k <= 3; ++k) {
        CHECK(r.at(i, j, k) == brute_force(rook, {i, j, k}));
        CHECK(r.at(i, j, k) == r.at(k, i, j));
        CHECK(r.at(i, j, k) == r.at(j, i, k));
      }
}

TEST_CASE("queen counts agree with enumeration") {
  auto queen = DirectionSet::queen();
  auto r = count_paths(queen, {3, 2, 2});
  for (unsigned i = 0; i <= 3; ++i)
    for (unsigned j = 0; j <= 2; ++j)
      for (unsigned k = 0; k <= 2; ++k) CHECK(r.at(i, j, k) == brute_force(queen, {i, j, k}));
}

TEST_CASE("diagonal sequences") {
  CHECK(diagonal_sequence(DirectionSet::rook(), 8).terms ==
        ints({"1", "6", "222", "9918", "486924", "25267236", "1359631776", "75059524392",
              "4223303759148"}));
  CHECK(diagonal_sequence(DirectionSet::queen(), 7).terms ==
        ints({"1", "13", "638", "41476", "3015296", "232878412", "18691183682", "1540840801552"}));
  CHECK(diagonal_sequence(DirectionSet::rook(), 0).terms == ints({"1"}));
  auto a = diagonal_sequence(DirectionSet::rook(), 30).terms;
  for (std::size_t n = 0; n + 1 < a.size(); ++n) CHECK(a[n + 1] > a[n]);
}

TEST_CASE("step generating functions") {
  Vars v = step_vars();
  auto rook = step_generating_function(DirectionSet::rook());
  CHECK(rook == parse_ratfun("(1-s)*(1-t)*(1-u)/(1-2*(s+t+u)+3*(s*t+t*u+u*s)-4*s*t*u)", v));
  auto queen = step_generating_function(DirectionSet::queen());
  CHECK(queen == parse_ratfun("1/(1 - s/(1-s) - t/(1-t) - u/(1-u) - s*t/(1-s*t) - t*u/(1-t*u)"
                              " - u*s/(1-u*s) - s*t*u/(1-s*t*u))",
                              v));
  DirectionSet single{"single", {{1, 0, 0}}, true};
  CHECK(step_generating_function(single) == parse_ratfun("(1-s)/(1-2*s)", v));
}

TEST_CASE("expand diagonal") {
  Vars v = step_vars();
  auto rook = step_generating_function(DirectionSet::rook());
  CHECK(expand_diagonal(rook, 12).terms == diagonal_sequence(DirectionSet::rook(), 12).terms);
  auto queen = step_generating_function(DirectionSet::queen());
  CHECK(expand_diagonal(queen, 8).terms == diagonal_sequence(DirectionSet::queen(), 8).terms);
  auto multi = expand_diagonal(parse_ratfun("1/(1-s-t-u)", v), 6).terms;
  for (unsigned n = 0; n <= 6; ++n)
    CHECK(multi[n] == factorial(3 * n) / (factorial(n) * factorial(n) * factorial(n)));
  CHECK(expand_diagonal(RatFun(v, 1), 3).terms == ints({"1", "0", "0", "0"}));
  CHECK_THROWS(expand_diagonal(parse_ratfun("1/s", v), 3));
}

TEST_CASE("residue embedding") {
  Vars v = step_vars();
  Vars xst = xst_vars();
  auto F = residue_embedding(step_generating_function(DirectionSet::rook()));
  CHECK(F == parse_ratfun("(s-t)*(s-1)*(t-x)/(s*t*(-s*t+2*s^2*t+2*t^2+2*x*s-3*s*t^2-3*x*t-3*x*s^2+4*x*s*t))",
                          xst));
  CHECK(residue_embedding(RatFun(v, 1)) == parse_ratfun("1/(s*t)", xst));
  auto degs = divide_or_throw(F.den(), ZPoly::variable(xst, "s") * ZPoly::variable(xst, "t")).degrees();
  CHECK(degs[0] == 1);
  CHECK(degs[1] == 2);
  CHECK(degs[2] == 2);
}

TEST_CASE("queens root") {
  auto rep = queens_dominant_root();
  CHECK_FALSE(rep.verbatim_has_root);
  CHECK(rep.reading == "sign-normalized");
  CHECK(rep.c.substr(0, 6) == "0.2185");
  CHECK(rep.c_cubed.substr(0, 6) == "0.0104");
  CHECK(abs(rep.residual) < Rational(Integer(1), Integer("1000000000000")));
}
