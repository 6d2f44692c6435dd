#include "doctest.h"

#include <random>

#include "rook/ore/ore.hpp"
#include "rook/walks/walks.hpp"

using namespace rook;

namespace {

const Vars kX{"x"};

RatFun rf(const char* s, Vars v = kX) { return parse_ratfun(s, v); }
MPoly np(const char* s) { return parse_mpoly(s, RecOp::ring()); }

DiffOp dx(unsigned k = 1) { return DiffOp::d(kX, "x", k); }

DiffOp p2() {
  return DiffOp::from_terms(kX, {{mono::unit(0, 2), rf("x*(x-1)*(64*x-1)*(3*x-2)*(6*x+1)")},
                                 {mono::unit(0, 1), rf("4608*x^4-6372*x^3+813*x^2+514*x-4")},
                                 {0, rf("4*(576*x^3-801*x^2-108*x+74)")}});
}

DiffOp random_op(std::mt19937& gen, unsigned order, unsigned degree) {
  std::uniform_int_distribution<int> coef(-5, 5);
  DiffOp op(kX);
  for (unsigned k = 0; k <= order; ++k) {
    std::vector<MPoly::Term> terms;
    for (unsigned d = 0; d <= degree; ++d) terms.emplace_back(mono::unit(0, d), Rational(coef(gen)));
    op.add_term(mono::unit(0, k), RatFun(MPoly::from_terms(kX, terms)));
  }
  return op;
}

}  // namespace

TEST_CASE("operator products") {
  DiffOp x = DiffOp::scalar(rf("x"));
  CHECK(dx() * x == x * dx() + DiffOp::scalar(RatFun(kX, 1)));
  RecOp sigma = RecOp::shift(-1, np("1"));
  RecOp n = RecOp::shift(0, np("n"));
  CHECK(sigma * n == RecOp::shift(-1, np("n+1")));
  std::mt19937 gen(7);
  for (int trial = 0; trial < 5; ++trial) {
    DiffOp a = random_op(gen, 2, 2), b = random_op(gen, 3, 1), c = random_op(gen, 1, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).order(0) == a.order(0) + b.order(0));
  }
  RecOp r1 = RecOp::from_terms({{0, np("n^2+1")}, {1, np("3*n")}, {2, np("-2")}});
  RecOp r2 = RecOp::from_terms({{0, np("n")}, {-1, np("n^3-1")}});
  RecOp r3 = RecOp::from_terms({{3, np("5*n-1")}, {0, np("1")}});
  CHECK((r1 * r2) * r3 == r1 * (r2 * r3));
}

TEST_CASE("operator application") {
  CHECK(apply_diffop(dx(), rf("1/(1-x)")) == rf("1/(1-x)^2"));
  auto a = diagonal_sequence(DirectionSet::rook(), 39).terms;
  std::vector<Rational> c(a.begin(), a.end());
  PowerSeries g("x", c, 39);
  PowerSeries r = apply_diffop(p2() * dx(), g);
  CHECK(r.order() == 36);
  CHECK(r.is_zero());
  Vars xs{"x", "s"};
  CHECK_THROWS(apply_diffop(DiffOp::d(xs, "s"), rf("x")));
}

TEST_CASE("differential to recurrence") {
  CHECK(diffop_to_rec(dx() - DiffOp::scalar(RatFun(kX, 1))) ==
        RecOp::from_terms({{0, np("n")}, {1, np("-1")}}));
  CHECK(diffop_to_rec(DiffOp::scalar(rf("x")) * dx()) == RecOp::from_terms({{0, np("n")}}));
  RecOp r = diffop_to_rec(p2() * dx());
  CHECK(r == erickson_recurrence().normalized());
  CHECK(r.coeff(0) == np("2*n^3-2*n^2"));
  CHECK(r.coeff(4) == np("-1152*(n-3)*(n-4)^2"));
}

TEST_CASE("diffop_to_rec agrees with application on random data") {
  std::mt19937 gen(11);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 6; ++trial) {
    DiffOp L = random_op(gen, 2, 3);
    std::vector<Rational> u(20);
    for (auto& v : u) v = coef(gen);
    PowerSeries s("x", u, 19);
    PowerSeries Lu = apply_diffop(L, s);
    RecOp R = diffop_to_rec(L);
    // R is a scalar multiple of the raw translation shifted by min j.
    int jm = 0;
    for (const auto& [a, c] : L.terms())
      for (const auto& [m, v] : c.num().terms())
        jm = std::min(jm, static_cast<int>(mono::degree(m)) - static_cast<int>(mono::degree(a)));
    std::vector<Integer> ui;
    for (auto& v : u) ui.push_back(v.get_num());
    Rational ratio = 0;
    for (unsigned N = 0; N + 2 <= Lu.order(); ++N) {
      long n = static_cast<long>(N) - jm;
      if (n + 0 >= static_cast<long>(ui.size())) break;
      Rational rv = R.apply_at(ui, n);
      CHECK((sgn(rv) == 0) == (sgn(Lu[N]) == 0));
      if (sgn(Lu[N]) != 0) {
        if (sgn(ratio) == 0) ratio = rv / Lu[N];
        CHECK(rv == ratio * Lu[N]);
      }
    }
  }
}

TEST_CASE("unrolling") {
  SeqTable init{"rook", {1, 6, 222}, "dp"};
  auto out = rec_unroll(short_recurrence(), init, 3);
  CHECK(out.terms.back() == 9918);
  auto dp = diagonal_sequence(DirectionSet::rook(), 40);
  SeqTable four{"rook", {dp.terms.begin(), dp.terms.begin() + 4}, "dp"};
  CHECK(rec_unroll(erickson_recurrence(), four, 40).terms == dp.terms);
  CHECK(rec_unroll(short_recurrence(), init, 40).terms == dp.terms);
  // Leading coefficient 2n^2(n-1) vanishes at n = 1.
  SeqTable one{"rook", {1}, "dp"};
  CHECK_THROWS_AS(rec_unroll(RecOp::from_terms({{0, np("n-1")}, {1, np("1")}}), one, 3), UnrollError);
}

TEST_CASE("guessing") {
  auto dp = diagonal_sequence(DirectionSet::rook(), 40);
  SeqTable first25{"rook", {dp.terms.begin(), dp.terms.begin() + 25}, "dp"};
  auto found = guess_rec(first25, 3, 4);
  REQUIRE(found.size() == 1);
  CHECK(found[0] == short_recurrence().normalized());
  SeqTable init{"rook", {dp.terms.begin(), dp.terms.begin() + 3}, "dp"};
  CHECK(rec_unroll(found[0], init, 40).terms == dp.terms);
  std::vector<Integer> pow2;
  for (int i = 0; i < 10; ++i) pow2.push_back(Integer(1) << i);
  auto geo = guess_rec(SeqTable{"pow2", pow2, "dp"}, 1, 0);
  REQUIRE(geo.size() == 1);
  CHECK(geo[0] == RecOp::from_terms({{0, np("1")}, {1, np("-2")}}));
  SeqTable first20{"rook", {dp.terms.begin(), dp.terms.begin() + 20}, "dp"};
  for (unsigned d = 0; d <= 4; ++d) CHECK(guess_rec(first20, 2, d).empty());
  CHECK(guess_rec(dp, 2, 6).empty());
  CHECK_THROWS_AS(guess_rec(first20, 2, 6), InsufficientTerms);
}

TEST_CASE("recurrence reduction proof") {
  auto dp = diagonal_sequence(DirectionSet::rook(), 12).terms;
  RecOp cof = RecOp::from_terms({{0, np("1")}, {1, np("6")}});
  auto p = prove_rec_reduction(erickson_recurrence(), short_recurrence(), np("35*n-52"), cof, dp, 3, 10);
  CHECK(p.pass);
  CHECK(p.residual.is_zero());
  CHECK(p.initial_expression_value == 0);
  auto trivial = prove_rec_reduction(erickson_recurrence(), erickson_recurrence(), np("1"),
                                     RecOp::shift(0, np("1")), dp, 4, 10);
  CHECK(trivial.pass);
  RecOp bad = short_recurrence() + RecOp::shift(2, np("1"));
  auto f = prove_rec_reduction(erickson_recurrence(), bad, np("35*n-52"), cof, dp, 3, 10);
  CHECK_FALSE(f.pass);
  CHECK_FALSE(f.residual.is_zero());
}
