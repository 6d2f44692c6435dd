#pragma once

#include <map>
#include <string>
#include <vector>

#include "rook/exactmath/ratfun.hpp"
#include "rook/exactmath/seqtable.hpp"
#include "rook/exactmath/series.hpp"

namespace rook {

// Linear differential operator sum c_a * d^a with rational-function
// coefficients; the exponent vector a is packed like a monomial over the
// coefficient ring's variables.
class DiffOp {
 public:
  using Terms = std::map<mono::Key, RatFun>;

  DiffOp() : DiffOp(Vars()) {}
  explicit DiffOp(Vars vars) : vars_(vars) {}
  // The multiplication operator by c.
  static DiffOp scalar(const RatFun& c);
  // d/d(var).
  static DiffOp d(Vars vars, std::string_view var, unsigned power = 1);
  static DiffOp from_terms(Vars vars, const std::vector<std::pair<mono::Key, RatFun>>& terms);

  const Vars& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Coefficient of d^a (zero if absent).
  RatFun coeff(mono::Key a) const;
  unsigned order(std::size_t var) const;
  unsigned order(std::string_view var) const { return order(vars_.require(var)); }
  bool mentions(std::size_t var) const;

  DiffOp operator-() const;
  friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + (-b); }
  // Noncommutative product: d_v * p = p * d_v + dp/dv.
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  // Left multiplication by a rational function.
  friend DiffOp operator*(const RatFun& c, const DiffOp& a);
  friend bool operator==(const DiffOp& a, const DiffOp& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  void add_term(mono::Key a, const RatFun& c);
  DiffOp change_vars(Vars target) const;

  std::string to_string() const;

 private:
  Vars vars_;
  Terms terms_;
};

// Applies op to a rational function over a ring containing op's variables
// (matched by name).
RatFun apply_diffop(const DiffOp& op, const RatFun& f);
// Univariate op applied to a series in the same variable; the truncation
// order drops by the differential order.
PowerSeries apply_diffop(const DiffOp& op, const PowerSeries& f);

// Recurrence operator sum_j q_j(n) * S^{-j}, acting by u_n -> sum_j q_j(n) u_{n-j}.
// Negative j are forward shifts.
class RecOp {
 public:
  using Terms = std::map<int, MPoly>;

  RecOp() = default;
  static Vars ring();  // {n}
  static RecOp shift(int j, const MPoly& q);
  static RecOp from_terms(const std::vector<std::pair<int, MPoly>>& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  MPoly coeff(int j) const;
  int min_shift() const { return terms_.begin()->first; }
  int max_shift() const { return terms_.rbegin()->first; }
  unsigned degree() const;

  RecOp operator-() const;
  friend RecOp operator+(const RecOp& a, const RecOp& b);
  friend RecOp operator-(const RecOp& a, const RecOp& b) { return a + (-b); }
  // (q S^{-i})(p S^{-j}) = q(n) p(n-i) S^{-(i+j)}.
  friend RecOp operator*(const RecOp& a, const RecOp& b);
  friend RecOp operator*(const MPoly& c, const RecOp& a);
  friend bool operator==(const RecOp& a, const RecOp& b) { return a.terms_ == b.terms_; }

  void add_term(int j, const MPoly& q);
  // Value sum_j q_j(n) u_{n-j}, with u_m = 0 for m < 0.
  Rational apply_at(const std::vector<Integer>& u, long n) const;
  // Integer coefficients, content 1, q_{min}'s leading coefficient positive,
  // shifts starting at 0.
  RecOp normalized() const;

  std::string to_string() const;

 private:
  Terms terms_;
};

RecOp diffop_to_rec(const DiffOp& op);

struct UnrollError : std::runtime_error {
  long index;
  UnrollError(const std::string& what, long n) : std::runtime_error(what), index(n) {}
};

// Extends initial.terms to indices 0..n_max. Throws UnrollError at an index
// where the leading coefficient vanishes or the value is not an integer.
SeqTable rec_unroll(const RecOp& rec, const SeqTable& initial, unsigned n_max);

struct InsufficientTerms : std::invalid_argument {
  std::size_t required;
  InsufficientTerms(const std::string& what, std::size_t need)
      : std::invalid_argument(what), required(need) {}
};

// Basis of recurrences of order <= max_order and coefficient degree <=
// max_degree annihilating seq at every index n >= max_order. Throws
// InsufficientTerms when fewer than unknowns + oversampling equations exist.
std::vector<RecOp> guess_rec(const SeqTable& seq, unsigned max_order, unsigned max_degree,
                             unsigned oversampling = 2);

struct ReductionProof {
  bool pass = false;
  RecOp residual;                      // cofactor*small - multiplier*big
  std::vector<long> base_indices;      // indices n where small(a)_n was evaluated
  std::vector<Rational> base_values;   // must all be 0
  std::string initial_expression;        // the stated initial condition, verbatim
  Integer initial_expression_value;
  std::string detail;
};

// Checks cofactor*small == multiplier*big exactly and that small annihilates
// the terms at the listed base indices.
ReductionProof prove_rec_reduction(const RecOp& big, const RecOp& small, const MPoly& multiplier,
                                   const RecOp& cofactor, const std::vector<Integer>& terms,
                                   long first_base, long last_base);

// The reference recurrences: the fourth-order one from the telescoper and the
// shorter third-order one.
RecOp erickson_recurrence();
RecOp short_recurrence();

}  // namespace rook
