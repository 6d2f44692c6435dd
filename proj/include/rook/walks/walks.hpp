#pragma once

#include <array>
#include <string>
#include <vector>

#include "rook/exactmath/ratfun.hpp"
#include "rook/exactmath/seqtable.hpp"

namespace rook {

using Step = std::array<unsigned, 3>;

// Primitive step directions in N^3; with repeat set, every positive multiple
// of a direction is an allowed step.
struct DirectionSet {
  std::string name;
  std::vector<Step> directions;
  bool repeat = true;

  static DirectionSet rook();
  static DirectionSet queen();
  // Throws std::invalid_argument on a zero or non-primitive vector.
  void validate() const;
};

// Counts r_{i,j,k} of walks from the origin for 0 <= (i,j,k) <= bound.
class CountTable {
 public:
  CountTable(Step bound);
  const Step& bound() const { return bound_; }
  const Integer& at(unsigned i, unsigned j, unsigned k) const { return v_[index(i, j, k)]; }
  Integer& at(unsigned i, unsigned j, unsigned k) { return v_[index(i, j, k)]; }

 private:
  std::size_t index(unsigned i, unsigned j, unsigned k) const {
    return (static_cast<std::size_t>(i) * (bound_[1] + 1) + j) * (bound_[2] + 1) + k;
  }
  Step bound_;
  std::vector<Integer> v_;
};

CountTable count_paths(const DirectionSet& dirs, Step bound);
SeqTable diagonal_sequence(const DirectionSet& dirs, unsigned n_max);

// The ring {s, t, u} of step generating functions.
Vars step_vars();
// 1/(1 - sum m/(1 - m)) over direction monomials m (or 1/(1 - sum m) for a
// finite step set), normalized.
RatFun step_generating_function(const DirectionSet& dirs);

struct QueensRootReport {
  bool verbatim_has_root = false;  // sign change of the equation as stated, on (0,1)
  std::string reading;             // "verbatim" or "sign-normalized"
  Rational lo, hi;                 // bracket of width <= 2^-60
  std::string c;                   // decimal digits
  std::string c_cubed;
  Rational residual;               // equation at the midpoint
};

// Smallest positive root of 1 - 3x/(x-1) - 3x^2/(1-x^2) - x^3/(1-x^3); when
// that equation has no root in (0,1), the root of the reading with 3x/(1-x) is
// reported as well.
QueensRootReport queens_dominant_root();
// The two readings evaluated exactly.
Rational queens_equation_verbatim(const Rational& x);
Rational queens_equation_normalized(const Rational& x);

}  // namespace rook
