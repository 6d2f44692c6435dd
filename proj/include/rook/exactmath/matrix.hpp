#pragma once

#include <vector>

#include "rook/exactmath/ratfun.hpp"

namespace rook {

// Dense rectangular matrix of rational functions.
class ExactMatrix {
 public:
  ExactMatrix(Vars vars, std::size_t rows, std::size_t cols)
      : vars_(vars), rows_(rows), cols_(cols), a_(rows * cols, RatFun(vars)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Vars& vars() const { return vars_; }
  RatFun& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const RatFun& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<RatFun> apply(const std::vector<RatFun>& v) const;

 private:
  Vars vars_;
  std::size_t rows_, cols_;
  std::vector<RatFun> a_;
};

// Right kernel of a polynomial matrix by fraction-free Gauss-Jordan
// elimination. Each basis vector has polynomial entries with trivial common
// content and a positive leading coefficient in its first nonzero entry.
std::vector<std::vector<ZPoly>> polynomial_nullspace(std::vector<std::vector<ZPoly>> rows,
                                                     std::size_t cols, Vars vars);

// Right kernel over the fraction field; rows are cleared of denominators first.
std::vector<std::vector<RatFun>> linear_nullspace(const ExactMatrix& m);

}  // namespace rook
