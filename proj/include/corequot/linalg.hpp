#pragma once

#include <vector>

#include "corequot/numbers.hpp"

namespace corequot {

class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int r, int c) { return data_[index(r, c)]; }
  const Rational& operator()(int r, int c) const { return data_[index(r, c)]; }

 private:
  size_t index(int r, int c) const {
    return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// Exact rank by fraction-free (Bareiss) elimination over the integers after
// clearing row denominators; pivots are the first nonzero entries in scan
// order (columns left to right, rows top to bottom).
int exact_rank(const RationalMatrix& m);

enum class SolveStatus { unique_solution, inconsistent, underdetermined };

struct ExactSolve {
  SolveStatus status = SolveStatus::inconsistent;
  int rank = 0;
  std::vector<Rational> solution;  // filled for unique_solution
};

// Exact solve of a·x = rhs with the same elimination; overdetermined systems
// are fine as long as they are consistent.
ExactSolve solve_exact(const RationalMatrix& a, const std::vector<Rational>& rhs);

}  // namespace corequot
