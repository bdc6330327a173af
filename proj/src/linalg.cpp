#include "corequot/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace corequot {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be non-negative");
  data_.resize(static_cast<size_t>(rows) * static_cast<size_t>(cols));
}

namespace {

struct Echelon {
  std::vector<std::vector<Integer>> rows;  // coefficient columns, then extras
  std::vector<int> pivot_cols;
  int rank = 0;
};

// Rows are scaled to integers (LCM of denominators), then reduced by
// one-step fraction-free elimination. Only the first `coef_cols` columns are
// eligible for pivots; trailing columns ride along (right-hand sides).
Echelon eliminate(std::vector<std::vector<Integer>> rows, int coef_cols) {
  Echelon e;
  const int nrows = static_cast<int>(rows.size());
  const int ncols = nrows == 0 ? 0 : static_cast<int>(rows[0].size());
  Integer previous_pivot = 1;
  int pivot_row = 0;
  for (int col = 0; col < coef_cols && pivot_row < nrows; ++col) {
    int found = -1;
    for (int r = pivot_row; r < nrows; ++r) {
      if (rows[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    std::swap(rows[static_cast<size_t>(pivot_row)], rows[static_cast<size_t>(found)]);
    const Integer pivot = rows[static_cast<size_t>(pivot_row)][static_cast<size_t>(col)];
    for (int r = pivot_row + 1; r < nrows; ++r) {
      auto& target = rows[static_cast<size_t>(r)];
      const auto& source = rows[static_cast<size_t>(pivot_row)];
      const Integer factor = target[static_cast<size_t>(col)];
      for (int c = col + 1; c < ncols; ++c) {
        target[static_cast<size_t>(c)] =
            (pivot * target[static_cast<size_t>(c)] - factor * source[static_cast<size_t>(c)]) /
            previous_pivot;
      }
      target[static_cast<size_t>(col)] = 0;
    }
    previous_pivot = pivot;
    e.pivot_cols.push_back(col);
    ++pivot_row;
  }
  e.rows = std::move(rows);
  e.rank = pivot_row;
  return e;
}

std::vector<std::vector<Integer>> scale_to_integers(const RationalMatrix& a,
                                                    const std::vector<Rational>* rhs) {
  const int extra = rhs ? 1 : 0;
  std::vector<std::vector<Integer>> rows(static_cast<size_t>(a.rows()));
  for (int r = 0; r < a.rows(); ++r) {
    Integer scale = 1;
    for (int c = 0; c < a.cols(); ++c) scale = lcm(scale, a(r, c).get_den());
    if (rhs) scale = lcm(scale, (*rhs)[static_cast<size_t>(r)].get_den());
    auto& row = rows[static_cast<size_t>(r)];
    row.resize(static_cast<size_t>(a.cols() + extra));
    for (int c = 0; c < a.cols(); ++c) {
      row[static_cast<size_t>(c)] = a(r, c).get_num() * (scale / a(r, c).get_den());
    }
    if (rhs) {
      const Rational& v = (*rhs)[static_cast<size_t>(r)];
      row[static_cast<size_t>(a.cols())] = v.get_num() * (scale / v.get_den());
    }
  }
  return rows;
}

}  // namespace

int exact_rank(const RationalMatrix& m) {
  return eliminate(scale_to_integers(m, nullptr), m.cols()).rank;
}

ExactSolve solve_exact(const RationalMatrix& a, const std::vector<Rational>& rhs) {
  if (static_cast<int>(rhs.size()) != a.rows()) {
    throw std::invalid_argument("right-hand side length does not match the row count");
  }
  Echelon e = eliminate(scale_to_integers(a, &rhs), a.cols());

  ExactSolve result;
  result.rank = e.rank;
  const int rhs_col = a.cols();
  for (size_t r = static_cast<size_t>(e.rank); r < e.rows.size(); ++r) {
    if (e.rows[r][static_cast<size_t>(rhs_col)] != 0) {
      result.status = SolveStatus::inconsistent;
      return result;
    }
  }
  if (e.rank < a.cols()) {
    result.status = SolveStatus::underdetermined;
    return result;
  }

  result.status = SolveStatus::unique_solution;
  result.solution.assign(static_cast<size_t>(a.cols()), Rational(0));
  for (int i = e.rank - 1; i >= 0; --i) {
    const auto& row = e.rows[static_cast<size_t>(i)];
    const int pivot = e.pivot_cols[static_cast<size_t>(i)];
    Rational acc(row[static_cast<size_t>(rhs_col)]);
    for (int c = pivot + 1; c < a.cols(); ++c) {
      if (row[static_cast<size_t>(c)] != 0) {
        acc -= Rational(row[static_cast<size_t>(c)]) * result.solution[static_cast<size_t>(c)];
      }
    }
    result.solution[static_cast<size_t>(pivot)] = acc / Rational(row[static_cast<size_t>(pivot)]);
  }
  return result;
}

}  // namespace corequot
