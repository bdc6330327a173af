#include "corequot/linalg.hpp"

#include <doctest.h>

using namespace corequot;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) m(i, j) = make_rational(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  }
  return m;
}

}  // namespace

TEST_CASE("exact rank") {
  CHECK(exact_rank(from_rows({{1, 0}, {0, 1}})) == 2);
  CHECK(exact_rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(exact_rank(from_rows({{0, 0}, {0, 0}})) == 0);
  CHECK(exact_rank(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
  CHECK(exact_rank(RationalMatrix(0, 3)) == 0);

  // Denominators must not change the answer.
  RationalMatrix m(2, 2);
  m(0, 0) = make_rational(1, 3);
  m(0, 1) = make_rational(1, 6);
  m(1, 0) = make_rational(2, 3);
  m(1, 1) = make_rational(1, 3);
  CHECK(exact_rank(m) == 1);
}

TEST_CASE("solve: unique") {
  const auto result = solve_exact(from_rows({{2, 1}, {1, -1}}), {make_rational(5), make_rational(-2)});
  REQUIRE(result.status == SolveStatus::unique_solution);
  CHECK(result.solution[0] == 1);
  CHECK(result.solution[1] == 3);
}

TEST_CASE("solve: overdetermined but consistent") {
  const auto result = solve_exact(from_rows({{1, 0}, {0, 1}, {1, 1}}),
                                  {make_rational(1, 2), make_rational(1, 3), make_rational(5, 6)});
  REQUIRE(result.status == SolveStatus::unique_solution);
  CHECK(result.solution[0] == make_rational(1, 2));
  CHECK(result.solution[1] == make_rational(1, 3));
}

TEST_CASE("solve: inconsistent") {
  const auto result = solve_exact(from_rows({{1, 1}, {1, 1}}), {make_rational(1), make_rational(2)});
  CHECK(result.status == SolveStatus::inconsistent);
}

TEST_CASE("solve: underdetermined") {
  const auto result = solve_exact(from_rows({{1, 1}}), {make_rational(1)});
  CHECK(result.status == SolveStatus::underdetermined);
}

TEST_CASE("solve keeps exact rationals") {
  // Hilbert-style matrix: floating point would not survive this exactly.
  RationalMatrix m(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m(i, j) = make_rational(1, i + j + 1);
  }
  std::vector<Rational> rhs{make_rational(1), make_rational(0), make_rational(0)};
  const auto result = solve_exact(m, rhs);
  REQUIRE(result.status == SolveStatus::unique_solution);
  CHECK(result.solution[0] == 9);
  CHECK(result.solution[1] == -36);
  CHECK(result.solution[2] == 30);
}
