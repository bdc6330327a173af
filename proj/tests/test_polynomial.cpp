#include "corequot/polynomial.hpp"

#include <doctest.h>

#include <random>

#include "corequot/json_io.hpp"

using namespace corequot;

namespace {

GradedPolynomial t(int j) { return GradedPolynomial::variable(j); }

GradedPolynomial random_polynomial(std::mt19937& rng) {
  std::uniform_int_distribution<int> term_count(0, 4);
  std::uniform_int_distribution<int> var(1, 4);
  std::uniform_int_distribution<int> exp(1, 2);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  GradedPolynomial f;
  const int terms = term_count(rng);
  for (int i = 0; i < terms; ++i) {
    Monomial m = Monomial::variable(var(rng), exp(rng)) * Monomial::variable(var(rng), exp(rng));
    f.add_term(m, make_rational(num(rng), den(rng)));
  }
  return f;
}

}  // namespace

TEST_CASE("ring basics") {
  CHECK(t(1) * t(1) == GradedPolynomial::term(Monomial::variable(1, 2), make_rational(1)));

  const GradedPolynomial a = t(1) * t(1) * make_rational(1, 2) + t(2);
  const GradedPolynomial b = t(1) * t(1) * make_rational(1, 2) - t(2);
  GradedPolynomial expected;
  expected.add_term(Monomial::variable(1, 4), make_rational(1, 4));
  expected.add_term(Monomial::variable(2, 2), make_rational(-1));
  CHECK(a * b == expected);

  CHECK((t(1) + t(3)).homogeneous_component(3) == t(3));
  CHECK((t(1) - t(1)).is_zero());
}

TEST_CASE("weighted degrees") {
  const GradedPolynomial f = t(1) * t(3) + t(2) * t(2);
  CHECK(f.weighted_degree() == 4);
  CHECK(f.is_homogeneous());
  CHECK_FALSE((t(1) + t(3)).is_homogeneous());
  CHECK(GradedPolynomial{}.is_homogeneous());
  CHECK(Monomial::variable(3, 2).weighted_degree() == 6);
}

TEST_CASE("term order and pretty form") {
  GradedPolynomial f;
  f.add_term(Monomial::from_powers({{1, 1}, {3, 1}}), make_rational(1));
  f.add_term(Monomial::variable(1, 4), make_rational(1, 24));
  CHECK(f.pretty() == "1/24·t1^4 + t1·t3");

  GradedPolynomial g;
  g.add_term(Monomial::variable(1, 4), make_rational(1, 12));
  g.add_term(Monomial::from_powers({{1, 1}, {3, 1}}), make_rational(-1));
  CHECK(g.pretty() == "1/12·t1^4 - t1·t3");

  CHECK(GradedPolynomial{}.pretty() == "0");
  CHECK(GradedPolynomial::constant(make_rational(-1, 2)).pretty() == "-1/2");
  CHECK((t(1) + t(3)).pretty() == "t1 + t3");
}

TEST_CASE("product properties on random inputs") {
  std::mt19937 rng(20240811);
  for (int round = 0; round < 25; ++round) {
    const GradedPolynomial a = random_polynomial(rng);
    const GradedPolynomial b = random_polynomial(rng);
    const GradedPolynomial c = random_polynomial(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);

    const GradedPolynomial product = a * b;
    for (int d = 0; d <= product.weighted_degree(); ++d) {
      GradedPolynomial convolution;
      for (int i = 0; i <= d; ++i) {
        convolution += a.homogeneous_component(i) * b.homogeneous_component(d - i);
      }
      CHECK(product.homogeneous_component(d) == convolution);
    }
  }
}

TEST_CASE("derivative and even-variable restriction") {
  const GradedPolynomial f = t(1) * t(1) * t(3) + t(2);
  CHECK(f.derivative(1) == t(1) * t(3) * make_rational(2));
  CHECK(f.derivative(3) == t(1) * t(1));
  CHECK(f.derivative(5).is_zero());
  CHECK(f.without_even_variables() == t(1) * t(1) * t(3));
  CHECK(f.odd_support() == false);
  CHECK((t(1) * t(5)).odd_support());
}

TEST_CASE("json form roundtrips") {
  std::mt19937 rng(7);
  for (int round = 0; round < 20; ++round) {
    const GradedPolynomial f = random_polynomial(rng);
    CHECK(polynomial_from_json(polynomial_to_json(f)) == f);
  }
  const GradedPolynomial f = t(1) * t(3) * make_rational(-5, 3);
  const nlohmann::json j = polynomial_to_json(f);
  CHECK(j.at(0).at("coeff").get<std::string>() == "-5/3");
}
