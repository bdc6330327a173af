#include "corequot/schur.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "corequot/characters.hpp"

namespace corequot {

Monomial monomial_of_cycle_type(const Partition& nu) {
  std::vector<std::pair<int, int>> powers;
  const auto& parts = nu.parts();
  for (size_t i = 0; i < parts.size();) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    powers.emplace_back(parts[i], static_cast<int>(j - i));
    i = j;
  }
  return Monomial::from_powers(std::move(powers));
}

Partition cycle_type_of_monomial(const Monomial& m) {
  std::vector<int> parts;
  const auto& powers = m.powers();
  for (auto it = powers.rbegin(); it != powers.rend(); ++it) {
    for (int k = 0; k < it->second; ++k) parts.push_back(it->first);
  }
  return make_partition(parts);
}

namespace {

struct PartsLess {
  bool operator()(const Partition& a, const Partition& b) const {
    return a.parts() < b.parts();
  }
};

std::map<Partition, GradedPolynomial, PartsLess> g_schur_cache;
std::mutex g_schur_mutex;

Integer multiplicity_factorials(const Partition& nu) {
  Integer f = 1;
  const auto& parts = nu.parts();
  for (size_t i = 0; i < parts.size();) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    f *= factorial(static_cast<unsigned long>(j - i));
    i = j;
  }
  return f;
}

}  // namespace

GradedPolynomial schur(const Partition& shape) {
  {
    std::lock_guard<std::mutex> lock(g_schur_mutex);
    auto it = g_schur_cache.find(shape);
    if (it != g_schur_cache.end()) return it->second;
  }
  GradedPolynomial out;
  for (const Partition& nu : enumerate_partitions(shape.size())) {
    Integer chi = mn_character(shape, nu);
    if (chi == 0) continue;
    out.add_term(monomial_of_cycle_type(nu), make_rational(chi, multiplicity_factorials(nu)));
  }
  {
    std::lock_guard<std::mutex> lock(g_schur_mutex);
    g_schur_cache.emplace(shape, out);
  }
  return out;
}

GradedPolynomial reduced_schur(const Partition& shape) {
  return schur(shape).without_even_variables();
}

PartitionMap<Rational> schur_expand(const GradedPolynomial& f) {
  PartitionMap<Rational> out;
  if (f.is_zero()) return out;
  if (!f.is_homogeneous()) {
    throw std::invalid_argument("schur_expand requires a weighted-homogeneous polynomial");
  }
  const int degree = f.weighted_degree();

  // a_lambda = sum_nu c_nu (prod nu_j!) chi_lambda(nu) / z_nu, and the
  // factorials cancel into 1 / prod j^{nu_j}.
  std::vector<std::pair<Partition, Rational>> weighted;
  weighted.reserve(f.terms().size());
  for (const auto& [m, c] : f.terms()) {
    Integer parts_product = 1;
    for (const auto& [j, e] : m.powers()) {
      parts_product *= integer_pow(Integer(j), static_cast<unsigned long>(e));
    }
    weighted.emplace_back(cycle_type_of_monomial(m), c / Rational(parts_product));
  }

  for (const Partition& lambda : enumerate_partitions(degree)) {
    Rational a = 0;
    for (const auto& [nu, cw] : weighted) a += cw * Rational(mn_character(lambda, nu));
    if (a != 0) out.emplace(lambda, a);
  }
  return out;
}

}  // namespace corequot
