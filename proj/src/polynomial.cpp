#include "corequot/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace corequot {

Monomial Monomial::variable(int index, int exponent) {
  return from_powers({{index, exponent}});
}

Monomial Monomial::from_powers(std::vector<std::pair<int, int>> powers) {
  for (const auto& [index, exponent] : powers) {
    if (index < 1) throw std::invalid_argument("variable index must be >= 1");
    if (exponent < 0) throw std::invalid_argument("exponent must be non-negative");
  }
  std::sort(powers.begin(), powers.end());
  Monomial m;
  for (const auto& [index, exponent] : powers) {
    if (exponent == 0) continue;
    if (!m.powers_.empty() && m.powers_.back().first == index) {
      m.powers_.back().second += exponent;
    } else {
      m.powers_.emplace_back(index, exponent);
    }
  }
  return m;
}

int Monomial::exponent(int index) const {
  for (const auto& [j, e] : powers_) {
    if (j == index) return e;
  }
  return 0;
}

int Monomial::weighted_degree() const {
  int d = 0;
  for (const auto& [j, e] : powers_) d += j * e;
  return d;
}

bool Monomial::odd_support() const {
  for (const auto& [j, e] : powers_) {
    if (j % 2 == 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<std::pair<int, int>> merged = powers_;
  merged.insert(merged.end(), other.powers_.begin(), other.powers_.end());
  return from_powers(std::move(merged));
}

std::string Monomial::str() const {
  if (powers_.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < powers_.size(); ++i) {
    if (i) out += "·";
    out += "t" + std::to_string(powers_[i].first);
    if (powers_[i].second > 1) out += "^" + std::to_string(powers_[i].second);
  }
  return out;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.weighted_degree();
  const int db = b.weighted_degree();
  if (da != db) return da < db;
  // Walk the sparse representations as if the exponent vectors were dense;
  // at the first differing variable the larger exponent sorts first.
  const auto& pa = a.powers();
  const auto& pb = b.powers();
  size_t i = 0, j = 0;
  while (i < pa.size() || j < pb.size()) {
    const int va = i < pa.size() ? pa[i].first : INT32_MAX;
    const int vb = j < pb.size() ? pb[j].first : INT32_MAX;
    if (va == vb) {
      if (pa[i].second != pb[j].second) return pa[i].second > pb[j].second;
      ++i;
      ++j;
    } else if (va < vb) {
      return true;  // a has a positive exponent where b has zero
    } else {
      return false;
    }
  }
  return false;
}

GradedPolynomial GradedPolynomial::constant(const Rational& value) {
  GradedPolynomial f;
  f.add_term(Monomial{}, value);
  return f;
}

GradedPolynomial GradedPolynomial::variable(int index) {
  GradedPolynomial f;
  f.add_term(Monomial::variable(index), make_rational(1));
  return f;
}

GradedPolynomial GradedPolynomial::term(const Monomial& m, const Rational& coeff) {
  GradedPolynomial f;
  f.add_term(m, coeff);
  return f;
}

Rational GradedPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int GradedPolynomial::weighted_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.weighted_degree();
}

bool GradedPolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.weighted_degree() == terms_.rbegin()->first.weighted_degree();
}

bool GradedPolynomial::odd_support() const {
  for (const auto& [m, c] : terms_) {
    if (!m.odd_support()) return false;
  }
  return true;
}

void GradedPolynomial::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(const GradedPolynomial& other) {
  GradedPolynomial product;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) product.add_term(ma * mb, ca * cb);
  }
  terms_ = std::move(product.terms_);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

GradedPolynomial GradedPolynomial::homogeneous_component(int degree) const {
  GradedPolynomial out;
  for (const auto& [m, c] : terms_) {
    if (m.weighted_degree() == degree) out.add_term(m, c);
  }
  return out;
}

GradedPolynomial GradedPolynomial::without_even_variables() const {
  GradedPolynomial out;
  for (const auto& [m, c] : terms_) {
    bool has_even = false;
    for (const auto& [j, e] : m.powers()) {
      if (j % 2 == 0) {
        has_even = true;
        break;
      }
    }
    if (!has_even) out.add_term(m, c);
  }
  return out;
}

GradedPolynomial GradedPolynomial::derivative(int index) const {
  if (index < 1) throw std::invalid_argument("variable index must be >= 1");
  GradedPolynomial out;
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(index);
    if (e == 0) continue;
    std::vector<std::pair<int, int>> powers = m.powers();
    for (auto& [j, exp] : powers) {
      if (j == index) --exp;
    }
    out.add_term(Monomial::from_powers(std::move(powers)), c * e);
  }
  return out;
}

std::string GradedPolynomial::pretty() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    std::string body;
    if (m.is_constant()) {
      body = to_string(magnitude);
    } else if (magnitude == 1) {
      body = m.str();
    } else {
      body = to_string(magnitude) + "·" + m.str();
    }
    if (first) {
      out += negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " + body : " + " + body;
    }
  }
  return out;
}

GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
  GradedPolynomial out = a;
  return out *= b;
}
GradedPolynomial operator*(GradedPolynomial a, const Rational& scalar) { return a *= scalar; }
GradedPolynomial operator*(const Rational& scalar, GradedPolynomial a) { return a *= scalar; }
GradedPolynomial operator-(GradedPolynomial a) { return a *= make_rational(-1); }

}  // namespace corequot
