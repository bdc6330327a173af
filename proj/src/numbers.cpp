#include "corequot/numbers.hpp"

#include <stdexcept>

namespace corequot {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer integer_pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

}  // namespace corequot
