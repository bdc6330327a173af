#pragma once

#include <vector>

#include "corequot/numbers.hpp"

namespace corequot {

// Formal power series in q with integer coefficients, truncated at q^order.
class IntegerSeries {
 public:
  explicit IntegerSeries(int order);

  static IntegerSeries one(int order);

  int order() const { return order_; }
  const Integer& at(int i) const { return coeff_[static_cast<size_t>(i)]; }
  Integer& at(int i) { return coeff_[static_cast<size_t>(i)]; }

  bool operator==(const IntegerSeries& other) const = default;

 private:
  int order_ = 0;
  std::vector<Integer> coeff_;  // indices 0..order
};

// Truncated products/quotients; the result order is the smaller operand
// order. Division needs a unit constant term (+1 or -1) to stay integral.
IntegerSeries series_mul(const IntegerSeries& a, const IntegerSeries& b);
IntegerSeries series_div(const IntegerSeries& a, const IntegerSeries& b);

// Truncated Euler product prod_{j>=1} (1 - q^{argument_power * j}).
IntegerSeries phi_series(int argument_power, int order);

}  // namespace corequot
