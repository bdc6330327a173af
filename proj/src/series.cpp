#include "corequot/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace corequot {

IntegerSeries::IntegerSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  coeff_.resize(static_cast<size_t>(order) + 1);
}

IntegerSeries IntegerSeries::one(int order) {
  IntegerSeries s(order);
  s.at(0) = 1;
  return s;
}

IntegerSeries series_mul(const IntegerSeries& a, const IntegerSeries& b) {
  const int order = std::min(a.order(), b.order());
  IntegerSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (a.at(i) == 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b.at(j) == 0) continue;
      out.at(i + j) += a.at(i) * b.at(j);
    }
  }
  return out;
}

IntegerSeries series_div(const IntegerSeries& a, const IntegerSeries& b) {
  if (b.at(0) != 1 && b.at(0) != -1) {
    throw std::domain_error("series division needs a unit constant term");
  }
  const int order = std::min(a.order(), b.order());
  IntegerSeries out(order);
  for (int n = 0; n <= order; ++n) {
    Integer acc = a.at(n);
    for (int i = 0; i < n; ++i) {
      int k = n - i;
      if (k <= b.order()) acc -= out.at(i) * b.at(k);
    }
    out.at(n) = acc / b.at(0);
  }
  return out;
}

IntegerSeries phi_series(int argument_power, int order) {
  if (argument_power < 1) throw std::invalid_argument("phi argument power must be positive");
  IntegerSeries s = IntegerSeries::one(order);
  for (int j = 1; argument_power * j <= order; ++j) {
    const int m = argument_power * j;
    for (int k = order; k >= m; --k) s.at(k) -= s.at(k - m);
  }
  return s;
}

}  // namespace corequot
