#include "corequot/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace corequot {

namespace {

using MemoKey = std::pair<std::vector<int>, std::vector<int>>;  // (shape, remaining cycles)

std::map<MemoKey, Integer> g_memo;
std::mutex g_memo_mutex;

std::vector<int> beta_numbers(const std::vector<int>& parts) {
  const int n = static_cast<int>(parts.size());
  std::vector<int> xs(parts.size());
  for (int j = 0; j < n; ++j) xs[static_cast<size_t>(j)] = parts[static_cast<size_t>(j)] + (n - 1 - j);
  return xs;
}

std::vector<int> shape_after_strip(std::vector<int> xs, size_t idx, int strip) {
  xs[idx] -= strip;
  std::sort(xs.begin(), xs.end(), std::greater<>());
  const int n = static_cast<int>(xs.size());
  std::vector<int> parts;
  for (int j = 0; j < n; ++j) {
    int y = xs[static_cast<size_t>(j)] - (n - 1 - j);
    if (y > 0) parts.push_back(y);
  }
  return parts;
}

// Cycles are stripped largest-first; `rest` is always a weakly decreasing
// suffix, so the memo is shared across classes with common tails.
Integer mn_recurse(const std::vector<int>& shape, std::vector<int> rest) {
  if (rest.empty()) return shape.empty() ? Integer(1) : Integer(0);

  MemoKey key{shape, rest};
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_memo.find(key);
    if (it != g_memo.end()) return it->second;
  }

  const int strip = rest.front();
  std::vector<int> tail(rest.begin() + 1, rest.end());
  std::vector<int> xs = beta_numbers(shape);

  Integer total = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    const int x = xs[i];
    if (x < strip) continue;
    if (std::find(xs.begin(), xs.end(), x - strip) != xs.end()) continue;
    int between = 0;  // strip height - 1
    for (int other : xs) {
      if (other > x - strip && other < x) ++between;
    }
    Integer sub = mn_recurse(shape_after_strip(xs, i, strip), tail);
    if (between % 2 == 0) {
      total += sub;
    } else {
      total -= sub;
    }
  }

  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    g_memo.emplace(std::move(key), total);
  }
  return total;
}

}  // namespace

Integer mn_character(const Partition& shape, const Partition& cycles) {
  if (shape.size() != cycles.size()) {
    throw std::invalid_argument("character: |shape| != sum of cycle lengths");
  }
  return mn_recurse(shape.parts(), cycles.parts());
}

Integer centralizer_order(const Partition& cycles) {
  Integer z = 1;
  const auto& parts = cycles.parts();
  for (size_t i = 0; i < parts.size();) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const unsigned long mult = static_cast<unsigned long>(j - i);
    z *= integer_pow(Integer(parts[i]), mult);
    z *= factorial(mult);
    i = j;
  }
  return z;
}

namespace {

Integer count_with_step(int n, int step) {
  if (n < 0) throw std::invalid_argument("cannot count partitions of a negative integer");
  std::vector<Integer> ways(static_cast<size_t>(n) + 1);
  ways[0] = 1;
  for (int part = 1; part <= n; part += step) {
    for (int total = part; total <= n; ++total) {
      ways[static_cast<size_t>(total)] += ways[static_cast<size_t>(total - part)];
    }
  }
  return ways[static_cast<size_t>(n)];
}

}  // namespace

Integer count_partitions(int n) { return count_with_step(n, 1); }

Integer count_odd_partitions(int n) { return count_with_step(n, 2); }

}  // namespace corequot
