#include "corequot/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace corequot {

namespace {

bool contains(const std::vector<int>& xs, int v) {
  return std::find(xs.begin(), xs.end(), v) != xs.end();
}

}  // namespace

std::string Partition::str() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition make_partition(const std::vector<int>& parts) {
  std::vector<int> p = parts;
  while (!p.empty() && p.back() == 0) p.pop_back();
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) {
      throw std::invalid_argument("negative part at index " + std::to_string(i));
    }
    if (p[i] == 0) {
      throw std::invalid_argument("zero part at index " + std::to_string(i));
    }
    if (i > 0 && p[i] > p[i - 1]) {
      throw std::invalid_argument("not weakly decreasing at index " + std::to_string(i));
    }
  }
  Partition result;
  result.parts_ = std::move(p);
  for (int v : result.parts_) result.size_ += v;
  return result;
}

Partition parse_partition(std::string_view text) {
  // Trim surrounding whitespace; "" is the empty partition.
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = text.find_last_not_of(" \t\r\n");
  text = text.substr(first, last - first + 1);

  std::vector<int> parts;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) {
      throw std::invalid_argument("not an integer part: '" + std::string(token) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return make_partition(parts);
}

Partition conjugate(const Partition& p) {
  std::vector<int> cols;
  if (!p.empty()) {
    cols.assign(static_cast<size_t>(p.part(0)), 0);
    for (int row : p.parts()) {
      for (int c = 0; c < row; ++c) cols[static_cast<size_t>(c)]++;
    }
  }
  return make_partition(cols);
}

Partition staircase(int r) {
  if (r < 0) throw std::invalid_argument("staircase index must be non-negative");
  std::vector<int> parts;
  for (int v = r; v >= 1; --v) parts.push_back(v);
  return make_partition(parts);
}

bool is_staircase(const Partition& p) {
  const auto& parts = p.parts();
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] != static_cast<int>(parts.size() - i)) return false;
  }
  return true;
}

int multiplicity(const Partition& p, int part) {
  int count = 0;
  for (int v : p.parts()) count += (v == part);
  return count;
}

namespace {

void generate(int remaining, int max_part, int step, std::vector<int>& stack,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(make_partition(stack));
    return;
  }
  int start = std::min(remaining, max_part);
  if (step == 2 && start % 2 == 0) --start;  // odd parts only
  for (int part = start; part >= 1; part -= step) {
    stack.push_back(part);
    generate(remaining - part, part, step, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
  std::vector<Partition> out;
  std::vector<int> stack;
  generate(n, n, 1, stack, out);
  return out;
}

std::vector<Partition> enumerate_odd_partitions(int n) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
  std::vector<Partition> out;
  std::vector<int> stack;
  generate(n, n, 2, stack, out);
  return out;
}

bool lex_less(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(a.parts().begin(), a.parts().end(),
                                      b.parts().begin(), b.parts().end());
}

BetaSet beta_set(const Partition& p, int n) {
  if (n % 2 != 0) throw std::invalid_argument("beta-set padding must be even");
  if (n < p.length()) throw std::invalid_argument("beta-set padding smaller than the number of parts");
  BetaSet bs;
  bs.padded_length = n;
  bs.entries.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) bs.entries.push_back(p.part(j) + (n - 1 - j));
  return bs;
}

int default_padding(const Partition& p) {
  int n = p.length();
  if (n % 2 != 0) ++n;
  return std::max(n, 2);
}

Partition partition_from_beta(std::vector<int> entries) {
  std::sort(entries.begin(), entries.end(), std::greater<>());
  const int n = static_cast<int>(entries.size());
  std::vector<int> parts;
  for (int j = 0; j < n; ++j) {
    int y = entries[static_cast<size_t>(j)] - (n - 1 - j);
    if (y < 0) throw std::invalid_argument("beta entries not distinct or negative");
    parts.push_back(y);
  }
  return make_partition(parts);
}

Triplet two_quotient_triplet(const Partition& p, int padding) {
  BetaSet bs = beta_set(p, padding);
  std::vector<int> half_even, half_odd;
  for (int x : bs.entries) {
    if (x % 2 == 0) {
      half_even.push_back(x / 2);
    } else {
      half_odd.push_back((x - 1) / 2);
    }
  }
  Triplet t;
  t.quotient0 = partition_from_beta(half_even);
  t.quotient1 = partition_from_beta(half_odd);
  // |X0| - |X1| = r >= 1 gives core K_{r-1}; |X1| - |X0| = r >= 0 gives K_r.
  int diff = static_cast<int>(half_even.size()) - static_cast<int>(half_odd.size());
  t.core = (diff >= 1) ? staircase(diff - 1) : staircase(-diff);
  return t;
}

Triplet two_quotient_triplet(const Partition& p) {
  return two_quotient_triplet(p, default_padding(p));
}

Partition from_triplet(const Triplet& t) {
  if (!is_staircase(t.core)) throw std::invalid_argument("triplet core must be a staircase");
  const int s = t.core.length();
  for (int n = 2;; n += 2) {
    // Even cores arise from |X1| - |X0| = s, odd ones from |X0| - |X1| = s+1.
    int m0, m1;
    if (s % 2 == 0) {
      if (n < s) continue;
      m0 = (n - s) / 2;
      m1 = (n + s) / 2;
    } else {
      if (n < s + 1) continue;
      m0 = (n + s + 1) / 2;
      m1 = (n - s - 1) / 2;
    }
    if (m0 < t.quotient0.length() || m1 < t.quotient1.length()) continue;
    std::vector<int> entries;
    entries.reserve(static_cast<size_t>(n));
    for (int j = 0; j < m0; ++j) entries.push_back(2 * (t.quotient0.part(j) + (m0 - 1 - j)));
    for (int j = 0; j < m1; ++j) entries.push_back(2 * (t.quotient1.part(j) + (m1 - 1 - j)) + 1);
    return partition_from_beta(std::move(entries));
  }
}

Partition two_core(const Partition& p) { return two_quotient_triplet(p).core; }

int two_sign(const Partition& p) {
  // Greedy removal: always take the 2-hook whose arm ends at the largest
  // beta-number. x -> x-2 is a removable 2-hook iff x-2 is absent; the hook
  // is a column hook iff x-1 is present.
  std::vector<int> xs = beta_set(p, default_padding(p)).entries;
  int column_hooks = 0;
  for (;;) {
    int picked = -1;
    for (int x : xs) {  // descending
      if (x >= 2 && !contains(xs, x - 2)) {
        picked = x;
        break;
      }
    }
    if (picked < 0) break;
    if (contains(xs, picked - 1)) ++column_hooks;
    *std::find(xs.begin(), xs.end(), picked) = picked - 2;
    std::sort(xs.begin(), xs.end(), std::greater<>());
  }
  return (column_hooks % 2 == 0) ? 1 : -1;
}

}  // namespace corequot
