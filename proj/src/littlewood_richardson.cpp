#include "corequot/littlewood_richardson.hpp"

#include <vector>

namespace corequot {

namespace {

struct Cell {
  int row;
  int col;
};

struct Enumerator {
  std::vector<Cell> cells;              // reverse reading order
  std::vector<std::vector<int>> grid;   // 0 = unfilled
  const Partition* inner = nullptr;
  const Partition* outer = nullptr;
  std::vector<int> remaining;           // per value, how many may still be placed
  std::vector<int> placed;              // per value, how many are in the prefix
  long long count = 0;

  bool in_skew(int row, int col) const {
    return row >= 0 && row < outer->length() && col >= inner->part(row) &&
           col < outer->part(row);
  }

  void fill(size_t idx) {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    const auto [row, col] = cells[idx];
    const int values = static_cast<int>(remaining.size());
    for (int v = 1; v <= values; ++v) {
      if (remaining[static_cast<size_t>(v - 1)] == 0) continue;
      // Lattice prefix: after placing v, #v must not exceed #(v-1).
      if (v > 1 && placed[static_cast<size_t>(v - 1)] + 1 > placed[static_cast<size_t>(v - 2)]) {
        continue;
      }
      if (in_skew(row, col + 1) && v > grid[static_cast<size_t>(row)][static_cast<size_t>(col + 1)]) {
        continue;  // rows weakly increase
      }
      if (in_skew(row - 1, col) &&
          v <= grid[static_cast<size_t>(row - 1)][static_cast<size_t>(col)]) {
        continue;  // columns strictly increase
      }
      grid[static_cast<size_t>(row)][static_cast<size_t>(col)] = v;
      --remaining[static_cast<size_t>(v - 1)];
      ++placed[static_cast<size_t>(v - 1)];
      fill(idx + 1);
      ++remaining[static_cast<size_t>(v - 1)];
      --placed[static_cast<size_t>(v - 1)];
    }
    grid[static_cast<size_t>(row)][static_cast<size_t>(col)] = 0;
  }
};

}  // namespace

long long lr_coefficient(const Partition& outer, const Partition& inner,
                         const Partition& content) {
  if (outer.size() != inner.size() + content.size()) return 0;
  for (int r = 0; r < inner.length(); ++r) {
    if (inner.part(r) > outer.part(r)) return 0;
  }
  if (outer == inner) return content.empty() ? 1 : 0;

  Enumerator e;
  e.inner = &inner;
  e.outer = &outer;
  e.grid.assign(static_cast<size_t>(outer.length()),
                std::vector<int>(static_cast<size_t>(outer.part(0)), 0));
  for (int r = 0; r < outer.length(); ++r) {
    for (int c = outer.part(r) - 1; c >= inner.part(r); --c) e.cells.push_back({r, c});
  }
  e.remaining = content.parts();
  e.placed.assign(content.parts().size(), 0);
  e.fill(0);
  return e.count;
}

PartitionMap<long long> lr_expand_product(const Partition& mu, const Partition& nu) {
  PartitionMap<long long> out;
  for (const Partition& lambda : enumerate_partitions(mu.size() + nu.size())) {
    long long c = lr_coefficient(lambda, mu, nu);
    if (c != 0) out.emplace(lambda, c);
  }
  return out;
}

}  // namespace corequot
