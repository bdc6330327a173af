#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace corequot {

// Weakly decreasing sequence of positive parts; the empty sequence is the
// empty partition. Doubles as a Young diagram and as a cycle type.
class Partition {
 public:
  Partition() = default;

  int size() const { return size_; }  // number of cells
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  // 0-based; parts beyond the last are 0.
  int part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
  }

  bool operator==(const Partition& other) const { return parts_ == other.parts_; }

  // Comma-separated parts; the empty partition serializes as "".
  std::string str() const;

 private:
  friend Partition make_partition(const std::vector<int>& parts);
  std::vector<int> parts_;
  int size_ = 0;
};

// Canonical form: trailing zeros stripped, parts validated weakly decreasing
// and positive. Throws std::invalid_argument naming the offending index.
Partition make_partition(const std::vector<int>& parts);

// Parses the serialized form ("4,3,1,1"; "" is the empty partition).
Partition parse_partition(std::string_view text);

Partition conjugate(const Partition& p);

// K_r = (r, r-1, ..., 2, 1); the 2-cores.
Partition staircase(int r);
bool is_staircase(const Partition& p);

// Number of parts equal to `part` (cycle-type multiplicity).
int multiplicity(const Partition& p, int part);

// All partitions of n, descending lexicographic, each exactly once.
std::vector<Partition> enumerate_partitions(int n);
// Same, restricted to odd parts.
std::vector<Partition> enumerate_odd_partitions(int n);

bool lex_less(const Partition& a, const Partition& b);

// Map keyed by partitions in descending lexicographic order, the listing
// order used everywhere (bases, expansions, reports).
struct PartitionLexGreater {
  bool operator()(const Partition& a, const Partition& b) const { return lex_less(b, a); }
};
template <class T>
using PartitionMap = std::map<Partition, T, PartitionLexGreater>;

// Beta-set x_j = y_j + (n - j), strictly decreasing, with even padding n.
struct BetaSet {
  std::vector<int> entries;  // descending
  int padded_length = 0;
};

// Requires n even and n >= length(p).
BetaSet beta_set(const Partition& p, int n);

// Length rounded up to the next even integer, minimum 2.
int default_padding(const Partition& p);

// Inverse of the beta-set construction for any strictly decreasing list of
// non-negative entries (padding inferred from the length).
Partition partition_from_beta(std::vector<int> entries);

// (2-core; 2-quotient) value of the bijection tau.
struct Triplet {
  Partition core;
  Partition quotient0;
  Partition quotient1;
  bool operator==(const Triplet& other) const = default;
};

Triplet two_quotient_triplet(const Partition& p);
Triplet two_quotient_triplet(const Partition& p, int padding);

// Unique Y with two_quotient_triplet(Y) == t; the core must be a staircase.
Partition from_triplet(const Triplet& t);

Partition two_core(const Partition& p);

// (-1)^q where q counts column 2-hooks in a complete 2-hook removal; the
// value does not depend on the removal order.
int two_sign(const Partition& p);

}  // namespace corequot
