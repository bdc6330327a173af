#pragma once

#include "corequot/partition.hpp"

namespace corequot {

// Number of Littlewood-Richardson skew tableaux of shape outer/inner and the
// given content: rows weakly increase, columns strictly increase, and the
// reverse reading word (rows top to bottom, each right to left) is a lattice
// word. Size mismatch or non-containment yields 0.
long long lr_coefficient(const Partition& outer, const Partition& inner,
                         const Partition& content);

// The full expansion lambda -> c^lambda_{mu nu} over |lambda| = |mu| + |nu|;
// zero coefficients are omitted.
PartitionMap<long long> lr_expand_product(const Partition& mu, const Partition& nu);

}  // namespace corequot
