#pragma once

#include "corequot/numbers.hpp"
#include "corequot/partition.hpp"

namespace corequot {

// Irreducible character of the symmetric group S_{|shape|} at the class of
// cycle type `cycles`, by the Murnaghan-Nakayama rule (recursive border-strip
// removal, sign (-1)^(height-1)). Requires |shape| == |cycles|.
Integer mn_character(const Partition& shape, const Partition& cycles);

// z_nu = prod_j j^{nu_j} nu_j!.
Integer centralizer_order(const Partition& cycles);

Integer count_partitions(int n);
Integer count_odd_partitions(int n);

}  // namespace corequot
