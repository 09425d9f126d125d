#pragma once

#include <functional>
#include <vector>

namespace isinglab {

using Blocks = std::vector<std::vector<int>>;

// All set partitions of {0..n-1}. Blocks are listed by least element; the
// enumeration order is deterministic.
void for_each_partition(int n, const std::function<void(const Blocks&)>& fn);

// All partitions of `elements` into blocks of even size (each nonempty).
// Throws on odd |elements|.
void for_each_even_partition(const std::vector<int>& elements,
                             const std::function<void(const Blocks&)>& fn);

std::vector<Blocks> even_partitions(const std::vector<int>& elements);

// (-1)^{b-1} (b-1)! for b blocks.
long long partition_sign_weight(int block_count);

}  // namespace isinglab
