#include "isinglab/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace isinglab {

void for_each_partition(int n, const std::function<void(const Blocks&)>& fn) {
    Blocks blocks;
    std::function<void(int)> rec = [&](int item) {
        if (item == n) {
            fn(blocks);
            return;
        }
        for (auto& b : blocks) {
            b.push_back(item);
            rec(item + 1);
            b.pop_back();
        }
        blocks.push_back({item});
        rec(item + 1);
        blocks.pop_back();
    };
    if (n == 0) {
        fn(blocks);
        return;
    }
    rec(0);
}

void for_each_even_partition(const std::vector<int>& elements,
                             const std::function<void(const Blocks&)>& fn) {
    if (elements.size() % 2 != 0) throw std::invalid_argument("odd source set");
    std::vector<int> items = elements;
    std::sort(items.begin(), items.end());

    Blocks blocks;
    std::vector<int> pool = items;  // remaining, always sorted
    std::function<void()> rec = [&]() {
        if (pool.empty()) {
            fn(blocks);
            return;
        }
        const int head = pool.front();
        std::vector<int> rest(pool.begin() + 1, pool.end());
        const int r = static_cast<int>(rest.size());
        // Companions of the least remaining element: any odd-size subset.
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            if (__builtin_popcount(mask) % 2 == 0) continue;
            std::vector<int> block{head};
            std::vector<int> remaining;
            for (int i = 0; i < r; ++i)
                (mask & (1u << i) ? block : remaining).push_back(rest[i]);
            blocks.push_back(std::move(block));
            std::vector<int> saved = std::move(pool);
            pool = std::move(remaining);
            rec();
            pool = std::move(saved);
            blocks.pop_back();
        }
    };
    rec();
}

std::vector<Blocks> even_partitions(const std::vector<int>& elements) {
    std::vector<Blocks> out;
    for_each_even_partition(elements, [&](const Blocks& b) { out.push_back(b); });
    return out;
}

long long partition_sign_weight(int block_count) {
    long long w = (block_count % 2 == 1) ? 1 : -1;
    for (int i = 2; i < block_count; ++i) w *= i;
    return w;
}

}  // namespace isinglab
