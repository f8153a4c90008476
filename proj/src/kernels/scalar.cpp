#include <algorithm>

#include "rainbow/kernels.hpp"

namespace rainbow::kernels {

void evaluate_scalar(const BatchInput& in, std::span<std::int32_t> out) {
    const std::size_t core = in.adjacency.size();
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::uint32_t ones = in.prefix_ones | in.suffix_ones[i];
        const std::uint32_t twos = in.prefix_twos | in.suffix_twos[i];
        std::int32_t total = 0;
        for (std::size_t v = 0; v < core; ++v) {
            const std::uint32_t bit = std::uint32_t{1} << v;
            const std::uint32_t nbrs = in.adjacency[v];
            const bool sees_one = (ones & nbrs) != 0;
            const bool sees_two = (twos & nbrs) != 0;
            int state;
            if (ones & bit) {
                state = 1;
                total += sees_one ? kConflict : 0;
            } else if (twos & bit) {
                state = 2;
                total += sees_two ? kConflict : 0;
            } else {
                state = 4 + (sees_one ? 1 : 0) + (sees_two ? 2 : 0);
            }
            total += in.costs[v * kStatesPerVertex + static_cast<std::size_t>(state)];
        }
        out[i] = std::min(total, kInfeasible);
    }
}

}  // namespace rainbow::kernels
