#include <doctest.h>

#include <stdexcept>

#include <random>
#include <vector>

#include "rainbow/kernels.hpp"

using namespace rainbow::kernels;

namespace {

struct Batch {
    std::vector<std::uint32_t> adjacency;
    std::vector<std::int32_t> costs;
    std::vector<std::uint32_t> ones;
    std::vector<std::uint32_t> twos;
    std::uint32_t prefix_ones = 0;
    std::uint32_t prefix_twos = 0;

    BatchInput view() const { return {adjacency, costs, prefix_ones, prefix_twos, ones, twos}; }
};

Batch random_batch(std::mt19937_64& rng, int n, int count) {
    Batch b;
    b.adjacency.assign(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng() % 3 == 0) {
                b.adjacency[static_cast<std::size_t>(u)] |= 1u << v;
                b.adjacency[static_cast<std::size_t>(v)] |= 1u << u;
            }
        }
    }
    for (int i = 0; i < n * kStatesPerVertex; ++i) {
        b.costs.push_back(rng() % 5 == 0 ? kInfeasible : static_cast<std::int32_t>(rng() % 4));
    }
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    const int split = n / 2;
    const std::uint32_t low = (1u << split) - 1;
    b.prefix_ones = static_cast<std::uint32_t>(rng()) & full & ~low;
    b.prefix_twos = static_cast<std::uint32_t>(rng()) & full & ~low & ~b.prefix_ones;
    for (int i = 0; i < count; ++i) {
        const auto ones = static_cast<std::uint32_t>(rng()) & low;
        b.ones.push_back(ones);
        b.twos.push_back(static_cast<std::uint32_t>(rng()) & low & ~ones);
    }
    return b;
}

// Direct transcription of the state rule, independent of either kernel.
std::int32_t reference(const Batch& b, std::size_t i) {
    const std::uint32_t ones = b.prefix_ones | b.ones[i];
    const std::uint32_t twos = b.prefix_twos | b.twos[i];
    std::int64_t total = 0;
    for (std::size_t v = 0; v < b.adjacency.size(); ++v) {
        const std::uint32_t adj = b.adjacency[v];
        int state;
        if ((ones >> v) & 1u) {
            state = 1;
            total += (adj & ones) != 0 ? kConflict : 0;
        } else if ((twos >> v) & 1u) {
            state = 2;
            total += (adj & twos) != 0 ? kConflict : 0;
        } else {
            state = 4 + ((adj & ones) != 0 ? 1 : 0) + ((adj & twos) != 0 ? 2 : 0);
        }
        total += b.costs[v * kStatesPerVertex + static_cast<std::size_t>(state)];
    }
    return static_cast<std::int32_t>(std::min<std::int64_t>(total, 1LL << 30));
}

bool same_verdict(std::int32_t a, std::int32_t b) {
    return (a >= kInfeasible && b >= kInfeasible) || a == b;
}

}  // namespace

TEST_SUITE("kernels") {
    TEST_CASE("scalar kernel matches a direct evaluation") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 20);
            const int count = 1 + static_cast<int>(rng() % 40);
            const Batch b = random_batch(rng, n, count);
            std::vector<std::int32_t> out(static_cast<std::size_t>(count));
            evaluate_scalar(b.view(), out);
            for (std::size_t i = 0; i < out.size(); ++i) {
                CHECK(same_verdict(out[i], reference(b, i)));
            }
        }
    }

    TEST_CASE("avx2 kernel agrees with scalar") {
        if (!avx2_available()) {
            MESSAGE("AVX2 unavailable on this CPU, skipped");
            return;
        }
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 300; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 32);
            const int count = 1 + static_cast<int>(rng() % 67);
            const Batch b = random_batch(rng, n, count);
            std::vector<std::int32_t> scalar(static_cast<std::size_t>(count));
            std::vector<std::int32_t> simd(static_cast<std::size_t>(count));
            evaluate_scalar(b.view(), scalar);
            evaluate_avx2(b.view(), simd);
            for (std::size_t i = 0; i < scalar.size(); ++i) {
                CHECK(same_verdict(scalar[i], simd[i]));
            }
        }
    }

    TEST_CASE("isa selection") {
        const Isa before = active_isa();
        set_isa(Isa::Scalar);
        CHECK(active_isa() == Isa::Scalar);
        set_isa(Isa::Avx2);
        CHECK(active_isa() == (avx2_available() ? Isa::Avx2 : Isa::Scalar));
        CHECK(isa_name(Isa::Scalar) == "scalar");
        CHECK(isa_name(Isa::Avx2) == "avx2");
        set_isa(before);
    }
}
