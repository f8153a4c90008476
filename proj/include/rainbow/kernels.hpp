#pragma once

#include <cstdint>
#include <span>
#include <string_view>

// Batch evaluation of candidate colorings for the exhaustive solvers.
//
// A candidate is a pair of bitmasks (ones, twos) over at most 32 "core"
// vertices. For every core vertex the kernel derives a state index
//
//   1            colored 1
//   2            colored 2
//   4 + p1 + 2p2 colored 0, where p1/p2 say whether some core neighbor has color 1/2
//
// and sums `costs[8 * v + state]`. A vertex colored c with a core neighbor
// also colored c adds kConflict. Totals at or above kInfeasible mean the
// candidate is not a valid coloring.
//
// Each candidate is prefix | suffix[i] so that callers can sweep a fixed
// prefix over a precomputed table of suffix colorings.

namespace rainbow::kernels {

inline constexpr std::int32_t kInfeasible = 1 << 24;
inline constexpr std::int32_t kConflict = kInfeasible;
inline constexpr int kMaxCoreVertices = 32;
inline constexpr int kStatesPerVertex = 8;

struct BatchInput {
    std::span<const std::uint32_t> adjacency;  // core neighbor mask per core vertex
    std::span<const std::int32_t> costs;       // kStatesPerVertex entries per core vertex
    std::uint32_t prefix_ones = 0;
    std::uint32_t prefix_twos = 0;
    std::span<const std::uint32_t> suffix_ones;
    std::span<const std::uint32_t> suffix_twos;
};

/// Portable reference implementation.
void evaluate_scalar(const BatchInput& in, std::span<std::int32_t> out);

/// AVX2 implementation (8 candidates per step). Only call when `avx2_available()`.
void evaluate_avx2(const BatchInput& in, std::span<std::int32_t> out);

bool avx2_available() noexcept;

enum class Isa { Scalar, Avx2 };

/// ISA used by `evaluate`. Chosen once from CPU detection; the environment
/// variable RAINBOW_SIMD=scalar forces the reference path.
Isa active_isa() noexcept;
/// Overrides the selection (Avx2 falls back to Scalar when unsupported).
void set_isa(Isa isa) noexcept;
std::string_view isa_name(Isa isa) noexcept;

/// Dispatches to the active implementation. `out.size()` must equal the suffix length.
void evaluate(const BatchInput& in, std::span<std::int32_t> out);

}  // namespace rainbow::kernels
