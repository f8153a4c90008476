#include "rainbow/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define RAINBOW_HAVE_X86 1
#else
#define RAINBOW_HAVE_X86 0
#endif

namespace rainbow::kernels {

#if RAINBOW_HAVE_X86

bool avx2_available() noexcept {
    return __builtin_cpu_supports("avx2");
}

__attribute__((target("avx2"))) void evaluate_avx2(const BatchInput& in, std::span<std::int32_t> out) {
    const std::size_t count = out.size();
    const std::size_t core = in.adjacency.size();
    const int* costs = in.costs.data();

    const __m256i zero = _mm256_setzero_si256();
    const __m256i one = _mm256_set1_epi32(1);
    const __m256i two = _mm256_set1_epi32(2);
    const __m256i four = _mm256_set1_epi32(4);
    const __m256i conflict = _mm256_set1_epi32(kConflict);
    const __m256i infeasible = _mm256_set1_epi32(kInfeasible);
    const __m256i prefix_ones = _mm256_set1_epi32(static_cast<int>(in.prefix_ones));
    const __m256i prefix_twos = _mm256_set1_epi32(static_cast<int>(in.prefix_twos));

    std::size_t i = 0;
    for (; i + 8 <= count; i += 8) {
        const __m256i ones = _mm256_or_si256(
            prefix_ones, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in.suffix_ones.data() + i)));
        const __m256i twos = _mm256_or_si256(
            prefix_twos, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in.suffix_twos.data() + i)));
        __m256i total = zero;
        for (std::size_t v = 0; v < core; ++v) {
            const __m256i bit = _mm256_set1_epi32(static_cast<int>(std::uint32_t{1} << v));
            const __m256i nbrs = _mm256_set1_epi32(static_cast<int>(in.adjacency[v]));
            // All-ones lanes where the condition is false.
            const __m256i not_one = _mm256_cmpeq_epi32(_mm256_and_si256(ones, bit), zero);
            const __m256i not_two = _mm256_cmpeq_epi32(_mm256_and_si256(twos, bit), zero);
            const __m256i blind_one = _mm256_cmpeq_epi32(_mm256_and_si256(ones, nbrs), zero);
            const __m256i blind_two = _mm256_cmpeq_epi32(_mm256_and_si256(twos, nbrs), zero);

            __m256i state = _mm256_add_epi32(
                four, _mm256_add_epi32(_mm256_andnot_si256(blind_one, one), _mm256_andnot_si256(blind_two, two)));
            state = _mm256_blendv_epi8(two, state, not_two);
            state = _mm256_blendv_epi8(one, state, not_one);
            state = _mm256_add_epi32(state, _mm256_set1_epi32(static_cast<int>(v * kStatesPerVertex)));
            total = _mm256_add_epi32(total, _mm256_i32gather_epi32(costs, state, 4));

            const __m256i clean =
                _mm256_and_si256(_mm256_or_si256(not_one, blind_one), _mm256_or_si256(not_two, blind_two));
            total = _mm256_add_epi32(total, _mm256_andnot_si256(clean, conflict));
        }
        total = _mm256_min_epi32(total, infeasible);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), total);
    }
    if (i < count) {
        BatchInput tail = in;
        tail.suffix_ones = in.suffix_ones.subspan(i);
        tail.suffix_twos = in.suffix_twos.subspan(i);
        evaluate_scalar(tail, out.subspan(i));
    }
}

#else

bool avx2_available() noexcept {
    return false;
}

void evaluate_avx2(const BatchInput& in, std::span<std::int32_t> out) {
    evaluate_scalar(in, out);
}

#endif

}  // namespace rainbow::kernels
