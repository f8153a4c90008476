#include <atomic>
#include <cstdlib>
#include <string_view>

#include "rainbow/kernels.hpp"

namespace rainbow::kernels {
namespace {

Isa detect() noexcept {
    if (const char* env = std::getenv("RAINBOW_SIMD"); env != nullptr && std::string_view(env) == "scalar") {
        return Isa::Scalar;
    }
    return avx2_available() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& selected() noexcept {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

}  // namespace

Isa active_isa() noexcept {
    return selected().load(std::memory_order_relaxed);
}

void set_isa(Isa isa) noexcept {
    if (isa == Isa::Avx2 && !avx2_available()) {
        isa = Isa::Scalar;
    }
    selected().store(isa, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) noexcept {
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

void evaluate(const BatchInput& in, std::span<std::int32_t> out) {
    if (active_isa() == Isa::Avx2) {
        evaluate_avx2(in, out);
    } else {
        evaluate_scalar(in, out);
    }
}

}  // namespace rainbow::kernels
