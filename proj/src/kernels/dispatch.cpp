#include <cstdlib>
#include <stdexcept>
#include <string>

#include "ensemble/kernels.hpp"

namespace ensemble::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &scalar::positional_popcount, &scalar::select_equal};
#if defined(__x86_64__) || defined(_M_X64)
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::positional_popcount, &avx2::select_equal};
#endif
#if defined(__aarch64__)
constexpr KernelTable kNeon{Isa::Neon, &neon::positional_popcount, &neon::select_equal};
#endif

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
        case Isa::Neon: return "neon";
    }
    return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) noexcept {
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
        if (name == isa_name(isa)) {
            return isa;
        }
    }
    return std::nullopt;
}

bool isa_available(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
        case Isa::Neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Isa best_isa() noexcept {
    if (isa_available(Isa::Avx2)) {
        return Isa::Avx2;
    }
    if (isa_available(Isa::Neon)) {
        return Isa::Neon;
    }
    return Isa::Scalar;
}

const KernelTable& table_for(Isa isa) {
    if (!isa_available(isa)) {
        throw std::invalid_argument("kernel ISA " + std::string(isa_name(isa)) +
                                    " is not available on this CPU");
    }
    switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::Avx2: return kAvx2;
#endif
#if defined(__aarch64__)
        case Isa::Neon: return kNeon;
#endif
        default: return kScalar;
    }
}

const KernelTable& active_table() {
    static const KernelTable& table = [] () -> const KernelTable& {
        if (const char* env = std::getenv("ENSEMBLE_KERNEL")) {
            if (auto isa = parse_isa(env); isa && isa_available(*isa)) {
                return table_for(*isa);
            }
        }
        return table_for(best_isa());
    }();
    return table;
}

}  // namespace ensemble::kernels
