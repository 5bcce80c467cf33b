#pragma once

// Inner loops of the enumeration engine. Each kernel has a scalar reference
// and vector variants; the variant is picked at runtime from the CPU's
// capabilities and every variant must match the scalar one bit for bit.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace ensemble::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa) noexcept;
std::optional<Isa> parse_isa(std::string_view name) noexcept;

bool isa_available(Isa isa) noexcept;

// Widest ISA this CPU supports.
Isa best_isa() noexcept;

// counts[b] += number of words with bit b set, for b < bits (bits <= 64).
using PositionalPopcountFn = void (*)(std::span<const std::uint64_t> words, unsigned bits,
                                      std::span<std::uint64_t> counts);

// out[i] = (xs[i] == key) ? value : 0.
using SelectEqualFn = void (*)(std::span<const std::uint64_t> xs, std::uint64_t key,
                               std::uint64_t value, std::span<std::uint64_t> out);

struct KernelTable {
    Isa isa;
    PositionalPopcountFn positional_popcount;
    SelectEqualFn select_equal;
};

// Throws std::invalid_argument if `isa` is not available on this CPU.
const KernelTable& table_for(Isa isa);

// best_isa(), unless the ENSEMBLE_KERNEL environment variable names another
// available ISA ("scalar", "avx2", "neon").
const KernelTable& active_table();

namespace scalar {
void positional_popcount(std::span<const std::uint64_t> words, unsigned bits,
                         std::span<std::uint64_t> counts);
void select_equal(std::span<const std::uint64_t> xs, std::uint64_t key, std::uint64_t value,
                  std::span<std::uint64_t> out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void positional_popcount(std::span<const std::uint64_t> words, unsigned bits,
                         std::span<std::uint64_t> counts);
void select_equal(std::span<const std::uint64_t> xs, std::uint64_t key, std::uint64_t value,
                  std::span<std::uint64_t> out);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void positional_popcount(std::span<const std::uint64_t> words, unsigned bits,
                         std::span<std::uint64_t> counts);
void select_equal(std::span<const std::uint64_t> xs, std::uint64_t key, std::uint64_t value,
                  std::span<std::uint64_t> out);
}  // namespace neon
#endif

}  // namespace ensemble::kernels
