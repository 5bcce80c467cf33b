#include "ensemble/kernels.hpp"

namespace ensemble::kernels::scalar {

void positional_popcount(std::span<const std::uint64_t> words, unsigned bits,
                         std::span<std::uint64_t> counts) {
    for (const std::uint64_t w : words) {
        for (unsigned b = 0; b < bits; ++b) {
            counts[b] += (w >> b) & 1U;
        }
    }
}

void select_equal(std::span<const std::uint64_t> xs, std::uint64_t key, std::uint64_t value,
                  std::span<std::uint64_t> out) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out[i] = xs[i] == key ? value : 0;
    }
}

}  // namespace ensemble::kernels::scalar
