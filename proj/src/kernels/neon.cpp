#include "ensemble/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <array>

namespace ensemble::kernels::neon {

void positional_popcount(std::span<const std::uint64_t> words, unsigned bits,
                         std::span<std::uint64_t> counts) {
    uint64x2_t acc[64];
    for (unsigned b = 0; b < bits; ++b) {
        acc[b] = vdupq_n_u64(0);
    }
    const std::size_t n = words.size();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint64x2_t v = vld1q_u64(words.data() + i);
        if (vmaxvq_u32(vreinterpretq_u32_u64(v)) == 0) {
            continue;
        }
        for (unsigned b = 0; b < bits; ++b) {
            const uint64x2_t m = vdupq_n_u64(std::uint64_t{1} << b);
            acc[b] = vsubq_u64(acc[b], vceqq_u64(vandq_u64(v, m), m));
        }
    }
    for (unsigned b = 0; b < bits; ++b) {
        counts[b] += vgetq_lane_u64(acc[b], 0) + vgetq_lane_u64(acc[b], 1);
    }
    for (; i < n; ++i) {
        for (unsigned b = 0; b < bits; ++b) {
            counts[b] += (words[i] >> b) & 1U;
        }
    }
}

void select_equal(std::span<const std::uint64_t> xs, std::uint64_t key, std::uint64_t value,
                  std::span<std::uint64_t> out) {
    const uint64x2_t k = vdupq_n_u64(key);
    const uint64x2_t v = vdupq_n_u64(value);
    const std::size_t n = xs.size();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_u64(out.data() + i, vandq_u64(vceqq_u64(vld1q_u64(xs.data() + i), k), v));
    }
    for (; i < n; ++i) {
        out[i] = xs[i] == key ? value : 0;
    }
}

}  // namespace ensemble::kernels::neon

#endif
