#include "ensemble/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <array>

namespace ensemble::kernels::avx2 {

namespace {

__attribute__((target("avx2"))) std::uint64_t lane_sum(__m256i v) {
    alignas(32) std::array<std::uint64_t, 4> lanes{};
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), v);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

}  // namespace

// Per-bit accumulators hold four 64-bit lane counters each; all-zero vectors
// are skipped, which is the common case for single-marked oracles.
__attribute__((target("avx2"))) void positional_popcount(std::span<const std::uint64_t> words,
                                                         unsigned bits,
                                                         std::span<std::uint64_t> counts) {
    __m256i acc[64];
    for (unsigned b = 0; b < bits; ++b) {
        acc[b] = _mm256_setzero_si256();
    }
    const std::size_t n = words.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words.data() + i));
        if (_mm256_testz_si256(v, v)) {
            continue;
        }
        for (unsigned b = 0; b < bits; ++b) {
            const __m256i m = _mm256_set1_epi64x(static_cast<long long>(std::uint64_t{1} << b));
            // cmpeq yields -1 in lanes with the bit set
            acc[b] = _mm256_sub_epi64(acc[b], _mm256_cmpeq_epi64(_mm256_and_si256(v, m), m));
        }
    }
    for (unsigned b = 0; b < bits; ++b) {
        counts[b] += lane_sum(acc[b]);
    }
    for (; i < n; ++i) {
        for (unsigned b = 0; b < bits; ++b) {
            counts[b] += (words[i] >> b) & 1U;
        }
    }
}

__attribute__((target("avx2"))) void select_equal(std::span<const std::uint64_t> xs,
                                                  std::uint64_t key, std::uint64_t value,
                                                  std::span<std::uint64_t> out) {
    const __m256i k = _mm256_set1_epi64x(static_cast<long long>(key));
    const __m256i v = _mm256_set1_epi64x(static_cast<long long>(value));
    const std::size_t n = xs.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xs.data() + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i),
                            _mm256_and_si256(_mm256_cmpeq_epi64(x, k), v));
    }
    for (; i < n; ++i) {
        out[i] = xs[i] == key ? value : 0;
    }
}

}  // namespace ensemble::kernels::avx2

#endif
