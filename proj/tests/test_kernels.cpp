#include <doctest.h>

#include <random>
#include <vector>

#include "ensemble/kernels.hpp"

using namespace ensemble::kernels;

namespace {

std::vector<Isa> available_vector_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::Avx2, Isa::Neon}) {
        if (isa_available(isa)) {
            out.push_back(isa);
        }
    }
    return out;
}

std::vector<std::uint64_t> naive_counts(const std::vector<std::uint64_t>& words, unsigned bits) {
    std::vector<std::uint64_t> c(64, 0);
    for (auto w : words) {
        for (unsigned b = 0; b < bits; ++b) {
            c[b] += (w >> b) & 1U;
        }
    }
    return c;
}

}  // namespace

TEST_CASE("isa names round trip") {
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
        CHECK(parse_isa(isa_name(isa)) == isa);
    }
    CHECK_FALSE(parse_isa("sse9").has_value());
    CHECK(isa_available(Isa::Scalar));
    CHECK(isa_available(best_isa()));
    CHECK(table_for(Isa::Scalar).isa == Isa::Scalar);
}

TEST_CASE("scalar positional popcount against a naive count") {
    std::mt19937_64 rng(1);
    for (unsigned bits : {1U, 7U, 32U, 63U, 64U}) {
        std::vector<std::uint64_t> words(1000);
        for (auto& w : words) {
            w = rng();
        }
        std::vector<std::uint64_t> counts(64, 0);
        scalar::positional_popcount(words, bits, counts);
        const auto expected = naive_counts(words, bits);
        CHECK(counts == expected);
    }
}

TEST_CASE("vector kernels match scalar") {
    const auto isas = available_vector_isas();
    if (isas.empty()) {
        MESSAGE("no vector ISA on this machine; scalar only");
        return;
    }
    std::mt19937_64 rng(2);
    for (Isa isa : isas) {
        const auto& t = table_for(isa);
        for (std::size_t len : {0UL, 1UL, 3UL, 4UL, 5UL, 31UL, 64UL, 1000UL, 4099UL}) {
            for (unsigned bits : {1U, 2U, 13U, 31U, 32U, 33U, 63U, 64U}) {
                for (int sparse = 0; sparse < 3; ++sparse) {
                    std::vector<std::uint64_t> words(len);
                    for (auto& w : words) {
                        // dense, sparse (mostly zero), and all-ones
                        w = sparse == 0 ? rng() : sparse == 1 ? (rng() % 17 == 0 ? rng() : 0) : ~0ULL;
                    }
                    std::vector<std::uint64_t> a(64, 5), b(64, 5);
                    scalar::positional_popcount(words, bits, a);
                    t.positional_popcount(words, bits, b);
                    CHECK(a == b);
                }
            }
            std::vector<std::uint64_t> xs(len);
            for (auto& x : xs) {
                x = rng() % 4;
            }
            std::vector<std::uint64_t> a(len, 9), b(len, 9);
            scalar::select_equal(xs, 2, 0xabcdef, a);
            t.select_equal(xs, 2, 0xabcdef, b);
            CHECK(a == b);
        }
    }
}

TEST_CASE("select equal") {
    const std::vector<std::uint64_t> xs{0, 5, 7, 5, ~0ULL};
    std::vector<std::uint64_t> out(xs.size());
    scalar::select_equal(xs, 5, 42, out);
    CHECK(out == std::vector<std::uint64_t>{0, 42, 0, 42, 0});
    scalar::select_equal(xs, ~0ULL, 1, out);
    CHECK(out == std::vector<std::uint64_t>{0, 0, 0, 0, 1});
}
