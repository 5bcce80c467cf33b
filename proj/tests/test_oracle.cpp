#include <doctest.h>

#include <random>

#include "ensemble/crypto.hpp"
#include "ensemble/oracle.hpp"
#include "oracles.hpp"

using namespace ensemble;

namespace {

PermutationOracle random_table_oracle(std::mt19937_64& rng, unsigned d, unsigned a) {
    std::vector<std::uint64_t> table(std::uint64_t{1} << d);
    for (auto& v : table) {
        v = rng() & low_mask(a);
    }
    ClassicalFunction f;
    f.arity = d;
    f.out_width = a;
    f.eval = [table](std::uint64_t x) { return table[x]; };
    return make_function_oracle(f);
}

McElieceKey reference_key() {
    McElieceKey key;
    key.rows = {0b11010101, 0b10001111};
    key.n = 8;
    key.t_prime = 2;
    return key;
}

}  // namespace

TEST_CASE("flip oracle") {
    const auto o = make_flip_oracle(0b001, 3);
    CHECK(o.layout().ancilla_count() == 1);
    for (std::uint64_t x = 0; x < 8; ++x) {
        const std::uint64_t expected = x == 1 ? o.layout().pack(1, x) : o.layout().pack(0, x);
        CHECK(o.apply(o.layout().pack(0, x)) == expected);
    }

    const auto o0 = make_flip_oracle(0, 1);
    CHECK(o0.eval(0) == 1);
    CHECK(o0.eval(1) == 0);

    for (unsigned d = 1; d <= 4; ++d) {
        for (std::uint64_t z = 0; z < (std::uint64_t{1} << d); ++z) {
            const auto oz = make_flip_oracle(z, d);
            const auto hits = oracles::linear_scan([&](std::uint64_t x) { return oz.eval(x) == 1; }, d);
            REQUIRE(hits.size() == 1);
            CHECK(hits.front() == z);
        }
    }
    CHECK_THROWS_AS(make_flip_oracle(8, 3), RangeError);
}

TEST_CASE("copy oracle") {
    const auto o = make_copy_oracle(0b001, 3);
    CHECK(o.layout().ancilla_count() == 3);
    // marked component: ancillas (alpha, alpha, beta)
    CHECK(o.apply(o.layout().pack(0, 1)) == o.layout().pack(0b001, 1));

    const auto two_bit = make_copy_oracle(0b10, 2);
    CHECK(two_bit.eval(0) == 0);
    CHECK(two_bit.eval(1) == 0);
    CHECK(two_bit.eval(2) == 2);
    CHECK(two_bit.eval(3) == 0);
    CHECK(check_bijectivity(two_bit));

    // z = 0 writes the zero pattern: indistinguishable from no mark.
    const auto zero = make_copy_oracle(0, 3);
    const auto s = uniform_data_mixture(zero.layout());
    CHECK(apply_oracle(zero, s) == s);
    CHECK(zero.marks(0));

    CHECK_THROWS_AS(make_copy_oracle(4, 2), RangeError);
    CHECK_THROWS_AS(make_copy_oracle(0, 33), RangeError);
}

TEST_CASE("apply oracle") {
    const auto o = make_copy_oracle(1, 3);
    const auto after = apply_oracle(o, uniform_data_mixture(o.layout()));
    int marked = 0;
    for (const auto& c : after.components()) {
        if (o.layout().ancilla_part(c.config) != 0) {
            ++marked;
            CHECK(o.layout().ancilla_part(c.config) == 0b001);
            CHECK(o.layout().data_part(c.config) == 1);
        }
    }
    CHECK(marked == 1);
    CHECK(after.total_multiplicity() == 8);

    ClassicalFunction zero;
    zero.arity = 3;
    zero.out_width = 2;
    zero.eval = [](std::uint64_t) { return std::uint64_t{0}; };
    const auto id = make_function_oracle(zero);
    const auto s = uniform_data_mixture(id.layout());
    CHECK(apply_oracle(id, s) == s);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned d = 1 + static_cast<unsigned>(rng() % 5);
        const unsigned a = 1 + static_cast<unsigned>(rng() % 4);
        const auto ro = random_table_oracle(rng, d, a);
        const auto in = uniform_data_mixture(ro.layout());
        const auto out = apply_oracle(ro, in);
        CHECK(out.total_multiplicity() == in.total_multiplicity());
        for (const auto& c : out.components()) {
            const auto x = ro.layout().data_part(c.config);
            CHECK(ro.layout().ancilla_part(c.config) == ro.function().eval(x));
        }
    }

    CHECK_THROWS_AS(apply_oracle(make_copy_oracle(1, 3), uniform_data_mixture(RegisterLayout(1, 3))),
                    RangeError);
}

TEST_CASE("bijectivity and involution") {
    std::mt19937_64 rng(23);
    for (unsigned d = 1; d <= 6; ++d) {
        for (std::uint64_t z = 0; z < (std::uint64_t{1} << d); ++z) {
            CHECK(check_bijectivity(make_copy_oracle(z, d)));
            CHECK(check_bijectivity(make_flip_oracle(z, d)));
        }
        const auto ro = random_table_oracle(rng, d, d);
        CHECK(check_bijectivity(ro));
        // data part is fixed by every application
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << ro.layout().width()); ++c) {
            CHECK(ro.layout().data_part(ro.apply(c)) == ro.layout().data_part(c));
        }
    }
    CHECK(sampled_involution_check(make_copy_oracle(12345, 16), 10000, 1));
    CHECK(sampled_involution_check(random_table_oracle(rng, 16, 4), 10000, 2));
    CHECK_THROWS_AS(check_bijectivity(make_copy_oracle(1, 11)), CapacityError);
}

TEST_CASE("copy oracle intensities match the closed form, exhaustive d <= 10") {
    for (unsigned d = 1; d <= 10; ++d) {
        const auto base = uniform_data_mixture(RegisterLayout(d, d));
        const auto m = static_cast<std::int64_t>(base.total_multiplicity());
        for (std::uint64_t z = 0; z < (std::uint64_t{1} << d); ++z) {
            const auto after = apply_oracle(make_copy_oracle(z, d), base);
            for (unsigned i = 1; i <= d; ++i) {
                const std::int64_t bit = (z >> (d - i)) & 1U;
                CHECK(measure_intensity(after, i).value == -m + 2 * bit);
            }
        }
    }
}

TEST_CASE("crypto oracle") {
    const auto rsa = make_rsa_encryptor({7, 15});
    const auto o = make_crypto_oracle(rsa, 2);
    const auto hits = oracles::linear_scan([&](std::uint64_t x) { return o.eval(x) != 0; }, 4);
    REQUIRE(hits.size() == 1);
    CHECK(hits.front() == 8);
    CHECK(o.eval(8) == 8);

    const auto key = reference_key();
    const auto domain = enumerate_error_vectors(8, 2);
    const auto mce = make_mceliece_encryptor(key, domain);
    const auto om = make_crypto_oracle(mce, 0b01010011);
    const auto mh = oracles::linear_scan([&](std::uint64_t x) { return om.marks(x); }, mce.domain_bits());
    REQUIRE(mh.size() == 1);
    const auto [m, r] = mce.split(mh.front());
    CHECK(m == 0b11);
    CHECK(domain.vector_at(r) == 0b00001001);
    CHECK(om.eval(mh.front()) == mh.front());

    // 3 is not a square mod 8: empty preimage
    const auto sq = make_crypto_oracle(make_rsa_encryptor({2, 8}), 3);
    CHECK(oracles::linear_scan([&](std::uint64_t x) { return sq.eval(x) != 0; }, 4).empty());

    // padding indices never mark, even if their index would decode
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << mce.domain_bits()); ++x) {
        if (mce.is_padding(x)) {
            CHECK_FALSE(om.marks(x));
            CHECK(om.eval(x) == 0);
        }
    }
}

TEST_CASE("crypto oracle marks exactly the preimage set") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const RsaKey key{1 + rng() % 20, 2 + rng() % 500};
        const auto enc = make_rsa_encryptor(key);
        const std::uint64_t c = rng() % key.modulus;
        const auto o = make_crypto_oracle(enc, c);
        const auto marked = oracles::linear_scan([&](std::uint64_t x) { return o.marks(x); },
                                                 enc.domain_bits());
        for (auto x : marked) {
            CHECK(oracles::naive_modpow(x, key.exponent, key.modulus) == c);
        }
        const auto pre = brute_force_decrypt(enc, c);
        CHECK(pre.size() == marked.size());
    }
}
