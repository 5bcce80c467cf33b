#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "ensemble/kernels.hpp"
#include "ensemble/liouville.hpp"
#include "ensemble/register.hpp"

namespace ensemble {

// Total map from `arity`-bit data values to `out_width`-bit outputs.
// `eval_batch`, when set, must agree with `eval` element-wise; it lets the
// engine use vectorized kernels for the common oracle shapes.
struct ClassicalFunction {
    unsigned arity = 0;
    unsigned out_width = 0;
    std::function<std::uint64_t(std::uint64_t)> eval;
    std::function<void(const kernels::KernelTable&, std::span<const std::uint64_t>,
                       std::span<std::uint64_t>)>
        eval_batch;
};

// Public encryption map over a padded (message, randomness-index) domain.
// Randomness indices >= randomness_count are padding and never encrypt to
// anything the attack can mark.
struct Encryptor {
    std::string name;
    unsigned message_bits = 0;
    unsigned randomness_bits = 0;
    std::uint64_t randomness_count = 1;
    // Messages >= message_count are padding (RSA: residues below N only).
    // Unset means every message_bits value is a message.
    std::optional<std::uint64_t> message_count;
    std::function<std::uint64_t(std::uint64_t message, std::uint64_t randomness_index)> encrypt;
    // Optional: the randomness value behind an index (e.g. an error vector).
    std::function<std::uint64_t(std::uint64_t randomness_index)> randomness_value;

    unsigned domain_bits() const noexcept { return message_bits + randomness_bits; }
    std::uint64_t join(std::uint64_t message, std::uint64_t randomness_index) const noexcept {
        return (message << randomness_bits) | randomness_index;
    }
    std::pair<std::uint64_t, std::uint64_t> split(std::uint64_t x) const noexcept {
        return {x >> randomness_bits, x & low_mask(randomness_bits)};
    }
    bool is_padding(std::uint64_t x) const noexcept {
        const auto [m, r] = split(x);
        return r >= randomness_count || (message_count && m >= *message_count);
    }
};

// Reversible oracle (y, x) -> (y XOR f(x), x) on an ancilla+data register.
// `marks` is the classical predicate the search verifies its output against.
class PermutationOracle {
public:
    PermutationOracle(std::string kind, RegisterLayout layout, ClassicalFunction function,
                      std::function<bool(std::uint64_t)> marks);

    const std::string& kind() const noexcept { return kind_; }
    const RegisterLayout& layout() const noexcept { return layout_; }
    const ClassicalFunction& function() const noexcept { return function_; }

    std::uint64_t eval(std::uint64_t data) const { return function_.eval(data) & low_mask(layout_.ancilla_count()); }
    void eval_batch(const kernels::KernelTable& kernels, std::span<const std::uint64_t> data,
                    std::span<std::uint64_t> out) const;
    bool marks(std::uint64_t data) const { return marks_(data); }

    std::uint64_t apply(std::uint64_t config) const {
        const std::uint64_t data = layout_.data_part(config);
        return config ^ layout_.pack(eval(data), 0);
    }

private:
    std::string kind_;
    RegisterLayout layout_;
    ClassicalFunction function_;
    std::function<bool(std::uint64_t)> marks_;
};

// Single-ancilla oracle flipping the readout spin at x == z.
PermutationOracle make_flip_oracle(std::uint64_t z, unsigned data_bits);

// d-ancilla oracle writing z into the ancillas at x == z, nothing elsewhere.
PermutationOracle make_copy_oracle(std::uint64_t z, unsigned data_bits);

// d-ancilla oracle for an arbitrary function; marks defaults to f(x) != 0.
PermutationOracle make_function_oracle(ClassicalFunction function,
                                       std::function<bool(std::uint64_t)> marks = {});

// Ciphertext oracle: writes (m', r') into the ancillas iff E(m', r') == C.
PermutationOracle make_crypto_oracle(Encryptor encryptor, std::uint64_t ciphertext);

MixedState apply_oracle(const PermutationOracle& oracle, const MixedState& state);

// Exhaustive bijection and involution check over every width-bit
// configuration. Throws CapacityError above `cap` bits.
bool check_bijectivity(const PermutationOracle& oracle, unsigned cap = 20);

// Double application on `samples` random configurations returns the input.
bool sampled_involution_check(const PermutationOracle& oracle, std::uint64_t samples,
                              std::uint64_t seed);

}  // namespace ensemble
