#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ensemble/engine.hpp"
#include "ensemble/oracle.hpp"
#include "ensemble/search.hpp"

namespace ensemble {

// Toy RSA public key. Messages are modulus_bits() wide so the register
// covers every residue; values >= modulus are reduced before encryption.
struct RsaKey {
    std::uint64_t exponent = 0;
    std::uint64_t modulus = 0;

    unsigned modulus_bits() const noexcept;
};

std::uint64_t rsa_encrypt(std::uint64_t message, const RsaKey& key);

// Public generator matrix over GF(2). Row i holds column j at bit
// (n - 1 - j), i.e. rows read MSB-first like their text form.
struct McElieceKey {
    std::vector<std::uint64_t> rows;
    unsigned n = 0;
    unsigned t_prime = 0;

    unsigned k() const noexcept { return static_cast<unsigned>(rows.size()); }
    void validate() const;
};

// Text form: one row per line of '0'/'1', all rows the same length. Blank
// lines and lines starting with '#' are skipped. Throws InputError.
McElieceKey parse_generator_matrix(std::istream& in, unsigned t_prime);
McElieceKey load_generator_matrix(const std::string& path, unsigned t_prime);

// mG XOR r, where message bit 1 (MSB) selects row 1. Throws RangeError if
// weight(r) > t'.
std::uint64_t mceliece_encrypt(std::uint64_t message, std::uint64_t error, const McElieceKey& key);

// All n-bit vectors of weight <= t', ordered by weight then numeric value.
class ErrorIndexDomain {
public:
    ErrorIndexDomain(unsigned n, unsigned t_prime);

    unsigned n() const noexcept { return n_; }
    unsigned t_prime() const noexcept { return t_prime_; }
    std::uint64_t count() const noexcept { return vectors_.size(); }
    unsigned index_bits() const noexcept { return padded_.bits; }
    const PaddedDomain& padded() const noexcept { return padded_; }
    const std::vector<std::uint64_t>& vectors() const noexcept { return vectors_; }
    std::uint64_t vector_at(std::uint64_t index) const { return vectors_.at(index); }
    std::optional<std::uint64_t> index_of(std::uint64_t vector) const;

    // First 2^bits vectors under a register of exactly `bits` index bits.
    ErrorIndexDomain truncated(unsigned bits) const;

private:
    ErrorIndexDomain() = default;

    unsigned n_ = 0;
    unsigned t_prime_ = 0;
    std::vector<std::uint64_t> vectors_;
    PaddedDomain padded_;
};

ErrorIndexDomain enumerate_error_vectors(unsigned n, unsigned t_prime);

Encryptor make_rsa_encryptor(const RsaKey& key);
Encryptor make_mceliece_encryptor(const McElieceKey& key, const ErrorIndexDomain& domain);

struct AttackReport {
    std::uint64_t recovered_message = 0;
    std::uint64_t recovered_randomness_index = 0;
    std::optional<std::uint64_t> recovered_error_vector;
    std::vector<IntensityReading> intensities;  // every ancilla, message ancillas first
    unsigned message_bits = 0;
    unsigned randomness_bits = 0;
    std::uint64_t multiplicity = 0;
    unsigned queries_used = 0;
    std::uint64_t domain_points_evaluated = 0;
    bool reencrypts_to_ciphertext = false;
};

// Builds the ciphertext oracle and runs the one-query search over the full
// (message, randomness-index) register. Throws VerificationFailed when the
// decoded pair does not re-encrypt to the ciphertext.
AttackReport attack(const Encryptor& encryptor, std::uint64_t ciphertext,
                    const EngineConfig& config = {});

// Every (message, randomness-index) pair encrypting to the ciphertext, by
// linear scan of the unpadded domain.
std::vector<std::pair<std::uint64_t, std::uint64_t>> brute_force_decrypt(
    const Encryptor& encryptor, std::uint64_t ciphertext);

}  // namespace ensemble
