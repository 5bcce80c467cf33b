#include "ensemble/crypto.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <memory>

namespace ensemble {

unsigned RsaKey::modulus_bits() const noexcept {
    return static_cast<unsigned>(std::bit_width(modulus));
}

std::uint64_t rsa_encrypt(std::uint64_t message, const RsaKey& key) {
    if (key.modulus < 2) {
        throw RangeError("RSA modulus must be at least 2");
    }
    __extension__ using u128 = unsigned __int128;
    std::uint64_t base = message % key.modulus;
    std::uint64_t result = 1 % key.modulus;
    for (std::uint64_t e = key.exponent; e != 0; e >>= 1) {
        if (e & 1U) {
            result = static_cast<std::uint64_t>(u128{result} * base % key.modulus);
        }
        base = static_cast<std::uint64_t>(u128{base} * base % key.modulus);
    }
    return result;
}

void McElieceKey::validate() const {
    if (rows.empty()) {
        throw RangeError("generator matrix needs at least one row");
    }
    if (n == 0 || n > 63) {
        throw RangeError("code length must be in 1..63, got " + std::to_string(n));
    }
    if (t_prime > n) {
        throw RangeError("error weight bound exceeds code length");
    }
    for (const auto row : rows) {
        if ((row & ~low_mask(n)) != 0) {
            throw RangeError("generator row wider than the code length");
        }
    }
}

McElieceKey parse_generator_matrix(std::istream& in, unsigned t_prime) {
    McElieceKey key;
    key.t_prime = t_prime;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        const auto last = line.find_last_not_of(" \t\r");
        const std::string row = line.substr(first, last - first + 1);
        std::uint64_t bits = 0;
        try {
            bits = parse_bitstring(row);
        } catch (const InputError& e) {
            throw InputError("matrix line " + std::to_string(line_no) + ": " + e.what());
        }
        if (key.rows.empty()) {
            key.n = static_cast<unsigned>(row.size());
        } else if (row.size() != key.n) {
            throw InputError("matrix line " + std::to_string(line_no) + " has " +
                             std::to_string(row.size()) + " columns, expected " +
                             std::to_string(key.n));
        }
        key.rows.push_back(bits);
    }
    if (key.rows.empty()) {
        throw InputError("matrix has no rows");
    }
    try {
        key.validate();
    } catch (const RangeError& e) {
        throw InputError(e.what());
    }
    return key;
}

McElieceKey load_generator_matrix(const std::string& path, unsigned t_prime) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open matrix file " + path);
    }
    return parse_generator_matrix(in, t_prime);
}

std::uint64_t mceliece_encrypt(std::uint64_t message, std::uint64_t error, const McElieceKey& key) {
    const unsigned k = key.k();
    if ((message & ~low_mask(k)) != 0) {
        throw RangeError("message wider than " + std::to_string(k) + " bits");
    }
    if ((error & ~low_mask(key.n)) != 0) {
        throw RangeError("error vector wider than the code length");
    }
    if (static_cast<unsigned>(std::popcount(error)) > key.t_prime) {
        throw RangeError("error vector weight " + std::to_string(std::popcount(error)) +
                         " exceeds t'=" + std::to_string(key.t_prime));
    }
    std::uint64_t codeword = 0;
    for (unsigned i = 0; i < k; ++i) {
        if ((message >> (k - 1 - i)) & 1U) {
            codeword ^= key.rows[i];
        }
    }
    return codeword ^ error;
}

namespace {

constexpr std::uint64_t kMaxErrorDomain = std::uint64_t{1} << 31;

std::uint64_t bounded_weight_count(unsigned n, unsigned t_prime) {
    std::uint64_t total = 0;
    std::uint64_t binom = 1;  // C(n, w)
    for (unsigned w = 0; w <= t_prime; ++w) {
        if (w > 0) {
            binom = binom * (n - w + 1) / w;
        }
        total += binom;
        if (total > kMaxErrorDomain) {
            throw CapacityError("error domain for n=" + std::to_string(n) + ", t'=" +
                                std::to_string(t_prime) + " exceeds 2^31 vectors");
        }
    }
    return total;
}

bool canonical_less(std::uint64_t a, std::uint64_t b) {
    const int wa = std::popcount(a);
    const int wb = std::popcount(b);
    return wa != wb ? wa < wb : a < b;
}

}  // namespace

ErrorIndexDomain::ErrorIndexDomain(unsigned n, unsigned t_prime) : n_(n), t_prime_(t_prime) {
    if (n == 0 || n > 63) {
        throw RangeError("code length must be in 1..63, got " + std::to_string(n));
    }
    if (t_prime > n) {
        throw RangeError("error weight bound exceeds code length");
    }
    vectors_.reserve(bounded_weight_count(n, t_prime));
    vectors_.push_back(0);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (unsigned w = 1; w <= t_prime; ++w) {
        // Gosper's hack walks the weight-w vectors in increasing order.
        std::uint64_t v = low_mask(w);
        while (v < limit) {
            vectors_.push_back(v);
            const std::uint64_t c = v & (~v + 1);
            const std::uint64_t r = v + c;
            v = (((r ^ v) >> 2) / c) | r;
        }
    }
    padded_ = pad_domain(vectors_.size());
}

std::optional<std::uint64_t> ErrorIndexDomain::index_of(std::uint64_t vector) const {
    const auto it = std::lower_bound(vectors_.begin(), vectors_.end(), vector, canonical_less);
    if (it == vectors_.end() || *it != vector) {
        return std::nullopt;
    }
    return static_cast<std::uint64_t>(it - vectors_.begin());
}

ErrorIndexDomain ErrorIndexDomain::truncated(unsigned bits) const {
    if (bits == 0 || bits > 31) {
        throw RangeError("index width must be in 1..31");
    }
    ErrorIndexDomain out;
    out.n_ = n_;
    out.t_prime_ = t_prime_;
    const std::uint64_t keep = std::min<std::uint64_t>(vectors_.size(), std::uint64_t{1} << bits);
    out.vectors_.assign(vectors_.begin(), vectors_.begin() + static_cast<std::ptrdiff_t>(keep));
    out.padded_.bits = bits;
    out.padded_.count = keep;
    return out;
}

ErrorIndexDomain enumerate_error_vectors(unsigned n, unsigned t_prime) {
    return ErrorIndexDomain(n, t_prime);
}

Encryptor make_rsa_encryptor(const RsaKey& key) {
    if (key.modulus < 2) {
        throw RangeError("RSA modulus must be at least 2");
    }
    Encryptor enc;
    enc.name = "rsa";
    enc.message_bits = key.modulus_bits();
    enc.randomness_bits = 0;
    enc.randomness_count = 1;
    enc.message_count = key.modulus;
    enc.encrypt = [key](std::uint64_t m, std::uint64_t) { return rsa_encrypt(m, key); };
    return enc;
}

Encryptor make_mceliece_encryptor(const McElieceKey& key, const ErrorIndexDomain& domain) {
    key.validate();
    if (domain.n() != key.n) {
        throw RangeError("error domain length does not match the code length");
    }
    if (domain.t_prime() > key.t_prime) {
        throw RangeError("error domain allows heavier vectors than the key");
    }
    auto vectors = std::make_shared<const std::vector<std::uint64_t>>(domain.vectors());
    Encryptor enc;
    enc.name = "mceliece";
    enc.message_bits = key.k();
    enc.randomness_bits = domain.index_bits();
    enc.randomness_count = domain.count();
    enc.encrypt = [key, vectors](std::uint64_t m, std::uint64_t r) {
        return mceliece_encrypt(m, vectors->at(r), key);
    };
    enc.randomness_value = [vectors](std::uint64_t r) { return vectors->at(r); };
    return enc;
}

AttackReport attack(const Encryptor& encryptor, std::uint64_t ciphertext,
                    const EngineConfig& config) {
    const PermutationOracle oracle = make_crypto_oracle(encryptor, ciphertext);
    const SearchResult search = one_query_search(oracle, config);

    AttackReport report;
    const auto [m, r] = encryptor.split(search.found);
    report.recovered_message = m;
    report.recovered_randomness_index = r;
    report.intensities = search.intensities;
    report.message_bits = encryptor.message_bits;
    report.randomness_bits = encryptor.randomness_bits;
    report.multiplicity = search.multiplicity;
    report.queries_used = search.queries_used;
    report.domain_points_evaluated = search.domain_points_evaluated;
    report.reencrypts_to_ciphertext =
        !encryptor.is_padding(search.found) && encryptor.encrypt(m, r) == ciphertext;
    if (!report.reencrypts_to_ciphertext) {
        throw VerificationFailed("recovered pair does not re-encrypt to the ciphertext");
    }
    if (encryptor.randomness_value) {
        report.recovered_error_vector = encryptor.randomness_value(r);
    }
    return report;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> brute_force_decrypt(
    const Encryptor& encryptor, std::uint64_t ciphertext) {
    if (encryptor.domain_bits() > 32) {
        throw CapacityError("brute force limited to 32-bit domains");
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    const std::uint64_t messages =
        encryptor.message_count.value_or(std::uint64_t{1} << encryptor.message_bits);
    for (std::uint64_t m = 0; m < messages; ++m) {
        for (std::uint64_t r = 0; r < encryptor.randomness_count; ++r) {
            if (encryptor.encrypt(m, r) == ciphertext) {
                out.emplace_back(m, r);
            }
        }
    }
    return out;
}

}  // namespace ensemble
