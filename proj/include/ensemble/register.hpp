#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ensemble/errors.hpp"

namespace ensemble {

// alpha (spin up) encodes bit 0, beta (spin down) encodes bit 1.
enum class SpinValue : std::uint8_t { Alpha = 0, Beta = 1 };

constexpr int sign(SpinValue s) noexcept { return s == SpinValue::Beta ? +1 : -1; }
constexpr SpinValue spin_of_bit(std::uint64_t bit) noexcept {
    return (bit & 1U) != 0 ? SpinValue::Beta : SpinValue::Alpha;
}
constexpr char spin_symbol(SpinValue s) noexcept { return s == SpinValue::Beta ? 'b' : 'a'; }

inline constexpr unsigned kMaxWidth = 64;

constexpr std::uint64_t low_mask(unsigned bits) noexcept {
    return bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
}

// Ancilla register followed by data register. Register positions are
// 1-based and MSB-first: position 1 is the first ancilla, position a+1 the
// first data qubit. In the packed word the ancilla group occupies the high
// bits, so position q lives at bit (width - q).
class RegisterLayout {
public:
    RegisterLayout(unsigned ancilla_count, unsigned data_count)
        : ancilla_(ancilla_count), data_(data_count) {
        if (data_count == 0) {
            throw RangeError("register layout needs at least one data qubit");
        }
        if (ancilla_count + data_count > kMaxWidth) {
            throw RangeError("register width " + std::to_string(ancilla_count + data_count) +
                             " exceeds " + std::to_string(kMaxWidth));
        }
    }

    unsigned ancilla_count() const noexcept { return ancilla_; }
    unsigned data_count() const noexcept { return data_; }
    unsigned width() const noexcept { return ancilla_ + data_; }

    // Register position of ancilla i / data qubit i (both 1-based).
    unsigned ancilla_qubit(unsigned i) const {
        if (i < 1 || i > ancilla_) {
            throw RangeError("ancilla index " + std::to_string(i) + " out of range 1.." +
                             std::to_string(ancilla_));
        }
        return i;
    }
    unsigned data_qubit(unsigned i) const {
        if (i < 1 || i > data_) {
            throw RangeError("data index " + std::to_string(i) + " out of range 1.." +
                             std::to_string(data_));
        }
        return ancilla_ + i;
    }

    unsigned bit_of(unsigned register_position) const {
        if (register_position < 1 || register_position > width()) {
            throw RangeError("qubit " + std::to_string(register_position) + " out of range 1.." +
                             std::to_string(width()));
        }
        return width() - register_position;
    }

    std::uint64_t pack(std::uint64_t ancilla, std::uint64_t data) const noexcept {
        return ancilla_ == 0 ? data : ((ancilla << data_) | data);
    }
    std::uint64_t ancilla_part(std::uint64_t config) const noexcept {
        return ancilla_ == 0 ? 0 : (config >> data_) & low_mask(ancilla_);
    }
    std::uint64_t data_part(std::uint64_t config) const noexcept { return config & low_mask(data_); }

    friend bool operator==(const RegisterLayout&, const RegisterLayout&) = default;

private:
    unsigned ancilla_;
    unsigned data_;
};

// MSB-first '0'/'1' rendering of the low `bits` bits of `value`.
std::string to_bitstring(std::uint64_t value, unsigned bits);

// Parses an MSB-first '0'/'1' string; throws InputError on any other character
// or when longer than 64 characters.
std::uint64_t parse_bitstring(std::string_view text);

}  // namespace ensemble
