#include "ensemble/register.hpp"

namespace ensemble {

std::string to_bitstring(std::uint64_t value, unsigned bits) {
    std::string out(bits, '0');
    for (unsigned i = 0; i < bits; ++i) {
        if ((value >> (bits - 1 - i)) & 1U) {
            out[i] = '1';
        }
    }
    return out;
}

std::uint64_t parse_bitstring(std::string_view text) {
    if (text.empty()) {
        throw InputError("empty bitstring");
    }
    if (text.size() > 64) {
        throw InputError("bitstring longer than 64 bits");
    }
    std::uint64_t value = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw InputError("invalid character '" + std::string(1, c) + "' in bitstring");
        }
        value = (value << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return value;
}

}  // namespace ensemble
