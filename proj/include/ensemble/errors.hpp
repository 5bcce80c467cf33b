#pragma once

#include <stdexcept>
#include <string>

namespace ensemble {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Index, width or value outside the register it addresses.
class RangeError : public Error {
public:
    using Error::Error;
};

// Requested mixture or check is larger than the configured materialization cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

// Decoded sign fell outside {-1, +1}: the oracle marked more than one
// component at the probed qubit.
class AmbiguousMarking : public Error {
public:
    AmbiguousMarking(long long intensity, unsigned long long multiplicity, long long decoded)
        : Error("ambiguous marking: intensity " + std::to_string(intensity) + " with M=" +
                std::to_string(multiplicity) + " decodes to " + std::to_string(decoded)),
          intensity_(intensity),
          multiplicity_(multiplicity),
          decoded_(decoded) {}

    long long intensity() const noexcept { return intensity_; }
    unsigned long long multiplicity() const noexcept { return multiplicity_; }
    long long decoded() const noexcept { return decoded_; }

private:
    long long intensity_;
    unsigned long long multiplicity_;
    long long decoded_;
};

// The assembled search output does not satisfy the oracle predicate.
class VerificationFailed : public Error {
public:
    using Error::Error;
};

// Malformed external input (matrix files, bitstrings).
class InputError : public Error {
public:
    using Error::Error;
};

}  // namespace ensemble
