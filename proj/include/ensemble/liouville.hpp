#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ensemble/register.hpp"

namespace ensemble {

class PermutationOracle;

inline constexpr unsigned kDefaultMaterializeCap = 20;

// One basis configuration of the register with its multiplicity. The
// configuration is the packed word described by RegisterLayout.
struct Component {
    std::uint64_t config = 0;
    std::uint64_t multiplicity = 1;

    friend bool operator==(const Component&, const Component&) = default;
};

// Diagonal density in spin Liouville space: a weighted multiset of basis
// configurations. Components are kept sorted by config with no duplicates.
class MixedState {
public:
    MixedState(RegisterLayout layout, std::vector<Component> components);

    const RegisterLayout& layout() const noexcept { return layout_; }
    std::span<const Component> components() const noexcept { return components_; }
    std::uint64_t total_multiplicity() const noexcept { return total_; }

    // One component per line, "<bitstring> x<multiplicity>", ancillas first.
    std::string to_string() const;

    friend bool operator==(const MixedState&, const MixedState&) = default;

private:
    RegisterLayout layout_;
    std::vector<Component> components_;
    std::uint64_t total_ = 0;
};

struct DataPin {
    unsigned data_index = 1;  // 1-based, MSB-first within the data group
    SpinValue value = SpinValue::Alpha;

    friend bool operator==(const DataPin&, const DataPin&) = default;
};

// Implicit description of the mixtures the search algorithms prepare: all
// ancillas alpha, data ranging over every configuration (optionally with one
// data qubit pinned), multiplicity one each. Streamed by the engine and only
// materialized on request.
class MixtureSpec {
public:
    static MixtureSpec uniform(RegisterLayout layout) { return MixtureSpec(layout, std::nullopt); }
    static MixtureSpec conditional(RegisterLayout layout, unsigned data_index, SpinValue value);

    const RegisterLayout& layout() const noexcept { return layout_; }
    const std::optional<DataPin>& pin() const noexcept { return pin_; }

    // Number of members, which is also M.
    std::uint64_t size() const noexcept;

    // Data value of the index-th member, members ordered by ascending data value.
    std::uint64_t data_value(std::uint64_t index) const noexcept {
        if (!pin_) {
            return index;
        }
        const std::uint64_t low = index & low_mask(pin_bit_);
        const std::uint64_t high = pin_bit_ >= 63 ? 0 : (index >> pin_bit_) << (pin_bit_ + 1);
        return high | (static_cast<std::uint64_t>(pin_->value) << pin_bit_) | low;
    }

    MixedState materialize(unsigned cap = kDefaultMaterializeCap) const;

private:
    MixtureSpec(RegisterLayout layout, std::optional<DataPin> pin);

    RegisterLayout layout_;
    std::optional<DataPin> pin_;
    unsigned pin_bit_ = 0;
};

struct IntensityReading {
    unsigned qubit = 0;      // register position
    std::int64_t value = 0;  // summed signs

    friend bool operator==(const IntensityReading&, const IntensityReading&) = default;
};

// All ancillas alpha, data over all 2^d configurations. Throws CapacityError
// when d exceeds `cap`.
MixedState uniform_data_mixture(RegisterLayout layout, unsigned cap = kDefaultMaterializeCap);

// As uniform_data_mixture, with data qubit `data_index` pinned to `value`.
MixedState conditional_data_mixture(RegisterLayout layout, unsigned data_index, SpinValue value,
                                    unsigned cap = kDefaultMaterializeCap);

IntensityReading measure_intensity(const MixedState& state, unsigned qubit);

// S + (M - 1), which must be -1 (nothing marked) or +1 (one component marked).
int decode_sign(std::int64_t intensity, std::uint64_t multiplicity);

// Sum of a single-ancilla predicate over the mixture's data values, computed
// from one oracle application. Valid when that sum is 0 or 1.
int mixed_sum_evaluate(const PermutationOracle& oracle, const MixedState& state);

// f(s) = 1/2 - Tr{U I0^alpha s U^dagger I0z} on the diagonal representation,
// with I0z eigenvalues +1/2 (alpha) and -1/2 (beta).
int trace_formula_eval(const PermutationOracle& oracle, std::uint64_t data);

}  // namespace ensemble
