#include "ensemble/liouville.hpp"

#include <algorithm>
#include <sstream>

#include "ensemble/oracle.hpp"

namespace ensemble {

MixedState::MixedState(RegisterLayout layout, std::vector<Component> components)
    : layout_(layout), components_(std::move(components)) {
    const std::uint64_t mask = low_mask(layout_.width());
    for (const auto& c : components_) {
        if ((c.config & ~mask) != 0) {
            throw RangeError("configuration wider than the register");
        }
        if (c.multiplicity == 0) {
            throw RangeError("component multiplicity must be positive");
        }
    }
    std::sort(components_.begin(), components_.end(),
              [](const Component& a, const Component& b) { return a.config < b.config; });
    std::vector<Component> merged;
    merged.reserve(components_.size());
    for (const auto& c : components_) {
        if (!merged.empty() && merged.back().config == c.config) {
            merged.back().multiplicity += c.multiplicity;
        } else {
            merged.push_back(c);
        }
        total_ += c.multiplicity;
    }
    components_ = std::move(merged);
    if (total_ == 0) {
        throw RangeError("mixed state needs at least one component");
    }
}

std::string MixedState::to_string() const {
    std::ostringstream out;
    for (const auto& c : components_) {
        out << to_bitstring(c.config, layout_.width()) << " x" << c.multiplicity << '\n';
    }
    return out.str();
}

MixtureSpec::MixtureSpec(RegisterLayout layout, std::optional<DataPin> pin)
    : layout_(layout), pin_(pin) {
    if (layout_.data_count() > 63) {
        throw RangeError("mixture data width above 63 bits");
    }
    if (pin_) {
        layout_.data_qubit(pin_->data_index);
        pin_bit_ = layout_.data_count() - pin_->data_index;
    }
}

MixtureSpec MixtureSpec::conditional(RegisterLayout layout, unsigned data_index, SpinValue value) {
    return MixtureSpec(layout, DataPin{data_index, value});
}

std::uint64_t MixtureSpec::size() const noexcept {
    const unsigned free_bits = layout_.data_count() - (pin_ ? 1U : 0U);
    return std::uint64_t{1} << free_bits;
}

MixedState MixtureSpec::materialize(unsigned cap) const {
    if (layout_.data_count() > cap) {
        throw CapacityError("data width " + std::to_string(layout_.data_count()) +
                            " exceeds materialization cap " + std::to_string(cap));
    }
    std::vector<Component> components;
    components.reserve(size());
    for (std::uint64_t i = 0; i < size(); ++i) {
        components.push_back({layout_.pack(0, data_value(i)), 1});
    }
    return MixedState(layout_, std::move(components));
}

MixedState uniform_data_mixture(RegisterLayout layout, unsigned cap) {
    return MixtureSpec::uniform(layout).materialize(cap);
}

MixedState conditional_data_mixture(RegisterLayout layout, unsigned data_index, SpinValue value,
                                    unsigned cap) {
    return MixtureSpec::conditional(layout, data_index, value).materialize(cap);
}

IntensityReading measure_intensity(const MixedState& state, unsigned qubit) {
    const unsigned bit = state.layout().bit_of(qubit);
    std::int64_t sum = 0;
    for (const auto& c : state.components()) {
        const auto m = static_cast<std::int64_t>(c.multiplicity);
        sum += sign(spin_of_bit(c.config >> bit)) * m;
    }
    return {qubit, sum};
}

int decode_sign(std::int64_t intensity, std::uint64_t multiplicity) {
    const auto m = static_cast<std::int64_t>(multiplicity);
    if (multiplicity == 0 || intensity > m || intensity < -m || ((intensity + m) & 1) != 0) {
        throw RangeError("intensity " + std::to_string(intensity) +
                         " is not a legal reading for M=" + std::to_string(multiplicity));
    }
    const std::int64_t decoded = intensity + (m - 1);
    if (decoded != -1 && decoded != 1) {
        throw AmbiguousMarking(intensity, multiplicity, decoded);
    }
    return static_cast<int>(decoded);
}

namespace {

void require_single_ancilla(const PermutationOracle& oracle) {
    if (oracle.layout().ancilla_count() != 1) {
        throw RangeError("oracle must have exactly one ancilla");
    }
}

}  // namespace

int mixed_sum_evaluate(const PermutationOracle& oracle, const MixedState& state) {
    require_single_ancilla(oracle);
    for (const auto& c : state.components()) {
        if (state.layout().ancilla_part(c.config) != 0) {
            throw RangeError("mixed sum needs every ancilla in the alpha state");
        }
    }
    const MixedState after = apply_oracle(oracle, state);
    const IntensityReading reading = measure_intensity(after, after.layout().ancilla_qubit(1));
    return decode_sign(reading.value, after.total_multiplicity()) == 1 ? 1 : 0;
}

int trace_formula_eval(const PermutationOracle& oracle, std::uint64_t data) {
    require_single_ancilla(oracle);
    const RegisterLayout& layout = oracle.layout();
    if ((data & ~low_mask(layout.data_count())) != 0) {
        throw RangeError("data configuration wider than the data register");
    }
    const MixedState input(layout, {{layout.pack(0, data), 1}});
    const MixedState rotated = apply_oracle(oracle, input);

    // 2 Tr{rho I0z}: I0z is +1/2 on alpha and -1/2 on beta.
    const unsigned bit = layout.bit_of(layout.ancilla_qubit(1));
    std::int64_t twice_trace = 0;
    for (const auto& c : rotated.components()) {
        const bool beta = ((c.config >> bit) & 1U) != 0;
        twice_trace += (beta ? -1 : 1) * static_cast<std::int64_t>(c.multiplicity);
    }
    // f = 1/2 - Tr = (1 - 2 Tr) / 2
    return static_cast<int>((1 - twice_trace) / 2);
}

}  // namespace ensemble
