#include "ensemble/oracle.hpp"

#include <random>
#include <vector>

namespace ensemble {

PermutationOracle::PermutationOracle(std::string kind, RegisterLayout layout,
                                     ClassicalFunction function,
                                     std::function<bool(std::uint64_t)> marks)
    : kind_(std::move(kind)),
      layout_(layout),
      function_(std::move(function)),
      marks_(std::move(marks)) {
    if (function_.arity != layout_.data_count() || function_.out_width != layout_.ancilla_count()) {
        throw RangeError("function shape " + std::to_string(function_.arity) + "->" +
                         std::to_string(function_.out_width) + " does not match register layout");
    }
    if (!function_.eval) {
        throw RangeError("oracle function has no evaluator");
    }
    if (!marks_) {
        throw RangeError("oracle has no marking predicate");
    }
}

void PermutationOracle::eval_batch(const kernels::KernelTable& kernels,
                                   std::span<const std::uint64_t> data,
                                   std::span<std::uint64_t> out) const {
    if (function_.eval_batch) {
        function_.eval_batch(kernels, data, out);
        const std::uint64_t mask = low_mask(layout_.ancilla_count());
        for (auto& y : out.first(data.size())) {
            y &= mask;
        }
        return;
    }
    for (std::size_t i = 0; i < data.size(); ++i) {
        out[i] = eval(data[i]);
    }
}

namespace {

void require_in_range(std::uint64_t z, unsigned data_bits) {
    if (data_bits == 0 || data_bits > 32) {
        throw RangeError("data width must be in 1..32, got " + std::to_string(data_bits));
    }
    if ((z & ~low_mask(data_bits)) != 0) {
        throw RangeError("target " + std::to_string(z) + " does not fit in " +
                         std::to_string(data_bits) + " bits");
    }
}

// f(x) = (x == key) ? value : 0, with a vectorized batch path.
ClassicalFunction point_function(unsigned arity, unsigned out_width, std::uint64_t key,
                                 std::uint64_t value) {
    ClassicalFunction f;
    f.arity = arity;
    f.out_width = out_width;
    f.eval = [key, value](std::uint64_t x) { return x == key ? value : 0; };
    f.eval_batch = [key, value](const kernels::KernelTable& k, std::span<const std::uint64_t> xs,
                                std::span<std::uint64_t> out) {
        k.select_equal(xs, key, value, out);
    };
    return f;
}

}  // namespace

PermutationOracle make_flip_oracle(std::uint64_t z, unsigned data_bits) {
    require_in_range(z, data_bits);
    return PermutationOracle("flip", RegisterLayout(1, data_bits), point_function(data_bits, 1, z, 1),
                             [z](std::uint64_t x) { return x == z; });
}

PermutationOracle make_copy_oracle(std::uint64_t z, unsigned data_bits) {
    require_in_range(z, data_bits);
    return PermutationOracle("copy", RegisterLayout(data_bits, data_bits),
                             point_function(data_bits, data_bits, z, z),
                             [z](std::uint64_t x) { return x == z; });
}

PermutationOracle make_function_oracle(ClassicalFunction function,
                                       std::function<bool(std::uint64_t)> marks) {
    if (!marks) {
        marks = [eval = function.eval](std::uint64_t x) { return eval(x) != 0; };
    }
    const RegisterLayout layout(function.out_width, function.arity);
    return PermutationOracle("function", layout, std::move(function), std::move(marks));
}

PermutationOracle make_crypto_oracle(Encryptor encryptor, std::uint64_t ciphertext) {
    const unsigned bits = encryptor.domain_bits();
    if (bits == 0 || bits > 32) {
        throw RangeError("attack domain must be 1..32 bits, got " + std::to_string(bits));
    }
    if (!encryptor.encrypt) {
        throw RangeError("encryptor has no encryption function");
    }
    auto predicate = [enc = encryptor, ciphertext](std::uint64_t x) {
        if (enc.is_padding(x)) {
            return false;
        }
        const auto [m, r] = enc.split(x);
        return enc.encrypt(m, r) == ciphertext;
    };
    ClassicalFunction f;
    f.arity = bits;
    f.out_width = bits;
    f.eval = [predicate](std::uint64_t x) { return predicate(x) ? x : 0; };
    return PermutationOracle("crypto:" + encryptor.name, RegisterLayout(bits, bits), std::move(f),
                             std::move(predicate));
}

MixedState apply_oracle(const PermutationOracle& oracle, const MixedState& state) {
    if (!(oracle.layout() == state.layout())) {
        throw RangeError("oracle and state register layouts differ");
    }
    std::vector<Component> out;
    out.reserve(state.components().size());
    for (const auto& c : state.components()) {
        out.push_back({oracle.apply(c.config), c.multiplicity});
    }
    MixedState result(state.layout(), std::move(out));
    if (result.total_multiplicity() != state.total_multiplicity()) {
        throw RangeError("oracle application changed the total multiplicity");
    }
    return result;
}

bool check_bijectivity(const PermutationOracle& oracle, unsigned cap) {
    const unsigned width = oracle.layout().width();
    if (width > cap) {
        throw CapacityError("exhaustive bijectivity check limited to " + std::to_string(cap) +
                            " bits, register has " + std::to_string(width));
    }
    const std::uint64_t size = std::uint64_t{1} << width;
    std::vector<bool> hit(size, false);
    for (std::uint64_t c = 0; c < size; ++c) {
        const std::uint64_t image = oracle.apply(c);
        if (image >= size || hit[image]) {
            return false;
        }
        hit[image] = true;
        if (oracle.apply(image) != c) {
            return false;
        }
    }
    return true;
}

bool sampled_involution_check(const PermutationOracle& oracle, std::uint64_t samples,
                              std::uint64_t seed) {
    const RegisterLayout& layout = oracle.layout();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, low_mask(layout.width()));
    for (std::uint64_t i = 0; i < samples; ++i) {
        const std::uint64_t c = pick(rng);
        const std::uint64_t image = oracle.apply(c);
        if (layout.data_part(image) != layout.data_part(c) || oracle.apply(image) != c) {
            return false;
        }
    }
    return true;
}

}  // namespace ensemble
