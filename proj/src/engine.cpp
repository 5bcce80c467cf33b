#include "ensemble/engine.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace ensemble {

std::string_view engine_mode_name(EngineMode mode) noexcept {
    return mode == EngineMode::Materialized ? "materialized" : "streaming";
}

std::optional<EngineMode> parse_engine_mode(std::string_view name) noexcept {
    if (name == "streaming") {
        return EngineMode::Streaming;
    }
    if (name == "materialized") {
        return EngineMode::Materialized;
    }
    return std::nullopt;
}

namespace {

constexpr std::size_t kBlock = 4096;

// Set-bit counts per ancilla bit and per data bit over one index range.
struct PartialCounts {
    std::vector<std::uint64_t> ancilla;
    std::vector<std::uint64_t> data;
};

PartialCounts count_range(const PermutationOracle& oracle, const MixtureSpec& mixture,
                          const kernels::KernelTable& kt, bool need_data, std::uint64_t begin,
                          std::uint64_t end) {
    const unsigned a = oracle.layout().ancilla_count();
    const unsigned d = oracle.layout().data_count();
    PartialCounts counts{std::vector<std::uint64_t>(a, 0), std::vector<std::uint64_t>(d, 0)};
    std::vector<std::uint64_t> xs(kBlock);
    std::vector<std::uint64_t> ys(kBlock);
    for (std::uint64_t start = begin; start < end; start += kBlock) {
        const auto n = static_cast<std::size_t>(std::min<std::uint64_t>(kBlock, end - start));
        for (std::size_t i = 0; i < n; ++i) {
            xs[i] = mixture.data_value(start + i);
        }
        const std::span<const std::uint64_t> in(xs.data(), n);
        const std::span<std::uint64_t> out(ys.data(), n);
        oracle.eval_batch(kt, in, out);
        if (a > 0) {
            kt.positional_popcount(out, a, counts.ancilla);
        }
        if (need_data) {
            kt.positional_popcount(in, d, counts.data);
        }
    }
    return counts;
}

EngineResult run_streaming(const PermutationOracle& oracle, const MixtureSpec& mixture,
                           std::span<const unsigned> probes, const EngineConfig& config) {
    const RegisterLayout& layout = oracle.layout();
    const unsigned d = layout.data_count();
    const kernels::KernelTable& kt =
        config.kernel ? kernels::table_for(*config.kernel) : kernels::active_table();

    bool need_data = false;
    for (unsigned q : probes) {
        need_data = need_data || layout.bit_of(q) < d;
    }

    const std::uint64_t total = mixture.size();
    const std::uint64_t parts = std::clamp<std::uint64_t>(config.partition_count, 1, total);
    unsigned workers = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
    workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, parts));

    std::vector<PartialCounts> partials(parts);
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned w) {
        try {
            for (std::uint64_t p = w; p < parts; p += workers) {
                const std::uint64_t begin = total / parts * p + std::min(p, total % parts);
                const std::uint64_t end = begin + total / parts + (p < total % parts ? 1 : 0);
                partials[p] = count_range(oracle, mixture, kt, need_data, begin, end);
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    PartialCounts sum{std::vector<std::uint64_t>(layout.ancilla_count(), 0),
                      std::vector<std::uint64_t>(d, 0)};
    for (const auto& part : partials) {
        for (std::size_t i = 0; i < sum.ancilla.size(); ++i) {
            sum.ancilla[i] += part.ancilla[i];
        }
        for (std::size_t i = 0; i < sum.data.size(); ++i) {
            sum.data[i] += part.data[i];
        }
    }

    EngineResult result;
    result.multiplicity = total;
    result.domain_points_evaluated = total;
    for (unsigned q : probes) {
        const unsigned bit = layout.bit_of(q);
        const std::uint64_t ones = bit >= d ? sum.ancilla[bit - d] : sum.data[bit];
        result.readings.push_back(
            {q, 2 * static_cast<std::int64_t>(ones) - static_cast<std::int64_t>(total)});
    }
    return result;
}

EngineResult run_materialized(const PermutationOracle& oracle, const MixtureSpec& mixture,
                              std::span<const unsigned> probes, const EngineConfig& config) {
    const MixedState after = apply_oracle(oracle, mixture.materialize(config.materialize_cap));
    EngineResult result;
    result.multiplicity = after.total_multiplicity();
    result.domain_points_evaluated = mixture.size();
    for (unsigned q : probes) {
        result.readings.push_back(measure_intensity(after, q));
    }
    return result;
}

}  // namespace

EngineResult run_engine(const PermutationOracle& oracle, const MixtureSpec& mixture,
                        std::span<const unsigned> probes, const EngineConfig& config) {
    if (!(oracle.layout() == mixture.layout())) {
        throw RangeError("oracle and mixture register layouts differ");
    }
    for (unsigned q : probes) {
        oracle.layout().bit_of(q);
    }
    return config.mode == EngineMode::Materialized
               ? run_materialized(oracle, mixture, probes, config)
               : run_streaming(oracle, mixture, probes, config);
}

}  // namespace ensemble
