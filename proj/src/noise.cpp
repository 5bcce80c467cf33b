#include "ensemble/noise.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <random>
#include <thread>

#include "ensemble/errors.hpp"

namespace ensemble {

namespace {

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t stream_key(std::uint64_t a, std::uint64_t b, std::uint64_t c) noexcept {
    return mix64(a ^ mix64(b ^ mix64(c)));
}

// SplitMix64 keyed by (seed, stream): a counter-based source, so every
// (reading, trial) draw is fixed by its coordinates alone.
class StreamRng {
public:
    using result_type = std::uint64_t;

    StreamRng(std::uint64_t seed, std::uint64_t stream) noexcept
        : state_(mix64(seed) ^ mix64(stream + 0x632be59bd9b4e019ULL)) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }
    result_type operator()() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

}  // namespace

NoiseModel NoiseModel::from_exponent(unsigned k, std::uint64_t trials, std::uint64_t seed) {
    NoiseModel model{std::ldexp(1.0, -static_cast<int>(k)), trials, seed};
    model.validate();
    return model;
}

void NoiseModel::validate() const {
    if (!(delta > 0.0) || delta > 1.0) {
        throw RangeError("measurement error delta must lie in (0, 1]");
    }
    if (trials == 0) {
        throw RangeError("trial count must be at least 1");
    }
}

NoisyReading noisy_measure(std::int64_t true_intensity, std::uint64_t multiplicity,
                           const NoiseModel& model, std::uint64_t stream) {
    model.validate();
    const auto m = static_cast<std::int64_t>(multiplicity);
    if (multiplicity == 0 || true_intensity > m || true_intensity < -m) {
        throw RangeError("intensity outside [-M, M]");
    }
    const double sigma = model.delta * static_cast<double>(multiplicity);
    const double trials = static_cast<double>(model.trials);

    StreamRng rng(model.seed, stream);
    NoisyReading reading;
    reading.mean_stddev = sigma / std::sqrt(trials);
    double noise = 0.0;
    if (model.trials <= kExplicitTrialLimit) {
        std::normal_distribution<double> trial(0.0, sigma);
        for (std::uint64_t t = 0; t < model.trials; ++t) {
            noise += trial(rng);
        }
        noise /= trials;
    } else {
        noise = std::normal_distribution<double>(0.0, reading.mean_stddev)(rng);
    }
    reading.mean_intensity = static_cast<double>(true_intensity) + noise;

    // Midpoint of -M and -M + 2; a tie decodes to 0.
    const double threshold = static_cast<double>(-m + 1);
    reading.decoded_bit = reading.mean_intensity > threshold ? 1 : 0;
    if (true_intensity == -m) {
        reading.correct = reading.decoded_bit == 0;
    } else if (true_intensity == -m + 2) {
        reading.correct = reading.decoded_bit == 1;
    }
    return reading;
}

std::uint64_t required_trials(unsigned n, unsigned k) {
    if (n == 0) {
        throw RangeError("data width must be at least 1");
    }
    if (k >= n) {
        return 1;
    }
    const unsigned exponent = 2 * (n - k);
    if (exponent > 62) {
        throw RangeError("trial count 2^" + std::to_string(exponent) + " overflows");
    }
    return (std::uint64_t{1} << exponent) + 1;
}

std::uint64_t required_trials_for_delta(unsigned n, double delta) {
    if (n == 0 || !(delta > 0.0)) {
        throw RangeError("need n >= 1 and delta > 0");
    }
    const long double scaled = static_cast<long double>(delta) * std::ldexp(1.0L, static_cast<int>(n));
    if (scaled <= 1.0L) {
        return 1;
    }
    const long double bound = scaled * scaled;
    if (bound >= 0x1p62L) {
        throw RangeError("trial count overflows");
    }
    return static_cast<std::uint64_t>(std::floor(bound)) + 1;
}

CrossoverRecord crossover(long double domain_size, double delta) {
    if (domain_size < 2.0L || !(delta > 0.0)) {
        throw RangeError("crossover needs N >= 2 and delta > 0");
    }
    CrossoverRecord rec;
    rec.domain_size = domain_size;
    rec.delta = delta;
    rec.ours_cost = domain_size * std::sqrt(domain_size);
    rec.bruschweiler_cost = rec.ours_cost * std::log2(domain_size);
    const long double d = delta;
    rec.budget = 1.0L / (d * d);
    rec.ours_beats_grover = rec.ours_cost < rec.budget;
    rec.bruschweiler_beats_grover = rec.bruschweiler_cost < rec.budget;
    return rec;
}

std::uint64_t grover_queries(long double domain_size) {
    if (domain_size < 1.0L) {
        throw RangeError("domain size must be positive");
    }
    return static_cast<std::uint64_t>(
        std::ceil(std::numbers::pi_v<long double> / 4.0L * std::sqrt(domain_size)));
}

double SuccessPoint::all_bits_rate() const noexcept {
    return repetitions == 0 ? 0.0
                            : static_cast<double>(all_bits_successes) / static_cast<double>(repetitions);
}

double SuccessPoint::per_bit_rate() const noexcept {
    return repetitions == 0 ? 0.0 : static_cast<double>(bit_successes) /
                                        static_cast<double>(repetitions * bits_per_repetition);
}

SuccessCurve success_curve(unsigned n, unsigned k, std::span<const std::uint64_t> trial_grid,
                           std::uint64_t repetitions, std::uint64_t seed, unsigned threads) {
    if (n == 0 || n > 62) {
        throw RangeError("data width must be in 1..62");
    }
    if (trial_grid.empty()) {
        throw RangeError("trial grid is empty");
    }
    if (repetitions == 0) {
        throw RangeError("need at least one repetition");
    }
    const std::uint64_t multiplicity = std::uint64_t{1} << n;
    const auto m = static_cast<std::int64_t>(multiplicity);
    const double delta = std::ldexp(1.0, -static_cast<int>(k));

    SuccessCurve curve;
    curve.n = n;
    curve.k = k;
    curve.seed = seed;

    unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
    workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, repetitions));

    for (std::size_t g = 0; g < trial_grid.size(); ++g) {
        const NoiseModel model{delta, trial_grid[g], seed};
        model.validate();

        std::vector<SuccessPoint> partial(workers);
        std::vector<std::exception_ptr> errors(workers);
        auto work = [&](unsigned w) {
            try {
                const std::uint64_t begin = repetitions * w / workers;
                const std::uint64_t end = repetitions * (w + 1) / workers;
                for (std::uint64_t rep = begin; rep < end; ++rep) {
                    // The target depends on the repetition only, so grid
                    // points share targets.
                    StreamRng target_rng(seed, stream_key(0xA11CE, rep, 0));
                    const std::uint64_t z = target_rng() & (multiplicity - 1);
                    bool all = true;
                    for (unsigned i = 1; i <= n; ++i) {
                        const std::uint64_t bit = (z >> (n - i)) & 1U;
                        const std::int64_t exact = -m + 2 * static_cast<std::int64_t>(bit);
                        const NoisyReading r =
                            noisy_measure(exact, multiplicity, model, stream_key(g + 1, rep, i));
                        const bool ok = *r.correct;
                        partial[w].bit_successes += ok ? 1 : 0;
                        all = all && ok;
                    }
                    partial[w].all_bits_successes += all ? 1 : 0;
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back(work, w);
            }
        }
        for (const auto& e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }

        SuccessPoint point;
        point.trials = trial_grid[g];
        point.repetitions = repetitions;
        point.bits_per_repetition = n;
        for (const auto& p : partial) {
            point.all_bits_successes += p.all_bits_successes;
            point.bit_successes += p.bit_successes;
        }
        curve.points.push_back(point);
    }
    return curve;
}

void write_success_csv(std::ostream& out, const SuccessCurve& curve) {
    out << "n,k,trials,repetitions,per_bit_success,all_bits_success\n";
    for (const auto& p : curve.points) {
        char per_bit[32];
        char all_bits[32];
        std::snprintf(per_bit, sizeof per_bit, "%.6f", p.per_bit_rate());
        std::snprintf(all_bits, sizeof all_bits, "%.6f", p.all_bits_rate());
        out << curve.n << ',' << curve.k << ',' << p.trials << ',' << p.repetitions << ','
            << per_bit << ',' << all_bits << '\n';
    }
}

}  // namespace ensemble
