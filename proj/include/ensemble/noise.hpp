#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace ensemble {

// Single-trial readout error. Each trial adds Gaussian noise with standard
// deviation delta * M to the exact intensity; the reading is the mean over
// `trials` trials.
struct NoiseModel {
    double delta = 1.0;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;

    static NoiseModel from_exponent(unsigned k, std::uint64_t trials, std::uint64_t seed);
    void validate() const;
};

struct NoisyReading {
    double mean_intensity = 0.0;
    double mean_stddev = 0.0;  // delta * M / sqrt(trials)
    int decoded_bit = 0;
    std::optional<bool> correct;
};

// Up to this many trials are drawn one by one; beyond it the mean is drawn
// directly from its exact distribution N(S, (delta M)^2 / trials).
inline constexpr std::uint64_t kExplicitTrialLimit = 256;

// `stream` selects an independent random stream under model.seed, so a
// reading never depends on how many others were taken before it.
NoisyReading noisy_measure(std::int64_t true_intensity, std::uint64_t multiplicity,
                           const NoiseModel& model, std::uint64_t stream = 0);

// Smallest trial count with delta/sqrt(N) < 2^-n for delta = 2^-k, i.e. the
// smallest integer above 2^(2(n-k)); 1 when k >= n.
std::uint64_t required_trials(unsigned n, unsigned k);

// Same bound for arbitrary delta: smallest N with (delta 2^n)^2 < N, 1 when
// delta 2^n <= 1.
std::uint64_t required_trials_for_delta(unsigned n, double delta);

struct CrossoverRecord {
    long double domain_size = 0;
    double delta = 0;
    long double ours_cost = 0;         // N sqrt(N)
    long double bruschweiler_cost = 0; // N sqrt(N) log2(N)
    long double budget = 0;            // delta^-2
    bool ours_beats_grover = false;
    bool bruschweiler_beats_grover = false;
};

CrossoverRecord crossover(long double domain_size, double delta);

// ceil((pi/4) sqrt(N)).
std::uint64_t grover_queries(long double domain_size);

struct SuccessPoint {
    std::uint64_t trials = 0;
    std::uint64_t repetitions = 0;
    std::uint64_t all_bits_successes = 0;
    std::uint64_t bit_successes = 0;
    unsigned bits_per_repetition = 0;

    double all_bits_rate() const noexcept;
    double per_bit_rate() const noexcept;
};

struct SuccessCurve {
    unsigned n = 0;
    unsigned k = 0;
    std::uint64_t seed = 0;
    std::vector<SuccessPoint> points;
};

// Monte Carlo over random targets z: each repetition measures the n ancilla
// intensities of the one-query search (-M + 2 z_i, M = 2^n) with
// delta = 2^-k and decodes them. Deterministic for a seed, for any `threads`.
SuccessCurve success_curve(unsigned n, unsigned k, std::span<const std::uint64_t> trial_grid,
                           std::uint64_t repetitions, std::uint64_t seed, unsigned threads = 0);

void write_success_csv(std::ostream& out, const SuccessCurve& curve);

}  // namespace ensemble
