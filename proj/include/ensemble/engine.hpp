#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ensemble/kernels.hpp"
#include "ensemble/liouville.hpp"
#include "ensemble/oracle.hpp"

namespace ensemble {

enum class EngineMode { Streaming, Materialized };

std::string_view engine_mode_name(EngineMode mode) noexcept;
std::optional<EngineMode> parse_engine_mode(std::string_view name) noexcept;

struct EngineConfig {
    EngineMode mode = EngineMode::Streaming;
    // Contiguous index ranges the domain is split into; results never
    // depend on this value.
    unsigned partition_count = 1;
    // Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
    // Largest data width the materialized mode will expand.
    unsigned materialize_cap = kDefaultMaterializeCap;
    // Kernel ISA; unset uses kernels::active_table().
    std::optional<kernels::Isa> kernel;
};

struct EngineResult {
    std::vector<IntensityReading> readings;  // one per probe, in probe order
    std::uint64_t multiplicity = 0;          // M of the prepared mixture
    std::uint64_t domain_points_evaluated = 0;
};

// Prepares `mixture`, applies `oracle` once and returns the summed sign at
// each probe position. Exact integer arithmetic; identical for every
// partition count, thread count, mode and kernel ISA.
EngineResult run_engine(const PermutationOracle& oracle, const MixtureSpec& mixture,
                        std::span<const unsigned> probes, const EngineConfig& config = {});

}  // namespace ensemble
