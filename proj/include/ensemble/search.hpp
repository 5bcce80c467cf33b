#pragma once

#include <cstdint>
#include <vector>

#include "ensemble/engine.hpp"
#include "ensemble/liouville.hpp"
#include "ensemble/oracle.hpp"

namespace ensemble {

struct SearchResult {
    std::uint64_t found = 0;
    unsigned bits = 0;
    // One-query search: one reading per ancilla. Log-N search: one ancilla
    // reading per query, in query order.
    std::vector<IntensityReading> intensities;
    std::uint64_t multiplicity = 0;  // M of each prepared mixture
    unsigned queries_used = 0;
    std::uint64_t domain_points_evaluated = 0;
    bool verified = false;
};

// Uniform mixture, one application of a copy-form oracle (ancilla width ==
// data width), sign decode of every ancilla. Throws AmbiguousMarking or
// VerificationFailed.
SearchResult one_query_search(const PermutationOracle& oracle, const EngineConfig& config = {});

// d queries of a single-ancilla flip oracle, query i on the mixture with
// data qubit i pinned to alpha. Throws AmbiguousMarking or VerificationFailed.
SearchResult bruschweiler_search(const PermutationOracle& oracle, const EngineConfig& config = {});

// Element count padded up to a power of two. Indices >= count are sentinels.
struct PaddedDomain {
    unsigned bits = 1;
    std::uint64_t count = 1;

    std::uint64_t size() const noexcept { return std::uint64_t{1} << bits; }
    std::uint64_t sentinel_count() const noexcept { return size() - count; }
    bool is_sentinel(std::uint64_t index) const noexcept { return index >= count; }
};

PaddedDomain pad_domain(std::uint64_t element_count);

}  // namespace ensemble
