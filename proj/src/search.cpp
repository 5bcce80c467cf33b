#include "ensemble/search.hpp"

#include <bit>
#include <numeric>

namespace ensemble {

namespace {

void verify(const PermutationOracle& oracle, SearchResult& result) {
    result.verified = oracle.marks(result.found);
    if (!result.verified) {
        throw VerificationFailed("decoded element " + to_bitstring(result.found, result.bits) +
                                 " is not marked by the " + oracle.kind() + " oracle");
    }
}

}  // namespace

SearchResult one_query_search(const PermutationOracle& oracle, const EngineConfig& config) {
    const RegisterLayout& layout = oracle.layout();
    const unsigned d = layout.data_count();
    if (layout.ancilla_count() != d) {
        throw RangeError("one-query search needs as many ancillas as data qubits");
    }
    std::vector<unsigned> probes(d);
    std::iota(probes.begin(), probes.end(), 1U);

    const EngineResult run = run_engine(oracle, MixtureSpec::uniform(layout), probes, config);

    SearchResult result;
    result.bits = d;
    result.intensities = run.readings;
    result.multiplicity = run.multiplicity;
    result.queries_used = 1;
    result.domain_points_evaluated = run.domain_points_evaluated;
    for (const auto& reading : run.readings) {
        const int s = decode_sign(reading.value, run.multiplicity);
        result.found = (result.found << 1) | (s == 1 ? 1U : 0U);
    }
    verify(oracle, result);
    return result;
}

SearchResult bruschweiler_search(const PermutationOracle& oracle, const EngineConfig& config) {
    const RegisterLayout& layout = oracle.layout();
    if (layout.ancilla_count() != 1) {
        throw RangeError("log-N search needs a single-ancilla oracle");
    }
    const unsigned d = layout.data_count();
    const unsigned probe[] = {layout.ancilla_qubit(1)};

    SearchResult result;
    result.bits = d;
    for (unsigned i = 1; i <= d; ++i) {
        const auto mixture = MixtureSpec::conditional(layout, i, SpinValue::Alpha);
        const EngineResult run = run_engine(oracle, mixture, probe, config);
        const int s = decode_sign(run.readings.front().value, run.multiplicity);
        // A marked member among those with bit i = alpha means z_i = 0.
        result.found = (result.found << 1) | (s == 1 ? 0U : 1U);
        result.intensities.push_back(run.readings.front());
        result.multiplicity = run.multiplicity;
        result.domain_points_evaluated += run.domain_points_evaluated;
        ++result.queries_used;
    }
    verify(oracle, result);
    return result;
}

PaddedDomain pad_domain(std::uint64_t element_count) {
    if (element_count == 0) {
        throw RangeError("domain needs at least one element");
    }
    if (element_count > (std::uint64_t{1} << 62)) {
        throw RangeError("domain too large to pad");
    }
    PaddedDomain domain;
    domain.count = element_count;
    domain.bits = std::max(1U, static_cast<unsigned>(std::bit_width(element_count - 1)));
    return domain;
}

}  // namespace ensemble
