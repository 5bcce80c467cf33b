#include "ensemble/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "ensemble/crypto.hpp"
#include "ensemble/engine.hpp"
#include "ensemble/noise.hpp"
#include "ensemble/oracle.hpp"
#include "ensemble/search.hpp"

namespace ensemble::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EngineFlags {
    std::string mode = "streaming";
    unsigned partitions = 1;
    unsigned threads = 0;
    std::string kernel = "auto";
    unsigned materialize_cap = kDefaultMaterializeCap;

    void attach(CLI::App& app) {
        app.add_option("--engine", mode, "Engine mode: streaming | materialized")
            ->check(CLI::IsMember({"streaming", "materialized"}));
        app.add_option("--partitions", partitions, "Domain partitions (results do not depend on it)")
            ->check(CLI::Range(1U, 1U << 20));
        app.add_option("--threads", threads, "Worker threads, 0 = hardware concurrency");
        app.add_option("--kernel", kernel, "Kernel ISA: auto | scalar | avx2 | neon")
            ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));
        app.add_option("--materialize-cap", materialize_cap,
                       "Largest data width the materialized engine expands");
    }

    EngineConfig config() const {
        EngineConfig c;
        c.mode = *parse_engine_mode(mode);
        c.partition_count = partitions;
        c.threads = threads;
        c.materialize_cap = materialize_cap;
        if (kernel != "auto") {
            const auto isa = kernels::parse_isa(kernel);
            if (!isa || !kernels::isa_available(*isa)) {
                throw UsageError("kernel " + kernel + " is not available on this CPU");
            }
            c.kernel = isa;
        }
        return c;
    }
};

struct OutputFlags {
    bool json = false;
    bool timing = false;

    void attach(CLI::App& app) {
        app.add_flag("--json", json, "Emit a single JSON document");
        app.add_flag("--timing", timing, "Include wall time in the counters");
    }
};

json readings_json(const std::vector<IntensityReading>& readings) {
    json arr = json::array();
    for (const auto& r : readings) {
        arr.push_back(r.value);
    }
    return arr;
}

std::string join_readings(const std::vector<IntensityReading>& readings) {
    std::string s;
    for (std::size_t i = 0; i < readings.size(); ++i) {
        s += (i ? ", " : "") + std::to_string(readings[i].value);
    }
    return s;
}

json record(std::string_view subcommand, json params, std::optional<std::uint64_t> seed) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["subcommand"] = subcommand;
    doc["params"] = std::move(params);
    doc["result"] = json::object();
    doc["counters"] = json::object();
    doc["seed"] = seed ? json(*seed) : json(nullptr);
    return doc;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Decimal, or MSB-first binary with a 0b prefix.
std::uint64_t parse_value(const std::string& text, const char* what) {
    try {
        if (text.rfind("0b", 0) == 0) {
            return parse_bitstring(text.substr(2));
        }
        std::size_t used = 0;
        const unsigned long long v = std::stoull(text, &used, 10);
        if (used != text.size() || text.front() == '-') {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("invalid ") + what + " '" + text + "'");
    }
}

// Reports a search failure in the requested format and returns exit code 2.
int report_failure(std::ostream& out, std::ostream& err, const OutputFlags& flags, json doc,
                   const char* status, const std::string& message) {
    if (flags.json) {
        doc["result"]["status"] = status;
        doc["result"]["error"] = message;
        emit(out, doc);
    }
    err << "error: " << message << '\n';
    return kExitSearchFailed;
}

// ---------------------------------------------------------------- search

struct SearchFlags {
    unsigned bits = 0;
    std::optional<std::string> target;
    bool random = false;
    std::string algo = "one-query";
    std::uint64_t seed = 0;
    unsigned max_bits = 30;
    bool dump_state = false;
    EngineFlags engine;
    OutputFlags output;
};

int cmd_search(const SearchFlags& f, std::ostream& out, std::ostream& err) {
    if (f.bits == 0 || f.bits > f.max_bits) {
        throw UsageError("--bits must be in 1.." + std::to_string(f.max_bits));
    }
    if (f.target.has_value() == f.random) {
        throw UsageError("give exactly one of --target and --random");
    }
    std::uint64_t z = 0;
    if (f.random) {
        std::mt19937_64 rng(f.seed);
        z = std::uniform_int_distribution<std::uint64_t>(0, low_mask(f.bits))(rng);
    } else {
        z = parse_value(*f.target, "target");
        if ((z & ~low_mask(f.bits)) != 0) {
            throw UsageError("target does not fit in " + std::to_string(f.bits) + " bits");
        }
    }
    const EngineConfig config = f.engine.config();
    const bool one_query = f.algo == "one-query";

    json params;
    params["bits"] = f.bits;
    params["target"] = z;
    params["random"] = f.random;
    params["algo"] = f.algo;
    json doc = record("search", params, f.random ? std::optional(f.seed) : std::nullopt);

    const auto start = std::chrono::steady_clock::now();
    const PermutationOracle oracle = one_query ? make_copy_oracle(z, f.bits) : make_flip_oracle(z, f.bits);
    SearchResult result;
    try {
        result = one_query ? one_query_search(oracle, config) : bruschweiler_search(oracle, config);
    } catch (const AmbiguousMarking& e) {
        return report_failure(out, err, f.output, doc, "ambiguous_marking", e.what());
    } catch (const VerificationFailed& e) {
        return report_failure(out, err, f.output, doc, "verification_failed", e.what());
    }
    const double wall = elapsed_ms(start);

    std::string state_dump;
    if (f.dump_state) {
        if (!one_query) {
            throw UsageError("--dump-state is only available for the one-query search");
        }
        state_dump = apply_oracle(oracle, uniform_data_mixture(oracle.layout(), config.materialize_cap))
                         .to_string();
    }

    if (f.output.json) {
        auto& r = doc["result"];
        r["status"] = "ok";
        r["found"] = result.found;
        r["found_bits"] = to_bitstring(result.found, result.bits);
        r["intensities"] = readings_json(result.intensities);
        r["multiplicity"] = result.multiplicity;
        r["verified"] = result.verified;
        if (f.dump_state) {
            r["state"] = state_dump;
        }
        doc["counters"]["queries_used"] = result.queries_used;
        doc["counters"]["domain_points_evaluated"] = result.domain_points_evaluated;
        if (f.output.timing) {
            doc["counters"]["wall_time_ms"] = wall;
        }
        emit(out, doc);
    } else {
        out << "algorithm      " << f.algo << '\n'
            << "bits           " << f.bits << "  (M = " << result.multiplicity << " per query)\n"
            << "target         " << z << " (" << to_bitstring(z, f.bits) << ")\n"
            << "intensities    " << join_readings(result.intensities) << '\n'
            << "found          " << result.found << " (" << to_bitstring(result.found, result.bits)
            << ")" << (result.verified ? "  verified" : "") << '\n'
            << "queries_used   " << result.queries_used << '\n'
            << "domain_points  " << result.domain_points_evaluated << '\n';
        if (f.output.timing) {
            out << "wall_time_ms   " << wall << '\n';
        }
        if (f.dump_state) {
            out << "post-oracle state:\n" << state_dump;
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------- attacks

json attack_result_json(const AttackReport& report) {
    json r;
    r["status"] = "ok";
    r["message"] = report.recovered_message;
    r["message_bits"] = to_bitstring(report.recovered_message, report.message_bits);
    r["intensities"] = readings_json(report.intensities);
    r["multiplicity"] = report.multiplicity;
    r["reencrypts_to_ciphertext"] = report.reencrypts_to_ciphertext;
    return r;
}

void attack_counters(json& doc, const AttackReport& report, const OutputFlags& flags, double wall) {
    doc["counters"]["queries_used"] = report.queries_used;
    doc["counters"]["domain_points_evaluated"] = report.domain_points_evaluated;
    if (flags.timing) {
        doc["counters"]["wall_time_ms"] = wall;
    }
}

struct RsaFlags {
    std::uint64_t exponent = 0;
    std::uint64_t modulus = 0;
    std::uint64_t ciphertext = 0;
    bool cross_check = false;
    EngineFlags engine;
    OutputFlags output;
};

int cmd_attack_rsa(const RsaFlags& f, std::ostream& out, std::ostream& err) {
    const RsaKey key{f.exponent, f.modulus};
    if (key.modulus < 2 || key.modulus_bits() > 30) {
        throw UsageError("--modulus must be in 2..2^30-1");
    }
    if (key.exponent == 0) {
        throw UsageError("--e must be positive");
    }
    const EngineConfig config = f.engine.config();
    json params;
    params["e"] = key.exponent;
    params["modulus"] = key.modulus;
    params["ciphertext"] = f.ciphertext;
    json doc = record("attack-rsa", params, std::nullopt);

    const Encryptor enc = make_rsa_encryptor(key);
    const auto start = std::chrono::steady_clock::now();
    AttackReport report;
    try {
        report = attack(enc, f.ciphertext, config);
    } catch (const AmbiguousMarking& e) {
        return report_failure(out, err, f.output, doc, "ambiguous_marking", e.what());
    } catch (const VerificationFailed& e) {
        return report_failure(out, err, f.output, doc, "verification_failed",
                              std::string(e.what()) + " (empty or non-unique preimage)");
    }
    const double wall = elapsed_ms(start);

    std::optional<std::size_t> preimages;
    bool matches_brute_force = true;
    if (f.cross_check) {
        const auto all = brute_force_decrypt(enc, f.ciphertext);
        preimages = all.size();
        matches_brute_force = all.size() == 1 && all.front().first == report.recovered_message;
    }

    if (f.output.json) {
        doc["result"] = attack_result_json(report);
        if (preimages) {
            doc["result"]["brute_force_preimages"] = *preimages;
            doc["result"]["matches_brute_force"] = matches_brute_force;
        }
        attack_counters(doc, report, f.output, wall);
        emit(out, doc);
    } else {
        out << "modulus        " << key.modulus << " (" << enc.message_bits << " bits), e = "
            << key.exponent << '\n'
            << "ciphertext     " << f.ciphertext << '\n'
            << "intensities    " << join_readings(report.intensities) << "  (M = "
            << report.multiplicity << ")\n"
            << "message        " << report.recovered_message << " ("
            << to_bitstring(report.recovered_message, report.message_bits) << ")\n"
            << "re-encrypts    " << (report.reencrypts_to_ciphertext ? "yes" : "no") << '\n'
            << "queries_used   " << report.queries_used << '\n'
            << "domain_points  " << report.domain_points_evaluated << '\n';
        if (preimages) {
            out << "brute force    " << *preimages << " preimage(s), "
                << (matches_brute_force ? "match" : "MISMATCH") << '\n';
        }
        if (f.output.timing) {
            out << "wall_time_ms   " << wall << '\n';
        }
    }
    return matches_brute_force ? kExitOk : kExitSearchFailed;
}

struct McElieceFlags {
    std::string matrix_path;
    unsigned t_prime = 0;
    std::string ciphertext;
    std::optional<unsigned> randomness_bits;
    EngineFlags engine;
    OutputFlags output;
};

int cmd_attack_mceliece(const McElieceFlags& f, std::ostream& out, std::ostream& err) {
    McElieceKey key;
    try {
        key = load_generator_matrix(f.matrix_path, f.t_prime);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    }
    if (f.ciphertext.size() != key.n) {
        throw UsageError("--ciphertext must have " + std::to_string(key.n) + " bits");
    }
    std::uint64_t ciphertext = 0;
    try {
        ciphertext = parse_bitstring(f.ciphertext);
    } catch (const InputError& e) {
        throw UsageError(e.what());
    }
    ErrorIndexDomain domain = enumerate_error_vectors(key.n, key.t_prime);
    const std::uint64_t full_count = domain.count();
    if (f.randomness_bits) {
        domain = domain.truncated(*f.randomness_bits);
    }
    if (key.k() + domain.index_bits() > 30) {
        throw UsageError("k + randomness bits = " + std::to_string(key.k() + domain.index_bits()) +
                         " exceeds 30");
    }
    const EngineConfig config = f.engine.config();

    json params;
    params["matrix"] = f.matrix_path;
    params["k"] = key.k();
    params["n"] = key.n;
    params["t_prime"] = key.t_prime;
    params["ciphertext"] = f.ciphertext;
    params["randomness_bits"] = domain.index_bits();
    json doc = record("attack-mceliece", params, std::nullopt);
    doc["result"]["error_domain_count"] = full_count;

    const Encryptor enc = make_mceliece_encryptor(key, domain);
    const auto start = std::chrono::steady_clock::now();
    AttackReport report;
    try {
        report = attack(enc, ciphertext, config);
    } catch (const AmbiguousMarking& e) {
        return report_failure(out, err, f.output, doc, "ambiguous_marking", e.what());
    } catch (const VerificationFailed& e) {
        return report_failure(out, err, f.output, doc, "verification_failed", e.what());
    }
    const double wall = elapsed_ms(start);

    if (f.output.json) {
        json r = attack_result_json(report);
        r["randomness_index"] = report.recovered_randomness_index;
        r["error_vector"] = to_bitstring(*report.recovered_error_vector, key.n);
        r["error_domain_count"] = full_count;
        r["domain_count"] = domain.count();
        r["randomness_bits"] = domain.index_bits();
        doc["result"] = std::move(r);
        attack_counters(doc, report, f.output, wall);
        emit(out, doc);
    } else {
        out << "code           k = " << key.k() << ", n = " << key.n << ", t' = " << key.t_prime
            << '\n'
            << "error domain   " << full_count << " vectors, " << domain.count() << " indexed with "
            << domain.index_bits() << " bits\n"
            << "ciphertext     " << f.ciphertext << '\n'
            << "intensities    " << join_readings(report.intensities) << "  (M = "
            << report.multiplicity << ")\n"
            << "message        " << to_bitstring(report.recovered_message, report.message_bits)
            << '\n'
            << "error vector   " << to_bitstring(*report.recovered_error_vector, key.n)
            << "  (index " << report.recovered_randomness_index << ")\n"
            << "re-encrypts    " << (report.reencrypts_to_ciphertext ? "yes" : "no") << '\n'
            << "queries_used   " << report.queries_used << '\n'
            << "domain_points  " << report.domain_points_evaluated << '\n';
        if (f.output.timing) {
            out << "wall_time_ms   " << wall << '\n';
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------- noise

struct NoiseFlags {
    unsigned bits = 0;
    unsigned k = 0;
    std::string grid;
    std::uint64_t reps = 10000;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::optional<std::string> csv_path;
    OutputFlags output;
};

// Comma-separated trial counts; "req" stands for required_trials(n, k).
std::vector<std::uint64_t> parse_grid(const std::string& text, unsigned n, unsigned k) {
    std::vector<std::uint64_t> grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "req") {
            grid.push_back(required_trials(n, k));
        } else {
            const std::uint64_t v = parse_value(item, "trial count");
            if (v == 0) {
                throw UsageError("trial counts must be positive");
            }
            grid.push_back(v);
        }
    }
    if (grid.empty()) {
        throw UsageError("--trials-grid is empty");
    }
    return grid;
}

int cmd_noise_sweep(const NoiseFlags& f, std::ostream& out, std::ostream& err) {
    if (f.bits == 0 || f.bits > 30) {
        throw UsageError("--bits must be in 1..30");
    }
    if (f.reps == 0) {
        throw UsageError("--reps must be at least 1");
    }
    const std::vector<std::uint64_t> grid = parse_grid(f.grid.empty() ? "req" : f.grid, f.bits, f.k);
    const SuccessCurve curve = success_curve(f.bits, f.k, grid, f.reps, f.seed, f.threads);

    std::ostringstream csv;
    write_success_csv(csv, curve);
    if (f.csv_path) {
        std::ofstream file(*f.csv_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << *f.csv_path << '\n';
            return kExitDataError;
        }
        file << csv.str();
    }
    if (f.output.json) {
        json params;
        params["bits"] = f.bits;
        params["k"] = f.k;
        params["trials_grid"] = grid;
        params["reps"] = f.reps;
        json doc = record("noise-sweep", params, f.seed);
        json rows = json::array();
        for (const auto& p : curve.points) {
            rows.push_back({{"trials", p.trials},
                            {"per_bit_success", p.per_bit_rate()},
                            {"all_bits_success", p.all_bits_rate()}});
        }
        doc["result"]["status"] = "ok";
        doc["result"]["required_trials"] = required_trials(f.bits, f.k);
        doc["result"]["rows"] = std::move(rows);
        doc["counters"]["noisy_readings"] = f.reps * f.bits * grid.size();
        emit(out, doc);
    } else if (!f.csv_path) {
        out << csv.str();
    }
    return kExitOk;
}

// ---------------------------------------------------------------- compare

struct CompareFlags {
    std::string n_range = "1:40";
    double delta = 1e-7;
    std::optional<std::string> csv_path;
    OutputFlags output;
};

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    const std::string lo = text.substr(0, colon);
    const std::string hi = colon == std::string::npos ? lo : text.substr(colon + 1);
    const auto a = static_cast<unsigned>(parse_value(lo, "range start"));
    const auto b = static_cast<unsigned>(parse_value(hi, "range end"));
    if (a < 1 || b < a || b > 62) {
        throw UsageError("--n-range must be a:b with 1 <= a <= b <= 62");
    }
    return {a, b};
}

int cmd_compare(const CompareFlags& f, std::ostream& out, std::ostream& err) {
    if (!(f.delta > 0.0) || f.delta > 1.0) {
        throw UsageError("--delta must lie in (0, 1]");
    }
    const auto [lo, hi] = parse_range(f.n_range);

    std::ostringstream csv;
    csv << "n,N,grover_queries,bruschweiler_queries,one_query_queries,ours_beats_grover,"
           "bruschweiler_beats_grover\n";
    json rows = json::array();
    for (unsigned n = lo; n <= hi; ++n) {
        const long double size = std::ldexp(1.0L, static_cast<int>(n));
        const CrossoverRecord rec = crossover(size, f.delta);
        const std::uint64_t grover = grover_queries(size);
        std::optional<std::uint64_t> trials;
        try {
            trials = required_trials_for_delta(n, f.delta);
        } catch (const RangeError&) {
        }
        const auto field = [](std::optional<std::uint64_t> v) {
            return v ? std::to_string(*v) : std::string("inf");
        };
        std::optional<std::uint64_t> brus;
        if (trials && *trials <= (std::uint64_t{1} << 62) / n) {
            brus = *trials * n;
        }
        csv << n << ',' << static_cast<std::uint64_t>(size) << ',' << grover << ',' << field(brus)
            << ',' << field(trials) << ',' << (rec.ours_beats_grover ? "true" : "false") << ','
            << (rec.bruschweiler_beats_grover ? "true" : "false") << '\n';
        rows.push_back({{"n", n},
                        {"N", static_cast<std::uint64_t>(size)},
                        {"grover_queries", grover},
                        {"bruschweiler_queries", brus ? json(*brus) : json(nullptr)},
                        {"one_query_queries", trials ? json(*trials) : json(nullptr)},
                        {"ours_beats_grover", rec.ours_beats_grover},
                        {"bruschweiler_beats_grover", rec.bruschweiler_beats_grover}});
    }
    if (f.csv_path) {
        std::ofstream file(*f.csv_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << *f.csv_path << '\n';
            return kExitDataError;
        }
        file << csv.str();
    }
    if (f.output.json) {
        json params;
        params["n_range"] = f.n_range;
        params["delta"] = f.delta;
        json doc = record("compare", params, std::nullopt);
        doc["result"]["status"] = "ok";
        doc["result"]["rows"] = std::move(rows);
        emit(out, doc);
    } else if (!f.csv_path) {
        out << csv.str();
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ensemble-computing search and ciphertext-attack simulator", "ensemble"};
    app.require_subcommand(1);

    SearchFlags search;
    auto* search_cmd = app.add_subcommand("search", "Find a marked element");
    search_cmd->add_option("--bits", search.bits, "Data width d")->required();
    auto* target_opt = search_cmd->add_option("--target", search.target,
                                              "Marked element, decimal or 0b-prefixed MSB-first");
    auto* random_opt = search_cmd->add_flag("--random", search.random, "Draw the target from --seed");
    target_opt->excludes(random_opt);
    search_cmd->add_option("--algo", search.algo, "one-query | bruschweiler")
        ->check(CLI::IsMember({"one-query", "bruschweiler"}));
    search_cmd->add_option("--seed", search.seed, "RNG seed for --random");
    search_cmd->add_option("--max-bits", search.max_bits, "Largest accepted --bits");
    search_cmd->add_flag("--dump-state", search.dump_state, "Print the post-oracle mixed state");
    search.engine.attach(*search_cmd);
    search.output.attach(*search_cmd);

    RsaFlags rsa;
    auto* rsa_cmd = app.add_subcommand("attack-rsa", "Recover an RSA plaintext with one query");
    rsa_cmd->add_option("--e", rsa.exponent, "Public exponent")->required();
    rsa_cmd->add_option("--modulus", rsa.modulus, "Public modulus N")->required();
    rsa_cmd->add_option("--ciphertext", rsa.ciphertext, "Ciphertext C")->required();
    rsa_cmd->add_flag("--cross-check", rsa.cross_check, "Compare against a brute-force decryption");
    rsa.engine.attach(*rsa_cmd);
    rsa.output.attach(*rsa_cmd);

    McElieceFlags mce;
    auto* mce_cmd = app.add_subcommand("attack-mceliece", "Recover a McEliece plaintext with one query");
    mce_cmd->add_option("--matrix", mce.matrix_path, "Generator matrix file")->required();
    mce_cmd->add_option("--t-prime", mce.t_prime, "Maximum error weight")->required();
    mce_cmd->add_option("--ciphertext", mce.ciphertext, "Ciphertext bitstring, MSB-first")->required();
    mce_cmd->add_option("--randomness-bits", mce.randomness_bits,
                        "Index only the first 2^b error vectors with a b-bit register");
    mce.engine.attach(*mce_cmd);
    mce.output.attach(*mce_cmd);

    NoiseFlags noise;
    auto* noise_cmd = app.add_subcommand("noise-sweep", "Monte Carlo decode success vs trial count");
    noise_cmd->add_option("--bits", noise.bits, "Data width n")->required();
    noise_cmd->add_option("--k", noise.k, "Single-trial error delta = 2^-k")->required();
    noise_cmd->add_option("--trials-grid", noise.grid, "Comma-separated trial counts; 'req' = required");
    noise_cmd->add_option("--reps", noise.reps, "Repetitions per grid point");
    noise_cmd->add_option("--seed", noise.seed, "RNG seed");
    noise_cmd->add_option("--threads", noise.threads, "Worker threads, 0 = hardware concurrency");
    noise_cmd->add_option("--csv", noise.csv_path, "Write the CSV here instead of stdout");
    noise.output.attach(*noise_cmd);

    CompareFlags compare;
    auto* compare_cmd = app.add_subcommand("compare", "Query counts against Grover's search");
    compare_cmd->add_option("--n-range", compare.n_range, "Exponent range a:b, N = 2^n");
    compare_cmd->add_option("--delta", compare.delta, "Single-trial measurement error");
    compare_cmd->add_option("--csv", compare.csv_path, "Write the CSV here instead of stdout");
    compare.output.attach(*compare_cmd);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (search_cmd->parsed()) {
            return cmd_search(search, out, err);
        }
        if (rsa_cmd->parsed()) {
            return cmd_attack_rsa(rsa, out, err);
        }
        if (mce_cmd->parsed()) {
            return cmd_attack_mceliece(mce, out, err);
        }
        if (noise_cmd->parsed()) {
            return cmd_noise_sweep(noise, out, err);
        }
        return cmd_compare(compare, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitDataError;
    } catch (const Error& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace ensemble::cli
