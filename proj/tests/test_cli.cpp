#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "ensemble/cli.hpp"
#include "ensemble/crypto.hpp"

using ensemble::cli::run;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    args.insert(args.begin(), "ensemble");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "ensemble_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string write_file(const std::string& name, const std::string& body) {
    const auto p = scratch(name);
    std::ofstream(p) << body;
    return p.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void check_schema(const json& j, const std::string& sub) {
    CHECK(j.at("schema_version") == ensemble::cli::kSchemaVersion);
    CHECK(j.at("subcommand") == sub);
    CHECK(j.contains("params"));
    CHECK(j.contains("result"));
    CHECK(j.contains("counters"));
    CHECK(j.contains("seed"));
}

}  // namespace

TEST_CASE("search command") {
    const auto o = call({"search", "--bits", "3", "--target", "1", "--algo", "one-query", "--json"});
    REQUIRE(o.code == 0);
    const auto j = json::parse(o.out);
    check_schema(j, "search");
    CHECK(j["result"]["intensities"] == json::array({-8, -8, -6}));
    CHECK(j["result"]["found"] == 1);
    CHECK(j["counters"]["queries_used"] == 1);
    CHECK(j["counters"]["domain_points_evaluated"] == 8);
    CHECK_FALSE(j["counters"].contains("wall_time_ms"));

    const auto b = call({"search", "--bits", "3", "--target", "0b001", "--algo", "bruschweiler", "--json"});
    REQUIRE(b.code == 0);
    CHECK(json::parse(b.out)["result"]["intensities"] == json::array({-2, -2, -4}));

    const auto z = call({"search", "--bits", "1", "--target", "0", "--json"});
    REQUIRE(z.code == 0);
    CHECK(json::parse(z.out)["result"]["found"] == 0);

    const auto human = call({"search", "--bits", "3", "--target", "1"});
    CHECK(human.code == 0);
    CHECK(human.out.find("-8, -8, -6") != std::string::npos);

    const auto timed = call({"search", "--bits", "3", "--target", "1", "--json", "--timing"});
    CHECK(json::parse(timed.out)["counters"].contains("wall_time_ms"));
}

TEST_CASE("replay and partition invariance") {
    const auto a = call({"search", "--bits", "12", "--random", "--seed", "7", "--json"});
    const auto b = call({"search", "--bits", "12", "--random", "--seed", "7", "--json"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(json::parse(a.out)["seed"] == 7);
    for (const char* parts : {"1", "4", "16"}) {
        for (const char* engine : {"streaming", "materialized"}) {
            const auto c = call({"search", "--bits", "12", "--random", "--seed", "7", "--json",
                                 "--partitions", parts, "--engine", engine});
            CHECK(c.out == a.out);
        }
    }
    const auto other = call({"search", "--bits", "12", "--random", "--seed", "8", "--json"});
    CHECK(other.code == 0);
}

TEST_CASE("usage errors exit 64") {
    CHECK(call({}).code == 64);
    CHECK(call({"search"}).code == 64);
    CHECK(call({"search", "--bits", "3", "--target", "9"}).code == 64);
    CHECK(call({"search", "--bits", "3", "--target", "1", "--random"}).code == 64);
    CHECK(call({"search", "--bits", "31", "--target", "1"}).code == 64);
    CHECK(call({"search", "--bits", "3", "--target", "1", "--algo", "grover"}).code == 64);
    CHECK(call({"search", "--bits", "3", "--target", "1", "--engine", "lazy"}).code == 64);
    CHECK(call({"search", "--bits", "3", "--target", "1", "--kernel", "sse9"}).code == 64);
    CHECK(call({"noise-sweep", "--bits", "4", "--k", "2", "--reps", "0"}).code == 64);
    CHECK(call({"compare", "--n-range", "9:3"}).code == 64);
    CHECK(call({"frobnicate"}).code == 64);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("attack-rsa command") {
    const auto o = call({"attack-rsa", "--e", "7", "--modulus", "15", "--ciphertext", "2", "--json"});
    REQUIRE(o.code == 0);
    const auto j = json::parse(o.out);
    check_schema(j, "attack-rsa");
    CHECK(j["result"]["message"] == 8);
    CHECK(j["result"]["intensities"] == json::array({-14, -16, -16, -16}));

    const auto id = call({"attack-rsa", "--e", "1", "--modulus", "2", "--ciphertext", "1", "--json"});
    REQUIRE(id.code == 0);
    CHECK(json::parse(id.out)["result"]["message"] == 1);

    // 20-bit modulus (p=1021, q=1031), e coprime to phi
    const ensemble::RsaKey key{7, 1052651};
    const std::uint64_t m = 123457;
    const std::uint64_t c = ensemble::rsa_encrypt(m, key);
    const auto pre = ensemble::brute_force_decrypt(ensemble::make_rsa_encryptor(key), c);
    const auto big = call({"attack-rsa", "--e", "7", "--modulus", "1052651", "--ciphertext",
                           std::to_string(c), "--json", "--cross-check"});
    if (pre.size() == 1) {
        REQUIRE(big.code == 0);
        CHECK(json::parse(big.out)["result"]["message"] == pre.front().first);
    } else {
        CHECK(big.code == 2);
    }

    // 3 is not a square mod 8: empty preimage
    const auto none = call({"attack-rsa", "--e", "2", "--modulus", "8", "--ciphertext", "3", "--json"});
    CHECK(none.code == 2);
    CHECK(json::parse(none.out)["result"]["status"] == "verification_failed");
}

TEST_CASE("attack-mceliece command") {
    const auto g = write_file("g.txt", "# 2 x 8 generator\n11010101\n10001111\n");
    const auto o = call({"attack-mceliece", "--matrix", g, "--t-prime", "2", "--ciphertext", "01010011",
                         "--json"});
    REQUIRE(o.code == 0);
    const auto j = json::parse(o.out);
    check_schema(j, "attack-mceliece");
    CHECK(j["result"]["message"] == 3);
    CHECK(j["result"]["multiplicity"] == 256);
    CHECK(j["result"]["intensities"][0] == -254);

    const auto t = call({"attack-mceliece", "--matrix", g, "--t-prime", "2", "--ciphertext", "01010011",
                         "--randomness-bits", "5", "--json"});
    REQUIRE(t.code == 0);
    CHECK(json::parse(t.out)["result"]["intensities"][0] == -126);

    const auto zero = call({"attack-mceliece", "--matrix", g, "--t-prime", "2", "--ciphertext",
                            "00000000", "--json"});
    REQUIRE(zero.code == 0);
    CHECK(json::parse(zero.out)["result"]["message"] == 0);

    const auto ragged = write_file("bad.txt", "1101\n110\n");
    CHECK(call({"attack-mceliece", "--matrix", ragged, "--t-prime", "1", "--ciphertext", "0000"}).code == 65);
    CHECK(call({"attack-mceliece", "--matrix", scratch("missing.txt").string(), "--t-prime", "1",
                "--ciphertext", "0000"})
              .code == 65);
    CHECK(call({"attack-mceliece", "--matrix", g, "--t-prime", "2", "--ciphertext", "01x10011"}).code == 64);

    // random small keys: success implies re-encryption
    std::mt19937_64 rng(20);
    for (int seed = 0; seed < 20; ++seed) {
        ensemble::McElieceKey key;
        key.n = 7;
        key.t_prime = 1;
        std::string body;
        for (int r = 0; r < 3; ++r) {
            key.rows.push_back(rng() & 0x7f);
            body += ensemble::to_bitstring(key.rows.back(), 7) + "\n";
        }
        const auto path = write_file("k" + std::to_string(seed) + ".txt", body);
        const std::uint64_t msg = rng() & 7;
        const std::uint64_t e = std::uint64_t{1} << (rng() % 7);
        const std::uint64_t c = ensemble::mceliece_encrypt(msg, e, key);
        const auto r = call({"attack-mceliece", "--matrix", path, "--t-prime", "1", "--ciphertext",
                             ensemble::to_bitstring(c, 7), "--json"});
        CHECK((r.code == 0 || r.code == 2));
        if (r.code == 0) {
            const auto res = json::parse(r.out)["result"];
            CHECK(res["reencrypts_to_ciphertext"] == true);
        }
    }
}

TEST_CASE("noise-sweep command") {
    const auto path = scratch("sweep.csv").string();
    const auto a = call({"noise-sweep", "--bits", "6", "--k", "2", "--trials-grid", "1,req,1024", "--reps",
                         "500", "--seed", "3", "--csv", path});
    REQUIRE(a.code == 0);
    const auto first = slurp(path);
    const auto b = call({"noise-sweep", "--bits", "6", "--k", "2", "--trials-grid", "1,req,1024", "--reps",
                         "500", "--seed", "3", "--threads", "3", "--csv", path});
    REQUIRE(b.code == 0);
    CHECK(slurp(path) == first);

    std::istringstream rows(first);
    std::string line;
    std::getline(rows, line);
    CHECK(line == "n,k,trials,repetitions,per_bit_success,all_bits_success");
    bool saw_req = false;
    while (std::getline(rows, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) {
            cells.push_back(cell);
        }
        REQUIRE(cells.size() == 6);
        if (cells[2] == "257") {
            saw_req = true;
            CHECK(std::stod(cells[4]) >= 0.5);
        }
    }
    CHECK(saw_req);

    const auto j = call({"noise-sweep", "--bits", "4", "--k", "1", "--reps", "50", "--json"});
    REQUIRE(j.code == 0);
    check_schema(json::parse(j.out), "noise-sweep");
}

TEST_CASE("compare command") {
    const auto o = call({"compare", "--n-range", "30:40", "--delta", "1e-7", "--json"});
    REQUIRE(o.code == 0);
    const auto j = json::parse(o.out);
    check_schema(j, "compare");
    const auto rows = j["result"]["rows"];
    CHECK(rows.front()["n"] == 30);
    CHECK(rows.front()["ours_beats_grover"] == true);
    CHECK(rows.back()["n"] == 40);
    CHECK(rows.back()["ours_beats_grover"] == false);

    const auto ones = call({"compare", "--n-range", "1:20", "--delta", "1", "--json"});
    for (const auto& r : json::parse(ones.out)["result"]["rows"]) {
        CHECK(r["ours_beats_grover"] == false);
        CHECK(r["bruschweiler_beats_grover"] == false);
    }

    const auto path = scratch("cmp.csv").string();
    REQUIRE(call({"compare", "--csv", path}).code == 0);
    const auto first = slurp(path);
    REQUIRE(call({"compare", "--csv", path}).code == 0);
    CHECK(slurp(path) == first);
    CHECK(first.rfind("n,N,grover_queries,", 0) == 0);
}
