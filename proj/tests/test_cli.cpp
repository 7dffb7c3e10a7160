#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "semigap/cli.hpp"

using nlohmann::json;
using semigap::Int;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args, Int guard = semigap::kDefaultSizeGuard) {
    std::ostringstream out, err;
    const int code = semigap::run_cli(args, out, err, guard);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("semigroup subcommand, json") {
    const auto r = run({"semigroup", "--gens", "3,5", "--json"});
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["kind"] == "semigroup");
    CHECK(j["input"]["gens"] == json::array({3, 5}));
    CHECK(j["result"]["gaps"] == json::array({1, 2, 4, 7}));
    CHECK(j["result"]["genus"] == 4);
    CHECK(j["result"]["frobenius"] == 7);
    CHECK(j["result"]["symmetric"] == true);
    CHECK(j["warnings"].empty());
}

TEST_CASE("semigroup subcommand, human output") {
    const auto r = run({"semigroup", "--gens", "6,8,9"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("genus: 10") != std::string::npos);
    CHECK(r.out.find("symmetric: yes") != std::string::npos);

    const auto full = run({"semigroup", "--gens", "1"});
    CHECK(full.out.find("symmetric: n/a") != std::string::npos);
    CHECK(full.out.find("frobenius: -1") != std::string::npos);
}

TEST_CASE("exit codes") {
    // Domain error: named code on a single stderr line.
    const auto domain = run({"semigroup", "--gens", "2,4"});
    CHECK(domain.exit_code == 1);
    CHECK(domain.err.substr(0, 9) == "GcdNotOne");
    CHECK(std::count(domain.err.begin(), domain.err.end(), '\n') == 1);

    // Usage errors.
    CHECK(run({"semigroup"}).exit_code == 2);
    CHECK(run({"semigroup", "--gens", "3;5"}).exit_code == 2);
    CHECK(run({"semigroup", "--gens", "2,x"}).exit_code == 2);
    CHECK(run({"nonsense"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
    CHECK(run({"semigroup", "--gens", "3,5", "--bogus"}).exit_code == 2);
    CHECK(run({"semigroup", "--gens", "3,5", "stray"}).exit_code == 2);

    // Help is a success.
    CHECK(run({"--help"}).exit_code == 0);
    CHECK(run({"semigroup", "--help"}).exit_code == 0);

    // More domain errors across subcommands.
    CHECK(run({"artin-schreier", "--p", "4", "--h", "1", "--m", "3"}).exit_code == 1);
    CHECK(run({"artin-schreier", "--p", "3", "--h", "1", "--m", "6"}).err.substr(0, 12) ==
          "InvalidCover");
    CHECK(run({"cyclic", "--p", "5", "--n", "1", "--place", "3", "--at", "1"}).exit_code ==
          1);
    CHECK(run({"filtration", "--poles", "3,5"}).err.substr(0, 13) == "NotIncreasing");
    CHECK(run({"check", "--gens", "2,3", "--p", "2", "--q", "6"}).exit_code == 1);
}

TEST_CASE("artin-schreier subcommand") {
    const auto plain = run({"artin-schreier", "--p", "5", "--h", "1", "--m", "3", "--json"});
    REQUIRE(plain.exit_code == 0);
    const json j = json::parse(plain.out);
    CHECK(j["result"]["gaps"] == json::array({1, 2, 4, 7}));
    CHECK(j["result"]["genus"] == 4);
    CHECK(j["result"]["semigroup"]["generators"] == json::array({3, 5}));
    CHECK(j["warnings"].empty());

    const auto based = run(
        {"artin-schreier", "--p", "2", "--h", "1", "--m", "3", "--base-gaps", "1", "--json"});
    REQUIRE(based.exit_code == 0);
    const json jb = json::parse(based.out);
    CHECK(jb["result"]["gaps"] == json::array({1, 2, 5}));
    CHECK(jb["result"]["genus"] == 3);
    REQUIRE(jb["warnings"].size() == 1);
    CHECK(std::string(jb["warnings"][0]).find("i=0") != std::string::npos);
}

TEST_CASE("cyclic subcommand") {
    const auto r = run({"cyclic", "--p", "5", "--n", "1", "--place", "3", "--at", "0"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("genus: 4") != std::string::npos);
    CHECK(r.out.find("symmetric at place 0: yes") != std::string::npos);
    CHECK(r.out.find("1 2 4 7") != std::string::npos);

    const auto multi = run({"cyclic", "--p", "3", "--n", "1", "--place", "1", "--place", "2",
                            "--json"});
    REQUIRE(multi.exit_code == 0);
    const json j = json::parse(multi.out);
    CHECK(j["result"]["genus"] == 3);
    CHECK(j["result"]["gaps"] == json::array({1, 2, 5}));
    CHECK(j["result"]["symmetric"] == json::array({true, false}));
    CHECK(j["result"]["cover_exact"] == false);
    REQUIRE(j["warnings"].size() == 1);
    CHECK(std::string(j["warnings"][0]).find("UPPER-BOUND") != std::string::npos);
}

TEST_CASE("filtration subcommand") {
    const auto r = run({"filtration", "--poles", "0,3,5,6,8,9", "--json"});
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["result"]["jump_indices"] == json::array({0, 1}));
    CHECK(j["result"]["generators"] == json::array({3, 5}));
}

TEST_CASE("check subcommand") {
    const auto r = run({"check", "--gens", "4,5", "--p", "2", "--q", "4", "--nilpotency",
                        "2", "--points", "65", "--json"});
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["result"]["genus"] == 6);
    CHECK(j["result"]["nilpotency"]["zero_hasse_witt_consistent"] == true);
    CHECK(j["result"]["nilpotency"]["non_classical"] == "forced");
    CHECK(j["result"]["maximality"]["point_bound"] == 65);
    CHECK(j["result"]["maximality"]["genus_bound"] == 6);
    CHECK(j["result"]["maximality"]["consistent"] == true);
}

TEST_CASE("json output is deterministic and round-trips") {
    const std::vector<std::vector<std::string>> invocations = {
        {"semigroup", "--gens", "6,8,9", "--json"},
        {"artin-schreier", "--p", "2", "--h", "2", "--m", "5", "--json"},
        {"cyclic", "--p", "2", "--n", "2", "--place", "1,3", "--json"},
        {"filtration", "--poles", "0,6,8,9,12,14", "--json"},
        {"check", "--gens", "4,5", "--p", "2", "--q", "4", "--json"},
    };
    for (const auto& args : invocations) {
        const auto first = run(args);
        const auto second = run(args);
        REQUIRE(first.exit_code == 0);
        CHECK(first.out == second.out);

        // Rebuilding the invocation from the emitted input block gives
        // the identical report.
        const json j = json::parse(first.out);
        std::vector<std::string> rebuilt = {std::string(j["kind"])};
        const json& input = j["input"];
        auto list_arg = [](const json& arr) {
            std::string s;
            for (std::size_t i = 0; i < arr.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(static_cast<Int>(arr[i]));
            }
            return s;
        };
        if (j["kind"] == "semigroup") {
            rebuilt.insert(rebuilt.end(), {"--gens", list_arg(input["gens"])});
        } else if (j["kind"] == "artin-schreier") {
            rebuilt.insert(rebuilt.end(),
                           {"--p", std::to_string(static_cast<Int>(input["p"])),
                            "--h", std::to_string(static_cast<Int>(input["h"])),
                            "--m", std::to_string(static_cast<Int>(input["m"]))});
            if (!input["base_gaps"].empty())
                rebuilt.insert(rebuilt.end(), {"--base-gaps", list_arg(input["base_gaps"])});
        } else if (j["kind"] == "cyclic") {
            rebuilt.insert(rebuilt.end(),
                           {"--p", std::to_string(static_cast<Int>(input["p"])),
                            "--n", std::to_string(static_cast<Int>(input["n"]))});
            for (const json& place : input["places"])
                rebuilt.insert(rebuilt.end(), {"--place", list_arg(place)});
            rebuilt.insert(rebuilt.end(),
                           {"--at", std::to_string(static_cast<Int>(input["at"]))});
        } else if (j["kind"] == "filtration") {
            rebuilt.insert(rebuilt.end(), {"--poles", list_arg(input["poles"])});
        } else if (j["kind"] == "check") {
            rebuilt.insert(rebuilt.end(),
                           {"--gens", list_arg(input["gens"]),
                            "--p", std::to_string(static_cast<Int>(input["p"]))});
            if (input.contains("q"))
                rebuilt.insert(rebuilt.end(),
                               {"--q", std::to_string(static_cast<Int>(input["q"]))});
        }
        rebuilt.push_back("--json");
        const auto replay = run(rebuilt);
        REQUIRE(replay.exit_code == 0);
        CHECK(replay.out == first.out);
    }
}

TEST_CASE("large integers become decimal strings") {
    CHECK(semigap::json_int(42) == json(42));
    CHECK(semigap::json_int(-7) == json(-7));
    CHECK(semigap::json_int((Int{1} << 53) - 1) == json((Int{1} << 53) - 1));
    CHECK(semigap::json_int(Int{1} << 53) == json("9007199254740992"));
    CHECK(semigap::json_int(-(Int{1} << 53)) == json("-9007199254740992"));
}

TEST_CASE("size guard reaches the CLI") {
    const auto r = run({"semigroup", "--gens", "1000,1001"}, 256);
    CHECK(r.exit_code == 1);
    CHECK(r.err.substr(0, 17) == "SizeGuardExceeded");
}

TEST_CASE("environment override for the size guard") {
    unsetenv("SIZE_GUARD");
    CHECK(semigap::resolve_size_guard() == semigap::kDefaultSizeGuard);
    setenv("SIZE_GUARD", "4096", 1);
    CHECK(semigap::resolve_size_guard() == 4096);
    setenv("SIZE_GUARD", "junk", 1);
    CHECK(semigap::resolve_size_guard() == semigap::kDefaultSizeGuard);
    setenv("SIZE_GUARD", "-5", 1);
    CHECK(semigap::resolve_size_guard() == semigap::kDefaultSizeGuard);
    unsetenv("SIZE_GUARD");
}
