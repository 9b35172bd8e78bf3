#include "doctest.h"

#include "cli.hpp"
#include "riesz/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using namespace riesz;

namespace {

const fs::path kFixtures = RIESZ_FIXTURE_DIR;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return (kFixtures / name).string(); }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path write_temp(const std::string& name, const std::string& text) {
    const fs::path p = fs::temp_directory_path() / ("riesz_cli_test_" + name);
    std::ofstream(p, std::ios::binary) << text;
    return p;
}

std::vector<fs::path> valid_fixtures() {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(kFixtures)) {
        if (e.is_regular_file() && e.path().extension() == ".json") {
            files.push_back(e.path());
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

}  // namespace

TEST_CASE("fixture corpus round-trips") {
    const auto files = valid_fixtures();
    REQUIRE(files.size() == 20);
    for (const auto& f : files) {
        CAPTURE(f.string());
        const auto spec = io::parse_spec(slurp(f));
        const std::string canonical = io::dump(io::to_json(spec));
        REQUIRE(io::parse_spec(canonical) == spec);
        const auto normalized = run_cli({"normalize", f.string()});
        REQUIRE(normalized.code == cli::kExitHolds);
        REQUIRE(normalized.out == canonical);
        const auto again = run_cli({"normalize", write_temp("norm.json", normalized.out).string()});
        REQUIRE(again.out == canonical);
    }
}

TEST_CASE("reports are byte-identical across runs") {
    const std::vector<std::vector<std::string>> commands{
        {"check-dp", fixture("dot2.json"), "--json"},
        {"arens", fixture("trilinear_dp.json"), "--json", "--trace"},
        {"arens", fixture("quadrilinear_dp.json")},
        {"modulus", fixture("mixed_sign.json"), "--json"},
        {"factorize", fixture("scalar_dp_form.json"), "--json"},
        {"rank", fixture("sublattice_gap.json"), "--json"},
        {"seq-demo", "--seed", "7", "--json"},
        {"seq-demo", "--weight", fixture("diag_bilinear_weighted.json")},
    };
    for (const auto& c : commands) {
        const auto first = run_cli(c);
        const auto second = run_cli(c);
        REQUIRE(first.code == second.code);
        REQUIRE(first.out == second.out);
        REQUIRE_FALSE(first.out.empty());
    }
    const auto a = run_cli({"seq-demo", "--seed", "7", "--json"});
    const auto b = run_cli({"seq-demo", "--seed", "8", "--json"});
    CHECK(a.out != b.out);
    CHECK(io::parse_text(a.out)["seed"] == 7);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"check-dp", fixture("single_entry.json")}).code == cli::kExitHolds);
    CHECK(run_cli({"check-dp", fixture("dot2.json")}).code == cli::kExitFails);
    for (const auto* bad : {"malformed.json", "arity5.json", "duplicate_key.json", "index_out_of_range.json",
                            "float_value.json", "unknown_kind.json"}) {
        const auto r = run_cli({"check-dp", fixture(std::string("invalid/") + bad)});
        CAPTURE(bad);
        CHECK(r.code == cli::kExitInputError);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }
    CHECK(run_cli({"arens", fixture("invalid/arity5.json")}).code == cli::kExitInputError);
    CHECK(run_cli({"check-dp", fixture("missing.json")}).code == cli::kExitInputError);
    CHECK(run_cli({"no-such-command"}).code == cli::kExitInputError);
    CHECK(run_cli({"check-dp"}).code == cli::kExitInputError);
    CHECK(run_cli({"arens", fixture("coord_product.json"), "--perm", "(1 3)"}).code == cli::kExitInputError);
    CHECK(run_cli({"factorize", fixture("coord_product.json")}).code == cli::kExitInputError);
    CHECK(run_cli({"check-dp", fixture("diag_bilinear_ones.json")}).code == cli::kExitInputError);
    CHECK(run_cli({"--help"}).code == cli::kExitHolds);
}

TEST_CASE("every failing verdict carries a replayable witness") {
    for (const auto* name : {"dot2.json", "atom_fixings.json", "non_dp_functional.json", "mixed_sign.json",
                             "sublattice_gap.json"}) {
        CAPTURE(name);
        const auto r = run_cli({"check-dp", fixture(name), "--json"});
        const auto report = io::parse_text(r.out);
        if (r.code == cli::kExitHolds) {
            CHECK(report["witnesses"].empty());
            continue;
        }
        REQUIRE(r.code == cli::kExitFails);
        REQUIRE(report["witnesses"].size() == 1);
        const auto path = write_temp("witness.json", r.out);
        CHECK(run_cli({"replay", fixture(name), path.string()}).code == cli::kExitHolds);
        const auto bare = write_temp("bare.json", io::dump(report["witnesses"][0]["witness"]));
        CHECK(run_cli({"replay", fixture(name), bare.string()}).code == cli::kExitHolds);
        // the same witness says nothing about a DP operator of the same shape
        if (std::string(name) == "dot2.json") {
            MultiTensor t({2, 2}, 1);
            t.set(0, {0, 0}, 1);
            const auto other = write_temp("other.json", io::dump(io::to_json(t)));
            CHECK(run_cli({"replay", other.string(), path.string()}).code == cli::kExitFails);
        }
    }
}

TEST_CASE("factorize and arens failures carry witnesses") {
    const auto f = run_cli({"factorize", fixture("dot2.json"), "--json"});
    CHECK(f.code == cli::kExitFails);
    CHECK(io::parse_text(f.out)["witnesses"].size() == 1);
    const auto a = run_cli({"arens", fixture("dot2.json"), "--json"});
    CHECK(a.code == cli::kExitFails);
    const auto report = io::parse_text(a.out);
    CHECK(report["witnesses"][0]["check"] == "input_is_dp");
    CHECK(report["result"]["extensions"].size() == 2);
}

TEST_CASE("arens permutation selection") {
    const auto all = io::parse_text(run_cli({"arens", fixture("trilinear_dp.json"), "--json"}).out);
    CHECK(all["result"]["extensions"].size() == 6);
    const auto theta = io::parse_text(run_cli({"arens", fixture("trilinear_dp.json"), "--perm", "theta", "--json"}).out);
    REQUIRE(theta["result"]["extensions"].size() == 1);
    CHECK(theta["result"]["extensions"][0]["rho"] == "(1 3)");
    const auto cyc = io::parse_text(run_cli({"arens", fixture("trilinear_dp.json"), "--perm", "(1 2 3)", "--json"}).out);
    CHECK(cyc["result"]["extensions"][0]["one_line"] == "[2 3 1]");
    const auto traced = io::parse_text(run_cli({"arens", fixture("trilinear_dp.json"), "--trace", "--perm", "id", "--json"}).out);
    CHECK(traced["result"]["extensions"][0]["trace"].size() == 3 * 4);
    CHECK(all["status"] == "holds");
}

TEST_CASE("sequence demo") {
    const auto ok = run_cli({"seq-demo"});
    CHECK(ok.code == cli::kExitHolds);
    const auto bad = run_cli({"seq-demo", "--weight", fixture("diag_bilinear_corrupted.json"), "--json"});
    CHECK(bad.code == cli::kExitFails);
    const auto report = io::parse_text(bad.out);
    REQUIRE(report["witnesses"].size() == 1);
    CHECK(report["witnesses"][0]["witness"]["index"] == 7);
    CHECK(run_cli({"seq-demo", "--weight", fixture("dot2.json")}).code == cli::kExitInputError);
}

TEST_CASE("timing is opt-in") {
    const auto plain = io::parse_text(run_cli({"rank", fixture("zero_tensor.json"), "--json"}).out);
    CHECK_FALSE(plain.contains("timing"));
    CHECK(plain["result"]["lattice_rank"] == 0);
    const auto timed = io::parse_text(run_cli({"rank", fixture("zero_tensor.json"), "--json", "--timing"}).out);
    CHECK(timed.contains("timing"));
}
