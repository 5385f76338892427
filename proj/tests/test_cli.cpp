#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args, const fs::path& dir) {
    const std::string cmd = "cd " + dir.string() + " && " + PSLDPC_CLI_PATH + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[512];
    while (std::fgets(buf, sizeof buf, pipe)) output += buf;
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("psldpc_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

}  // namespace

TEST_CASE("cli: full pipeline on the length-2048 hamming-partition code") {
    TempDir tmp;

    auto base = run("gen-base gcd --p 64 --l 8", tmp.path);
    REQUIRE(base.exit_code == 0);

    auto mask = run("gen-mask h --m 4 --n 8", tmp.path);
    REQUIRE(mask.exit_code == 0);

    auto latin = run("gen-latin circulant --n 4", tmp.path);
    REQUIRE(latin.exit_code == 0);

    auto splice = run("splice --n 4 --latin circulant", tmp.path);
    REQUIRE(splice.exit_code == 0);
    CHECK(splice.output.find("16 x 32") != std::string::npos);

    auto girth = run("girth --cap 12", tmp.path);
    REQUIRE(girth.exit_code == 0);
    // girth at least eight: either an exact even value >= 8 or beyond the cap
    if (girth.output.rfind("girth=", 0) == 0) {
        CHECK(std::stoi(girth.output.substr(6)) >= 8);
    } else {
        CHECK(girth.output.rfind("girth>cap=", 0) == 0);
    }

    auto expand = run("expand", tmp.path);
    REQUIRE(expand.exit_code == 0);
    CHECK(expand.output.find("1024 x 2048") != std::string::npos);

    auto profile = run("profile --alist expanded.alist", tmp.path);
    REQUIRE(profile.exit_code == 0);
    CHECK(profile.output.find("column_weights: {4: 2048}") != std::string::npos);
    CHECK(profile.output.find("row_weights: {8: 1024}") != std::string::npos);
    CHECK(profile.output.find("designed_rate=1/2") != std::string::npos);

    auto profile_json = run("profile --alist expanded.alist --json", tmp.path);
    REQUIRE(profile_json.exit_code == 0);
    const auto j = nlohmann::json::parse(profile_json.output);
    CHECK(j["rows"] == 1024);
    CHECK(j["cols"] == 2048);
    CHECK(j["column_weights"]["4"] == 2048);
    CHECK(j["designed_rate"]["num"] == 1);
    CHECK(j["designed_rate"]["den"] == 2);

    auto girth_json = run("girth --json --cap 12", tmp.path);
    REQUIRE(girth_json.exit_code == 0);
    const auto gj = nlohmann::json::parse(girth_json.output);
    if (gj.contains("girth")) {
        CHECK(gj["girth"].get<int>() >= 8);
    } else {
        CHECK(gj["girth_exceeds_cap"] == 12);
    }
}

TEST_CASE("cli: profile of the (4,12) pipeline output") {
    TempDir tmp;
    REQUIRE(run("gen-base gcd --p 144 --l 12", tmp.path).exit_code == 0);
    REQUIRE(run("gen-mask h --m 4 --n 12", tmp.path).exit_code == 0);
    REQUIRE(run("splice --n 3 --latin circulant", tmp.path).exit_code == 0);
    auto profile = run("profile --exponent compound.exp", tmp.path);
    REQUIRE(profile.exit_code == 0);
    CHECK(profile.output.find("column_weights: {4: 5184}") != std::string::npos);
    CHECK(profile.output.find("row_weights: {12: 1728}") != std::string::npos);
    CHECK(profile.output.find("designed_rate=2/3") != std::string::npos);
}

TEST_CASE("cli: witness output validates against the exponent file") {
    TempDir tmp;
    std::ofstream(tmp.path / "base.exp") << "3 4 7\n0 0 0 0\n0 1 3 4\n0 2 6 5\n";
    auto girth = run("girth --exponent base.exp --witness", tmp.path);
    REQUIRE(girth.exit_code == 0);
    CHECK(girth.output.find("girth=4") != std::string::npos);
    CHECK(girth.output.find("witness:") != std::string::npos);
    CHECK(girth.output.find("witness_sum=") != std::string::npos);
}

TEST_CASE("cli: girth on an alist file") {
    TempDir tmp;
    std::ofstream(tmp.path / "tiny.alist") << "2 2\n1 1\n1 1\n1 1\n1\n2\n1\n2\n";
    auto girth = run("girth --alist tiny.alist", tmp.path);
    REQUIRE(girth.exit_code == 0);
    CHECK(girth.output.find("girth>cap=12") != std::string::npos);
}

TEST_CASE("cli: splice refuses a mask set that does not partition") {
    TempDir tmp;
    REQUIRE(run("gen-base gcd --p 16 --l 8", tmp.path).exit_code == 0);
    REQUIRE(run("gen-mask t --m 4 --n 8 --out t.mask", tmp.path).exit_code == 0);
    // the same mask twice cannot cover each cell exactly once
    auto bad = run("splice --mask t.mask --mask t.mask --n 2 --latin circulant", tmp.path);
    CHECK(bad.exit_code != 0);
    CHECK(bad.output.find("mask set is invalid") != std::string::npos);
}

TEST_CASE("cli: splice rejects an invalid Latin square file") {
    TempDir tmp;
    REQUIRE(run("gen-base gcd --p 16 --l 8", tmp.path).exit_code == 0);
    REQUIRE(run("gen-mask d --m 4 --n 8", tmp.path).exit_code == 0);
    std::ofstream(tmp.path / "bad.latin") << "2\n0 0\n1 1\n";
    auto bad = run("splice --n 2 --latin bad.latin", tmp.path);
    CHECK(bad.exit_code != 0);
    CHECK(bad.output.find("not a Latin square") != std::string::npos);
}

TEST_CASE("cli: simulate writes the CSV sweep") {
    TempDir tmp;
    std::ofstream(tmp.path / "small.exp") << "3 4 7\n0 0 0 0\n0 1 3 4\n0 2 6 5\n";

    // missing mask file and an impossible tiling both report errors
    REQUIRE(run("splice --base small.exp --n 2 --latin circulant --out c.exp", tmp.path).exit_code != 0);
    REQUIRE(run("gen-mask t --m 3 --n 4", tmp.path).exit_code != 0);

    std::ofstream(tmp.path / "m0.mask") << "3 4\n1 1 1 1\n1 1 1 1\n1 0 0 1\n";
    REQUIRE(run("splice --base small.exp --n 2 --latin circulant --out c.exp", tmp.path).exit_code == 0);
    REQUIRE(run("expand --exponent c.exp --out c.alist", tmp.path).exit_code == 0);

    auto sim = run("simulate --alist c.alist --snr 2.0 --min-errors 5 --max-frames 2000 --seed 7", tmp.path);
    REQUIRE(sim.exit_code == 0);
    std::ifstream csv(tmp.path / "results.csv");
    REQUIRE(csv.good());
    std::string header;
    std::getline(csv, header);
    CHECK(header == "eb_n0_db,frames,bit_errors,frame_errors,ber,fer,min_wrong_codeword_weight");
    std::string row;
    REQUIRE(std::getline(csv, row));
    CHECK(row.rfind("2,", 0) == 0);
}

TEST_CASE("cli: unknown flags and subcommands fail") {
    TempDir tmp;
    CHECK(run("no-such-command", tmp.path).exit_code != 0);
    CHECK(run("gen-base gcd --p 64", tmp.path).exit_code != 0);  // --l required
}
