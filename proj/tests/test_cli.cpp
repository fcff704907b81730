#include "doctest.h"

#include "berncert/hankel.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace berncert;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("berncert-cli-" + std::to_string(::getpid()));
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& file) {
    std::ifstream in(file);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spill(const fs::path& file, const std::string& text) {
    std::ofstream out(file);
    out << text;
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const fs::path log = scratch() / "last-run.txt";
    const std::string cmd =
        std::string(BERNCERT_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
    const int rc = std::system(cmd.c_str());
    RunResult r;
    if (rc != -1 && WIFEXITED(rc)) r.code = WEXITSTATUS(rc);
    r.out = slurp(log);
    return r;
}

// The second objective's polynomial file, written once per process.
fs::path second_objective_file() {
    static const fs::path file = [] {
        const fs::path f = scratch() / "second-objective.json";
        spill(f, poly_to_json(build_bound_polys(false).R2tilde).dump(2) + "\n");
        return f;
    }();
    return file;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help and argument validation exit codes") {
    CHECK(run("--help").code == 0);
    CHECK(run("certify").code == 2);            // missing required options
    CHECK(run("no-such-command").code == 2);
    CHECK(run("phi --m 0 --n 1").code == 2);    // spec validation
}

TEST_CASE("certify, replay, and tamper rejection round trip") {
    const fs::path dir = scratch();
    const RunResult proved =
        run("certify --poly " + second_objective_file().string() +
            " --bound 16 --splits 2,2,1 --depth 1 --out " + dir.string());
    CHECK(proved.code == 0);
    CHECK(proved.out.find("proved") != std::string::npos);

    const fs::path cert = dir / "second-objective.cert.json";
    REQUIRE(fs::exists(cert));
    const auto j = nlohmann::json::parse(slurp(cert));
    CHECK(j.at("overall") == "proved");
    CHECK(j.at("nodes").size() == 5);

    const RunResult ok = run("replay " + cert.string());
    CHECK(ok.code == 0);
    CHECK(ok.out.find("accepted") != std::string::npos);

    auto bad = j;
    bad["nodes"][2]["max_beta"]["num"] = "9999";
    const fs::path tampered = dir / "tampered.cert.json";
    spill(tampered, bad.dump(2) + "\n");
    const RunResult rej = run("replay " + tampered.string());
    CHECK(rej.code == 3);
    CHECK(rej.out.find("rejected") != std::string::npos);
    CHECK(rej.out.find("does not replay") != std::string::npos);
}

TEST_CASE("an unprovable bound reports its counterexample") {
    const fs::path dir = scratch();
    const fs::path first = dir / "first-objective.json";
    spill(first, poly_to_json(build_bound_polys(false).Rtilde).dump(2) + "\n");
    const RunResult r = run("certify --poly " + first.string() +
                            " --bound 15 --depth 0 --out " + dir.string());
    CHECK(r.code == 3);
    CHECK(r.out.find("counterexample") != std::string::npos);
    CHECK(r.out.find("16") != std::string::npos);
}

TEST_CASE("bad inputs exit with the input-error code") {
    const fs::path dir = scratch();
    const fs::path broken = dir / "broken.json";
    spill(broken, "{\"vars\": [\"x\"]}\n");
    CHECK(run("certify --poly " + broken.string() + " --bound 1").code == 2);
    CHECK(run("certify --poly " + second_objective_file().string() +
              " --bound 16 --chain no-such-chain")
              .code == 2);
    const fs::path garbled = dir / "garbled.cert.json";
    spill(garbled, "not json\n");
    CHECK(run("replay " + garbled.string()).code == 2);
}

TEST_CASE("table output is byte-deterministic across worker counts") {
    const RunResult one = run("--workers 1 tables --format md");
    const RunResult three = run("--workers 3 tables --format md");
    CHECK(one.code == 0);
    CHECK(one.out == three.out);
    CHECK(one.out.find("1025/64") != std::string::npos);

    const RunResult tex = run("tables --format tex");
    CHECK(tex.code == 0);
    CHECK(tex.out.find("pmatrix") != std::string::npos);
    CHECK(tex.out.find("17") != std::string::npos);
}

TEST_CASE("certificates are byte-deterministic across worker counts") {
    const fs::path d1 = scratch() / "w1";
    const fs::path d3 = scratch() / "w3";
    fs::create_directories(d1);
    fs::create_directories(d3);
    const std::string tail = " certify --poly " + second_objective_file().string() +
                             " --bound 16 --splits 2,2,1 --depth 1 --out ";
    CHECK(run("--workers 1" + tail + d1.string()).code == 0);
    CHECK(run("--workers 3" + tail + d3.string()).code == 0);
    CHECK(slurp(d1 / "second-objective.cert.json") ==
          slurp(d3 / "second-objective.cert.json"));
}

TEST_CASE("emitted interchange files parse back to the library objects") {
    const fs::path dir = scratch() / "tables";
    fs::create_directories(dir);
    CHECK(run("tables --out " + dir.string()).code == 0);
    const BoundPolys bp = build_bound_polys(false);
    CHECK(poly_equal(poly_from_json(nlohmann::json::parse(slurp(dir / "rtilde.json"))),
                     bp.Rtilde));
    CHECK(poly_equal(poly_from_json(nlohmann::json::parse(slurp(dir / "r2tilde.json"))),
                     bp.R2tilde));
    CHECK(nlohmann::json::parse(slurp(dir / "extremal.json")).is_object());
}

TEST_CASE("curve gate output carries the exact witnesses") {
    const RunResult collide = run("phi --m 1 --n 1");
    CHECK(collide.code == 0);
    CHECK(collide.out.find("-1/4") != std::string::npos);
    CHECK(collide.out.find("-3/4") != std::string::npos);
    CHECK(run("phi --m 1 --n 2").code == 0);
}

TEST_CASE("the full verification pipeline succeeds end to end") {
    const fs::path dir = scratch() / "verify-report";
    const RunResult r = run("verify --format json --out " + dir.string());
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(slurp(dir / "verify.json"));
    CHECK(j.dump().find("\"proved\":true") != std::string::npos);
}

}  // TEST_SUITE
