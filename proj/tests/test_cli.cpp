#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace vt = vanhom::testing;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::string& args) {
    const std::string err_path = "cli-stderr-" + std::to_string(getpid()) + ".txt";
    const std::string cmd = std::string(VANHOM_COMPUTE_BIN) + " " + args + " 2>" + err_path;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = vt::read_file(err_path);
    std::remove(err_path.c_str());
    return r;
}

std::string cfg(const std::string& name) { return std::string(VANHOM_CONFIG_DIR) + "/" + name; }
std::string data(const std::string& name) { return std::string(VANHOM_TESTDATA_DIR) + "/" + name; }

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("text report for a forced-zero fixture") {
    CliResult r = run_cli(cfg("cubic-dinfty.json"));
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.out, "degree 3 hypersurface in P^3 (n = 2)"));
    CHECK(contains(r.out, "mode: exact"));
    CHECK(contains(r.out, "smooth member: chi = 9, b_2 = 7"));
    CHECK(contains(r.out, "chi(vanishing) = -5"));
    CHECK(contains(r.out, "b∨_4 = 0"));
    CHECK(contains(r.out, "b∨_3 = 5"));
    CHECK(contains(r.out, "top rank forced to zero on every component"));
    CHECK(contains(r.out, "middle rank by the rank-zero-fibre closed form: 5"));
    CHECK(contains(r.out, "component count identity: b∨_4 = r - 1 = 0 (consistent)"));
    CHECK(r.err.empty());
}

TEST_CASE("exact solve with oracle on the three-plane fixture") {
    CliResult r = run_cli(cfg("xyz.json") + " --mode exact --oracle");
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.out, "b∨_4 = 2"));
    CHECK(contains(r.out, "b∨_3 = 7"));
    CHECK(contains(r.out, "top basis vectors"));
    CHECK(contains(r.out, "oracle: 12/12 verdicts passed"));
    CHECK(contains(r.out, "component count identity: b∨_4 = r - 1 = 2 (consistent)"));
}

TEST_CASE("interval output in rank mode") {
    CliResult r = run_cli(data("rank-mode-required.json"));
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.out, "mode: rank-bound"));
    CHECK(contains(r.out, "b∨_4 in [0, 1]"));
    CHECK(contains(r.out, "b∨_3 in [1, 2]"));

    CliResult tightened = run_cli(data("tighten-interval.json"));
    REQUIRE(tightened.exit_code == 0);
    CHECK(contains(tightened.out, "b∨_4 = 1"));
    CHECK(contains(tightened.out, "b∨_3 = 0"));
}

TEST_CASE("absolute ranks under the injectivity assertion") {
    CliResult r = run_cli(cfg("quintic.json") + " --assume-phi-injective");
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.out, "b_2(V) = 53 - b∨_3 + rank ker Phi_3"));
    CHECK(contains(r.out, "b_2(V) = 15 and b_3(V) = 0, asserting ker Phi_3 = 0"));
}

TEST_CASE("failure exit codes") {
    CliResult missing = run_cli("/nonexistent/nowhere.json");
    CHECK(missing.exit_code == 1);
    CHECK(contains(missing.err, "cannot open"));

    CliResult syntax = run_cli(data("broken-syntax.json"));
    CHECK(syntax.exit_code == 2);
    CHECK(contains(syntax.err, "syntax error"));
    CHECK(syntax.out.empty());

    CliResult unknown = run_cli(data("unknown-key.json"));
    CHECK(unknown.exit_code == 2);
    CHECK(contains(unknown.err, "unknown key"));

    CliResult invalid = run_cli(data("bad-matrix-dims.json"));
    CHECK(invalid.exit_code == 2);
    CHECK(contains(invalid.err, "invalid config"));
    CHECK(contains(invalid.err, "monodromy must be"));

    CliResult exact = run_cli(data("rank-mode-required.json") + " --mode exact");
    CHECK(exact.exit_code == 2);
    CHECK(contains(exact.err, "exact mode requires a relative cycle lattice"));

    CliResult negative = run_cli(data("negative-bmid.json"));
    CHECK(negative.exit_code == 4);
    CHECK(contains(negative.err, "inconsistent input data"));

    CliResult badr = run_cli(data("xyz-bad-r.json"));
    CHECK(badr.exit_code == 4);
    CHECK(contains(badr.err, "component count identity"));

    CliResult badflag = run_cli(cfg("xyz.json") + " --nope");
    CHECK(badflag.exit_code == 1);

    CliResult badmode = run_cli(cfg("xyz.json") + " --mode bogus");
    CHECK(badmode.exit_code == 1);
}

TEST_CASE("machine format is valid deterministic json") {
    const std::string args = cfg("cubic-dinfty.json") + " --format machine --oracle";
    CliResult first = run_cli(args);
    CliResult second = run_cli(args);
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);

    nlohmann::json j = nlohmann::json::parse(first.out);
    CHECK(j["schema"] == "vanhom-report/1");
    CHECK(j["status"] == "ok");
    CHECK(j["config"]["n"] == 2);
    CHECK(j["config"]["d"] == 3);
    CHECK(j["options"]["mode"] == "auto");
    CHECK(j["options"]["oracle"] == true);

    const nlohmann::json& rep = j["report"];
    CHECK(rep["mode"] == "exact");
    CHECK(rep["chi_vanishing"] == -5);
    CHECK(rep["degree_top"] == 4);
    CHECK(rep["degree_mid"] == 3);
    CHECK(rep["b_top"]["lo"] == 0);
    CHECK(rep["b_top"]["exact"] == true);
    CHECK(rep["b_mid"]["lo"] == 5);
    CHECK(rep["b_top_basis"]["rank"] == 0);
    CHECK(rep["betti_via_closed_form"] == 5);
    CHECK(rep["top_forced_zero_by_corollary"] == true);
    CHECK(rep["smooth"]["chi"] == 9);
    CHECK(rep["absolute"]["b_top_absolute"]["lo"] == 1);
    CHECK(rep["oracle"]["ran"] == true);
    REQUIRE(rep["oracle"]["verdicts"].size() == 4);
    for (const auto& v : rep["oracle"]["verdicts"]) CHECK(v["pass"] == true);
}

TEST_CASE("machine format for an exact positive-rank solve") {
    CliResult r = run_cli(cfg("xyz.json") + " --format machine");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    const nlohmann::json& rep = j["report"];
    CHECK(rep["b_top"]["lo"] == 2);
    CHECK(rep["b_top"]["hi"] == 2);
    CHECK(rep["b_mid"]["lo"] == 7);
    CHECK(rep["b_top_basis"]["ambient"] == 3);
    CHECK(rep["b_top_basis"]["rank"] == 2);
    REQUIRE(rep["b_top_basis"]["basis_vectors"].size() == 2);
    for (const auto& v : rep["b_top_basis"]["basis_vectors"]) {
        long long sum = 0;
        for (const auto& x : v) sum += x.get<long long>();
        CHECK(sum == 0);  // solutions live in the sum-zero plane
    }
    CHECK(rep["absolute"]["expected_top_from_components"] == 2);
    CHECK(rep["absolute"]["components_identity_consistent"] == true);
    CHECK(j["report"]["oracle"]["ran"] == false);
}

TEST_CASE("every golden fixture runs clean with the oracle") {
    for (const char* name :
         {"cubic-dinfty.json", "cubic-dinfty-p4.json", "cubic-dinfty-p5.json",
          "quartic-isolated.json", "two-lines.json", "j2infty.json", "xyz.json",
          "two-planes.json", "quintic.json"}) {
        CAPTURE(name);
        CliResult r = run_cli(cfg(name) + " --oracle");
        REQUIRE(r.exit_code == 0);
        CHECK(contains(r.out, "verdicts passed"));
    }
}
