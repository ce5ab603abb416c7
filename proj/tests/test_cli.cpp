#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string cli_path() {
#ifdef INDGRASS_CLI_PATH
    return INDGRASS_CLI_PATH;
#else
    const char* env = std::getenv("INDGRASS_CLI");
    REQUIRE(env);
    return env;
#endif
}

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = "'" + cli_path() + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void write_file(const std::string& name, const std::string& content) {
    std::ofstream f(name);
    REQUIRE(f.good());
    f << content;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("line bundle cohomology rows") {
    CliResult r = run_cli("cohomology line -a 0 -b 0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "h0\th1\th2\tchi\n1\t0\t0\t1\n"));

    CliResult dual = run_cli("cohomology line -a -2 -b -2");
    CHECK(dual.exit_code == 0);
    CHECK(contains(dual.out, "0\t0\t1\t1"));

    CliResult json = run_cli("cohomology line -a 2 -b 3 --format json");
    CHECK(json.exit_code == 0);
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["h0"] == 12);
    CHECK(j["chi"] == 12);
}

TEST_CASE("ideal sheaf cohomology from a point file") {
    write_file("cli_points.json", R"({"groups": [["1/2","3","-4"]]})");
    CliResult r = run_cli("cohomology ideal --points cli_points.json -a 1 -b 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "3\t0\t0\t3"));

    write_file("cli_points_bad.json", R"({"groups": [["1/2","1/2"]]})");
    CHECK(run_cli("cohomology ideal --points cli_points_bad.json -a 1 -b 1").exit_code == 2);
    write_file("cli_points_junk.json", "not json at all");
    CHECK(run_cli("cohomology ideal --points cli_points_junk.json -a 1 -b 1").exit_code == 2);
    CHECK(run_cli("cohomology ideal --points cli_missing.json -a 1 -b 1").exit_code == 2);
}

TEST_CASE("ledger output and validation exits") {
    CliResult r = run_cli("ledger --partition 2,1,1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "h0_F(-1,-1)\t6"));
    CHECK(contains(r.out, "h0_F(-1,0)\t12"));
    CHECK(contains(r.out, "h0_F\t19"));
    CHECK(contains(r.out, "k\ttwist\th0\th1\th2\tformula"));
    CHECK(contains(r.out, "h0=3a1+2sum(a2..ak)+3k"));

    CliResult split = run_cli("ledger --partition 0,0");
    CHECK(split.exit_code == 0);
    CHECK(contains(split.out, "h0_F\t6"));

    CHECK(run_cli("ledger --partition 1,2").exit_code == 2);
    CHECK(run_cli("ledger --partition 1,x").exit_code == 2);

    CliResult json = run_cli("ledger --partition 2,1 --format json");
    CHECK(json.exit_code == 0);
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["F"]["h0_F"] == 14);
    CHECK(j["ledger"].size() == 2);
    CHECK(j["F"]["fiber_off_Z"] == "2,2");
}

TEST_CASE("Segre curve degrees and the Plucker map") {
    CliResult r = run_cli("segre --r 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "degree\t3"));
    CHECK(contains(r.out, "chain_incidence\tpath"));
    CHECK(contains(r.out, "base_point_on_curve\tyes"));

    CliResult json = run_cli("segre --r 2 --t 1 --format json");
    CHECK(json.exit_code == 0);
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["degree"] == 2);
    CHECK(j["plucker"].size() == 15);
    CHECK(j["plucker"]["1,2"] == nlohmann::json::array({"1"}));
    CHECK(j["plucker"]["3,4"] == nlohmann::json::array({"0", "0", "1"}));

    CHECK(run_cli("segre --r 1").exit_code == 2);
    CHECK(run_cli("segre --r 2 --t 0").exit_code == 2);
    CHECK(run_cli("segre --r 3 --t 1").exit_code == 2);
}

TEST_CASE("chain embedding report") {
    CliResult r = run_cli("chain-embed --degrees 2,1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "span\t4"));
    CHECK(contains(r.out, "incidences\tok"));
    CHECK(contains(r.out, "total_degree\t3"));

    CHECK(run_cli("chain-embed --degrees 2,0").exit_code == 2);
    CHECK(run_cli("chain-embed --degrees ''").exit_code == 2);

    CliResult json = run_cli("chain-embed --degrees 3,2,1 --format json");
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["span"] == 7);
    CHECK(j["block_offsets"] == nlohmann::json::array({0, 3, 5}));
}

TEST_CASE("two-chain intersection certificate") {
    CliResult r = run_cli("two-chain --r 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "shared_point\tok"));
    CHECK(contains(r.out, "certificate_subset\t1,2"));
    CHECK(contains(r.out, "sampled_pairs_distinct\t49"));

    CliResult json = run_cli("two-chain --r 3 --format json");
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["shared_point"] == true);
    CHECK(j["ambient_dim"] == 9);
}

TEST_CASE("threshold report from a tower spec file") {
    write_file("cli_const2.json",
               R"({"r":{"kind":"const","value":2},"deg":{"kind":"const","value":2},)"
               R"("rank":2,"D1":0})");
    CliResult r = run_cli("bound --spec cli_const2.json --max-m 20");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "m\tdegPhi\tr_m\tlhs1\trhs1\tfails_all"));
    CHECK(contains(r.out, "threshold\t8"));
    CHECK(contains(r.out, "7\t64\t2\t64\t76\t0"));
    CHECK(contains(r.out, "8\t128\t2\t128\t76\t1"));

    CliResult json = run_cli("bound --spec cli_const2.json --max-m 10 --format json");
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["threshold"] == 8);
    CHECK(j["rows"][7]["fails_all"] == true);
    CHECK(j["rows"][6]["fails_all"] == false);

    write_file("cli_deg1.json",
               R"({"r":{"kind":"const","value":2},"deg":{"kind":"const","value":1},)"
               R"("rank":2,"D1":0})");
    CliResult none = run_cli("bound --spec cli_deg1.json --max-m 25");
    CHECK(none.exit_code == 0);
    CHECK(contains(none.out, "threshold\tnone"));

    write_file("cli_badspec.json", R"({"r":{"kind":"weird"},"deg":1})");
    CHECK(run_cli("bound --spec cli_badspec.json --max-m 5").exit_code == 2);
    CHECK(run_cli("bound --spec cli_const2.json --max-m 1").exit_code == 2);
}

TEST_CASE("growth check verdicts") {
    CliResult r = run_cli("twisted-check --spec cli_const2.json --epsilon 1/4 --max-m 12");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "holds\tyes"));
    CHECK(contains(r.out, "m0\t4"));
    CHECK(contains(r.out, "symbolic\tzero"));
    CHECK(contains(r.out, "1\t2\n"));

    CliResult flat = run_cli("twisted-check --spec cli_deg1.json --epsilon 1 --max-m 8");
    CHECK(flat.exit_code == 0);
    CHECK(contains(flat.out, "holds\tno"));
    CHECK(contains(flat.out, "symbolic\tnonzero"));

    CHECK(run_cli("twisted-check --spec cli_const2.json --epsilon 0 --max-m 8").exit_code == 2);
}

TEST_CASE("Schur and flag dimension queries") {
    CliResult r = run_cli("schur --lambda 2,1 --n 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "dimension\t8"));

    CliResult f = run_cli("schur --flag 3,2,2");
    CHECK(f.exit_code == 0);
    CHECK(contains(f.out, "dimension\t15"));

    CliResult json = run_cli("schur --lambda 3,2,2 --n 4 --format json");
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["dimension"] == "36");

    CHECK(run_cli("schur --lambda 2,1").exit_code == 2);
    CHECK(run_cli("schur --lambda 2,1 --n 3 --flag 3,2,1").exit_code == 2);
    CHECK(run_cli("schur").exit_code == 2);
    CHECK(run_cli("schur --lambda 1,2 --n 3").exit_code == 2);
}

TEST_CASE("fixed seeds give byte-identical output") {
    for (const std::string& cmd :
         {std::string("ledger --partition 3,2,1 --seed 99"),
          std::string("segre --r 4 --seed 31"),
          std::string("ledger --partition 2,2 --seed 5 --format json"),
          std::string("segre --r 3 --seed 8 --format json")}) {
        CliResult first = run_cli(cmd);
        CliResult second = run_cli(cmd);
        CHECK(first.exit_code == 0);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.out == second.out);
        CHECK_FALSE(first.out.empty());
    }
}

TEST_CASE("missing subcommand exits with the malformed-input code") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("cohomology").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

} // TEST_SUITE
