#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "segre/arith.hpp"
#include "segre/cli.hpp"

using namespace segre;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("strata csv matches the rank-2 degree-0 table") {
    const auto r = run_cli({"strata", "--g", "4", "--r", "2", "--d", "0", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "g,r,d,k,s,eps,d1,dim,codim,locus_dim,is_generic\n"
          "4,2,0,1,2,1,-1,12,1,0,false\n"
          "4,2,0,1,4,1,-2,13,0,1,true\n");
}

TEST_CASE("bound text output") {
    const auto r = run_cli({"bound", "--g", "2", "--r", "2", "--k", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "hirschowitz 2\nmukai_sakai 2\nsegre 2\n");

    const auto r3 = run_cli({"bound", "--g", "2", "--r", "3", "--k", "1", "--format", "json"});
    const json j = json::parse(r3.out);
    CHECK(j["hirschowitz"] == 4);
    CHECK(j["mukai_sakai"] == 4);
    CHECK_FALSE(j.contains("segre"));

    // csv keeps a fixed column set; the rank-2 cap cell is empty otherwise
    const auto c2 = run_cli({"bound", "--g", "2", "--r", "2", "--k", "1", "--format", "csv"});
    CHECK(c2.out == "g,r,k,hirschowitz,mukai_sakai,segre\n2,2,1,2,2,2\n");
    const auto c3 = run_cli({"bound", "--g", "2", "--r", "3", "--k", "1", "--format", "csv"});
    CHECK(c3.out == "g,r,k,hirschowitz,mukai_sakai,segre\n2,3,1,4,4,\n");
}

TEST_CASE("smax output lists the admissible strata") {
    const auto r = run_cli({"smax", "--g", "2", "--r", "3", "--d", "1", "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "eps 0\ns_max 2\nvalid_s 2\n");

    const auto rj = run_cli({"smax", "--g", "4", "--r", "2", "--d", "0", "--k", "1",
                             "--format", "json"});
    const json j = json::parse(rj.out);
    CHECK(j["s_max"] == 4);
    CHECK(j["valid_s"] == json::array({2, 4}));
}

TEST_CASE("construct json certificate") {
    const auto r = run_cli({"construct", "--g", "3", "--r", "4", "--d", "1", "--k", "2", "--s",
                            "2", "--format", "json"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["n_k"] == 3);
    CHECK(j["d_tilde"] == 4);
    CHECK(j["window"] == json::array({8, 11}));
    CHECK(j["sharp_ok"] == true);
    CHECK(j["verdict"] == "PaperGuaranteed");
    REQUIRE(j["per_i"].size() == 2);
    CHECK(j["per_i"][0]["i"] == 1);
    CHECK(j["per_i"][0]["worst_case_lb"] == 5);
    CHECK(j["per_i"][1]["i"] == 3);
    CHECK(j["per_i"][1]["reduction"] == "dual");
    CHECK(j["per_i"][1]["worst_case_lb"] == 3);
    CHECK(j["per_i"][0]["chain"][0] == json{{"num", 3}, {"den", 2}});
    CHECK(j["genus_requirement"]["refined_bound"] == json{{"num", 5}, {"den", 2}});
}

TEST_CASE("transform applies steps and reports stages") {
    const auto r = run_cli({"transform", "--g", "2", "--r", "3", "--d", "1", "--steps", "I,I"});
    CHECK(r.code == 0);
    CHECK(r.out == "stage 0: d=1 s=4,2\nstage 1: d=0 s=3,0\n");

    // no steps: identity on the provided profile
    const auto rid = run_cli({"transform", "--g", "2", "--r", "3", "--d", "1", "--profile",
                              "4,2", "--format", "json"});
    const json j = json::parse(rid.out);
    CHECK(j["stages"].size() == 1);
    CHECK(j["final"]["s"] == json::array({4, 2}));

    // rank 1 is forced type I from the general profile: II is rejected
    const auto rbad = run_cli({"transform", "--g", "2", "--r", "3", "--d", "1", "--steps",
                               "II,I", "--filter", "--format", "json"});
    CHECK(rbad.code == 1);
    const json jb = json::parse(rbad.out);
    CHECK(jb["feasible"] == false);
    CHECK(jb["violation"]["rank"] == 1);

    // without the filter the same step is formal state arithmetic
    const auto rfree = run_cli({"transform", "--g", "2", "--r", "3", "--d", "1", "--steps",
                                "II,I", "--format", "json"});
    CHECK(rfree.code == 0);
    CHECK(json::parse(rfree.out)["final"]["s"] == json::array({6, 0}));
}

TEST_CASE("verify runs the oracle suite") {
    const auto r = run_cli({"verify", "--trials", "50"});
    CHECK(r.code == 0);
    CHECK(r.out.find("fuzz_congruence seed=0 trials=50 failures=0") != std::string::npos);
    CHECK(r.out.find("overall PASS") != std::string::npos);

    const auto rj = run_cli({"verify", "--trials", "10", "--format", "json"});
    const json j = json::parse(rj.out);
    CHECK(j["passed"] == true);
    CHECK(j["fuzz"]["failures"] == 0);
}

TEST_CASE("json and csv encode the same strata table") {
    const auto cj = run_cli({"strata", "--g", "3", "--r", "4", "--d", "2", "--format", "json"});
    const auto cc = run_cli({"strata", "--g", "3", "--r", "4", "--d", "2", "--format", "csv"});
    const json rows = json::parse(cj.out)["rows"];

    std::istringstream csv(cc.out);
    std::string line;
    std::getline(csv, line);
    std::vector<std::string> header;
    {
        std::stringstream hs(line);
        std::string cell;
        while (std::getline(hs, cell, ',')) header.push_back(cell);
    }
    size_t n = 0;
    while (std::getline(csv, line)) {
        std::stringstream ls(line);
        std::string cell;
        size_t col = 0;
        REQUIRE(n < rows.size());
        while (std::getline(ls, cell, ',')) {
            const json& v = rows[n].at(header[col]);
            CHECK(cell == (v.is_boolean() ? (v.get<bool>() ? "true" : "false") : v.dump()));
            ++col;
        }
        CHECK(col == header.size());
        ++n;
    }
    CHECK(n == rows.size());
}

TEST_CASE("output is byte-stable across runs") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"strata", "--g", "5", "--r", "3", "--d", "2", "--format", "json"},
             {"construct", "--g", "2", "--r", "5", "--d", "3", "--k", "2", "--s", "1",
              "--format", "csv"},
             {"verify", "--trials", "25", "--format", "json"}}) {
        const auto a = run_cli(args);
        const auto b = run_cli(args);
        CHECK(a.out == b.out);
        CHECK(a.code == b.code);
    }
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"strata", "--g", "1", "--r", "2", "--d", "0"}).code == 2);  // bad genus
    CHECK(run_cli({"strata", "--g", "2", "--r", "65", "--d", "0"}).code == 2);  // out of window
    CHECK(run_cli({"construct", "--g", "2", "--r", "3", "--d", "1", "--k", "2", "--s", "3"}).code
          == 2);  // s not admissible
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({"strata", "--g", "2"}).code == 2);  // missing required flags
    CHECK(run_cli({"--help"}).code == 0);

    CHECK(cli::exit_code_for(segre::overflow_error("x")) == 3);
    CHECK(cli::exit_code_for(domain_error("x")) == 2);
    CHECK(cli::exit_code_for(guard_error("x")) == 2);
}

TEST_CASE("batch processes one record per line and keeps going on errors") {
    const std::string input =
        "{\"command\":\"bound\",\"g\":2,\"r\":2,\"k\":1}\n"
        "{\"command\":\"nope\"}\n"
        "{\"command\":\"smax\",\"g\":2,\"r\":3,\"d\":1,\"k\":2,\"format\":\"text\"}\n";
    const auto r = run_cli({"batch"}, input);
    CHECK(r.code == 1);  // one failing line

    std::istringstream lines(r.out);
    std::string line;
    std::vector<json> records;
    while (std::getline(lines, line)) records.push_back(json::parse(line));
    REQUIRE(records.size() == 3);

    CHECK(records[0]["ok"] == true);
    CHECK(records[0]["result"]["hirschowitz"] == 2);
    CHECK(records[1]["ok"] == false);
    CHECK(records[1]["exit_code"] == 2);
    CHECK(records[2]["ok"] == true);
    CHECK(records[2]["output"] == "eps 0\ns_max 2\nvalid_s 2\n");

    CHECK(run_cli({"batch"}, "").out.empty());
    CHECK(run_cli({"batch"}, "").code == 0);

    const auto good = run_cli({"batch"}, "{\"command\":\"bound\",\"g\":2,\"r\":2,\"k\":1}\n");
    CHECK(good.code == 0);
}

TEST_CASE("--out writes atomically") {
    namespace fs = std::filesystem;
    const fs::path target = fs::temp_directory_path() / "segre_cli_out_test.csv";
    fs::remove(target);

    const auto direct = run_cli({"strata", "--g", "4", "--r", "2", "--d", "0", "--format",
                                 "csv"});
    const auto filed = run_cli({"strata", "--g", "4", "--r", "2", "--d", "0", "--format", "csv",
                                "--out", target.string()});
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());

    std::ifstream f(target);
    std::stringstream content;
    content << f.rdbuf();
    CHECK(content.str() == direct.out);
    CHECK_FALSE(fs::exists(target.string() + ".tmp"));
    fs::remove(target);
}
