#include <doctest.h>

#include <json.hpp>

#include "schwinger/cli.hpp"
#include "schwinger/representations.hpp"

using namespace schwinger;
using json = nlohmann::json;

TEST_CASE("factor") {
    auto r = run_cli({"factor", "105", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.out);
    REQUIRE(j["constituents"].size() == 3);
    CHECK(j["constituents"][0]["m"] == 3);
    CHECK(j["constituents"][0]["L"] == 35);
    CHECK(j["constituents"][0]["N"] == 2);
    CHECK(j["constituents"][1]["N"] == 1);

    r = run_cli({"factor", "2310", "--format", "csv"});
    CHECK(r.out.rfind("j,p,n,m,L,N\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);

    r = run_cli({"factor", "1"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("note") != std::string::npos);
}

TEST_CASE("roots") {
    auto r = run_cli({"roots", "105", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["count"] == 8);
    CHECK(j["splits"] == json::array({{1, 105}, {3, 35}, {5, 21}, {7, 15}}));

    r = run_cli({"roots", "7", "--format", "json"});
    j = json::parse(r.out);
    CHECK(j["roots"].size() == 2);
    CHECK(j["roots"][1]["a"] == 6);

    r = run_cli({"roots", "24", "--format", "json"});
    j = json::parse(r.out);
    CHECK(j["non_sign_roots"] == 4);
    CHECK(j.contains("note"));
}

TEST_CASE("basis json round-trips") {
    for (const char* base : {"", "--zero-based"}) {
        std::vector<std::string> args{"basis", "6", "--type", "kq", "--split", "2,3", "--format", "json"};
        if (*base) args.push_back(base);
        const auto r = run_cli(args);
        REQUIRE(r.exit_code == 0);
        CHECK(basis_from_json(r.out) == materialize(build_kq_basis(BiFactorization(2, 3))));
    }
    auto r = run_cli({"basis", "6", "--type", "q1q2", "--split", "2,3", "--format", "csv"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("label,position,phase\n", 0) == 0);
    r = run_cli({"basis", "5", "--type", "complete", "--format", "json"});
    CHECK(basis_from_json(r.out) == materialize(build_complete_basis(factorize(5), BasisKind::CompletePosition)));
}

TEST_CASE("basis validation") {
    auto r = run_cli({"basis", "12", "--type", "kq", "--split", "2,6"});
    CHECK(r.exit_code == 2);
    r = run_cli({"basis", "24", "--type", "kq", "--split", "4,6"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("relatively prime") != std::string::npos);
    r = run_cli({"basis", "12", "--type", "kq"});
    CHECK(r.exit_code == 2);
    r = run_cli({"basis", "12", "--type", "nonsense", "--split", "3,4"});
    CHECK(r.exit_code == 2);
    r = run_cli({"basis", "5000", "--type", "position"});
    CHECK(r.exit_code == 2);
}

TEST_CASE("overlap") {
    auto r = run_cli({"overlap", "6", "--bra", "kq", "--ket", "KQ", "--split", "2,3", "--format", "json", "--zero-based"});
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    REQUIRE(j["entries"].size() == 36);
    for (const auto& e : j["entries"]) {
        CHECK(e["magnitude"] == "1/sqrt(6)");
        const std::uint64_t exp = kq_overlap_exponent(BiFactorization(2, 3), e["bra"][0], e["bra"][1], e["ket"][0], e["ket"][1]);
        CHECK(e["phase"] == std::to_string(exp) + "/6");
    }
    r = run_cli({"overlap", "6", "--bra", "q1q2", "--ket", "q1q2", "--split", "2,3", "--format", "json"});
    j = json::parse(r.out);
    for (const auto& e : j["entries"]) CHECK(e["magnitude"] == (e["bra"] == e["ket"] ? "1" : "0"));
}

TEST_CASE("check exit codes and budget precedence") {
    auto r = run_cli({"check", "105"});
    CHECK(r.exit_code == 0);
    r = run_cli({"check", "1", "--format", "json"});
    CHECK(r.exit_code == 0);
    r = run_cli({"check", "30", "--only", "dense-conjugacy", "--format", "json"}, std::string("4"));
    auto j = json::parse(r.out);
    CHECK(j["results"][0]["status"] == "skipped");
    r = run_cli({"check", "30", "--only", "dense-conjugacy", "--max-dense", "64", "--format", "json"}, std::string("4"));
    j = json::parse(r.out);
    CHECK(j["results"][0]["status"] == "pass");
    r = run_cli({"check", "30"}, std::string("abc"));
    CHECK(r.exit_code == 2);
    r = run_cli({"check", "30", "--only", "bogus"});
    CHECK(r.exit_code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).exit_code == 2);
    CHECK(run_cli({"factor"}).exit_code == 2);
    CHECK(run_cli({"factor", "0"}).exit_code == 2);
    CHECK(run_cli({"factor", "12", "--format", "xml"}).exit_code == 2);
    CHECK(run_cli({"frobnicate"}).exit_code == 2);
    CHECK(run_cli({"--help"}).exit_code == 0);
}
