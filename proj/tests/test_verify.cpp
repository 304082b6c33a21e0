#include <doctest.h>

#include <algorithm>

#include "schwinger/errors.hpp"
#include "schwinger/verify.hpp"

using namespace schwinger;

namespace {

const CheckResult& find(const std::vector<CheckResult>& rs, const std::string& id) {
    const auto it = std::find_if(rs.begin(), rs.end(), [&](const CheckResult& r) { return r.check_id == id; });
    REQUIRE(it != rs.end());
    return *it;
}

}  // namespace

TEST_CASE("check ids are sorted and unique") {
    const auto& ids = check_ids();
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
    CHECK(ids.size() == 24);
}

TEST_CASE("suite passes on small moduli") {
    for (std::uint64_t M : {1, 2, 3, 4, 6, 8, 10, 12, 15, 16, 18, 21, 24, 30, 36, 60, 64, 72}) {
        const auto rs = run_suite(M);
        CAPTURE(M);
        CHECK(rs.size() == check_ids().size());
        for (const auto& r : rs) {
            CAPTURE(r.check_id);
            CHECK(r.status != CheckStatus::Fail);
            if (r.status == CheckStatus::Fail) MESSAGE(r.to_json().dump());
        }
        for (std::size_t i = 0; i < rs.size(); ++i) CHECK(rs[i].check_id == check_ids()[i]);
    }
}

TEST_CASE("M = 1 is degenerate but clean") {
    const auto rs = run_suite(1);
    const auto s = summarize(rs);
    CHECK(s.fail == 0);
    CHECK(find(rs, "root-products").status == CheckStatus::Skipped);
    CHECK(s.skipped == 1);
}

TEST_CASE("exotic roots are reported as a note") {
    const auto rs = run_suite(24, {"root-correspondence", "unit-roots"});
    REQUIRE(rs.size() == 2);
    const auto& rc = find(rs, "root-correspondence");
    CHECK(rc.status == CheckStatus::Pass);
    CHECK(rc.parameters["non_sign_roots"] == nlohmann::ordered_json::array({5, 11, 13, 19}));
    CHECK_FALSE(rc.notes.empty());
}

TEST_CASE("root table at 105") {
    const auto rs = run_suite(105, {"root-correspondence"});
    const auto& reps = rs[0].parameters["representatives"];
    REQUIRE(reps.size() == 4);
    std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> got;
    for (const auto& r : reps) got.emplace_back(r["root"], r["split"].get<std::vector<std::uint64_t>>());
    CHECK(got == std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>>{
                     {1, {105, 1}}, {34, {3, 35}}, {64, {21, 5}}, {76, {15, 7}}});
}

TEST_CASE("root products") {
    const auto report = root_products_report(105);
    CHECK(report.size() == 8);
    for (const auto& p : report) CHECK(p.product_vanishes);
    const auto it = std::find_if(report.begin(), report.end(), [](const RootProduct& p) { return p.root == 76; });
    REQUIRE(it != report.end());
    CHECK(it->minus == 75);
    CHECK(it->plus == 77);
    CHECK(it->gcd_minus == 15);
    CHECK(it->gcd_plus == 7);
    CHECK(it->cofactor_minus == 5);
    CHECK(it->cofactor_plus == 11);
    const auto a64 = std::find_if(report.begin(), report.end(), [](const RootProduct& p) { return p.root == 64; });
    CHECK(a64->gcd_minus == 21);
    CHECK(a64->gcd_plus == 5);
    CHECK_THROWS_AS(root_products_report(1), InvalidArgument);
}

TEST_CASE("budgets skip dense checks but keep exact ones") {
    SuiteOptions opts;
    opts.max_dense = 8;
    const auto rs = run_suite(30, {"dense-conjugacy", "orthonormality", "overlap-kq"}, opts);
    CHECK(find(rs, "dense-conjugacy").status == CheckStatus::Skipped);
    CHECK(find(rs, "orthonormality").status == CheckStatus::Skipped);
    CHECK(find(rs, "overlap-kq").status == CheckStatus::Pass);
    CHECK_FALSE(find(rs, "dense-conjugacy").reason.empty());
}

TEST_CASE("bad arguments") {
    CHECK_THROWS_AS(run_suite(0), InvalidArgument);
    CHECK_THROWS_AS(run_suite(6, {"no-such-check"}), InvalidArgument);
}

TEST_CASE("reports are deterministic") {
    const auto a = report_to_json(60, run_suite(60)).dump(2);
    const auto b = report_to_json(60, run_suite(60)).dump(2);
    CHECK(a == b);
    const auto j = nlohmann::ordered_json::parse(a);
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["results"].size() == check_ids().size());
}
