#pragma once

// Executable checks for every closed-form claim about the factorized
// representations of a given dimension M, and the JSON report around them.
//
// Check ids are stable strings and form part of the CLI contract. Results are
// always returned in check-id order, independent of how the checks were
// scheduled, so that two runs produce byte-identical reports.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace schwinger {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus status);

struct CheckResult {
    std::string check_id;
    std::uint64_t modulus = 0;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    CheckStatus status = CheckStatus::Pass;
    std::string reason;  // set when skipped
    std::optional<nlohmann::ordered_json> witness;  // always set when failed
    std::vector<std::string> notes;

    nlohmann::ordered_json to_json() const;
};

struct SuiteOptions {
    /// Dense-oracle budget (O(M^2) memory, O(M^3) time per table).
    std::uint64_t max_dense = 4096;
    /// Full Gram matrices are only formed up to this M.
    std::uint64_t max_gram = 256;
    /// Dense operator products are only formed up to this M.
    std::uint64_t max_dense_operator = 64;
};

/// All check ids, sorted.
const std::vector<std::string>& check_ids();

/// Runs the selected checks (all when selection is empty). Throws
/// InvalidArgument for M == 0 or an unknown id.
std::vector<CheckResult> run_suite(std::uint64_t M, const std::set<std::string>& selection = {},
                                   const SuiteOptions& options = {});

struct SuiteSummary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;
};

SuiteSummary summarize(const std::vector<CheckResult>& results);

/// {"M", "results": [...], "summary": {"pass", "fail", "skipped"}}.
nlohmann::ordered_json report_to_json(std::uint64_t M, const std::vector<CheckResult>& results);

/// For a sign root a: a - 1 = cofactor_minus * gcd_minus and
/// a + 1 = cofactor_plus * gcd_plus with gcd_minus = gcd(a - 1, M) and
/// gcd_plus = gcd(a + 1, M).
struct RootProduct {
    std::uint64_t root = 0;
    std::uint64_t minus = 0;  // a - 1
    std::uint64_t plus = 0;   // a + 1
    std::uint64_t gcd_minus = 0;
    std::uint64_t gcd_plus = 0;
    std::uint64_t cofactor_minus = 0;
    std::uint64_t cofactor_plus = 0;
    bool product_vanishes = false;  // (a + 1)(a - 1) = 0 mod M
};

/// One entry per sign root, sorted by root. Throws InvalidArgument for M < 2.
std::vector<RootProduct> root_products_report(std::uint64_t M);

}  // namespace schwinger
