#pragma once

#include <fodef/graph.hh>

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fodef
{
    /// H_i = power(K_1, i), 2^(i-1) vertices. Refuses i > 8.
    auto build_H(int i) -> Graph;

    /// G_i = H_i . (A . H_i) for odd i, indexed as nested lexicographic
    /// products. A must satisfy ea_3 and contain an induced P_4; a failed
    /// precondition throws InvalidArgument naming the check.
    auto build_G(int i, const Graph & a) -> Graph;

    enum class Profile
    {
        Quick,
        Default,
        Deep
    };

    auto parse_profile(const std::string & name) -> Profile;
    auto to_string(Profile profile) -> std::string;

    enum class CheckStatus
    {
        Pass,
        Fail,
        Skipped
    };

    auto to_string(CheckStatus status) -> std::string;

    struct CheckResult
    {
        std::string id;
        std::string anchor;
        CheckStatus status = CheckStatus::Pass;
        /// Why a check was skipped, or the first failure.
        std::string reason;
        nlohmann::json details = nlohmann::json::object();
        std::optional<std::uint64_t> seed;
        /// Wall time; kept out of details so reruns compare equal.
        double seconds = 0;
    };

    auto to_json(const CheckResult & result) -> nlohmann::json;

    enum class BudgetClass
    {
        /// Well under a second.
        Instant,
        /// Seconds to a minute.
        Moderate,
        /// Exhaustive scans over all labeled graphs on 7 vertices.
        Scan,
        /// Only under the deep profile.
        Deep
    };

    auto to_string(BudgetClass budget) -> std::string;

    struct CheckContext
    {
        Profile profile = Profile::Default;
        std::uint64_t seed = 0;
    };

    struct Check
    {
        std::string id;
        /// The statement the check verifies.
        std::string anchor;
        BudgetClass budget = BudgetClass::Instant;
        std::function<CheckResult(const CheckContext &)> run;
    };

    /// All checks, ordered by id.
    auto check_registry() -> const std::vector<Check> &;

    struct VerifyOptions
    {
        /// Substring of check ids to run; all checks when absent.
        std::optional<std::string> filter;
        Profile profile = Profile::Default;
        std::uint64_t seed = 1;
        /// Concurrent checks; 0 picks the hardware concurrency.
        int workers = 0;
    };

    /// Runs the selected checks concurrently. Results are ordered by id, and
    /// a check that throws is reported as a failure with the message.
    auto verify_paper(const VerifyOptions & options) -> std::vector<CheckResult>;

    /// Join and blowup comparisons of W on small instances: "kappa.join"
    /// and "kappa.blowup".
    auto kappa_experiments(std::uint64_t seed) -> std::vector<CheckResult>;
}
