#pragma once

// Executable statements of the balance characterization for exterior powers
// and of the supporting facts, checked mechanically on small instances.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "sigwedge/exterior.hpp"
#include "sigwedge/signed_graph.hpp"

namespace sigwedge {

struct Counterexample {
    SignedGraph graph;
    std::size_t k = 0;
    bool expected = false;
    bool got = false;
    std::string note;
};

struct VerificationReport {
    std::string claim;
    std::string description;
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;
    /// First failures in instance order (capped); empty iff the claim passed.
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> notes;
    double elapsed_ms = 0.0;

    bool passed() const { return failures == 0; }
};

/// Right-hand side of the characterization: whether wedge^k of a connected
/// signed graph is balanced.
///   k = 1:          g balanced
///   k = n-1:        g anti-balanced
///   2 <= k <= n-2:  |g| a path, or |g| a cycle with g balanced and k odd or
///                   g unbalanced and k even
/// Throws std::invalid_argument for disconnected g or n < 2, and
/// std::out_of_range for k outside 1..n-1.
bool balanced_characterization_predicate(const SignedGraph& g, std::size_t k);

using BalancePredicate = std::function<bool(const SignedGraph&, std::size_t)>;

struct OracleOptions {
    WedgeSignRule rule = WedgeSignRule::Standard;
    /// Worker threads for sweeps; 0 picks the hardware concurrency.
    unsigned threads = 0;
    std::uint64_t seed = 20120301;
    std::size_t max_counterexamples = 16;
};

struct SweepOptions {
    std::size_t n_min = 2;
    std::size_t n_max = 5;
    /// Graphs with 2^|E| <= budget get every signing; others get `budget`
    /// seeded random signings.
    std::uint64_t signing_budget = 1024;
    OracleOptions oracle;
    /// Replaces balanced_characterization_predicate when set.
    BalancePredicate predicate;
};

/// For every connected labeled graph with n_min <= n <= n_max, every signing
/// (or a sample), and every k in 1..n-1, compares balance of wedge^k with the
/// predicate.
VerificationReport sweep_theorem1(const SweepOptions& options);
VerificationReport sweep_theorem1(std::size_t n_max, std::uint64_t signing_budget);

struct FactSuiteOptions {
    OracleOptions oracle;
    std::size_t path_max_order = 7;
    std::size_t cycle_max_order = 7;
    std::size_t signed_path_trials = 200;
    std::size_t claw_max_order = 5;
    std::size_t corollary_max_order = 6;
    std::size_t switching_trials = 200;
    std::size_t johnson_max_order = 7;
    std::size_t palindrome_trials = 50;
    std::size_t palindrome_max_order = 7;
    std::size_t cover_max_order = 5;
    std::size_t cover_max_k = 3;
    std::size_t algebra_trials = 30;
    std::size_t algebra_max_order = 6;
    std::uint64_t algebra_row_limit = 100'000;
};

VerificationReport check_path_exterior(const FactSuiteOptions& options);
VerificationReport check_cycle_exterior(const FactSuiteOptions& options);
VerificationReport check_signed_path(const FactSuiteOptions& options);
VerificationReport check_claw_free(const FactSuiteOptions& options);
VerificationReport check_hypercube(const FactSuiteOptions& options);
VerificationReport check_unsigned_corollary(const FactSuiteOptions& options);
VerificationReport check_switching_class(const FactSuiteOptions& options);
VerificationReport check_ordering_invariance(const FactSuiteOptions& options);
VerificationReport check_johnson(const FactSuiteOptions& options);
VerificationReport check_palindrome(const FactSuiteOptions& options);
VerificationReport check_gain_cover(const FactSuiteOptions& options);
VerificationReport check_exterior_lemma(const FactSuiteOptions& options);

/// Every check above, in that order.
std::vector<VerificationReport> verify_fact_suite(const FactSuiteOptions& options = {});

nlohmann::json to_json(const SignedGraph& g);
/// Timings are left out unless asked for, so repeated runs print identical reports.
nlohmann::json to_json(const VerificationReport& report, bool with_timing = false);
std::string render_text(const VerificationReport& report, bool with_timing = false);

}  // namespace sigwedge
