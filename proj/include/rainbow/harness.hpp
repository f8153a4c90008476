#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rainbow/solver.hpp"

namespace rainbow::harness {

/// A single failed check. `graph6` re-parses to the offending graph; `what`
/// names the check and any vertex, edge or clique involved.
struct Failure {
    std::string group;
    std::string graph6;
    std::string what;
    nlohmann::json expected;
    nlohmann::json actual;
};

struct CheckGroup {
    std::string name;
    std::int64_t checks = 0;
    std::int64_t failures = 0;
    std::int64_t skipped = 0;
};

struct SuiteReport {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
    /// Non-assertive suites only collect evidence and always pass.
    bool assertive = true;
    std::vector<CheckGroup> groups;
    /// First kMaxRecordedFailures failures; `failure_count()` counts all of them.
    std::vector<Failure> failures;
    /// Free-form per-suite results (stable orders, counts, evidence tables).
    nlohmann::json evidence = nlohmann::json::object();
    double seconds = 0.0;

    std::int64_t checks() const;
    std::int64_t failure_count() const;
    std::int64_t skipped() const;
    bool passed() const { return !assertive || failure_count() == 0; }
    const CheckGroup* group(const std::string& name) const;
};

inline constexpr std::size_t kMaxRecordedFailures = 50;

struct SuiteOptions {
    int max_n = 0;  // 0 selects the suite's default
    int trials = 0;
    std::uint64_t seed = 20240917;
    int brute_cap = kDefaultBruteCap;
    int enum_cap = 14;
};

/// gamma of paths and cycles against the closed forms.
SuiteReport verify_path_cycle(const SuiteOptions& o);
/// Diameter upper bound and the n-1 extremal characterization on all trees.
SuiteReport verify_diameter(const SuiteOptions& o);
/// Gamma increments of pendant gadgets and non-stability of the seven forbidden shapes.
SuiteReport verify_gadgets(const SuiteOptions& o);
/// Stable-tree recognizer against the exact solver, certificate replay, stable orders,
/// and stability preservation of the three growth operations.
SuiteReport verify_stability(const SuiteOptions& o);
/// Edge-removal-critical trees against the subdivision recognizer.
SuiteReport verify_er(const SuiteOptions& o);
/// Vertex and clique removal bounds on random graphs and all small trees.
SuiteReport verify_removal_bounds(const SuiteOptions& o);
/// Leaves and pendant paths in minimum functions, the all-minus-one trees, edge witnesses.
SuiteReport verify_min_functions(const SuiteOptions& o);
/// Lower and upper bounds in terms of order and leaf count on all trees.
SuiteReport verify_bs_bounds(const SuiteOptions& o);
/// Tree dynamic program and general solver against exhaustive search.
SuiteReport verify_oracle(const SuiteOptions& o);
/// Evidence table for the unicyclic closed form; never fails.
SuiteReport explore_unicyclic(const SuiteOptions& o);

struct SuiteEntry {
    std::string name;
    std::string description;
    std::function<SuiteReport(const SuiteOptions&)> run;
};

/// All suites in the order `verify all` runs them.
const std::vector<SuiteEntry>& suites();
const SuiteEntry* find_suite(const std::string& name);

/// Deterministic JSON; `seconds` is included only when `with_timing` is set.
nlohmann::json to_json(const SuiteReport& r, bool with_timing = false);
/// Aligned table: suite, params, checks, failures, skipped, seconds, status.
std::string summary_table(const std::vector<SuiteReport>& reports);
/// Human-readable report body: groups, failures and evidence.
std::string to_text(const SuiteReport& r);

}  // namespace rainbow::harness
