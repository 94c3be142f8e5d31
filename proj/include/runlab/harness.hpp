#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <span>
#include <string>
#include <vector>

#include "runlab/generators.hpp"
#include "runlab/runs_linear.hpp"

namespace runlab {

/// One row per (n, repeat); repeat r uses seed config.seed + r.
std::vector<BenchRecord> run_bench(const ExperimentConfig& config, std::span<const std::size_t> lengths);

/// Least-squares slope of log(charged_ineq) against log(n) over the per-n
/// maxima. Rows with charged_ineq = 0 are skipped; fewer than two usable
/// lengths give 0.
double loglog_slope(std::span<const BenchRecord> records);

/// Header, rows, then "# loglog_slope=<x>".
std::string bench_csv(std::span<const BenchRecord> records);

/// {"n":..,"sigma":..,"d":..,"charged_ineq":..,"charged_eq":..,"free_hits":..,"recursion_depth":..}
std::string runs_summary_json(std::size_t n, std::size_t sigma, std::size_t d, const RunsStats& stats);

struct CheckTally {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    void fail(const std::string& what) {
        if (failures++ == 0) first_failure = what;
    }
};

struct VerifyReport {
    std::deque<CheckTally> checks;  // stable references across add()

    CheckTally& add(std::string name);
    bool ok() const;
    /// One "PASS|FAIL <name> checked=<c> failures=<f>" line per check.
    std::string render() const;
};

struct LemmaSweepOptions {
    std::size_t strings = 1000;
    std::size_t max_n = 300;
    std::uint64_t seed = 1;
    std::size_t kolpakov_max_k = 50;
};

/// Run count, cubic exponent sums, Fine-Wilf, same-period overlap on random
/// strings; the Kolpakov family count.
VerifyReport verify_lemmas(const LemmaSweepOptions& options);

/// Lemma checks for one string (shared with the acceptance sweeps).
void check_string_lemmas(const SymbolString& w, std::mt19937_64& rng, VerifyReport& report);
/// Same, on a run set computed elsewhere (texts beyond the brute-force guard).
void check_string_lemmas(const SymbolString& w, std::span<const RunInterval> runs, std::mt19937_64& rng,
                         VerifyReport& report);

/// find_all_runs against find_runs_bruteforce for every string over
/// sigma letters of each length up to max_n, for each d.
VerifyReport verify_exhaustive(std::span<const std::pair<std::size_t, std::size_t>> sigma_max_n,
                               std::span<const std::size_t> depths);

/// Groups all strings up to max_n over up to max_sigma letters by
/// transcript; every group must share one answer, and each transcript's
/// consistent strings must be exactly its group.
VerifyReport verify_leafdet(std::size_t max_n, std::size_t max_sigma, std::size_t d = 48);

struct LowerBoundOptions {
    std::vector<std::size_t> sigmas{8, 16};
    std::vector<std::size_t> lengths{120, 240, 480};
    std::size_t trials = 100;
    std::uint64_t seed = 1;
};

/// Perturbation sensitivity, measured charges against the floor, and
/// growth of mean charges in k.
VerifyReport verify_lowerbound(const LowerBoundOptions& options);

}  // namespace runlab
