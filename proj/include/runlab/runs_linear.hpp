#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "runlab/cmp_oracle.hpp"
#include "runlab/periodicity.hpp"
#include "runlab/symbol_string.hpp"

namespace runlab {

/// A comparison budget was exceeded, or a comparison-free step charged.
class BudgetViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Window [offset + 1, offset + length] of the oracle's text, addressed with
/// local 1-based positions. Local positions past `length` read as a padding
/// symbol smaller than every real symbol; such comparisons are free and are
/// not recorded.
class TextWindow {
public:
    TextWindow(CmpOracle& oracle, std::size_t offset, std::size_t length);
    explicit TextWindow(CmpOracle& oracle) : TextWindow(oracle, 0, oracle.size()) {}

    std::size_t offset() const { return offset_; }
    std::size_t length() const { return length_; }
    std::size_t global(std::size_t local) const { return offset_ + local; }

    CmpOutcome compare(std::size_t x, std::size_t y);
    std::optional<CmpOutcome> known(std::size_t x, std::size_t y) const;

    /// Local range [first, last] as its own window.
    TextWindow sub(std::size_t first, std::size_t last) const;

    CmpOracle& oracle() const { return *oracle_; }
    /// Unrestricted reads of the window, for verification only.
    std::span<const Symbol> symbols() const;

private:
    CmpOracle* oracle_;
    std::size_t offset_;
    std::size_t length_;
};

enum class RunSource : std::uint8_t { Step1, Step3, Recursion };

/// A periodic interval found during discovery, in oracle (global)
/// coordinates. `period` is the periodicity it was found under.
struct CandidateRun {
    std::size_t start = 0;
    std::size_t end = 0;
    std::size_t period = 0;
    RunSource source = RunSource::Step1;

    friend bool operator==(const CandidateRun&, const CandidateRun&) = default;
};

/// First-mismatch table of blocks of length p against the blocks j = 1..d
/// further on. Blocks and offsets are 1-based; -1 marks "no mismatch or no
/// such block".
struct BlockTable {
    std::size_t p = 1;
    std::size_t d = 2;
    std::size_t blocks = 0;
    std::vector<std::int32_t> first;  // forward scan: m[i][j]
    std::vector<std::int32_t> last;   // backward scan: offset of the last mismatch
    std::vector<std::int8_t> sign;    // sgn at the forward mismatch, 0 with m = -1

    std::int32_t m(std::size_t i, std::size_t j) const { return first[(i - 1) * d + (j - 1)]; }
    std::int32_t back(std::size_t i, std::size_t j) const { return last[(i - 1) * d + (j - 1)]; }
    int sgn(std::size_t i, std::size_t j) const { return sign[(i - 1) * d + (j - 1)]; }
};

/// Block signature string; letters are class ids numbered by first
/// appearance.
struct DerivedString {
    std::vector<Symbol> letters;
};

enum class FactorKind : std::uint8_t {
    NoncubicRun,   // run of t' with exponent < 3
    ShortRun,      // d-short run of t'
    ShortStretch,  // maximal q-periodic factor of length in [2q-d, 2q), minimal period below q and not dividing q
    CubicSmall,    // cubic run, minimal period < d
    CubicLarge,    // cubic run, minimal period >= d
};

/// Factor t'[start..end] (1-based) with period q.
struct PeriodicFactor {
    std::size_t start = 0;
    std::size_t end = 0;
    std::size_t period = 0;
    FactorKind kind = FactorKind::NoncubicRun;

    std::size_t length() const { return end - start + 1; }
    friend bool operator==(const PeriodicFactor&, const PeriodicFactor&) = default;
};

struct DerivedFactors {
    std::vector<PeriodicFactor> windowed;  // handled by windowed constant-period scans
    std::vector<PeriodicFactor> cubic_small;
    std::vector<PeriodicFactor> cubic_large;
};

struct Window {
    std::size_t first = 1;
    std::size_t last = 0;
    std::size_t length() const { return last >= first ? last - first + 1 : 0; }
    friend bool operator==(const Window&, const Window&) = default;
};

enum class ChainVerdict : std::uint8_t { AllPeriodic, Chain };

struct RunsOptions {
    std::size_t d = 48;
    /// Cross-check step-1 extraction and aperiodic chains with unrestricted
    /// reads (slow; for tests).
    bool verify = false;
    /// Also window-scan short q-periodic factors whose minimal period is
    /// smaller than q and does not divide it.
    bool short_stretches = true;
    /// Check the recursion decay inequality at every node (only meaningful
    /// for d >= 48).
    bool check_decay = true;
};

struct RunsStats {
    CmpCounters counters;
    std::size_t nodes = 0;
    std::size_t recursion_depth = 0;
    std::size_t const_run_calls = 0;
    std::size_t windowed_factors = 0;
    std::size_t cubic_small = 0;
    std::size_t chains = 0;
    std::size_t cubic_large = 0;
    std::size_t candidates = 0;
    /// max over nodes of sum((n_l + d + 1) / q_l) / (N / 2)
    double max_decay_ratio = 0.0;
};

/// p-periodic runs of the window by the jump-and-scan-back procedure;
/// charges at most 2 ceil(W/p) inequalities. Requires W >= 2p.
std::vector<CandidateRun> find_p_periodic_runs(TextWindow window, std::size_t p);

/// Forward and backward first-mismatch scans; charges at most
/// 2 d ceil(n/p) inequalities.
BlockTable compute_block_table(TextWindow window, std::size_t p, std::size_t d);

/// All jp-periodic runs (j = 1..d) that the table determines, in global
/// coordinates. Performs no comparisons.
std::vector<CandidateRun> extract_table_runs(const BlockTable& table, const TextWindow& window);

/// Performs no comparisons.
DerivedString build_derived_string(const BlockTable& table);

/// Runs of t' with their exponents, d-short runs, and (optionally) short
/// stretches, split by how the main loop treats them. Pure computation on
/// class ids.
DerivedFactors derived_periodic_factors(std::span<const Symbol> tprime, std::size_t d, bool short_stretches = true);

/// Runs (minimal period) of an integer sequence via sampled longest common
/// extensions; O(n log n).
std::vector<RunInterval> find_runs_lce(std::span<const Symbol> s);

/// d-short runs of an integer sequence via sampled longest common extensions.
std::vector<ShortRunInterval> find_short_runs_lce(std::span<const Symbol> s, std::size_t d);

/// [(k1-2)p + 1, (k2+d)p] clamped to [1, n].
Window window_of(std::size_t k1, std::size_t k2, std::size_t p, std::size_t d, std::size_t n);

/// Constant-period scans of the factor's window for p' = pq, 2pq, ..., lpq.
std::vector<CandidateRun> process_noncubic(TextWindow window, const PeriodicFactor& factor, std::size_t p,
                                           std::size_t d, RunsStats* stats = nullptr);

/// Cubic factor of t' with period q < d: ALL_PERIODIC when m[k][q] = -1 on
/// one full period, CHAIN otherwise. Performs no comparisons.
ChainVerdict check_aperiodic_chain(const BlockTable& table, const PeriodicFactor& factor, std::size_t d);

/// The monotone chain behind a CHAIN verdict holds using only outcomes the
/// oracle already knows.
bool verify_aperiodic_chain(const BlockTable& table, const PeriodicFactor& factor, const TextWindow& window);

/// Discovery phase for the window string: every p-run of it appears, after
/// maximal extension, among the returned candidates.
std::vector<CandidateRun> find_all_p_runs(TextWindow window, std::size_t p, const RunsOptions& options,
                                          RunsStats* stats = nullptr);

/// Assembly phase: extend each candidate maximally under its period in
/// `text` (candidate positions are 1-based into `text`), reduce to the
/// minimal period, dedup. Reads symbols directly.
std::vector<RunInterval> assemble_runs(std::span<const Symbol> text, std::span<const CandidateRun> candidates);

struct RunsResult {
    std::vector<RunInterval> runs;
    RunsStats stats;
};

/// All runs of the oracle's text: discovery with p = 1, then assembly.
RunsResult find_all_runs(CmpOracle& oracle, const RunsOptions& options = {});

/// Convenience: a private oracle without entry recording.
RunsResult find_all_runs(const SymbolString& text, const RunsOptions& options = {});

}  // namespace runlab
