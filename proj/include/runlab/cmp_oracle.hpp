#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "runlab/symbol_string.hpp"

namespace runlab {

enum class CmpOutcome : std::int8_t { Less = -1, Equal = 0, Greater = 1 };

constexpr CmpOutcome flip(CmpOutcome o) { return static_cast<CmpOutcome>(-static_cast<int>(o)); }

std::string_view to_string(CmpOutcome o);

struct TranscriptEntry {
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    CmpOutcome outcome = CmpOutcome::Equal;
    bool charged = false;

    friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) = default;
};

struct CmpCounters {
    std::uint64_t charged_ineq = 0;
    std::uint64_t charged_eq = 0;
    std::uint64_t free_hits = 0;

    std::uint64_t charged_total() const { return charged_ineq + charged_eq; }
    friend bool operator==(const CmpCounters&, const CmpCounters&) = default;
};

/// Record of resolved comparisons for one input: the operational stand-in for
/// a root-to-leaf path of a comparison decision tree.
struct Transcript {
    std::size_t n = 0;
    std::vector<TranscriptEntry> entries;
    CmpCounters counters;

    /// Header "n=<n> charged_eq=<..> charged_ineq=<..>", then one
    /// "i j OUTCOME CHARGED|FREE" line per entry.
    std::string serialize() const;
    static Transcript parse(std::string_view text);

    /// Key identifying the path: the (i, j, outcome) sequence only.
    std::string path_key() const;
};

/// Mediates every symbol comparison of an instrumented algorithm.
///
/// Equalities are kept in a union-find over positions; inequalities are
/// cached per ordered pair of class representatives and re-keyed when
/// classes merge. A comparison is free when its outcome follows from one of
/// those two facts, otherwise it is charged. Order transitivity is not used.
class CmpOracle {
public:
    struct Options {
        bool record_entries = true;
    };

    explicit CmpOracle(const SymbolString& text);
    CmpOracle(const SymbolString& text, Options options);

    CmpOracle(const CmpOracle&) = delete;
    CmpOracle& operator=(const CmpOracle&) = delete;

    /// Three-way comparison of the symbols at 1-based positions i and j.
    CmpOutcome compare(std::size_t i, std::size_t j);

    /// Outcome if already deducible from memoized knowledge; never charges
    /// and never records.
    std::optional<CmpOutcome> known(std::size_t i, std::size_t j) const;

    Transcript transcript() const;
    const CmpCounters& counters() const { return counters_; }

    std::size_t size() const { return text_->size(); }

    /// Unrestricted access, for bookkeeping outside the comparison account.
    const SymbolString& text() const { return *text_; }

private:
    std::uint32_t find(std::uint32_t x) const;
    void check_position(std::size_t pos) const;
    void merge(std::uint32_t a, std::uint32_t b);
    std::optional<CmpOutcome> lookup(std::uint32_t ra, std::uint32_t rb) const;
    void record(std::size_t i, std::size_t j, CmpOutcome o, bool charged);

    const SymbolString* text_;
    Options options_;
    mutable std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> class_size_;
    // For each class root: other root -> outcome of (this class) vs (other).
    std::vector<std::unordered_map<std::uint32_t, CmpOutcome>> ineq_;
    std::vector<TranscriptEntry> entries_;
    CmpCounters counters_;
};

/// Every string of length n over the alphabet 'a', 'b', ... (sigma letters)
/// whose pairwise order relations agree with all transcript entries, in
/// lexicographic order. Guarded to n <= 12 and sigma <= 4.
std::vector<SymbolString> consistent_strings(const Transcript& transcript, std::size_t n, std::size_t sigma);

}  // namespace runlab
