#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "runlab/symbol_string.hpp"

namespace runlab {

using Rational = boost::multiprecision::cpp_rational;

/// A run t[start..end] (1-based, inclusive). The exponent is kept as the
/// exact pair length / period.
struct RunInterval {
    std::size_t start = 0;
    std::size_t end = 0;
    std::size_t period = 0;

    std::size_t length() const { return end - start + 1; }
    std::size_t exp_num() const { return length(); }
    std::size_t exp_den() const { return period; }
    Rational exponent() const { return Rational(exp_num(), exp_den()); }
    bool cubic() const { return length() >= 3 * period; }

    friend auto operator<=>(const RunInterval&, const RunInterval&) = default;
};

/// A d-short run: substring xyx with |xy| its minimal period and gap |y|.
struct ShortRunInterval {
    std::size_t start = 0;
    std::size_t end = 0;
    std::size_t period = 0;
    std::size_t gap = 0;

    std::size_t length() const { return end - start + 1; }
    friend auto operator<=>(const ShortRunInterval&, const ShortRunInterval&) = default;
};

/// Size guard of the quadratic oracles.
inline constexpr std::size_t kBruteForceLimit = 5000;

bool is_period(std::span<const Symbol> w, std::size_t p);

/// Smallest p acting as a period; |w| when none is proper (so a single
/// letter has minimal period 1).
std::size_t minimal_period(std::span<const Symbol> w);

/// Ground-truth runs: for every period p, maximal stretches of
/// w[x] == w[x+p] of length >= p, kept when p is the minimal period.
/// Sorted by (start, end).
std::vector<RunInterval> find_runs_bruteforce(std::span<const Symbol> w);

/// Literal definition: minimal period of every substring, then the
/// extension test. Cubic time; guarded to |w| <= 200.
std::vector<RunInterval> find_runs_naive(std::span<const Symbol> w);

/// All d-short runs (gap in 1..d), sorted by (start, end).
std::vector<ShortRunInterval> find_short_runs_bruteforce(std::span<const Symbol> w, std::size_t d);

/// Number of runs is below |w| (vacuously true for the empty string).
bool check_runs_count(std::span<const Symbol> w);

Rational exponent_sum(std::span<const RunInterval> runs);

/// Sum of exponents of cubic runs with minimal period >= min_period.
Rational cubic_exponent_sum(std::span<const Symbol> w, std::size_t min_period);

/// Whether gcd(p, q) is a period of w; p and q must be periods of w.
bool fine_wilf_check(std::span<const Symbol> w, std::size_t p, std::size_t q);

/// (01)^k (10)^k over the symbols '0' < '1'.
SymbolString gen_kolpakov_word(std::size_t k);

/// Two distinct runs with the same minimal period never share 2p positions.
bool same_period_runs_disjoint(std::span<const RunInterval> runs);

/// {"start":i,"end":j,"period":p,"exp_num":a,"exp_den":b} per line, in the
/// order given.
std::string runs_to_jsonl(std::span<const RunInterval> runs);

}  // namespace runlab
