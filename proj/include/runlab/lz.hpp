#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "runlab/cmp_oracle.hpp"
#include "runlab/symbol_string.hpp"

namespace runlab {

/// Greedy Lempel-Ziv factorization as its vector of factor lengths.
struct LZFactorization {
    std::vector<std::size_t> lengths;

    std::size_t factor_count() const { return lengths.size(); }
    /// "1,1,5,2"
    std::string to_csv() const;
    static LZFactorization parse_csv(const std::string& csv);

    friend bool operator==(const LZFactorization&, const LZFactorization&) = default;
};

/// Each factor is a fresh letter, or the longest prefix of the remaining
/// suffix with an earlier occurrence start (the occurrence may overlap the
/// factor itself). Suffix array + previous/next-smaller-value LPF, O(n log n).
LZFactorization lz_factorize(std::span<const Symbol> w);

/// Equal factor counts and equal lengths position by position.
bool lz_equivalent(const LZFactorization& a, const LZFactorization& b);

/// Naive longest-previous-factor parser that reads symbols only through
/// the oracle: for each factor start, try every earlier start and extend
/// while EQUAL.
LZFactorization lz_factorize_instrumented(CmpOracle& oracle);

/// Letter a_i of the ordered alphabet a_1 < ... < a_sigma ('a' + i - 1).
Symbol alphabet_letter(std::size_t i);

/// Dictionary s = s1 s2 followed by a query tail; see gen_adversarial.
struct AdversarialInstance {
    std::size_t n = 0;
    std::size_t sigma = 0;
    SymbolString text;
    std::size_t dictionary_len = 0;
    std::vector<std::size_t> queries;          // even letter indices i_1..i_k
    std::vector<std::size_t> query_positions;  // 1-based positions in text

    std::size_t query_count() const { return queries.size(); }

    /// {"n":..,"sigma":..,"queries":[..],"text":".."}
    std::string to_json() const;
    static AdversarialInstance from_json(const std::string& json);
};

/// k = (n - 1.5 sigma - 2) / 2. Requires n, sigma even, 2 < sigma < n/2,
/// sigma <= 26 and an integral k (so sigma is a multiple of 4).
std::size_t adversarial_query_count(std::size_t n, std::size_t sigma);

/// s1 = a1 a3 ... a_{sigma-1}, s2 = a_sigma a2 a_sigma a4 ... a_sigma a_{sigma-2} a_sigma a_sigma,
/// tail = a_sigma a_{i_1} a_sigma a_{i_2} ... a_sigma a_{i_k} a_sigma a_sigma.
AdversarialInstance gen_adversarial(std::size_t n, std::size_t sigma, std::vector<std::size_t> queries);
AdversarialInstance gen_adversarial_random(std::size_t n, std::size_t sigma, std::mt19937_64& rng);

/// Text with query `which` (1-based ordinal) replaced by the odd letter
/// a_{i_which - 1}, which only occurs in s1.
SymbolString perturb_adversarial(const AdversarialInstance& inst, std::size_t which);

/// k * log_3(sigma/2 - 1): the leaf-count height floor of the family.
double lower_bound_floor(std::size_t n, std::size_t sigma);

}  // namespace runlab
