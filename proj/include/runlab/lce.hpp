#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "runlab/symbol_string.hpp"

namespace runlab {

/// Suffix array of s (0-based suffix starts), prefix doubling with counting
/// sort.
std::vector<std::uint32_t> build_suffix_array(std::span<const Symbol> s);

/// Longest-common-extension queries over a fixed sequence in O(1) after
/// O(n log n) preprocessing (suffix array, Kasai LCP, sparse table).
/// Works on plain values; it never touches a comparison oracle.
class LceIndex {
public:
    LceIndex() = default;
    explicit LceIndex(std::span<const Symbol> s);

    std::size_t size() const { return sa_.size(); }

    /// Length of the longest common prefix of the suffixes at 0-based i, j.
    std::size_t lce(std::size_t i, std::size_t j) const;

    const std::vector<std::uint32_t>& suffix_array() const { return sa_; }
    const std::vector<std::uint32_t>& rank() const { return rank_; }
    /// lcp()[r] = LCP of suffixes sa[r-1] and sa[r]; lcp()[0] = 0.
    const std::vector<std::uint32_t>& lcp() const { return lcp_; }

private:
    std::uint32_t range_min(std::size_t lo, std::size_t hi) const;

    std::vector<std::uint32_t> sa_;
    std::vector<std::uint32_t> rank_;
    std::vector<std::uint32_t> lcp_;
    std::vector<std::vector<std::uint32_t>> sparse_;
};

/// Forward and backward extensions over one sequence.
class BidirectionalLce {
public:
    explicit BidirectionalLce(std::span<const Symbol> s);

    /// Longest k with s[i..i+k) == s[j..j+k) (0-based).
    std::size_t forward(std::size_t i, std::size_t j) const { return fwd_.lce(i, j); }
    /// Longest k with s(i-k..i] == s(j-k..j] (0-based, inclusive ends).
    std::size_t backward(std::size_t i, std::size_t j) const { return bwd_.lce(n_ - 1 - i, n_ - 1 - j); }

private:
    std::size_t n_;
    LceIndex fwd_;
    LceIndex bwd_;
};

}  // namespace runlab
