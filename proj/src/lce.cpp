#include "runlab/lce.hpp"

#include <algorithm>
#include <bit>

namespace runlab {

std::vector<std::uint32_t> build_suffix_array(std::span<const Symbol> s) {
    const std::size_t n = s.size() + 1;  // trailing sentinel, smaller than every symbol
    std::vector<Symbol> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<std::uint32_t> cls(n), p(n), pn(n), cn(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        cls[i] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), s[i]) - sorted.begin()) + 1;
    cls[n - 1] = 0;
    std::size_t classes = sorted.size() + 1;

    std::vector<std::uint32_t> cnt(std::max(classes, n), 0);
    for (std::size_t i = 0; i < n; ++i) ++cnt[cls[i]];
    for (std::size_t i = 1; i < classes; ++i) cnt[i] += cnt[i - 1];
    for (std::size_t i = n; i-- > 0;) p[--cnt[cls[i]]] = static_cast<std::uint32_t>(i);

    // Sort cyclic shifts of s + sentinel; the sentinel makes that equal to
    // sorting suffixes.
    for (std::size_t h = 1; h < n && classes < n; h <<= 1) {
        for (std::size_t i = 0; i < n; ++i) pn[i] = static_cast<std::uint32_t>((p[i] + n - h) % n);
        std::fill(cnt.begin(), cnt.begin() + classes, 0);
        for (std::size_t i = 0; i < n; ++i) ++cnt[cls[pn[i]]];
        for (std::size_t i = 1; i < classes; ++i) cnt[i] += cnt[i - 1];
        for (std::size_t i = n; i-- > 0;) p[--cnt[cls[pn[i]]]] = pn[i];
        cn[p[0]] = 0;
        classes = 1;
        for (std::size_t i = 1; i < n; ++i) {
            const auto cur = std::make_pair(cls[p[i]], cls[(p[i] + h) % n]);
            const auto prev = std::make_pair(cls[p[i - 1]], cls[(p[i - 1] + h) % n]);
            if (cur != prev) ++classes;
            cn[p[i]] = static_cast<std::uint32_t>(classes - 1);
        }
        cls.swap(cn);
    }
    p.erase(p.begin());
    return p;
}

LceIndex::LceIndex(std::span<const Symbol> s) : sa_(build_suffix_array(s)) {
    const std::size_t n = s.size();
    rank_.assign(n, 0);
    for (std::size_t r = 0; r < n; ++r) rank_[sa_[r]] = static_cast<std::uint32_t>(r);

    lcp_.assign(n, 0);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rank_[i] == 0) {
            h = 0;
            continue;
        }
        const std::size_t j = sa_[rank_[i] - 1];
        while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
        lcp_[rank_[i]] = static_cast<std::uint32_t>(h);
        if (h > 0) --h;
    }

    if (n == 0) return;
    sparse_.push_back(lcp_);
    for (std::size_t k = 1; (std::size_t{1} << k) <= n; ++k) {
        const auto& prev = sparse_.back();
        std::vector<std::uint32_t> level(n - (std::size_t{1} << k) + 1);
        for (std::size_t i = 0; i < level.size(); ++i)
            level[i] = std::min(prev[i], prev[i + (std::size_t{1} << (k - 1))]);
        sparse_.push_back(std::move(level));
    }
}

std::uint32_t LceIndex::range_min(std::size_t lo, std::size_t hi) const {
    const std::size_t k = std::bit_width(hi - lo + 1) - 1;
    return std::min(sparse_[k][lo], sparse_[k][hi + 1 - (std::size_t{1} << k)]);
}

std::size_t LceIndex::lce(std::size_t i, std::size_t j) const {
    const std::size_t n = sa_.size();
    if (i >= n || j >= n) return 0;
    if (i == j) return n - i;
    std::size_t a = rank_[i], b = rank_[j];
    if (a > b) std::swap(a, b);
    return range_min(a + 1, b);
}

namespace {
std::vector<Symbol> reversed(std::span<const Symbol> s) { return {s.rbegin(), s.rend()}; }
}  // namespace

BidirectionalLce::BidirectionalLce(std::span<const Symbol> s) : n_(s.size()), fwd_(s), bwd_(reversed(s)) {}

}  // namespace runlab
