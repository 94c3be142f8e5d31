#include "runlab/periodicity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace runlab {

namespace {

void guard(std::size_t n, std::size_t limit, const char* what) {
    if (n > limit)
        throw ContractViolation(std::string(what) + ": input length " + std::to_string(n) + " exceeds guard " +
                                std::to_string(limit));
}

// Calls f(a, b) for every maximal stretch [a, b] (0-based) of
// w[x] == w[x + p], x in [0, n - p).
template <typename F>
void for_each_stretch(std::span<const Symbol> w, std::size_t p, F&& f) {
    const std::size_t n = w.size();
    std::size_t x = 0;
    while (x + p < n) {
        if (w[x] != w[x + p]) {
            ++x;
            continue;
        }
        const std::size_t a = x;
        while (x + p < n && w[x] == w[x + p]) ++x;
        f(a, x - 1);
    }
}

}  // namespace

bool is_period(std::span<const Symbol> w, std::size_t p) {
    if (p == 0) return false;
    for (std::size_t i = 0; i + p < w.size(); ++i)
        if (w[i] != w[i + p]) return false;
    return true;
}

std::size_t minimal_period(std::span<const Symbol> w) {
    if (w.empty()) throw ContractViolation("minimal_period of the empty string");
    for (std::size_t p = 1; p < w.size(); ++p)
        if (is_period(w, p)) return p;
    return w.size();
}

std::vector<RunInterval> find_runs_bruteforce(std::span<const Symbol> w) {
    guard(w.size(), kBruteForceLimit, "find_runs_bruteforce");
    std::vector<RunInterval> runs;
    for (std::size_t p = 1; 2 * p <= w.size(); ++p) {
        for_each_stretch(w, p, [&](std::size_t a, std::size_t b) {
            if (b - a + 1 < p) return;
            auto sub = w.subspan(a, b - a + 1 + p);
            // Any smaller period of a square-or-longer factor divides p.
            for (std::size_t q = 1; q < p; ++q)
                if (p % q == 0 && is_period(sub, q)) return;
            runs.push_back({a + 1, b + p + 1, p});
        });
    }
    std::sort(runs.begin(), runs.end());
    return runs;
}

std::vector<RunInterval> find_runs_naive(std::span<const Symbol> w) {
    guard(w.size(), 100, "find_runs_naive");
    const std::size_t n = w.size();
    std::vector<RunInterval> runs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::size_t len = j - i + 1;
            const std::size_t p = minimal_period(w.subspan(i, len));
            if (2 * p > len) continue;
            if (i > 0 && minimal_period(w.subspan(i - 1, len + 1)) <= p) continue;
            if (j + 1 < n && minimal_period(w.subspan(i, len + 1)) <= p) continue;
            runs.push_back({i + 1, j + 1, p});
        }
    }
    std::sort(runs.begin(), runs.end());
    return runs;
}

std::vector<ShortRunInterval> find_short_runs_bruteforce(std::span<const Symbol> w, std::size_t d) {
    if (d < 1) throw ContractViolation("find_short_runs_bruteforce: d must be >= 1");
    guard(w.size(), kBruteForceLimit, "find_short_runs_bruteforce");
    std::vector<ShortRunInterval> out;
    for (std::size_t p = 2; p < w.size(); ++p) {
        const std::size_t min_stretch = p > d ? p - d : 1;
        for_each_stretch(w, p, [&](std::size_t a, std::size_t b) {
            const std::size_t s = b - a + 1;
            if (s < min_stretch || s >= p) return;
            if (minimal_period(w.subspan(a, s + p)) != p) return;
            out.push_back({a + 1, b + p + 1, p, p - s});
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool check_runs_count(std::span<const Symbol> w) {
    if (w.empty()) return true;
    return find_runs_bruteforce(w).size() < w.size();
}

Rational exponent_sum(std::span<const RunInterval> runs) {
    Rational sum = 0;
    for (const auto& r : runs) sum += r.exponent();
    return sum;
}

Rational cubic_exponent_sum(std::span<const Symbol> w, std::size_t min_period) {
    if (min_period < 2) throw ContractViolation("cubic_exponent_sum: period floor must be >= 2");
    Rational sum = 0;
    for (const auto& r : find_runs_bruteforce(w))
        if (r.cubic() && r.period >= min_period) sum += r.exponent();
    return sum;
}

bool fine_wilf_check(std::span<const Symbol> w, std::size_t p, std::size_t q) {
    auto valid = [&](std::size_t x) { return x >= 1 && x < w.size() && is_period(w, x); };
    if (!valid(p) || !valid(q)) throw ContractViolation("fine_wilf_check: arguments must be periods of w");
    return is_period(w, std::gcd(p, q));
}

SymbolString gen_kolpakov_word(std::size_t k) {
    if (k < 1) throw ContractViolation("gen_kolpakov_word: k must be >= 1");
    std::string s;
    s.reserve(4 * k);
    for (std::size_t i = 0; i < k; ++i) s += "01";
    for (std::size_t i = 0; i < k; ++i) s += "10";
    return SymbolString::from_bytes(s);
}

bool same_period_runs_disjoint(std::span<const RunInterval> runs) {
    std::map<std::size_t, std::vector<RunInterval>> by_period;
    for (const auto& r : runs) by_period[r.period].push_back(r);
    for (auto& [p, group] : by_period) {
        std::sort(group.begin(), group.end());
        for (std::size_t a = 0; a < group.size(); ++a) {
            for (std::size_t b = a + 1; b < group.size() && group[b].start <= group[a].end; ++b) {
                const std::size_t overlap = std::min(group[a].end, group[b].end) - group[b].start + 1;
                if (overlap >= 2 * p) return false;
            }
        }
    }
    return true;
}

std::string runs_to_jsonl(std::span<const RunInterval> runs) {
    std::ostringstream out;
    for (const auto& r : runs)
        out << "{\"start\":" << r.start << ",\"end\":" << r.end << ",\"period\":" << r.period
            << ",\"exp_num\":" << r.exp_num() << ",\"exp_den\":" << r.exp_den() << "}\n";
    return out.str();
}

}  // namespace runlab
