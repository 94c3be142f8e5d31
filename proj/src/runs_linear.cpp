#include "runlab/runs_linear.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "runlab/lce.hpp"

namespace runlab {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

CmpOutcome pad_order(bool x_pad, bool y_pad) {
    if (x_pad && y_pad) return CmpOutcome::Equal;
    return x_pad ? CmpOutcome::Less : CmpOutcome::Greater;
}

void check_unchanged(const CmpCounters& before, const CmpCounters& after, const char* step) {
    if (!(before == after)) throw BudgetViolation(std::string(step) + " must not compare symbols");
}

std::string describe(const CandidateRun& c) {
    return "[" + std::to_string(c.start) + ".." + std::to_string(c.end) + "] period " + std::to_string(c.period);
}

}  // namespace

// ---------------------------------------------------------------- TextWindow

TextWindow::TextWindow(CmpOracle& oracle, std::size_t offset, std::size_t length)
    : oracle_(&oracle), offset_(offset), length_(length) {
    if (offset + length > oracle.size()) throw ContractViolation("text window exceeds the text");
}

CmpOutcome TextWindow::compare(std::size_t x, std::size_t y) {
    if (x < 1 || y < 1) throw ContractViolation("window positions are 1-based");
    const bool x_pad = x > length_, y_pad = y > length_;
    if (x_pad || y_pad) return pad_order(x_pad, y_pad);
    return oracle_->compare(offset_ + x, offset_ + y);
}

std::optional<CmpOutcome> TextWindow::known(std::size_t x, std::size_t y) const {
    const bool x_pad = x > length_, y_pad = y > length_;
    if (x_pad || y_pad) return pad_order(x_pad, y_pad);
    return oracle_->known(offset_ + x, offset_ + y);
}

TextWindow TextWindow::sub(std::size_t first, std::size_t last) const {
    if (first < 1 || last > length_ || first > last) throw ContractViolation("sub-window out of range");
    return TextWindow(*oracle_, offset_ + first - 1, last - first + 1);
}

std::span<const Symbol> TextWindow::symbols() const { return oracle_->text().view().subspan(offset_, length_); }

// ------------------------------------------------- constant-period scanning

std::vector<CandidateRun> find_p_periodic_runs(TextWindow window, std::size_t p) {
    const std::size_t w = window.length();
    if (p == 0 || w < 2 * p) throw ContractViolation("find_p_periodic_runs: window shorter than 2p");
    const std::size_t limit = w - p;  // shift positions 1..limit
    const CmpCounters before = window.oracle().counters();

    // 1 = equal, 0 = differ, -1 = not compared
    std::vector<std::int8_t> eq(limit + 2, -1);
    auto test = [&](std::size_t x) {
        eq[x] = window.compare(x, x + p) == CmpOutcome::Equal ? 1 : 0;
        return eq[x] == 1;
    };

    std::size_t i = 1;
    while (i <= limit) {
        if (test(i)) {
            ++i;
            continue;
        }
        // Jump a full period and scan back towards the mismatch.
        const std::size_t mismatch = i;
        i = mismatch + p;
        for (std::size_t x = std::min(i - 1, limit); x > mismatch; --x)
            if (!test(x)) break;
    }

    std::vector<CandidateRun> out;
    for (std::size_t x = 1; x <= limit;) {
        if (eq[x] != 1) {
            ++x;
            continue;
        }
        const std::size_t a = x;
        while (x <= limit && eq[x] == 1) ++x;
        const std::size_t b = x - 1;
        if (b - a + 1 < p) continue;
        if ((a > 1 && eq[a - 1] != 0) || (b < limit && eq[b + 1] != 0))
            throw std::logic_error("constant-period scan left a run boundary undetermined");
        out.push_back({window.global(a), window.global(b + p), p, RunSource::Step3});
    }

    const auto charged = window.oracle().counters().charged_ineq - before.charged_ineq;
    if (charged > 2 * ceil_div(w, p))
        throw BudgetViolation("constant-period scan charged " + std::to_string(charged) + " > 2*ceil(" +
                              std::to_string(w) + "/" + std::to_string(p) + ")");
    return out;
}

// -------------------------------------------------------------- block table

BlockTable compute_block_table(TextWindow window, std::size_t p, std::size_t d) {
    if (p < 1 || d < 2) throw ContractViolation("compute_block_table: need p >= 1 and d >= 2");
    BlockTable t;
    t.p = p;
    t.d = d;
    t.blocks = ceil_div(window.length(), p);
    t.first.assign(t.blocks * d, -1);
    t.last.assign(t.blocks * d, -1);
    t.sign.assign(t.blocks * d, 0);

    for (std::size_t i = 1; i <= t.blocks; ++i) {
        const std::size_t base = (i - 1) * p;
        for (std::size_t j = 1; j <= d && i + j <= t.blocks; ++j) {
            const std::size_t shift = j * p;
            const std::size_t cell = (i - 1) * d + (j - 1);
            for (std::size_t k = 1; k <= p; ++k) {
                const CmpOutcome o = window.compare(base + k, base + k + shift);
                if (o != CmpOutcome::Equal) {
                    t.first[cell] = static_cast<std::int32_t>(k);
                    t.sign[cell] = static_cast<std::int8_t>(o);
                    break;
                }
            }
            if (t.first[cell] == -1) continue;
            // Backward scan from the block end; it cannot pass the forward mismatch.
            const std::size_t m = static_cast<std::size_t>(t.first[cell]);
            std::size_t back = m;
            for (std::size_t x = base + p; x > base + m; --x) {
                if (window.compare(x, x + shift) != CmpOutcome::Equal) {
                    back = x - base;
                    break;
                }
            }
            t.last[cell] = static_cast<std::int32_t>(back);
        }
    }
    return t;
}

std::vector<CandidateRun> extract_table_runs(const BlockTable& table, const TextWindow& window) {
    const std::size_t n = window.length();
    const std::size_t p = table.p;
    std::vector<CandidateRun> out;
    for (std::size_t j = 1; j <= table.d && j < table.blocks; ++j) {
        const std::size_t shift = j * p;
        bool open = false;
        std::size_t a = 0, b = 0;
        auto close = [&] {
            // Stretches reaching into the padding consist of padding only.
            if (open && b - a + 1 >= shift && b + shift <= n)
                out.push_back({window.global(a), window.global(b + shift), shift, RunSource::Step1});
            open = false;
        };
        auto equal_span = [&](std::size_t from, std::size_t to) {
            if (from > to) return;
            if (!open) {
                open = true;
                a = from;
            }
            b = to;
        };
        for (std::size_t i = 1; i + j <= table.blocks; ++i) {
            const std::size_t base = (i - 1) * p;
            const std::int32_t m = table.m(i, j);
            if (m == -1) {
                equal_span(base + 1, base + p);
                continue;
            }
            equal_span(base + 1, base + static_cast<std::size_t>(m) - 1);
            close();
            equal_span(base + static_cast<std::size_t>(table.back(i, j)) + 1, base + p);
        }
        close();
    }
    return out;
}

namespace {

void verify_table_runs(const BlockTable& table, const TextWindow& window, std::vector<CandidateRun> found) {
    const auto s = window.symbols();
    std::vector<CandidateRun> expected;
    for (std::size_t j = 1; j <= table.d; ++j) {
        const std::size_t shift = j * table.p;
        if (2 * shift > s.size()) break;
        for (std::size_t x = 0; x + shift < s.size();) {
            if (s[x] != s[x + shift]) {
                ++x;
                continue;
            }
            const std::size_t a = x;
            while (x + shift < s.size() && s[x] == s[x + shift]) ++x;
            if (x - a >= shift)
                expected.push_back({window.global(a + 1), window.global(x + shift), shift, RunSource::Step1});
        }
    }
    auto key = [](const CandidateRun& c) { return std::tuple(c.period, c.start, c.end); };
    auto less = [&](const CandidateRun& l, const CandidateRun& r) { return key(l) < key(r); };
    std::sort(expected.begin(), expected.end(), less);
    std::sort(found.begin(), found.end(), less);
    if (expected != found) throw std::logic_error("block-table run extraction disagrees with direct recomputation");
}

}  // namespace

DerivedString build_derived_string(const BlockTable& table) {
    const std::size_t width = table.d - 1;
    auto row_less = [&](std::size_t a, std::size_t b) {
        for (std::size_t j = 1; j <= width; ++j) {
            const auto ma = table.m(a, j), mb = table.m(b, j);
            if (ma != mb) return ma < mb;
            const auto sa = table.sgn(a, j), sb = table.sgn(b, j);
            if (sa != sb) return sa < sb;
        }
        return false;
    };
    std::vector<std::size_t> order(table.blocks);
    std::iota(order.begin(), order.end(), std::size_t{1});
    std::stable_sort(order.begin(), order.end(), row_less);

    // Group equal rows, then number groups by first appearance.
    std::vector<std::size_t> group(table.blocks + 1, 0);
    std::size_t groups = 0;
    for (std::size_t r = 0; r < order.size(); ++r) {
        if (r == 0 || row_less(order[r - 1], order[r])) ++groups;
        group[order[r]] = groups;
    }
    std::vector<Symbol> rename(groups + 1, -1);
    DerivedString out;
    out.letters.reserve(table.blocks);
    Symbol next = 0;
    for (std::size_t i = 1; i <= table.blocks; ++i) {
        auto& id = rename[group[i]];
        if (id < 0) id = next++;
        out.letters.push_back(id);
    }
    return out;
}

// ------------------------------------------------ periodic factors of t'

std::vector<RunInterval> find_runs_lce(std::span<const Symbol> s) {
    const std::size_t n = s.size();
    std::vector<RunInterval> out;
    if (n < 2) return out;
    const BidirectionalLce lce(s);
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t q = 1; 2 * q <= n; ++q) {
        // Any stretch of s[x] == s[x+q] with length >= q contains a multiple of q.
        for (std::size_t x = q; x + q <= n;) {
            const std::size_t b = lce.backward(x - 1, x - 1 + q);
            if (b == 0) {
                x += q;
                continue;
            }
            const std::size_t f = lce.forward(x, x + q);
            if (b + f >= q) {
                const std::size_t start = x - b + 1, end = x + f + q;
                // Ascending q: the first period to produce an interval is its minimal one.
                if (seen.insert(static_cast<std::uint64_t>(start) * (n + 1) + end).second)
                    out.push_back({start, end, q});
            }
            x = ((x + f) / q + 1) * q;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Maximal q-periodic factors of length in [max(q+1, 2q-d), 2q-1]: ShortRun
// when q is the minimal period, ShortStretch when the minimal period is
// below q without dividing it. Factors whose minimal period divides q lie
// inside a run of the same string and are skipped.
std::vector<PeriodicFactor> scan_short_factors(std::span<const Symbol> s, std::size_t d, bool stretches) {
    const std::size_t n = s.size();
    std::vector<PeriodicFactor> out;
    if (n < 3) return out;
    const BidirectionalLce lce(s);
    auto has_period = [&](std::size_t start0, std::size_t len, std::size_t period) {
        return lce.forward(start0, start0 + period) >= len - period;
    };
    for (std::size_t q = 2; q < n && (q <= d || q - d <= n - q); ++q) {
        const std::size_t gap_floor = q > d ? q - d : 1;  // minimal stretch length
        for (std::size_t x = gap_floor; x + q <= n;) {
            const std::size_t b = lce.backward(x - 1, x - 1 + q);
            if (b == 0) {
                x += gap_floor;
                continue;
            }
            const std::size_t f = lce.forward(x, x + q);
            const std::size_t stretch = b + f;
            if (stretch >= gap_floor && stretch < q) {
                const std::size_t start = x - b + 1;
                const std::size_t len = stretch + q;
                // A period <= len - q forces a divisor of q to be a period.
                bool divisor = false;
                for (std::size_t delta = 1; delta <= stretch && !divisor; ++delta)
                    divisor = q % delta == 0 && has_period(start - 1, len, delta);
                std::size_t minimal = q;
                for (std::size_t other = stretch + 1; other < q && !divisor && minimal == q; ++other)
                    if (has_period(start - 1, len, other)) minimal = other;
                if (!divisor && minimal == q)
                    out.push_back({start, start + len - 1, q, FactorKind::ShortRun});
                else if (!divisor && stretches && q % minimal != 0)
                    out.push_back({start, start + len - 1, q, FactorKind::ShortStretch});
            }
            x = ((x + f) / gap_floor + 1) * gap_floor;
        }
    }
    return out;
}

}  // namespace

std::vector<ShortRunInterval> find_short_runs_lce(std::span<const Symbol> s, std::size_t d) {
    if (d < 1) throw ContractViolation("find_short_runs_lce: d must be >= 1");
    std::vector<ShortRunInterval> out;
    for (const auto& f : scan_short_factors(s, d, false))
        out.push_back({f.start, f.end, f.period, 2 * f.period - f.length()});
    std::sort(out.begin(), out.end());
    return out;
}

DerivedFactors derived_periodic_factors(std::span<const Symbol> tprime, std::size_t d, bool short_stretches) {
    DerivedFactors out;
    for (const auto& r : find_runs_lce(tprime)) {
        if (!r.cubic())
            out.windowed.push_back({r.start, r.end, r.period, FactorKind::NoncubicRun});
        else if (r.period < d)
            out.cubic_small.push_back({r.start, r.end, r.period, FactorKind::CubicSmall});
        else
            out.cubic_large.push_back({r.start, r.end, r.period, FactorKind::CubicLarge});
    }
    for (const auto& f : scan_short_factors(tprime, d, short_stretches)) out.windowed.push_back(f);
    return out;
}

Window window_of(std::size_t k1, std::size_t k2, std::size_t p, std::size_t d, std::size_t n) {
    Window w;
    w.first = k1 >= 2 ? (k1 - 2) * p + 1 : 1;
    w.last = std::min((k2 + d) * p, n);
    return w;
}

std::vector<CandidateRun> process_noncubic(TextWindow window, const PeriodicFactor& factor, std::size_t p,
                                           std::size_t d, RunsStats* stats) {
    const Window w = window_of(factor.start, factor.end, p, d, window.length());
    std::vector<CandidateRun> out;
    if (w.length() == 0) return out;
    const std::size_t base = p * factor.period;
    const std::size_t multiples = w.length() / (2 * base);
    if (multiples == 0) return out;
    const TextWindow sub = window.sub(w.first, w.last);
    for (std::size_t r = 1; r <= multiples; ++r) {
        auto found = find_p_periodic_runs(sub, r * base);
        if (stats) ++stats->const_run_calls;
        out.insert(out.end(), found.begin(), found.end());
    }
    return out;
}

ChainVerdict check_aperiodic_chain(const BlockTable& table, const PeriodicFactor& factor, std::size_t d) {
    const std::size_t q = factor.period;
    if (q >= d) throw ContractViolation("check_aperiodic_chain: factor period must be below d");
    for (std::size_t k = factor.start; k < factor.start + q; ++k)
        if (table.m(k, q) != -1) return ChainVerdict::Chain;
    return ChainVerdict::AllPeriodic;
}

bool verify_aperiodic_chain(const BlockTable& table, const PeriodicFactor& factor, const TextWindow& window) {
    const std::size_t q = factor.period, p = table.p;
    std::size_t k = factor.start;
    while (k < factor.start + q && table.m(k, q) == -1) ++k;
    if (k == factor.start + q) return true;
    const std::size_t s = (k - 1) * p + static_cast<std::size_t>(table.m(k, q));
    const std::size_t step = p * q;
    if (s > factor.end * p) return false;
    const std::size_t links = (factor.end * p - s) / step + 1;
    std::optional<CmpOutcome> direction;
    for (std::size_t r = 0; r < links; ++r) {
        const auto o = window.known(s + r * step, s + (r + 1) * step);
        if (!o || *o == CmpOutcome::Equal) return false;
        if (direction && *direction != *o) return false;
        direction = o;
    }
    return true;
}

// ----------------------------------------------------------- main recursion

namespace {

struct Discovery {
    const RunsOptions& options;
    RunsStats& stats;
    std::vector<CandidateRun>& out;

    void node(TextWindow window, std::size_t p, std::size_t depth) {
        const std::size_t n = window.length();
        if (n < 2 * p) return;
        ++stats.nodes;
        stats.recursion_depth = std::max(stats.recursion_depth, depth);
        const std::size_t d = options.d;
        CmpOracle& oracle = window.oracle();
        const std::size_t blocks = ceil_div(n, p);
        auto tag = [&](std::vector<CandidateRun> found) {
            for (auto& c : found) {
                if (depth > 0) c.source = RunSource::Recursion;
                out.push_back(c);
            }
        };

        // Step 1: runs with periods p, 2p, ..., dp.
        CmpCounters before = oracle.counters();
        const BlockTable table = compute_block_table(window, p, d);
        const auto step1 = oracle.counters().charged_ineq - before.charged_ineq;
        if (step1 > 2 * d * blocks)
            throw BudgetViolation("block table charged " + std::to_string(step1) + " > 2*d*ceil(n/p) = " +
                                  std::to_string(2 * d * blocks));
        auto table_runs = extract_table_runs(table, window);
        if (options.verify) verify_table_runs(table, window, table_runs);
        tag(std::move(table_runs));

        // Step 2: the derived string and its periodic factors.
        before = oracle.counters();
        const DerivedString tprime = build_derived_string(table);
        const DerivedFactors factors = derived_periodic_factors(tprime.letters, d, options.short_stretches);
        check_unchanged(before, oracle.counters(), "derived string construction");

        // Step 3: noncubic runs and short factors of t'.
        for (const auto& f : factors.windowed) {
            ++stats.windowed_factors;
            tag(process_noncubic(window, f, p, d, &stats));
        }

        // Step 4: cubic factors with small period are settled by the table.
        before = oracle.counters();
        for (const auto& f : factors.cubic_small) {
            ++stats.cubic_small;
            if (check_aperiodic_chain(table, f, d) == ChainVerdict::Chain) {
                ++stats.chains;
                if (options.verify && !verify_aperiodic_chain(table, f, window))
                    throw std::logic_error("aperiodic chain not implied by known outcomes");
            }
        }
        check_unchanged(before, oracle.counters(), "aperiodic chain classification");

        // Step 5: recurse on cubic factors with period >= d.
        if (factors.cubic_large.empty()) return;
        Rational children = 0;
        for (const auto& f : factors.cubic_large) children += Rational(f.length() + d + 1, f.period);
        const Rational bound(blocks, 2);
        const double ratio = static_cast<double>(children / bound);
        stats.max_decay_ratio = std::max(stats.max_decay_ratio, ratio);
        if (options.check_decay && d >= 48 && children > bound)
            throw BudgetViolation("recursion decay violated: child ratio sum " + std::to_string(ratio) +
                                  " x N/2");
        for (const auto& f : factors.cubic_large) {
            ++stats.cubic_large;
            const Window w = window_of(f.start, f.end, p, d, n);
            node(window.sub(w.first, w.last), p * f.period, depth + 1);
        }
    }
};

}  // namespace

std::vector<CandidateRun> find_all_p_runs(TextWindow window, std::size_t p, const RunsOptions& options,
                                          RunsStats* stats) {
    if (p < 1 || options.d < 2) throw ContractViolation("find_all_p_runs: need p >= 1 and d >= 2");
    RunsStats local;
    RunsStats& st = stats ? *stats : local;
    std::vector<CandidateRun> out;
    Discovery{options, st, out}.node(window, p, 0);
    st.candidates += out.size();
    return out;
}

std::vector<RunInterval> assemble_runs(std::span<const Symbol> text, std::span<const CandidateRun> candidates) {
    const std::size_t n = text.size();
    std::vector<RunInterval> runs;
    runs.reserve(candidates.size());
    for (const auto& c : candidates) {
        if (c.start < 1 || c.end > n || c.end - c.start + 1 < 2 * c.period)
            throw std::logic_error("malformed candidate " + describe(c));
        std::size_t a = c.start, b = c.end;
        const std::size_t per = c.period;
        while (a > 1 && text[a - 2] == text[a - 2 + per]) --a;
        while (b < n && text[b] == text[b - per]) ++b;
        const auto sub = text.subspan(a - 1, b - a + 1);
        if (!is_period(sub, per)) throw std::logic_error("candidate is not periodic: " + describe(c));
        std::size_t minimal = per;
        for (std::size_t q = 1; q < per; ++q) {
            if (per % q == 0 && is_period(sub, q)) {
                minimal = q;
                break;
            }
        }
        runs.push_back({a, b, minimal});
    }
    std::sort(runs.begin(), runs.end());
    runs.erase(std::unique(runs.begin(), runs.end()), runs.end());
    return runs;
}

RunsResult find_all_runs(CmpOracle& oracle, const RunsOptions& options) {
    RunsResult result;
    const std::size_t n = oracle.size();
    if (n >= 2) {
        const auto candidates = find_all_p_runs(TextWindow(oracle), 1, options, &result.stats);
        const CmpCounters before = oracle.counters();
        result.runs = assemble_runs(oracle.text().view(), candidates);
        check_unchanged(before, oracle.counters(), "run assembly");
    }
    result.stats.counters = oracle.counters();
    if (n > 0 && result.stats.counters.charged_eq > n - 1)
        throw BudgetViolation("charged equalities exceed n - 1");
    return result;
}

RunsResult find_all_runs(const SymbolString& text, const RunsOptions& options) {
    CmpOracle oracle(text, CmpOracle::Options{.record_entries = false});
    return find_all_runs(oracle, options);
}

}  // namespace runlab
