#include "runlab/cmp_oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <utility>

namespace runlab {

std::string_view to_string(CmpOutcome o) {
    switch (o) {
    case CmpOutcome::Less: return "LESS";
    case CmpOutcome::Equal: return "EQUAL";
    case CmpOutcome::Greater: return "GREATER";
    }
    return "?";
}

namespace {

CmpOutcome parse_outcome(const std::string& s) {
    if (s == "LESS") return CmpOutcome::Less;
    if (s == "EQUAL") return CmpOutcome::Equal;
    if (s == "GREATER") return CmpOutcome::Greater;
    throw ContractViolation("bad outcome token: " + s);
}

CmpOutcome order_of(Symbol a, Symbol b) {
    if (a < b) return CmpOutcome::Less;
    if (a > b) return CmpOutcome::Greater;
    return CmpOutcome::Equal;
}

}  // namespace

std::string Transcript::serialize() const {
    std::ostringstream out;
    out << "n=" << n << " charged_eq=" << counters.charged_eq << " charged_ineq=" << counters.charged_ineq << '\n';
    for (const auto& e : entries)
        out << e.i << ' ' << e.j << ' ' << to_string(e.outcome) << ' ' << (e.charged ? "CHARGED" : "FREE") << '\n';
    return out.str();
}

Transcript Transcript::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    Transcript t;
    std::string header;
    if (!std::getline(in, header)) throw ContractViolation("empty transcript");
    unsigned long long n = 0, eq = 0, ineq = 0;
    if (std::sscanf(header.c_str(), "n=%llu charged_eq=%llu charged_ineq=%llu", &n, &eq, &ineq) != 3)
        throw ContractViolation("bad transcript header: " + header);
    t.n = n;
    t.counters.charged_eq = eq;
    t.counters.charged_ineq = ineq;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        TranscriptEntry e;
        std::string outcome, flag;
        if (!(ls >> e.i >> e.j >> outcome >> flag)) throw ContractViolation("bad transcript line: " + line);
        e.outcome = parse_outcome(outcome);
        if (flag == "CHARGED")
            e.charged = true;
        else if (flag == "FREE")
            e.charged = false;
        else
            throw ContractViolation("bad charge flag: " + flag);
        if (!e.charged) ++t.counters.free_hits;
        t.entries.push_back(e);
    }
    return t;
}

std::string Transcript::path_key() const {
    std::string key;
    key.reserve(entries.size() * 9);
    for (const auto& e : entries) {
        key.append(reinterpret_cast<const char*>(&e.i), sizeof e.i);
        key.append(reinterpret_cast<const char*>(&e.j), sizeof e.j);
        key.push_back(static_cast<char>(e.outcome));
    }
    return key;
}

CmpOracle::CmpOracle(const SymbolString& text) : CmpOracle(text, Options{}) {}

CmpOracle::CmpOracle(const SymbolString& text, Options options)
    : text_(&text), options_(options), parent_(text.size()), class_size_(text.size(), 1), ineq_(text.size()) {
    std::iota(parent_.begin(), parent_.end(), 0u);
}

std::uint32_t CmpOracle::find(std::uint32_t x) const {
    std::uint32_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) x = std::exchange(parent_[x], root);
    return root;
}

void CmpOracle::check_position(std::size_t pos) const {
    if (pos < 1 || pos > text_->size())
        throw ContractViolation("comparison position " + std::to_string(pos) + " outside 1.." +
                                std::to_string(text_->size()));
}

std::optional<CmpOutcome> CmpOracle::lookup(std::uint32_t ra, std::uint32_t rb) const {
    if (ra == rb) return CmpOutcome::Equal;
    const auto& facts = ineq_[ra];
    if (auto it = facts.find(rb); it != facts.end()) return it->second;
    return std::nullopt;
}

void CmpOracle::merge(std::uint32_t a, std::uint32_t b) {
    if (class_size_[a] < class_size_[b]) std::swap(a, b);
    parent_[b] = a;
    class_size_[a] += class_size_[b];
    // Re-key b's inequality facts onto a.
    auto moved = std::move(ineq_[b]);
    ineq_[b].clear();
    for (const auto& [other, outcome] : moved) {
        auto& back = ineq_[other];
        back.erase(b);
        back[a] = flip(outcome);
        ineq_[a][other] = outcome;
    }
}

void CmpOracle::record(std::size_t i, std::size_t j, CmpOutcome o, bool charged) {
    if (!options_.record_entries) return;
    entries_.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), o, charged});
}

CmpOutcome CmpOracle::compare(std::size_t i, std::size_t j) {
    check_position(i);
    check_position(j);
    const auto ri = find(static_cast<std::uint32_t>(i - 1));
    const auto rj = find(static_cast<std::uint32_t>(j - 1));
    if (auto memo = lookup(ri, rj)) {
        ++counters_.free_hits;
        record(i, j, *memo, false);
        return *memo;
    }
    const CmpOutcome o = order_of((*text_)[i - 1], (*text_)[j - 1]);
    if (o == CmpOutcome::Equal) {
        merge(ri, rj);
        ++counters_.charged_eq;
    } else {
        ineq_[ri][rj] = o;
        ineq_[rj][ri] = flip(o);
        ++counters_.charged_ineq;
    }
    record(i, j, o, true);
    return o;
}

std::optional<CmpOutcome> CmpOracle::known(std::size_t i, std::size_t j) const {
    check_position(i);
    check_position(j);
    return lookup(find(static_cast<std::uint32_t>(i - 1)), find(static_cast<std::uint32_t>(j - 1)));
}

Transcript CmpOracle::transcript() const {
    Transcript t;
    t.n = text_->size();
    t.entries = entries_;
    t.counters = counters_;
    return t;
}

std::vector<SymbolString> consistent_strings(const Transcript& transcript, std::size_t n, std::size_t sigma) {
    if (n > 12 || sigma > 4)
        throw ContractViolation("consistent_strings enumeration guard: n <= 12 and sigma <= 4");
    for (const auto& e : transcript.entries)
        if (e.i < 1 || e.j < 1 || e.i > n || e.j > n)
            throw ContractViolation("transcript entry outside 1..n");

    // Constraints grouped by the later of their two positions so that a
    // depth-first assignment can prune as soon as both ends are fixed.
    std::vector<std::vector<TranscriptEntry>> due(n + 1);
    for (const auto& e : transcript.entries) due[std::max(e.i, e.j)].push_back(e);

    std::vector<SymbolString> out;
    if (sigma == 0) {
        if (n == 0) out.emplace_back();
        return out;
    }
    std::vector<Symbol> cur(n);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == n) {
            out.emplace_back(cur);
            return;
        }
        for (std::size_t c = 0; c < sigma; ++c) {
            cur[pos] = static_cast<Symbol>('a' + c);
            bool ok = true;
            for (const auto& e : due[pos + 1]) {
                if (order_of(cur[e.i - 1], cur[e.j - 1]) != e.outcome) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace runlab
