#include <gtest/gtest.h>

#include <map>
#include <random>

#include "runlab/cmp_oracle.hpp"
#include "runlab/generators.hpp"

using namespace runlab;

namespace {

SymbolString S(std::string_view s) { return SymbolString::from_bytes(s); }

// Hand-rolled model of the charging rule: union-find by linear relabeling,
// inequality facts as a set of class pairs.
struct ModelOracle {
    std::vector<int> cls;
    std::map<std::pair<int, int>, CmpOutcome> facts;
    CmpCounters counters;
    const SymbolString& w;

    explicit ModelOracle(const SymbolString& text) : cls(text.size()), w(text) {
        for (std::size_t i = 0; i < cls.size(); ++i) cls[i] = static_cast<int>(i);
    }
    CmpOutcome compare(std::size_t i, std::size_t j) {
        const int a = cls[i - 1], b = cls[j - 1];
        if (a == b) {
            ++counters.free_hits;
            return CmpOutcome::Equal;
        }
        if (auto it = facts.find({a, b}); it != facts.end()) {
            ++counters.free_hits;
            return it->second;
        }
        const Symbol x = w[i - 1], y = w[j - 1];
        if (x == y) {
            ++counters.charged_eq;
            for (auto& c : cls)
                if (c == b) c = a;
            std::map<std::pair<int, int>, CmpOutcome> next;
            for (const auto& [key, v] : facts) {
                auto k = key;
                if (k.first == b) k.first = a;
                if (k.second == b) k.second = a;
                next[k] = v;
            }
            facts = std::move(next);
            return CmpOutcome::Equal;
        }
        const CmpOutcome o = x < y ? CmpOutcome::Less : CmpOutcome::Greater;
        facts[{a, b}] = o;
        facts[{b, a}] = flip(o);
        ++counters.charged_ineq;
        return o;
    }
};

}  // namespace

TEST(CmpOracle, RepeatedEqualityIsFree) {
    const auto t = S("aabaabab");
    CmpOracle o(t);
    EXPECT_EQ(o.compare(1, 2), CmpOutcome::Equal);
    EXPECT_EQ(o.counters().charged_eq, 1u);
    EXPECT_EQ(o.compare(1, 2), CmpOutcome::Equal);
    EXPECT_EQ(o.counters().charged_eq, 1u);
    EXPECT_EQ(o.counters().free_hits, 1u);
    const auto tr = o.transcript();
    ASSERT_EQ(tr.entries.size(), 2u);
    EXPECT_TRUE(tr.entries[0].charged);
    EXPECT_FALSE(tr.entries[1].charged);
}

TEST(CmpOracle, ClassPairCacheAnswersAcrossMembers) {
    const auto t = S("aabaabab");
    CmpOracle o(t);
    ModelOracle m(t);
    for (auto [i, j] : {std::pair{1, 2}, {2, 3}, {1, 3}}) EXPECT_EQ(o.compare(i, j), m.compare(i, j));
    EXPECT_EQ(o.counters(), m.counters);
    const auto tr = o.transcript();
    EXPECT_EQ(tr.entries[1].outcome, CmpOutcome::Less);
    EXPECT_TRUE(tr.entries[1].charged);
    EXPECT_EQ(tr.entries[2].outcome, CmpOutcome::Less);
    EXPECT_FALSE(tr.entries[2].charged);
}

TEST(CmpOracle, MatchesModelOnRandomQueries) {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        const std::size_t n = 1 + rng() % 30, sigma = 1 + rng() % 5;
        const auto t = gen_random(n, sigma, rng);
        CmpOracle o(t);
        ModelOracle m(t);
        for (int q = 0; q < 200; ++q) {
            const std::size_t i = 1 + rng() % n, j = 1 + rng() % n;
            ASSERT_EQ(o.compare(i, j), m.compare(i, j));
        }
        ASSERT_EQ(o.counters(), m.counters);
        EXPECT_LE(o.counters().charged_eq + 1, std::max<std::size_t>(n, 1));
    }
}

TEST(CmpOracle, FreshOracleHasEmptyTranscript) {
    const auto t = S("abc");
    CmpOracle o(t);
    const auto tr = o.transcript();
    EXPECT_TRUE(tr.entries.empty());
    EXPECT_EQ(tr.counters, CmpCounters{});
}

TEST(CmpOracle, OutOfRangeIsContractViolation) {
    const auto t = S("ab");
    CmpOracle o(t);
    EXPECT_THROW(o.compare(0, 1), ContractViolation);
    EXPECT_THROW(o.compare(1, 3), ContractViolation);
    EXPECT_THROW((void)o.known(3, 1), ContractViolation);
}

TEST(CmpOracle, KnownNeitherChargesNorRecords) {
    const auto t = S("abca");
    CmpOracle o(t);
    EXPECT_FALSE(o.known(1, 2).has_value());
    o.compare(1, 4);
    o.compare(4, 2);
    const auto before = o.counters();
    EXPECT_EQ(o.known(1, 2), CmpOutcome::Less);
    EXPECT_EQ(o.known(2, 4), CmpOutcome::Greater);
    EXPECT_EQ(o.counters(), before);
    EXPECT_EQ(o.transcript().entries.size(), 2u);
}

TEST(CmpOracle, FreeOutcomesAreSound) {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = 2 + rng() % 40;
        const auto t = gen_random(n, 1 + rng() % 4, rng);
        CmpOracle o(t);
        for (int q = 0; q < 300; ++q) o.compare(1 + rng() % n, 1 + rng() % n);
        for (const auto& e : o.transcript().entries) {
            const Symbol a = t.at(e.i), b = t.at(e.j);
            const CmpOutcome truth = a < b ? CmpOutcome::Less : a > b ? CmpOutcome::Greater : CmpOutcome::Equal;
            ASSERT_EQ(e.outcome, truth);
        }
    }
}

TEST(CmpOracle, ReplayIsDeterministic) {
    std::mt19937_64 rng(8);
    const auto t = gen_random(25, 3, rng);
    CmpOracle o(t);
    for (int q = 0; q < 100; ++q) o.compare(1 + rng() % 25, 1 + rng() % 25);
    const auto first = o.transcript();
    CmpOracle again(t);
    for (const auto& e : first.entries) again.compare(e.i, e.j);
    EXPECT_EQ(again.transcript().entries, first.entries);
}

TEST(Transcript, SerializeRoundTrip) {
    const auto t = S("abcab");
    CmpOracle o(t);
    o.compare(1, 4);
    o.compare(2, 3);
    o.compare(4, 1);
    const auto tr = o.transcript();
    const auto text = tr.serialize();
    EXPECT_EQ(text.substr(0, text.find('\n')), "n=5 charged_eq=1 charged_ineq=1");
    EXPECT_NE(text.find("1 4 EQUAL CHARGED"), std::string::npos);
    EXPECT_NE(text.find("4 1 EQUAL FREE"), std::string::npos);
    const auto back = Transcript::parse(text);
    EXPECT_EQ(back.entries, tr.entries);
    EXPECT_EQ(back.counters, tr.counters);
    EXPECT_EQ(back.path_key(), tr.path_key());
    EXPECT_THROW(Transcript::parse("garbage"), ContractViolation);
}

TEST(ConsistentStrings, EmptyTranscriptAdmitsEverything) {
    Transcript t;
    t.n = 2;
    const auto all = consistent_strings(t, 2, 2);
    ASSERT_EQ(all.size(), 4u);
    EXPECT_EQ(all[0], S("aa"));
    EXPECT_EQ(all[3], S("bb"));
}

TEST(ConsistentStrings, EqualityEntry) {
    Transcript t;
    t.n = 2;
    t.entries.push_back({1, 2, CmpOutcome::Equal, true});
    EXPECT_EQ(consistent_strings(t, 2, 2), (std::vector{S("aa"), S("bb")}));
}

TEST(ConsistentStrings, LessEntryMatchesFilteredEnumeration) {
    Transcript t;
    t.n = 2;
    t.entries.push_back({1, 2, CmpOutcome::Less, true});
    std::vector<SymbolString> expected;
    for_each_string(2, 2, [&](const SymbolString& w) {
        if (w.at(1) < w.at(2)) expected.push_back(w);
    });
    EXPECT_EQ(consistent_strings(t, 2, 2), expected);
    EXPECT_EQ(expected, std::vector{S("ab")});
}

TEST(ConsistentStrings, Guard) {
    Transcript t;
    EXPECT_THROW(consistent_strings(t, 13, 2), ContractViolation);
    EXPECT_THROW(consistent_strings(t, 4, 5), ContractViolation);
}
