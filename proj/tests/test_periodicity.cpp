#include <gtest/gtest.h>

#include <random>

#include "runlab/generators.hpp"
#include "runlab/periodicity.hpp"

using namespace runlab;

namespace {

SymbolString S(std::string_view s) { return SymbolString::from_bytes(s); }

std::vector<RunInterval> runs_of(std::string_view s) { return find_runs_bruteforce(S(s).view()); }

}  // namespace

TEST(MinimalPeriod, Examples) {
    EXPECT_EQ(minimal_period(S("aba").view()), 2u);
    EXPECT_EQ(minimal_period(S("aaaa").view()), 1u);
    EXPECT_EQ(minimal_period(S("aabaaba").view()), 3u);
    EXPECT_EQ(minimal_period(S("a").view()), 1u);
    EXPECT_EQ(minimal_period(S("ab").view()), 2u);
    EXPECT_THROW(minimal_period(S("").view()), ContractViolation);
}

TEST(RunsBruteforce, WorkedExample) {
    const std::vector<RunInterval> expected{{1, 2, 1}, {1, 7, 3}, {4, 5, 1}, {5, 8, 2}};
    const auto runs = runs_of("aabaabab");
    EXPECT_EQ(runs, expected);
    EXPECT_EQ(exponent_sum(runs), Rational(25, 3));
    EXPECT_EQ(runs[1].exponent(), Rational(7, 3));
    EXPECT_TRUE(runs_of("abc").empty());
}

TEST(RunsBruteforce, AgreesWithLiteralDefinition) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 400; ++i) {
        const auto w = gen_random(rng() % 40, 1 + rng() % 3, rng);
        ASSERT_EQ(find_runs_bruteforce(w.view()), find_runs_naive(w.view())) << w.to_bytes();
    }
}

TEST(RunsBruteforce, RunInvariants) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
        const auto w = gen_random(1 + rng() % 60, 1 + rng() % 3, rng);
        for (const auto& r : find_runs_bruteforce(w.view())) {
            const auto sub = w.view().subspan(r.start - 1, r.length());
            ASSERT_EQ(minimal_period(sub), r.period);
            ASSERT_GE(r.exponent(), 2);
            if (r.start > 1) ASSERT_GT(minimal_period(w.view().subspan(r.start - 2, r.length() + 1)), r.period);
            if (r.end < w.size()) ASSERT_GT(minimal_period(w.view().subspan(r.start - 1, r.length() + 1)), r.period);
        }
    }
}

TEST(RunsBruteforce, Guard) {
    const SymbolString big(std::vector<Symbol>(kBruteForceLimit + 1, 'a'));
    EXPECT_THROW(find_runs_bruteforce(big.view()), ContractViolation);
}

TEST(ShortRuns, Examples) {
    EXPECT_EQ(find_short_runs_bruteforce(S("aabaabab").view(), 1),
              (std::vector<ShortRunInterval>{{2, 4, 2, 1}}));
    EXPECT_TRUE(find_short_runs_bruteforce(S("aaaa").view(), 1).empty());
    EXPECT_EQ(find_short_runs_bruteforce(S("abca").view(), 2), (std::vector<ShortRunInterval>{{1, 4, 3, 2}}));
    EXPECT_THROW(find_short_runs_bruteforce(S("ab").view(), 0), ContractViolation);
}

TEST(ShortRuns, MatchDefinitionByEnumeration) {
    std::mt19937_64 rng(9);
    for (int round = 0; round < 150; ++round) {
        const auto w = gen_random(1 + rng() % 25, 1 + rng() % 3, rng);
        const std::size_t d = 1 + rng() % 4;
        std::vector<ShortRunInterval> expected;
        const auto v = w.view();
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                const std::size_t len = j - i + 1;
                const std::size_t p = minimal_period(v.subspan(i, len));
                if (p >= len || 2 * p <= len) continue;  // need |x| >= 1 and |y| >= 1
                const std::size_t gap = 2 * p - len;
                if (gap > d) continue;
                if (i > 0 && minimal_period(v.subspan(i - 1, len + 1)) <= p) continue;
                if (j + 1 < w.size() && minimal_period(v.subspan(i, len + 1)) <= p) continue;
                expected.push_back({i + 1, j + 1, p, gap});
            }
        }
        std::sort(expected.begin(), expected.end());
        ASSERT_EQ(find_short_runs_bruteforce(v, d), expected) << w.to_bytes() << " d=" << d;
    }
}

TEST(RunsCount, Examples) {
    EXPECT_TRUE(check_runs_count(S("aabaabab").view()));
    EXPECT_TRUE(check_runs_count(S("a").view()));
    EXPECT_TRUE(check_runs_count(S("").view()));
}

TEST(RunsCount, AllBinaryStringsUpTo14) {
    for (std::size_t n = 1; n <= 14; ++n)
        for_each_string(n, 2, [&](const SymbolString& w) { ASSERT_TRUE(check_runs_count(w.view())) << w.to_bytes(); });
}

TEST(CubicExponentSum, Examples) {
    EXPECT_EQ(cubic_exponent_sum(S("aaaaaa").view(), 2), 0);
    EXPECT_EQ(cubic_exponent_sum(S("abcabcabc").view(), 2), 3);
    EXPECT_THROW(cubic_exponent_sum(S("abc").view(), 1), ContractViolation);
    std::mt19937_64 rng(1);
    const auto w = gen_random(200, 2, rng);
    EXPECT_LT(cubic_exponent_sum(w.view(), 2), Rational(1200));
}

TEST(FineWilf, Examples) {
    EXPECT_TRUE(fine_wilf_check(S("aaaa").view(), 2, 3));
    EXPECT_TRUE(fine_wilf_check(S("abaabaabaa").view(), 3, 6));
    EXPECT_TRUE(fine_wilf_check(S("ababa").view(), 2, 4));
    EXPECT_THROW(fine_wilf_check(S("abc").view(), 1, 2), ContractViolation);
}

TEST(FineWilf, PremiseImpliesConclusionExhaustively) {
    for (std::size_t n = 2; n <= 12; ++n) {
        for_each_string(n, 2, [&](const SymbolString& w) {
            for (std::size_t p = 1; p < n; ++p) {
                if (!is_period(w.view(), p)) continue;
                for (std::size_t q = p + 1; q < n; ++q)
                    if (is_period(w.view(), q) && p + q - std::gcd(p, q) <= n)
                        ASSERT_TRUE(fine_wilf_check(w.view(), p, q));
            }
        });
    }
}

TEST(Kolpakov, Expansion) {
    EXPECT_EQ(gen_kolpakov_word(1), S("0110"));
    EXPECT_EQ(gen_kolpakov_word(2), S("01011010"));
    EXPECT_THROW(gen_kolpakov_word(0), ContractViolation);
}

TEST(Kolpakov, ManyLongPeriodRuns) {
    const auto runs = find_runs_bruteforce(gen_kolpakov_word(6).view());
    const auto count = std::count_if(runs.begin(), runs.end(), [](const RunInterval& r) { return r.period >= 4; });
    EXPECT_GE(count, 4);
}

TEST(SamePeriodRuns, NeverShareTwoPeriods) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 300; ++i) {
        const auto w = gen_random(1 + rng() % 200, 1 + rng() % 3, rng);
        ASSERT_TRUE(same_period_runs_disjoint(find_runs_bruteforce(w.view())));
    }
    const std::vector<RunInterval> clash{{1, 8, 2}, {3, 10, 2}};
    EXPECT_FALSE(same_period_runs_disjoint(clash));
}

TEST(RunsJsonl, Format) {
    const std::vector<RunInterval> r{{1, 7, 3}};
    EXPECT_EQ(runs_to_jsonl(r), "{\"start\":1,\"end\":7,\"period\":3,\"exp_num\":7,\"exp_den\":3}\n");
}
