#include "runlab/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "runlab/cmp_oracle.hpp"
#include "runlab/lz.hpp"
#include "runlab/periodicity.hpp"

namespace runlab {

std::vector<BenchRecord> run_bench(const ExperimentConfig& config, std::span<const std::size_t> lengths) {
    std::vector<BenchRecord> out;
    RunsOptions options;
    options.d = config.d;
    for (std::size_t n : lengths) {
        for (std::size_t r = 0; r < std::max<std::size_t>(config.repeats, 1); ++r) {
            ExperimentConfig cell = config;
            cell.n = n;
            cell.seed = config.seed + r;
            const SymbolString text = generate(cell);
            cell.n = text.size();
            cell.sigma = text.alphabet_size();
            if (config.generator == GeneratorKind::Random || config.generator == GeneratorKind::LzAdversary)
                cell.sigma = config.sigma;

            const auto t0 = std::chrono::steady_clock::now();
            const RunsResult result = find_all_runs(text, options);
            const auto t1 = std::chrono::steady_clock::now();

            BenchRecord rec;
            rec.config = cell;
            rec.charged_ineq = result.stats.counters.charged_ineq;
            rec.charged_eq = result.stats.counters.charged_eq;
            rec.runs_found = result.runs.size();
            rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            out.push_back(rec);
        }
    }
    return out;
}

double loglog_slope(std::span<const BenchRecord> records) {
    std::map<std::size_t, std::uint64_t> peak;
    for (const auto& r : records) peak[r.config.n] = std::max(peak[r.config.n], r.charged_ineq);
    std::vector<double> xs, ys;
    for (const auto& [n, c] : peak) {
        if (c == 0 || n == 0) continue;
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(static_cast<double>(c)));
    }
    if (xs.size() < 2) return 0.0;
    const double k = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / k;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / k;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxx > 0 ? sxy / sxx : 0.0;
}

std::string bench_csv(std::span<const BenchRecord> records) {
    std::string out(BenchRecord::csv_header());
    out += '\n';
    for (const auto& r : records) out += r.to_csv() + '\n';
    char buf[64];
    std::snprintf(buf, sizeof buf, "# loglog_slope=%.4f\n", loglog_slope(records));
    return out + buf;
}

std::string runs_summary_json(std::size_t n, std::size_t sigma, std::size_t d, const RunsStats& stats) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["sigma"] = sigma;
    j["d"] = d;
    j["charged_ineq"] = stats.counters.charged_ineq;
    j["charged_eq"] = stats.counters.charged_eq;
    j["free_hits"] = stats.counters.free_hits;
    j["recursion_depth"] = stats.recursion_depth;
    return j.dump();
}

CheckTally& VerifyReport::add(std::string name) {
    auto& t = checks.emplace_back();
    t.name = std::move(name);
    return t;
}

bool VerifyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.failures == 0; });
}

std::string VerifyReport::render() const {
    std::string out;
    for (const auto& c : checks) {
        out += (c.failures ? "FAIL " : "PASS ") + c.name + " checked=" + std::to_string(c.checked) +
               " failures=" + std::to_string(c.failures);
        if (c.failures) out += " first: " + c.first_failure;
        out += '\n';
    }
    return out;
}

namespace {

CheckTally& tally(VerifyReport& report, const std::string& name) {
    for (auto& c : report.checks)
        if (c.name == name) return c;
    return report.add(name);
}

std::string show(const SymbolString& w) { return "\"" + w.to_bytes() + "\""; }

}  // namespace

void check_string_lemmas(const SymbolString& w, std::mt19937_64& rng, VerifyReport& report) {
    check_string_lemmas(w, find_runs_bruteforce(w.view()), rng, report);
}

void check_string_lemmas(const SymbolString& w, std::span<const RunInterval> runs, std::mt19937_64& rng,
                         VerifyReport& report) {
    const std::size_t n = w.size();

    auto& count = tally(report, "runs-count-below-n");
    ++count.checked;
    if (n > 0 && runs.size() >= n) count.fail(show(w) + " has " + std::to_string(runs.size()) + " runs");

    auto& cubic = tally(report, "cubic-exponent-sum");
    for (std::size_t p : {2, 4, 8, 16}) {
        ++cubic.checked;
        Rational sum = 0;
        for (const auto& r : runs)
            if (r.cubic() && r.period >= p) sum += r.exponent();
        if (n > 0 && sum >= Rational(12 * n, p)) cubic.fail(show(w) + " p=" + std::to_string(p));
    }

    auto& overlap = tally(report, "same-period-overlap");
    ++overlap.checked;
    if (!same_period_runs_disjoint(runs)) overlap.fail(show(w));

    // Fine-Wilf: substrings of runs carry several periods, so sample there.
    auto& fw = tally(report, "fine-wilf");
    for (int sample = 0; sample < 3 && !runs.empty(); ++sample) {
        const auto& r = runs[rng() % runs.size()];
        const std::size_t len = std::min<std::size_t>(r.length(), 64);
        const std::size_t from = r.start - 1 + rng() % (r.length() - len + 1);
        const auto u = w.view().subspan(from, len);
        std::vector<std::size_t> periods;
        for (std::size_t p = 1; p < len; ++p)
            if (is_period(u, p)) periods.push_back(p);
        for (std::size_t a = 0; a < periods.size(); ++a) {
            for (std::size_t b = a + 1; b < periods.size(); ++b) {
                const std::size_t p = periods[a], q = periods[b];
                if (p + q - std::gcd(p, q) > len) continue;
                ++fw.checked;
                if (!fine_wilf_check(u, p, q))
                    fw.fail(show(SymbolString({u.begin(), u.end()})) + " p=" + std::to_string(p) +
                            " q=" + std::to_string(q));
            }
        }
    }
}

VerifyReport verify_lemmas(const LemmaSweepOptions& options) {
    VerifyReport report;
    std::mt19937_64 rng(options.seed);
    const std::size_t sigmas[] = {2, 4, 26};
    for (std::size_t i = 0; i < options.strings; ++i) {
        const std::size_t sigma = sigmas[i % 3];
        const std::size_t n = 1 + rng() % options.max_n;
        check_string_lemmas(gen_random(n, sigma, rng), rng, report);
    }
    auto& kol = report.add("kolpakov-long-period-runs");
    for (std::size_t k = 1; k <= options.kolpakov_max_k; ++k) {
        const auto runs = find_runs_bruteforce(gen_kolpakov_word(k).view());
        for (std::size_t p = 1; p < 2 * k; ++p) {
            ++kol.checked;
            const auto have = std::count_if(runs.begin(), runs.end(), [&](const RunInterval& r) { return r.period >= p; });
            const auto need = static_cast<std::ptrdiff_t>(k) - static_cast<std::ptrdiff_t>(p / 2);
            if (have < need) kol.fail("k=" + std::to_string(k) + " p=" + std::to_string(p));
        }
    }
    return report;
}

VerifyReport verify_exhaustive(std::span<const std::pair<std::size_t, std::size_t>> sigma_max_n,
                               std::span<const std::size_t> depths) {
    VerifyReport report;
    for (std::size_t d : depths) report.add("exhaustive-d" + std::to_string(d));
    for (const auto& [sigma, max_n] : sigma_max_n) {
        for (std::size_t n = 0; n <= max_n; ++n) {
            for_each_string(n, sigma, [&](const SymbolString& w) {
                const auto expected = find_runs_bruteforce(w.view());
                for (std::size_t i = 0; i < depths.size(); ++i) {
                    auto& t = report.checks[i];
                    ++t.checked;
                    RunsOptions opt;
                    opt.d = depths[i];
                    opt.verify = true;
                    try {
                        if (find_all_runs(w, opt).runs != expected) t.fail(show(w) + " differs from brute force");
                    } catch (const std::exception& e) {
                        t.fail(show(w) + ": " + e.what());
                    }
                }
            });
        }
    }
    return report;
}

VerifyReport verify_leafdet(std::size_t max_n, std::size_t max_sigma, std::size_t d) {
    VerifyReport report;
    auto& runs_det = report.add("leafdet-runs");
    auto& lz_det = report.add("leafdet-lz");
    auto& reach = report.add("leafdet-consistent-strings");
    RunsOptions opt;
    opt.d = d;
    for (std::size_t sigma = 2; sigma <= max_sigma; ++sigma) {
        for (std::size_t n = 1; n <= max_n; ++n) {
            struct Leaf {
                Transcript transcript;
                std::vector<RunInterval> runs;
                LZFactorization lz;
                std::vector<SymbolString> members;
            };
            std::map<std::string, Leaf> runs_leaves, lz_leaves;
            for_each_string(n, sigma, [&](const SymbolString& w) {
                {
                    CmpOracle oracle(w);
                    auto runs = find_all_runs(oracle, opt).runs;
                    auto t = oracle.transcript();
                    auto [it, fresh] = runs_leaves.try_emplace(t.path_key());
                    if (fresh) {
                        it->second.transcript = std::move(t);
                        it->second.runs = std::move(runs);
                    } else {
                        ++runs_det.checked;
                        if (it->second.runs != runs) runs_det.fail(show(w) + " vs " + show(it->second.members[0]));
                    }
                    it->second.members.push_back(w);
                }
                {
                    CmpOracle oracle(w);
                    auto f = lz_factorize_instrumented(oracle);
                    auto t = oracle.transcript();
                    auto [it, fresh] = lz_leaves.try_emplace(t.path_key());
                    if (fresh) {
                        it->second.transcript = std::move(t);
                        it->second.lz = std::move(f);
                    } else {
                        ++lz_det.checked;
                        if (!lz_equivalent(it->second.lz, f)) lz_det.fail(show(w) + " vs " + show(it->second.members[0]));
                    }
                    it->second.members.push_back(w);
                }
            });
            // A string consistent with a leaf's transcript must follow that
            // same path, hence lie in the leaf's group.
            for (auto* leaves : {&runs_leaves, &lz_leaves}) {
                for (const auto& [key, leaf] : *leaves) {
                    ++reach.checked;
                    if (consistent_strings(leaf.transcript, n, sigma) != leaf.members)
                        reach.fail("n=" + std::to_string(n) + " leaf of " + show(leaf.members[0]));
                }
            }
        }
    }
    return report;
}

VerifyReport verify_lowerbound(const LowerBoundOptions& options) {
    VerifyReport report;
    auto& perturb = report.add("perturbation-changes-factorization");
    auto& agree = report.add("instrumented-matches-plain");
    auto& floor_check = report.add("charged-at-least-floor");
    auto& growth = report.add("charges-grow-with-k");
    for (std::size_t sigma : options.sigmas) {
        std::vector<std::pair<std::size_t, double>> means;  // (k, mean charged total)
        for (std::size_t n : options.lengths) {
            std::mt19937_64 rng(options.seed * 1000003 + sigma * 1009 + n);
            const std::size_t k = adversarial_query_count(n, sigma);
            const double floor = lower_bound_floor(n, sigma);
            double total = 0;
            for (std::size_t trial = 0; trial < options.trials; ++trial) {
                const auto inst = gen_adversarial_random(n, sigma, rng);
                const auto base = lz_factorize(inst.text.view());
                for (std::size_t q = 1; q <= k; ++q) {
                    ++perturb.checked;
                    if (lz_equivalent(base, lz_factorize(perturb_adversarial(inst, q).view())))
                        perturb.fail(inst.to_json() + " query " + std::to_string(q));
                }
                CmpOracle oracle(inst.text, CmpOracle::Options{.record_entries = false});
                const auto measured = lz_factorize_instrumented(oracle);
                ++agree.checked;
                if (!lz_equivalent(measured, base)) agree.fail(inst.to_json());
                const auto charged = oracle.counters().charged_total();
                ++floor_check.checked;
                if (static_cast<double>(charged) < floor)
                    floor_check.fail(inst.to_json() + " charged " + std::to_string(charged));
                total += static_cast<double>(charged);
            }
            means.emplace_back(k, total / static_cast<double>(std::max<std::size_t>(options.trials, 1)));
        }
        const double per_query = std::log(static_cast<double>(sigma / 2 - 1)) / std::log(3.0);
        for (std::size_t i = 1; i < means.size(); ++i) {
            ++growth.checked;
            const double gained = means[i].second - means[i - 1].second;
            const double needed = static_cast<double>(means[i].first - means[i - 1].first) * per_query;
            if (gained < needed)
                growth.fail("sigma=" + std::to_string(sigma) + " k " + std::to_string(means[i - 1].first) + "->" +
                            std::to_string(means[i].first));
        }
    }
    return report;
}

}  // namespace runlab
