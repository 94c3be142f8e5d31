// runlab: corpus generation, runs / LZ drivers, budget benchmarks and the
// verification suites.
//
// Exit codes: 0 pass, 1 assertion failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "runlab/cmp_oracle.hpp"
#include "runlab/generators.hpp"
#include "runlab/harness.hpp"
#include "runlab/lz.hpp"
#include "runlab/periodicity.hpp"
#include "runlab/runs_linear.hpp"

using namespace runlab;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, const std::string& inline_text) {
    if (!inline_text.empty() || path.empty()) return inline_text;
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << data;
}

ExperimentConfig make_config(const std::string& generator) {
    ExperimentConfig c;
    const auto kind = parse_generator(generator);
    if (!kind) throw UsageError("unknown generator '" + generator + "'");
    c.generator = *kind;
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"runlab: runs and Lempel-Ziv comparison laboratory"};
    app.require_subcommand(1);

    std::string generator = "random", input, text, out, engine = "linear", mode = "plain", suite, base;
    std::vector<std::size_t> lengths;
    std::size_t sigma = 2, max_sigma = 3, d = 48, p = 1, k = 0, reps = 0, repeats = 1;
    std::uint64_t seed = 1;
    bool cross_check = false;

    auto* gen = app.add_subcommand("gen", "write a generated string");
    gen->add_option("generator", generator, "random|fibonacci|thue-morse|power|kolpakov|lz-adversary");
    gen->add_option("--n", lengths, "length")->expected(1);
    gen->add_option("--sigma", sigma, "alphabet size");
    gen->add_option("--seed", seed);
    gen->add_option("--k", k, "kolpakov repetition count");
    gen->add_option("--base", base, "power base");
    gen->add_option("--reps", reps, "power repetitions");
    gen->add_option("--out", out);

    auto* runs = app.add_subcommand("runs", "list the runs of a string as JSON lines");
    runs->add_option("input", input, "file, or - for stdin");
    runs->add_option("--text", text, "inline input");
    runs->add_option("--d", d);
    runs->add_option("--p", p, "base period of the discovery phase");
    runs->add_option("--engine", engine)->check(CLI::IsMember({"linear", "brute"}));
    runs->add_flag("--verify", cross_check, "also run the other engine and require agreement");
    runs->add_option("--out", out);

    auto* lz = app.add_subcommand("lz", "greedy Lempel-Ziv factor lengths");
    lz->add_option("input", input, "file (raw bytes or adversarial-instance JSON), or -");
    lz->add_option("--text", text, "inline input");
    lz->add_option("--mode", mode)->check(CLI::IsMember({"plain", "instrumented"}));
    lz->add_option("--out", out);

    auto* bench = app.add_subcommand("bench", "comparison-budget sweep as CSV");
    bench->add_option("generator", generator);
    bench->add_option("--n", lengths, "lengths (default 2^10..2^17)");
    bench->add_option("--sigma", sigma);
    bench->add_option("--d", d);
    bench->add_option("--seed", seed);
    bench->add_option("--repeats", repeats);
    bench->add_option("--k", k);
    bench->add_option("--base", base);
    bench->add_option("--reps", reps);
    bench->add_option("--out", out);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember({"lemmas", "exhaustive", "leafdet", "lowerbound"}));
    verify->add_option("--n", lengths, "size limit (suite specific)")->expected(1);
    verify->add_option("--sigma", max_sigma, "alphabet limit (leafdet)");
    verify->add_option("--d", d);
    verify->add_option("--seed", seed);
    verify->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return e.get_exit_code() == 0 ? code : kUsage;
    }

    try {
        if (*gen) {
            ExperimentConfig c = make_config(generator);
            c.n = lengths.empty() ? 16 : lengths.front();
            c.sigma = sigma;
            c.seed = seed;
            c.k = k;
            c.base = base;
            c.reps = reps;
            write_output(out, generate(c).to_bytes());
            return kPass;
        }

        if (*runs) {
            const SymbolString w = SymbolString::from_bytes(read_input(input, text));
            if (d < 2 || p < 1) throw UsageError("need --d >= 2 and --p >= 1");
            RunsOptions opt;
            opt.d = d;
            RunsStats stats;
            std::vector<RunInterval> found;
            auto linear = [&] {
                CmpOracle oracle(w, CmpOracle::Options{.record_entries = false});
                std::vector<RunInterval> r;
                if (w.size() >= 2 * p) {
                    const auto cand = find_all_p_runs(TextWindow(oracle), p, opt, &stats);
                    r = assemble_runs(w.view(), cand);
                }
                stats.counters = oracle.counters();
                return r;
            };
            auto brute = [&] {
                auto all = find_runs_bruteforce(w.view());
                if (p == 1) return all;
                // p-runs: some multiple of p is a period.
                std::erase_if(all, [&](const RunInterval& r) {
                    for (std::size_t q = p; 2 * q <= r.length(); q += p)
                        if (is_period(w.view().subspan(r.start - 1, r.length()), q)) return false;
                    return true;
                });
                return all;
            };
            found = engine == "linear" ? linear() : brute();
            if (cross_check && (engine == "linear" ? brute() : linear()) != found) {
                std::cerr << "engines disagree\n";
                return kFail;
            }
            write_output(out, runs_to_jsonl(found) + runs_summary_json(w.size(), w.alphabet_size(), d, stats) + "\n");
            return kPass;
        }

        if (*lz) {
            const std::string raw = read_input(input, text);
            std::optional<AdversarialInstance> inst;
            if (!raw.empty() && raw.front() == '{') inst = AdversarialInstance::from_json(raw);
            const SymbolString w = inst ? inst->text : SymbolString::from_bytes(raw);
            if (w.empty()) throw UsageError("empty input");
            std::ostringstream os;
            if (mode == "plain") {
                os << lz_factorize(w.view()).to_csv() << "\n";
            } else {
                CmpOracle oracle(w, CmpOracle::Options{.record_entries = false});
                const auto f = lz_factorize_instrumented(oracle);
                const auto& c = oracle.counters();
                os << f.to_csv() << "\n";
                os << "charged_ineq=" << c.charged_ineq << " charged_eq=" << c.charged_eq
                   << " free_hits=" << c.free_hits << " charged_total=" << c.charged_total() << "\n";
                if (inst) {
                    char buf[96];
                    std::snprintf(buf, sizeof buf, "floor=%.3f k=%zu measured=%llu\n",
                                  lower_bound_floor(inst->n, inst->sigma), inst->query_count(),
                                  static_cast<unsigned long long>(c.charged_total()));
                    os << buf;
                }
            }
            write_output(out, os.str());
            return kPass;
        }

        if (*bench) {
            ExperimentConfig c = make_config(generator);
            c.sigma = sigma;
            c.d = d;
            c.seed = seed;
            c.repeats = repeats;
            c.k = k;
            c.base = base;
            c.reps = reps;
            if (d < 2) throw UsageError("need --d >= 2");
            if (lengths.empty())
                for (std::size_t e = 10; e <= 17; ++e) lengths.push_back(std::size_t{1} << e);
            write_output(out, bench_csv(run_bench(c, lengths)));
            return kPass;
        }

        if (*verify) {
            VerifyReport report;
            const std::size_t limit = lengths.empty() ? 0 : lengths.front();
            if (suite == "lemmas") {
                LemmaSweepOptions o;
                o.seed = seed;
                if (limit) o.max_n = limit;
                report = verify_lemmas(o);
            } else if (suite == "exhaustive") {
                const std::size_t binary = limit ? limit : 14;
                const std::pair<std::size_t, std::size_t> cells[] = {{2, binary}, {3, std::min<std::size_t>(binary, 9)}};
                const std::size_t depths[] = {2, 48};
                report = verify_exhaustive(cells, depths);
            } else if (suite == "leafdet") {
                report = verify_leafdet(limit ? limit : 8, max_sigma, d);
            } else {
                LowerBoundOptions o;
                o.seed = seed;
                report = verify_lowerbound(o);
            }
            write_output(out, report.render());
            return report.ok() ? kPass : kFail;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ContractViolation& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "assertion failure: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
