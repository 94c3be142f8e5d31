#include "runlab/generators.hpp"

#include <array>
#include <bit>
#include <cstdio>

#include "runlab/lz.hpp"
#include "runlab/periodicity.hpp"

namespace runlab {

namespace {

constexpr std::array<std::pair<std::string_view, GeneratorKind>, 6> kNames{{
    {"random", GeneratorKind::Random},
    {"fibonacci", GeneratorKind::Fibonacci},
    {"thue-morse", GeneratorKind::ThueMorse},
    {"power", GeneratorKind::Power},
    {"kolpakov", GeneratorKind::Kolpakov},
    {"lz-adversary", GeneratorKind::LzAdversary},
}};

void check_sigma(std::size_t sigma) {
    if (sigma < 1 || sigma > 26) throw ContractViolation("sigma must be in 1..26");
}

}  // namespace

std::optional<GeneratorKind> parse_generator(std::string_view name) {
    for (const auto& [text, kind] : kNames)
        if (text == name) return kind;
    return std::nullopt;
}

std::string_view to_string(GeneratorKind kind) {
    for (const auto& [text, k] : kNames)
        if (k == kind) return text;
    return "?";
}

SymbolString gen_random(std::size_t n, std::size_t sigma, std::mt19937_64& rng) {
    check_sigma(sigma);
    std::vector<Symbol> s(n);
    for (auto& c : s) c = static_cast<Symbol>('a' + rng() % sigma);
    return SymbolString(std::move(s));
}

SymbolString gen_random(std::size_t n, std::size_t sigma, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return gen_random(n, sigma, rng);
}

SymbolString gen_fibonacci(std::size_t n) {
    // f(k) = f(k-1) f(k-2) from "a", "ab"
    std::vector<Symbol> older{'a'}, word{'a', 'b'};
    while (word.size() < n) {
        auto next = word;
        next.insert(next.end(), older.begin(), older.end());
        older = std::move(word);
        word = std::move(next);
    }
    word.resize(n);
    return SymbolString(std::move(word));
}

SymbolString gen_thue_morse(std::size_t n) {
    std::vector<Symbol> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Symbol>(std::popcount(i) % 2 ? 'b' : 'a');
    return SymbolString(std::move(s));
}

SymbolString gen_power(std::string_view base, std::size_t reps) {
    if (base.empty() || reps < 1) throw ContractViolation("power needs a nonempty base and reps >= 1");
    std::string s;
    s.reserve(base.size() * reps);
    for (std::size_t r = 0; r < reps; ++r) s += base;
    return SymbolString::from_bytes(s);
}

SymbolString generate(const ExperimentConfig& c) {
    switch (c.generator) {
        case GeneratorKind::Random:
            return gen_random(c.n, c.sigma, c.seed);
        case GeneratorKind::Fibonacci:
            return gen_fibonacci(c.n);
        case GeneratorKind::ThueMorse:
            return gen_thue_morse(c.n);
        case GeneratorKind::Power:
            return gen_power(c.base, c.reps);
        case GeneratorKind::Kolpakov:
            return gen_kolpakov_word(c.k ? c.k : c.n / 4);
        case GeneratorKind::LzAdversary: {
            std::mt19937_64 rng(c.seed);
            return gen_adversarial_random(c.n, c.sigma, rng).text;
        }
    }
    throw ContractViolation("unknown generator");
}

void for_each_string(std::size_t n, std::size_t sigma, const std::function<void(const SymbolString&)>& fn) {
    check_sigma(sigma);
    std::vector<Symbol> s(n, 'a');
    const Symbol top = static_cast<Symbol>('a' + sigma - 1);
    while (true) {
        fn(SymbolString(s));
        std::size_t i = n;
        while (i > 0 && s[i - 1] == top) s[--i] = 'a';
        if (i == 0) return;
        ++s[i - 1];
    }
}

std::string BenchRecord::ratio() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%llu/%zu=%.6f", static_cast<unsigned long long>(charged_ineq), config.n,
                  ratio_value());
    return buf;
}

double BenchRecord::ratio_value() const {
    return config.n ? static_cast<double>(charged_ineq) / static_cast<double>(config.n) : 0.0;
}

std::string_view BenchRecord::csv_header() {
    return "generator,n,sigma,d,seed,charged_ineq,charged_eq,runs_found,ratio,wall_ms";
}

std::string BenchRecord::to_csv() const {
    char wall[32];
    std::snprintf(wall, sizeof wall, "%.3f", wall_ms);
    return std::string(to_string(config.generator)) + "," + std::to_string(config.n) + "," +
           std::to_string(config.sigma) + "," + std::to_string(config.d) + "," + std::to_string(config.seed) + "," +
           std::to_string(charged_ineq) + "," + std::to_string(charged_eq) + "," + std::to_string(runs_found) +
           "," + ratio() + "," + wall;
}

}  // namespace runlab
