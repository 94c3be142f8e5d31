#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "runlab/symbol_string.hpp"

namespace runlab {

enum class GeneratorKind { Random, Fibonacci, ThueMorse, Power, Kolpakov, LzAdversary };

std::optional<GeneratorKind> parse_generator(std::string_view name);
std::string_view to_string(GeneratorKind kind);

struct ExperimentConfig {
    GeneratorKind generator = GeneratorKind::Random;
    std::size_t n = 16;
    std::size_t sigma = 2;
    std::size_t d = 48;
    std::size_t p = 1;
    std::uint64_t seed = 1;
    std::size_t repeats = 1;
    std::size_t k = 0;     // kolpakov; 0 means n / 4
    std::string base;      // power
    std::size_t reps = 0;  // power
};

/// Symbols 'a' + (x mod sigma) with x drawn from mt19937_64 seeded by seed.
/// Raw engine output keeps corpora identical across standard libraries.
SymbolString gen_random(std::size_t n, std::size_t sigma, std::mt19937_64& rng);
SymbolString gen_random(std::size_t n, std::size_t sigma, std::uint64_t seed);

/// Prefix of the Fibonacci word abaababa...
SymbolString gen_fibonacci(std::size_t n);
/// Prefix of the Thue-Morse word abbabaab...
SymbolString gen_thue_morse(std::size_t n);
SymbolString gen_power(std::string_view base, std::size_t reps);

/// Dispatch on config.generator. Rejects invalid parameters.
SymbolString generate(const ExperimentConfig& config);

/// Calls fn on every string of length n over 'a'..('a'+sigma-1), in
/// lexicographic order.
void for_each_string(std::size_t n, std::size_t sigma, const std::function<void(const SymbolString&)>& fn);

struct BenchRecord {
    ExperimentConfig config;
    std::uint64_t charged_ineq = 0;
    std::uint64_t charged_eq = 0;
    std::size_t runs_found = 0;
    double wall_ms = 0.0;

    /// charged_ineq / n, printed as "num/den=decimal"
    std::string ratio() const;
    double ratio_value() const;

    static std::string_view csv_header();
    std::string to_csv() const;
};

}  // namespace runlab
