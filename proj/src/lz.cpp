#include "runlab/lz.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "runlab/lce.hpp"

namespace runlab {

std::string LZFactorization::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(lengths[i]);
    }
    return out;
}

LZFactorization LZFactorization::parse_csv(const std::string& csv) {
    LZFactorization f;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        f.lengths.push_back(std::stoul(tok));
    }
    return f;
}

LZFactorization lz_factorize(std::span<const Symbol> w) {
    if (w.empty()) throw ContractViolation("lz_factorize: empty input");
    const std::size_t n = w.size();
    const LceIndex index(w);
    const auto& sa = index.suffix_array();

    // Nearest suffixes in SA order with a smaller text position, both sides.
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> psv(n, kNone), nsv(n, kNone);
    std::vector<std::size_t> stack;
    for (std::size_t r = 0; r < n; ++r) {
        while (!stack.empty() && sa[stack.back()] > sa[r]) {
            nsv[sa[stack.back()]] = sa[r];
            stack.pop_back();
        }
        psv[sa[r]] = stack.empty() ? kNone : sa[stack.back()];
        stack.push_back(r);
    }

    LZFactorization f;
    for (std::size_t i = 0; i < n;) {
        std::size_t lpf = 0;
        if (psv[i] != kNone) lpf = std::max(lpf, index.lce(i, psv[i]));
        if (nsv[i] != kNone) lpf = std::max(lpf, index.lce(i, nsv[i]));
        const std::size_t len = std::max<std::size_t>(lpf, 1);
        f.lengths.push_back(len);
        i += len;
    }
    return f;
}

bool lz_equivalent(const LZFactorization& a, const LZFactorization& b) { return a.lengths == b.lengths; }

LZFactorization lz_factorize_instrumented(CmpOracle& oracle) {
    const std::size_t n = oracle.size();
    if (n == 0) throw ContractViolation("lz_factorize_instrumented: empty input");
    LZFactorization f;
    for (std::size_t j = 1; j <= n;) {
        std::size_t best = 0;
        for (std::size_t s = 1; s < j; ++s) {
            std::size_t l = 0;
            while (j + l <= n && oracle.compare(s + l, j + l) == CmpOutcome::Equal) ++l;
            best = std::max(best, l);
        }
        const std::size_t len = std::max<std::size_t>(best, 1);
        f.lengths.push_back(len);
        j += len;
    }
    return f;
}

Symbol alphabet_letter(std::size_t i) {
    if (i < 1 || i > 26) throw ContractViolation("alphabet letter index outside 1..26");
    return static_cast<Symbol>('a' + i - 1);
}

std::string AdversarialInstance::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["sigma"] = sigma;
    j["queries"] = queries;
    j["text"] = text.to_bytes();
    return j.dump();
}

AdversarialInstance AdversarialInstance::from_json(const std::string& json) {
    const auto j = nlohmann::json::parse(json);
    auto inst = gen_adversarial(j.at("n").get<std::size_t>(), j.at("sigma").get<std::size_t>(),
                                j.at("queries").get<std::vector<std::size_t>>());
    if (j.contains("text") && j.at("text").get<std::string>() != inst.text.to_bytes())
        throw ContractViolation("adversarial instance text does not match its parameters");
    return inst;
}

std::size_t adversarial_query_count(std::size_t n, std::size_t sigma) {
    if (n % 2 || sigma % 2) throw ContractViolation("adversarial family needs even n and sigma");
    if (sigma <= 2 || 2 * sigma >= n) throw ContractViolation("adversarial family needs 2 < sigma < n/2");
    if (sigma > 26) throw ContractViolation("adversarial family supports sigma <= 26");
    const std::size_t dict = 3 * sigma / 2;
    if ((n - dict - 2) % 2) throw ContractViolation("adversarial family needs integral k (sigma divisible by 4)");
    return (n - dict - 2) / 2;
}

AdversarialInstance gen_adversarial(std::size_t n, std::size_t sigma, std::vector<std::size_t> queries) {
    const std::size_t k = adversarial_query_count(n, sigma);
    if (queries.size() != k)
        throw ContractViolation("expected " + std::to_string(k) + " queries, got " + std::to_string(queries.size()));
    for (std::size_t q : queries)
        if (q % 2 || q < 2 || q > sigma - 2) throw ContractViolation("query index must be even in 2..sigma-2");

    std::vector<Symbol> s;
    s.reserve(n);
    for (std::size_t i = 1; i < sigma; i += 2) s.push_back(alphabet_letter(i));
    for (std::size_t i = 2; i <= sigma - 2; i += 2) {
        s.push_back(alphabet_letter(sigma));
        s.push_back(alphabet_letter(i));
    }
    s.push_back(alphabet_letter(sigma));
    s.push_back(alphabet_letter(sigma));

    AdversarialInstance inst;
    inst.n = n;
    inst.sigma = sigma;
    inst.dictionary_len = s.size();
    for (std::size_t q : queries) {
        s.push_back(alphabet_letter(sigma));
        s.push_back(alphabet_letter(q));
        inst.query_positions.push_back(s.size());
    }
    s.push_back(alphabet_letter(sigma));
    s.push_back(alphabet_letter(sigma));
    inst.queries = std::move(queries);
    inst.text = SymbolString(std::move(s));
    return inst;
}

AdversarialInstance gen_adversarial_random(std::size_t n, std::size_t sigma, std::mt19937_64& rng) {
    const std::size_t k = adversarial_query_count(n, sigma);
    const std::size_t choices = sigma / 2 - 1;
    std::vector<std::size_t> queries(k);
    for (auto& q : queries) q = 2 * (1 + rng() % choices);
    return gen_adversarial(n, sigma, std::move(queries));
}

SymbolString perturb_adversarial(const AdversarialInstance& inst, std::size_t which) {
    if (which < 1 || which > inst.query_count()) throw ContractViolation("query ordinal out of range");
    std::vector<Symbol> s = inst.text.symbols();
    s[inst.query_positions[which - 1] - 1] = alphabet_letter(inst.queries[which - 1] - 1);
    return SymbolString(std::move(s));
}

double lower_bound_floor(std::size_t n, std::size_t sigma) {
    const std::size_t k = adversarial_query_count(n, sigma);
    return static_cast<double>(k) * std::log(static_cast<double>(sigma / 2 - 1)) / std::log(3.0);
}

}  // namespace runlab
