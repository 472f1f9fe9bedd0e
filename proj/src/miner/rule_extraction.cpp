#include "vanet/miner/rule_extraction.hpp"

#include <map>

namespace vanet::miner {

std::size_t argmax_term(const fuzzy::LinguisticVariable& var, double x) {
    x = var.universe.clamp(x);
    std::size_t best = 0;
    double best_mu = var.terms[0].mf(x);
    for (std::size_t t = 1; t < var.terms.size(); ++t) {
        const double mu = var.terms[t].mf(x);
        if (mu > best_mu) {
            best = t;
            best_mu = mu;
        }
    }
    return best;
}

std::vector<fuzzy::Rule> extract_rules(std::span<const Row> centers, const fuzzy::FisDefinition& fis) {
    if (fis.inputs.size() + 1 != std::tuple_size_v<Row>) {
        throw MinerError("centers carry 4 coordinates; the definition must have 3 inputs and 1 output");
    }
    // antecedent -> votes per output term
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> votes;
    for (const Row& c : centers) {
        std::vector<std::size_t> antecedent(fis.inputs.size());
        for (std::size_t v = 0; v < fis.inputs.size(); ++v) antecedent[v] = argmax_term(fis.inputs[v], c[v]);
        auto& tally = votes[antecedent];
        tally.resize(fis.output.terms.size(), 0);
        ++tally[argmax_term(fis.output, c[fis.inputs.size()])];
    }

    std::vector<fuzzy::Rule> rules;
    for (const auto& [antecedent, tally] : votes) {
        std::size_t winner = 0;
        for (std::size_t t = 1; t < tally.size(); ++t) {
            if (tally[t] > tally[winner]) winner = t;
        }
        rules.push_back({"M" + std::to_string(rules.size() + 1), antecedent, winner});
    }
    return rules;
}

}  // namespace vanet::miner
