#pragma once

#include <span>
#include <vector>

#include "vanet/fuzzy/fis.hpp"
#include "vanet/miner/fcm.hpp"

namespace vanet::miner {

/// Index of the term with maximal membership at x; ties go to the lower term.
std::size_t argmax_term(const fuzzy::LinguisticVariable& var, double x);

/// Projects cluster centers (s, sg, rg, f) onto the definition's vocabulary.
/// Each center yields one candidate rule from per-variable argmax terms. Rules
/// sharing an antecedent merge into one whose consequent is the majority vote
/// (ties toward the lower output term). The result is sorted by antecedent and
/// named M1, M2, ... so it does not depend on center order.
std::vector<fuzzy::Rule> extract_rules(std::span<const Row> centers, const fuzzy::FisDefinition& fis);

inline std::vector<fuzzy::Rule> extract_rules(const FcmResult& result, const fuzzy::FisDefinition& fis) {
    return extract_rules(std::span<const Row>(result.centers), fis);
}

}  // namespace vanet::miner
