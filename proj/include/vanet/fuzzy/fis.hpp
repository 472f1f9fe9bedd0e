#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vanet/fuzzy/membership.hpp"

namespace vanet::fuzzy {

enum class VariableRole { Input, Output };

struct Term {
    std::string label;
    MembershipFunction mf;

    bool operator==(const Term&) const = default;
};

struct Universe {
    double lo = 0.0;
    double hi = 1.0;

    double clamp(double x) const noexcept { return x < lo ? lo : (x > hi ? hi : x); }
    bool operator==(const Universe&) const = default;
};

/// A named variable with an ordered term list. For the output, term order is the
/// gate ranking: index 0 is the lowest class.
struct LinguisticVariable {
    std::string name;
    VariableRole role = VariableRole::Input;
    std::string unit;
    Universe universe;
    std::vector<Term> terms;

    std::optional<std::size_t> term_index(std::string_view label) const;
    bool operator==(const LinguisticVariable&) const = default;
};

/// IF in0 is t0 AND in1 is t1 AND ... THEN out is consequent. Indices refer to
/// the term lists of the owning definition.
struct Rule {
    std::string name;
    std::vector<std::size_t> antecedent;
    std::size_t consequent = 0;

    bool operator==(const Rule&) const = default;
};

enum class AndMethod { Min };
enum class OrMethod { Max };
enum class Defuzzifier { Centroid };

struct FisDefinition {
    std::string name = "fis";
    std::vector<LinguisticVariable> inputs;
    LinguisticVariable output;
    std::vector<Rule> rules;
    AndMethod and_method = AndMethod::Min;
    OrMethod or_method = OrMethod::Max;
    Defuzzifier defuzzifier = Defuzzifier::Centroid;
    std::size_t centroid_resolution = 4096;
    // When set, crisp inputs are given on [0, 1] and mapped onto each universe.
    bool normalize_inputs = false;

    /// Throws FisError on the first violated invariant.
    void validate() const;

    bool operator==(const FisDefinition&) const = default;
};

/// The shipped transmit-gate definition (speed, sender gain, receiver gain -> F).
FisDefinition default_gate_definition();

}  // namespace vanet::fuzzy
