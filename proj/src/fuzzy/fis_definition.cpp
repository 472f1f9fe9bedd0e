#include "vanet/fuzzy/fis.hpp"

#include <algorithm>
#include <cmath>

namespace vanet::fuzzy {

std::optional<std::size_t> LinguisticVariable::term_index(std::string_view label) const {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].label == label) return i;
    }
    return std::nullopt;
}

namespace {

void validate_variable(const LinguisticVariable& var) {
    const std::string where = "variable '" + var.name + "'";
    if (var.name.empty()) throw FisError("variable with empty name");
    if (!(std::isfinite(var.universe.lo) && std::isfinite(var.universe.hi)) ||
        !(var.universe.lo < var.universe.hi)) {
        throw FisError(where + ": universe must be a finite interval with lo < hi");
    }
    if (var.terms.empty()) throw FisError(where + ": no terms");
    for (std::size_t i = 0; i < var.terms.size(); ++i) {
        const Term& t = var.terms[i];
        if (t.label.empty()) throw FisError(where + ": term with empty label");
        for (std::size_t j = 0; j < i; ++j) {
            if (var.terms[j].label == t.label) throw FisError(where + ": duplicate term '" + t.label + "'");
        }
        // RampUp saturates to +inf; only its left foot has to sit inside the universe.
        const double hi = t.mf.shape() == MfShape::RampUp ? t.mf.core_lo() : t.mf.support_hi();
        if (t.mf.support_lo() < var.universe.lo || hi > var.universe.hi) {
            throw FisError(where + ": support of term '" + t.label + "' leaves the universe");
        }
    }
}

}  // namespace

void FisDefinition::validate() const {
    if (inputs.empty()) throw FisError("definition has no inputs");
    for (const auto& in : inputs) {
        if (in.role != VariableRole::Input) throw FisError("variable '" + in.name + "' is not an input");
        validate_variable(in);
    }
    if (output.role != VariableRole::Output) throw FisError("output variable has input role");
    validate_variable(output);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (inputs[i].name == output.name) throw FisError("duplicate variable '" + output.name + "'");
        for (std::size_t j = 0; j < i; ++j) {
            if (inputs[i].name == inputs[j].name) throw FisError("duplicate variable '" + inputs[i].name + "'");
        }
    }
    if (rules.empty()) throw FisError("definition has no rules");
    for (const auto& rule : rules) {
        const std::string where = "rule '" + rule.name + "'";
        if (rule.antecedent.size() != inputs.size()) {
            throw FisError(where + ": antecedent must name every input exactly once");
        }
        for (std::size_t v = 0; v < inputs.size(); ++v) {
            if (rule.antecedent[v] >= inputs[v].terms.size()) {
                throw FisError(where + ": unknown term for '" + inputs[v].name + "'");
            }
        }
        if (rule.consequent >= output.terms.size()) throw FisError(where + ": unknown output term");
    }
    if (centroid_resolution == 0) throw FisError("centroid resolution must be positive");
}

FisDefinition default_gate_definition() {
    // Left shoulders pin the lowest input term's peak at the universe floor, right
    // shoulders pin the highest term's core to the ceiling. Interior triangles
    // peak at the midpoint of their interval, interior trapezoids take the
    // middle third as their core.
    auto tri = [](double lo, double hi) { return MembershipFunction::triangle(lo, 0.5 * (lo + hi), hi); };
    auto tra = [](double lo, double hi) {
        return MembershipFunction::trapezoid(lo, lo + (hi - lo) / 3.0, lo + 2.0 * (hi - lo) / 3.0, hi);
    };
    auto left = [](double lo, double hi) { return MembershipFunction::triangle(lo, lo, hi); };
    auto right_tri = [](double lo, double hi) { return MembershipFunction::triangle(lo, hi, hi); };
    auto right_tra = [](double lo, double hi) {
        return MembershipFunction::trapezoid(lo, lo + (hi - lo) / 3.0, hi, hi);
    };

    FisDefinition fis;
    fis.name = "f802_11p";

    LinguisticVariable speed{"S", VariableRole::Input, "m/s", {0.0, 27.78},
                             {{"R", left(0.0, 8.3)},
                              {"M", tri(5.0, 11.1)},
                              {"N", tri(8.3, 19.2)},
                              {"SL", tra(10.0, 22.2)},
                              {"Fa", right_tra(13.0, 27.78)}}};
    auto gain = [&](std::string name) {
        return LinguisticVariable{std::move(name), VariableRole::Input, "1", {0.0, 1.0},
                                  {{"W", left(0.0, 0.4)}, {"M", tri(0.1, 0.9)}, {"E", right_tri(0.5, 1.0)}}};
    };
    fis.inputs = {speed, gain("SG"), gain("RG")};
    fis.output = LinguisticVariable{"F", VariableRole::Output, "s", {0.0, 87.1},
                                    {{"B", tri(0.0, 32.8)}, {"G", tri(17.0, 63.0)}, {"VG", right_tra(40.0, 87.1)}}};

    enum : std::size_t { R, Mv, N, SL, Fa };
    enum : std::size_t { W, Md, E };
    enum : std::size_t { B, G, VG };
    fis.rules = {
        {"R1", {R, Md, Md}, B},  {"R2", {Mv, Md, Md}, B}, {"R3", {N, Md, Md}, B},
        {"R4", {SL, Md, Md}, G}, {"R5", {Fa, Md, Md}, G}, {"R6", {Fa, Md, E}, VG},
        {"R7", {R, W, Md}, B},   {"R8", {SL, E, W}, B},   {"R9", {Fa, Md, W}, B},
    };
    fis.validate();
    return fis;
}

}  // namespace vanet::fuzzy
