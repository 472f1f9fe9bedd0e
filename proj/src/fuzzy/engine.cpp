#include "vanet/fuzzy/engine.hpp"

#include <algorithm>
#include <cmath>

namespace vanet::fuzzy {

const char* to_string(GateVerdict v) noexcept {
    return v == GateVerdict::Transmit ? "transmit" : "defer";
}

Fis::Fis(FisDefinition definition) : Fis(std::move(definition), kernels::active_isa()) {}

Fis::Fis(FisDefinition definition, kernels::Isa isa)
    : def_(std::move(definition)), isa_(isa), kernel_(kernels::kernel_for(isa)) {
    def_.validate();
    if (!kernels::isa_available(isa)) throw FisError(std::string("kernel unavailable: ") + kernels::to_string(isa));

    const std::size_t n = def_.centroid_resolution;
    const Universe u = def_.output.universe;
    const double width = (u.hi - u.lo) / static_cast<double>(n);
    xs_.resize(n);
    for (std::size_t i = 0; i < n; ++i) xs_[i] = u.lo + (static_cast<double>(i) + 0.5) * width;

    tables_.resize(def_.output.terms.size() * n);
    for (std::size_t t = 0; t < def_.output.terms.size(); ++t) {
        const MembershipFunction& mf = def_.output.terms[t].mf;
        for (std::size_t i = 0; i < n; ++i) tables_[t * n + i] = mf(xs_[i]);
    }
}

double Fis::prepare_input(std::size_t var, double x) const noexcept {
    const Universe u = def_.inputs[var].universe;
    if (def_.normalize_inputs) x = u.lo + x * (u.hi - u.lo);
    return u.clamp(x);
}

InferenceResult Fis::infer(std::span<const double> inputs) const {
    if (inputs.size() != def_.inputs.size()) throw FisError("input count does not match the definition");
    for (double x : inputs) {
        if (!std::isfinite(x)) throw FisError("inputs must be finite");
    }

    InferenceResult r;
    r.clamped_inputs.resize(inputs.size());
    for (std::size_t v = 0; v < inputs.size(); ++v) r.clamped_inputs[v] = prepare_input(v, inputs[v]);

    r.activations.resize(def_.rules.size());
    r.term_levels.assign(def_.output.terms.size(), 0.0);
    bool any = false;
    for (std::size_t k = 0; k < def_.rules.size(); ++k) {
        const Rule& rule = def_.rules[k];
        double act = 1.0;
        for (std::size_t v = 0; v < rule.antecedent.size(); ++v) {
            act = std::min(act, def_.inputs[v].terms[rule.antecedent[v]].mf(r.clamped_inputs[v]));
        }
        r.activations[k] = act;
        double& level = r.term_levels[rule.consequent];
        level = std::max(level, act);
        any = any || act > 0.0;
    }
    if (!any) {
        r.status = InferStatus::NoRuleFired;
        r.crisp = std::nan("");
        return r;
    }

    const auto sums = kernel_(xs_.data(), tables_.data(), xs_.size(), r.term_levels.data(), r.term_levels.size());
    if (!(sums.mass > 0.0)) {
        // every fired consequent was clipped to zero area at this resolution
        r.status = InferStatus::NoRuleFired;
        r.crisp = std::nan("");
        return r;
    }
    r.status = InferStatus::Fired;
    r.crisp = sums.weighted / sums.mass;
    return r;
}

InferenceResult Fis::infer(double speed, double sender_gain, double receiver_gain) const {
    const double in[3] = {speed, sender_gain, receiver_gain};
    return infer(std::span<const double>(in));
}

std::vector<double> Fis::aggregated_curve(const InferenceResult& result) const {
    const std::size_t n = xs_.size();
    std::vector<double> curve(n, 0.0);
    for (std::size_t t = 0; t < result.term_levels.size(); ++t) {
        const double level = result.term_levels[t];
        for (std::size_t i = 0; i < n; ++i) curve[i] = std::max(curve[i], std::min(tables_[t * n + i], level));
    }
    return curve;
}

std::size_t Fis::classify_output(double crisp) const {
    const auto& terms = def_.output.terms;
    std::size_t best = 0;
    double best_mu = -1.0;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const double mu = terms[t].mf(crisp);
        if (mu >= best_mu) {
            best = t;
            best_mu = mu;
        }
    }
    return best;
}

std::size_t Fis::dominant_term(const InferenceResult& result) const {
    std::size_t best = 0;
    for (std::size_t t = 1; t < result.term_levels.size(); ++t) {
        if (result.term_levels[t] >= result.term_levels[best]) best = t;
    }
    return best;
}

GateVerdict Fis::gate(std::span<const double> inputs, std::size_t acceptance) const {
    const InferenceResult r = infer(inputs);
    if (!r.fired()) return GateVerdict::Defer;
    return classify_output(r.crisp) >= acceptance ? GateVerdict::Transmit : GateVerdict::Defer;
}

GateVerdict Fis::gate(double speed, double sender_gain, double receiver_gain, std::size_t acceptance) const {
    const double in[3] = {speed, sender_gain, receiver_gain};
    return gate(std::span<const double>(in), acceptance);
}

std::size_t Fis::output_rank(const std::string& label) const {
    if (auto idx = def_.output.term_index(label)) return *idx;
    throw FisError("unknown output term '" + label + "'");
}

}  // namespace vanet::fuzzy
