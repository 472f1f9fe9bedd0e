#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vanet/fuzzy/centroid_kernels.hpp"
#include "vanet/fuzzy/fis.hpp"

namespace vanet::fuzzy {

enum class InferStatus { Fired, NoRuleFired };

struct InferenceResult {
    InferStatus status = InferStatus::NoRuleFired;
    double crisp = 0.0;                 // centroid; meaningless unless Fired
    std::vector<double> clamped_inputs; // inputs after normalization and clamping
    std::vector<double> activations;    // one per rule
    std::vector<double> term_levels;    // clip height per output term (max over its rules)

    bool fired() const noexcept { return status == InferStatus::Fired; }
};

enum class GateVerdict { Transmit, Defer };

const char* to_string(GateVerdict v) noexcept;

/// Compiled Mamdani system: min for AND, max for aggregation, centroid by the
/// midpoint rule over `centroid_resolution` samples of the output universe.
///
/// Output term memberships are tabulated once at construction; afterwards the
/// object is immutable and can be shared across threads.
class Fis {
public:
    explicit Fis(FisDefinition definition);
    Fis(FisDefinition definition, kernels::Isa isa);

    const FisDefinition& definition() const noexcept { return def_; }
    kernels::Isa isa() const noexcept { return isa_; }

    InferenceResult infer(std::span<const double> inputs) const;
    InferenceResult infer(double speed, double sender_gain, double receiver_gain) const;

    /// Aggregated output curve at the sample points of `sample_points()`.
    std::vector<double> aggregated_curve(const InferenceResult& result) const;
    std::span<const double> sample_points() const noexcept { return xs_; }

    /// Output term with maximal membership at `crisp`; ties go to the higher rank.
    std::size_t classify_output(double crisp) const;

    /// Output term with the highest clip level in the aggregated curve; ties go to
    /// the higher rank. Requires a fired result.
    std::size_t dominant_term(const InferenceResult& result) const;

    /// Transmit iff some rule fired and rank(classify_output(crisp)) >= acceptance.
    GateVerdict gate(std::span<const double> inputs, std::size_t acceptance) const;
    GateVerdict gate(double speed, double sender_gain, double receiver_gain, std::size_t acceptance) const;

    /// Output term index for a label, throwing FisError for unknown labels.
    std::size_t output_rank(const std::string& label) const;
    const std::string& output_label(std::size_t rank) const { return def_.output.terms.at(rank).label; }

private:
    double prepare_input(std::size_t var, double x) const noexcept;

    FisDefinition def_;
    kernels::Isa isa_;
    kernels::CentroidKernel kernel_;
    std::vector<double> xs_;      // midpoints of the output universe cells
    std::vector<double> tables_;  // term-major membership samples
};

}  // namespace vanet::fuzzy
