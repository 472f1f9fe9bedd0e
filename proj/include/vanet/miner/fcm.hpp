#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace vanet::miner {

/// One observation: speed, sender gain, receiver gain, idle time (raw units).
using Row = std::array<double, 4>;

struct Dataset {
    std::vector<Row> rows;
};

class MinerError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// CSV with a header line and four numeric columns per row (s, sg, rg, f).
Dataset load_dataset(const std::filesystem::path& path);
Dataset parse_dataset(const std::string& text);

struct FcmParams {
    std::size_t clusters = 2;
    double fuzzifier = 2.0;  // m
    double tolerance = 1e-6;  // stop when no center moves farther than this
    std::size_t max_iterations = 300;
    std::uint64_t seed = 1;
};

struct FcmResult {
    std::vector<Row> centers;
    std::vector<double> memberships;  // row-major n x k
    double objective = 0.0;
    std::size_t iterations = 0;
    std::vector<double> objective_history;  // J(U_t, V_t) after each membership update
    std::size_t degenerate_assignments = 0; // rows that coincided with a center

    double membership(std::size_t row, std::size_t cluster) const {
        return memberships[row * centers.size() + cluster];
    }
};

/// Fuzzy C-means by alternating optimization. Initial centers are k distinct
/// rows drawn without replacement with the given seed. A row lying exactly on
/// one or more centers gets its membership split evenly among those centers.
FcmResult fcm_cluster(const Dataset& data, const FcmParams& params);

/// Called after every membership update with the iteration index, the current
/// n x k membership matrix and the objective at that point.
using FcmObserver = std::function<void(std::size_t, std::span<const double>, double)>;

FcmResult fcm_cluster(const Dataset& data, const FcmParams& params, const FcmObserver& observer);

}  // namespace vanet::miner
