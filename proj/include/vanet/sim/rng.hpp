#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace vanet::sim {

/// Seeded stream with distribution code of our own, so draws are identical on
/// every standard library (std:: distributions are implementation-defined).
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer on the closed interval [lo, hi].
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

class UnknownPurpose : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Independent substreams keyed by (purpose, node). A substream's seed depends
/// only on the master seed, the purpose name and the node id, so adding nodes
/// or drawing from one stream never perturbs another.
class RngStreams {
public:
    static constexpr std::uint64_t kGlobal = ~std::uint64_t{0};

    explicit RngStreams(std::uint64_t master_seed);
    RngStreams(std::uint64_t master_seed, std::set<std::string> purposes);

    std::uint64_t master_seed() const noexcept { return master_; }

    /// Returns the same stream object (continuing its sequence) on every call.
    RandomStream& stream(const std::string& purpose, std::uint64_t node = kGlobal);

    static std::uint64_t derive_seed(std::uint64_t master, const std::string& purpose, std::uint64_t node);

private:
    std::uint64_t master_;
    std::set<std::string> purposes_;
    std::map<std::pair<std::string, std::uint64_t>, RandomStream> streams_;
};

}  // namespace vanet::sim
