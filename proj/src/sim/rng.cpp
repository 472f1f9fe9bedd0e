#include "vanet/sim/rng.hpp"

namespace vanet::sim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

std::uint64_t RandomStream::uniform_int(std::uint64_t lo, std::uint64_t hi) {
    if (hi <= lo) return lo;
    const std::uint64_t span = hi - lo;
    if (span == ~std::uint64_t{0}) return engine_();
    const std::uint64_t range = span + 1;
    // reject the incomplete top bucket so every value is equally likely
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range) - 1;
    std::uint64_t v;
    do {
        v = engine_();
    } while (v > limit);
    return lo + v % range;
}

RngStreams::RngStreams(std::uint64_t master_seed)
    : RngStreams(master_seed, {"placement", "mobility", "traffic", "gains", "backoff", "phy", "accidents"}) {}

RngStreams::RngStreams(std::uint64_t master_seed, std::set<std::string> purposes)
    : master_(master_seed), purposes_(std::move(purposes)) {}

std::uint64_t RngStreams::derive_seed(std::uint64_t master, const std::string& purpose, std::uint64_t node) {
    return splitmix64(splitmix64(splitmix64(master) ^ fnv1a(purpose)) ^ node);
}

RandomStream& RngStreams::stream(const std::string& purpose, std::uint64_t node) {
    if (!purposes_.contains(purpose)) throw UnknownPurpose("unknown random stream purpose '" + purpose + "'");
    auto key = std::make_pair(purpose, node);
    auto it = streams_.find(key);
    if (it == streams_.end()) {
        it = streams_.emplace(std::move(key), RandomStream(derive_seed(master_, purpose, node))).first;
    }
    return it->second;
}

}  // namespace vanet::sim
