#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vanet/fuzzy/engine.hpp"
#include "vanet/model/scenario.hpp"

namespace vanet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitConfig = 2;

/// Flags shared by `run` and `compare`.
struct RunConfig {
    std::string scenario = "scenario1";  // preset name or JSON path
    std::optional<mac::Mode> mode;
    std::optional<model::Acceptance> acceptance;
    std::optional<std::uint64_t> seed;
    std::string out = "out";
    std::optional<double> duration;
    std::string fis;  // empty: built-in definition
    bool trace = false;
    std::vector<std::string> overrides;  // key=value

    bool operator==(const RunConfig&) const = default;
};

/// Effective scenario: preset or file, then --set overrides, then the
/// dedicated flags. Throws model::ConfigError.
model::Scenario resolve_scenario(const RunConfig& config);

/// Built-in gate when `path` is empty. Throws model::ConfigError naming the path.
std::shared_ptr<const fuzzy::Fis> load_gate(const std::string& path);

/// Whole command line, argv[0] included. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vanet::cli
