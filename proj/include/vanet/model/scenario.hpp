#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "vanet/mac/edca.hpp"

namespace vanet::model {

enum class Acceptance : std::uint8_t { Bad, Good, VeryGood };

/// "bad" | "good" | "vgood"
const char* to_string(Acceptance a) noexcept;
bool parse_acceptance(const std::string& text, Acceptance& out);
/// Output-term label of the gate FIS for this level ("B", "G", "VG").
const char* output_label(Acceptance a) noexcept;

bool parse_mode(const std::string& text, mac::Mode& out);

inline constexpr std::uint64_t kDefaultSeed = 20200331;

struct Scenario {
    std::string name = "custom";
    double area_width = 100.0;   // m
    double area_height = 100.0;  // m
    std::int64_t vehicle_count = 0;
    std::int64_t rsu_count = 1;
    double speed_min = 0.0;  // m/s
    double speed_max = 0.0;  // m/s
    double bitrate = 6e6;    // bit/s
    double duration = 200.0;
    double beacon_interval = 1.0;
    std::int64_t beacon_bits = 256;
    std::int64_t data_bits = 1024;
    std::int64_t wsa_bits = 256;
    std::int64_t accidents = 10;
    double accident_halt = 10.0;
    double p_wsa = 0.1;
    mac::Mode mode = mac::Mode::Baseline;
    Acceptance acceptance = Acceptance::Good;
    std::uint64_t seed = kDefaultSeed;

    double tx_power = 0.1;          // W
    double frequency = 5.89e9;      // Hz
    double sensitivity_dbm = -89.0;
    double path_loss_exponent = 2.0;
    double corruption_probability = 0.0;

    std::int64_t cw_min = 15;
    std::int64_t cw_max = 1023;
    double slot_time = 13e-6;
    double aifs = 58e-6;
    bool double_cw_on_collision = true;

    double mobility_tick = 0.1;
    double neighbor_expiry = 5.0;
    double gain_alpha = 1.0;  // Kumaraswamy shape parameters of the sender gain
    double gain_beta = 1.0;
    double rsu_gain = 1.0;
    double rg_fallback = 0.5;

    mac::MacConfig mac_config() const;

    bool operator==(const Scenario&) const = default;
};

/// One validation problem: the offending key, where it came from and why.
struct ConfigIssue {
    std::string key;
    std::string location;
    std::string message;
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<ConfigIssue> issues);
    const std::vector<ConfigIssue>& issues() const noexcept { return issues_; }
    nlohmann::json to_json() const;

private:
    std::vector<ConfigIssue> issues_;
};

/// Empty when the scenario is usable. `location` is copied into each issue.
std::vector<ConfigIssue> validate(const Scenario& s, const std::string& location);

std::vector<std::string> preset_names();
bool is_preset(const std::string& name);
/// Throws ConfigError for unknown names.
Scenario preset(const std::string& name);

/// JSON uses the camelCase key names listed by scenario_keys().
nlohmann::ordered_json to_json(const Scenario& s);
const std::vector<std::string>& scenario_keys();

/// Applies the keys present in `j` on top of `base`. Unknown keys and type
/// errors are collected; the result is validated. Throws ConfigError.
Scenario apply_json(Scenario base, const nlohmann::json& j, const std::string& location);

/// Reads a scenario file. A "base" key names a preset to start from.
Scenario load_scenario(const std::string& path);

/// Preset name or path to a JSON file.
Scenario resolve_scenario(const std::string& name_or_path);

/// Applies "key=value" overrides; values are parsed as JSON, falling back to
/// a plain string.
Scenario apply_overrides(Scenario base, const std::vector<std::string>& assignments);

}  // namespace vanet::model
