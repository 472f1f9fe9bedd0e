#include "vanet/model/scenario.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <variant>

namespace vanet::model {

using nlohmann::json;

const char* to_string(Acceptance a) noexcept {
    switch (a) {
        case Acceptance::Bad: return "bad";
        case Acceptance::Good: return "good";
        case Acceptance::VeryGood: return "vgood";
    }
    return "?";
}

bool parse_acceptance(const std::string& text, Acceptance& out) {
    for (Acceptance a : {Acceptance::Bad, Acceptance::Good, Acceptance::VeryGood}) {
        if (text == to_string(a)) {
            out = a;
            return true;
        }
    }
    return false;
}

const char* output_label(Acceptance a) noexcept {
    switch (a) {
        case Acceptance::Bad: return "B";
        case Acceptance::Good: return "G";
        case Acceptance::VeryGood: return "VG";
    }
    return "?";
}

bool parse_mode(const std::string& text, mac::Mode& out) {
    if (text == "baseline") {
        out = mac::Mode::Baseline;
    } else if (text == "fuzzy") {
        out = mac::Mode::Fuzzy;
    } else {
        return false;
    }
    return true;
}

mac::MacConfig Scenario::mac_config() const {
    mac::MacConfig c;
    c.cw_min = static_cast<std::uint32_t>(cw_min);
    c.cw_max = static_cast<std::uint32_t>(cw_max);
    c.slot_time = slot_time;
    c.aifs = aifs;
    c.double_cw_on_collision = double_cw_on_collision;
    c.mode = mode;
    return c;
}

namespace {

std::string describe_issues(const std::vector<ConfigIssue>& issues) {
    std::ostringstream os;
    os << "invalid configuration";
    for (const auto& i : issues) os << "\n  " << i.location << ": " << i.key << ": " << i.message;
    return os.str();
}

using Member = std::variant<double Scenario::*, std::int64_t Scenario::*, std::uint64_t Scenario::*, bool Scenario::*,
                            std::string Scenario::*, mac::Mode Scenario::*, Acceptance Scenario::*>;

struct Field {
    const char* key;
    Member member;
};

const std::vector<Field>& fields() {
    static const std::vector<Field> f{
        {"name", &Scenario::name},
        {"areaWidth", &Scenario::area_width},
        {"areaHeight", &Scenario::area_height},
        {"vehicleCount", &Scenario::vehicle_count},
        {"rsuCount", &Scenario::rsu_count},
        {"speedMin", &Scenario::speed_min},
        {"speedMax", &Scenario::speed_max},
        {"bitrate", &Scenario::bitrate},
        {"duration", &Scenario::duration},
        {"beaconInterval", &Scenario::beacon_interval},
        {"beaconBits", &Scenario::beacon_bits},
        {"dataBits", &Scenario::data_bits},
        {"wsaBits", &Scenario::wsa_bits},
        {"accidents", &Scenario::accidents},
        {"accidentHalt", &Scenario::accident_halt},
        {"pWsa", &Scenario::p_wsa},
        {"mode", &Scenario::mode},
        {"acceptanceLevel", &Scenario::acceptance},
        {"seed", &Scenario::seed},
        {"txPower", &Scenario::tx_power},
        {"frequency", &Scenario::frequency},
        {"sensitivityDbm", &Scenario::sensitivity_dbm},
        {"pathLossExponent", &Scenario::path_loss_exponent},
        {"corruptionProbability", &Scenario::corruption_probability},
        {"cwMin", &Scenario::cw_min},
        {"cwMax", &Scenario::cw_max},
        {"slotTime", &Scenario::slot_time},
        {"aifs", &Scenario::aifs},
        {"doubleCwOnCollision", &Scenario::double_cw_on_collision},
        {"mobilityTick", &Scenario::mobility_tick},
        {"neighborExpiry", &Scenario::neighbor_expiry},
        {"gainAlpha", &Scenario::gain_alpha},
        {"gainBeta", &Scenario::gain_beta},
        {"rsuGain", &Scenario::rsu_gain},
        {"rgFallback", &Scenario::rg_fallback},
    };
    return f;
}

// Returns an error message, empty on success.
std::string assign(Scenario& s, const Member& member, const json& v) {
    return std::visit(
        [&](auto ptr) -> std::string {
            using T = std::remove_reference_t<decltype(s.*ptr)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!v.is_number()) return "expected a number";
                s.*ptr = v.get<double>();
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                if (v.is_number_float()) {
                    const double d = v.get<double>();
                    if (d != std::floor(d) || std::abs(d) > 9e15) return "expected an integer";
                    s.*ptr = static_cast<std::int64_t>(d);
                } else if (v.is_number_integer()) {
                    s.*ptr = v.get<std::int64_t>();
                } else {
                    return "expected an integer";
                }
            } else if constexpr (std::is_same_v<T, std::uint64_t>) {
                if (v.is_number_unsigned()) {
                    s.*ptr = v.get<std::uint64_t>();
                } else {
                    return "expected a non-negative integer";
                }
            } else if constexpr (std::is_same_v<T, bool>) {
                if (!v.is_boolean()) return "expected true or false";
                s.*ptr = v.get<bool>();
            } else if constexpr (std::is_same_v<T, std::string>) {
                if (!v.is_string()) return "expected a string";
                s.*ptr = v.get<std::string>();
            } else if constexpr (std::is_same_v<T, mac::Mode>) {
                if (!v.is_string() || !parse_mode(v.get<std::string>(), s.*ptr)) return "expected \"baseline\" or \"fuzzy\"";
            } else {
                if (!v.is_string() || !parse_acceptance(v.get<std::string>(), s.*ptr)) {
                    return "expected \"bad\", \"good\" or \"vgood\"";
                }
            }
            return {};
        },
        member);
}

nlohmann::ordered_json read(const Scenario& s, const Member& member) {
    return std::visit(
        [&](auto ptr) -> nlohmann::ordered_json {
            using T = std::remove_cvref_t<decltype(s.*ptr)>;
            if constexpr (std::is_same_v<T, mac::Mode>) {
                return to_string(s.*ptr);
            } else if constexpr (std::is_same_v<T, Acceptance>) {
                return to_string(s.*ptr);
            } else {
                return s.*ptr;
            }
        },
        member);
}

Scenario scenario1() {
    Scenario s;
    s.name = "scenario1";
    s.area_width = 20.0;
    s.area_height = 100.0;
    s.vehicle_count = 44;
    s.speed_min = 0.0;
    s.speed_max = 8.33;
    s.bitrate = 6e6;
    s.acceptance = Acceptance::Good;
    return s;
}

Scenario scenario2() {
    Scenario s;
    s.name = "scenario2";
    s.area_width = 100.0;
    s.area_height = 100.0;
    s.vehicle_count = 193;
    s.speed_min = 0.0;
    s.speed_max = 22.2;
    s.bitrate = 27e6;
    s.acceptance = Acceptance::VeryGood;
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError({{"scenario", path, "cannot open file"}});
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

ConfigError::ConfigError(std::vector<ConfigIssue> issues)
    : std::runtime_error(describe_issues(issues)), issues_(std::move(issues)) {}

json ConfigError::to_json() const {
    json errors = json::array();
    for (const auto& i : issues_) errors.push_back({{"key", i.key}, {"location", i.location}, {"message", i.message}});
    return {{"errors", errors}};
}

std::vector<ConfigIssue> validate(const Scenario& s, const std::string& location) {
    std::vector<ConfigIssue> out;
    auto require = [&](bool ok, const char* key, const char* message) {
        if (!ok) out.push_back({key, location, message});
    };
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    auto unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    auto window = [](std::int64_t v) { return v >= 0 && v < (1 << 30) && std::has_single_bit(static_cast<std::uint64_t>(v + 1)); };

    require(!s.name.empty(), "name", "must not be empty");
    require(positive(s.area_width), "areaWidth", "must be positive");
    require(positive(s.area_height), "areaHeight", "must be positive");
    require(s.vehicle_count >= 0, "vehicleCount", "must not be negative");
    require(s.rsu_count >= 0, "rsuCount", "must not be negative");
    require(std::isfinite(s.speed_min) && s.speed_min >= 0.0, "speedMin", "must be a non-negative number");
    require(std::isfinite(s.speed_max) && s.speed_max >= s.speed_min, "speedMax", "must be at least speedMin");
    require(positive(s.bitrate), "bitrate", "must be positive");
    require(positive(s.duration), "duration", "must be positive");
    require(positive(s.beacon_interval), "beaconInterval", "must be positive");
    require(s.beacon_bits > 0, "beaconBits", "must be positive");
    require(s.data_bits > 0, "dataBits", "must be positive");
    require(s.wsa_bits > 0, "wsaBits", "must be positive");
    require(s.accidents >= 0, "accidents", "must not be negative");
    require(std::isfinite(s.accident_halt) && s.accident_halt >= 0.0, "accidentHalt", "must not be negative");
    require(unit(s.p_wsa), "pWsa", "must lie in [0, 1]");
    require(positive(s.tx_power), "txPower", "must be positive");
    require(positive(s.frequency), "frequency", "must be positive");
    require(std::isfinite(s.sensitivity_dbm), "sensitivityDbm", "must be finite");
    require(positive(s.path_loss_exponent), "pathLossExponent", "must be positive");
    require(unit(s.corruption_probability), "corruptionProbability", "must lie in [0, 1]");
    require(window(s.cw_min), "cwMin", "must be one less than a power of two");
    require(window(s.cw_max), "cwMax", "must be one less than a power of two");
    require(s.cw_min <= s.cw_max, "cwMax", "must be at least cwMin");
    require(positive(s.slot_time), "slotTime", "must be positive");
    require(std::isfinite(s.aifs) && s.aifs >= s.slot_time, "aifs", "must be at least slotTime");
    require(positive(s.mobility_tick), "mobilityTick", "must be positive");
    require(positive(s.neighbor_expiry), "neighborExpiry", "must be positive");
    require(positive(s.gain_alpha), "gainAlpha", "must be positive");
    require(positive(s.gain_beta), "gainBeta", "must be positive");
    require(unit(s.rsu_gain), "rsuGain", "must lie in [0, 1]");
    require(unit(s.rg_fallback), "rgFallback", "must lie in [0, 1]");
    return out;
}

std::vector<std::string> preset_names() { return {"scenario1", "scenario2"}; }

bool is_preset(const std::string& name) { return name == "scenario1" || name == "scenario2"; }

Scenario preset(const std::string& name) {
    if (name == "scenario1") return scenario1();
    if (name == "scenario2") return scenario2();
    throw ConfigError({{"scenario", "command line", "unknown preset '" + name + "'"}});
}

nlohmann::ordered_json to_json(const Scenario& s) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const Field& f : fields()) j[f.key] = read(s, f.member);
    return j;
}

const std::vector<std::string>& scenario_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const Field& f : fields()) k.emplace_back(f.key);
        return k;
    }();
    return keys;
}

Scenario apply_json(Scenario base, const json& j, const std::string& location) {
    if (!j.is_object()) throw ConfigError({{"<root>", location, "expected a JSON object"}});
    std::vector<ConfigIssue> issues;
    for (const auto& [key, value] : j.items()) {
        if (key == "base" || key == "$comment") continue;
        const auto it = std::find_if(fields().begin(), fields().end(), [&](const Field& f) { return key == f.key; });
        if (it == fields().end()) {
            issues.push_back({key, location, "unknown key"});
            continue;
        }
        if (std::string err = assign(base, it->member, value); !err.empty()) issues.push_back({key, location, err});
    }
    if (issues.empty()) issues = validate(base, location);
    if (!issues.empty()) throw ConfigError(std::move(issues));
    return base;
}

Scenario load_scenario(const std::string& path) {
    const std::string text = read_file(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError({{"<root>", path + ":byte " + std::to_string(e.byte), "malformed JSON"}});
    }
    Scenario base;
    if (j.is_object() && j.contains("base")) {
        if (!j["base"].is_string() || !is_preset(j["base"].get<std::string>())) {
            throw ConfigError({{"base", path, "must name a preset (scenario1 or scenario2)"}});
        }
        base = preset(j["base"].get<std::string>());
    }
    return apply_json(std::move(base), j, path);
}

Scenario resolve_scenario(const std::string& name_or_path) {
    if (is_preset(name_or_path)) return preset(name_or_path);
    return load_scenario(name_or_path);
}

Scenario apply_overrides(Scenario base, const std::vector<std::string>& assignments) {
    json patch = json::object();
    std::vector<ConfigIssue> issues;
    for (const std::string& a : assignments) {
        const auto eq = a.find('=');
        if (eq == std::string::npos || eq == 0) {
            issues.push_back({a, "--set", "expected key=value"});
            continue;
        }
        const std::string key = a.substr(0, eq);
        const std::string value = a.substr(eq + 1);
        patch[key] = json::accept(value) ? json::parse(value) : json(value);
    }
    if (!issues.empty()) throw ConfigError(std::move(issues));
    return apply_json(std::move(base), patch, "--set");
}

}  // namespace vanet::model
