#include "vanet/metrics/report.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace vanet::metrics {

using nlohmann::ordered_json;

namespace {

void put_number(std::string& out, double v) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, r.ptr);
}

const char* kind_name(std::size_t k) {
    static const char* names[] = {"WSM", "BSM", "WSA-request", "WSA-response"};
    return names[k];
}

ordered_json delta_json(const Delta& d) {
    ordered_json j;
    j["baseline"] = d.baseline;
    j["fuzzy"] = d.fuzzy;
    j["change"] = d.change ? ordered_json(*d.change) : ordered_json(nullptr);
    return j;
}

ordered_json figure_json(const Figure& f) {
    ordered_json j;
    j["name"] = f.name;
    j["direction"] = f.direction;
    j["definition"] = f.definition;
    j["sum"] = delta_json(f.total);
    j["perNodeMean"] = delta_json(f.per_node);
    return j;
}

std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.emplace_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

double parse_double(const std::string& field, const std::string& where) {
    double v = 0.0;
    const auto r = std::from_chars(field.data(), field.data() + field.size(), v);
    if (r.ec != std::errc{} || r.ptr != field.data() + field.size()) {
        throw IoError(where + ": not a number: '" + field + "'");
    }
    return v;
}

std::vector<std::string> csv_header() {
    std::vector<std::string> h{"nodeId", "kind"};
    for (Metric m : kAllMetrics) h.emplace_back(column_name(m));
    h.insert(h.end(), {"posX", "posY", "channelIdleSeconds"});
    return h;
}

}  // namespace

std::string nodes_csv(const RunResult& run) {
    std::string out;
    const auto header = csv_header();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out += ',';
        out += header[i];
    }
    out += '\n';
    for (const NodeResult& n : run.nodes) {
        out += std::to_string(n.id);
        out += ',';
        out += n.kind;
        for (Metric m : kAllMetrics) {
            out += ',';
            put_number(out, n.ledger.get(m));
        }
        for (double v : {n.x, n.y, n.idle_seconds}) {
            out += ',';
            put_number(out, v);
        }
        out += '\n';
    }
    return out;
}

std::vector<NodeResult> parse_nodes_csv(std::string_view text, const std::string& source) {
    std::vector<NodeResult> out;
    const auto header = csv_header();
    std::size_t line_no = 0, pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const std::string where = source + ":" + std::to_string(line_no);
        const auto fields = split(line);
        if (line_no == 1) {
            if (fields != header) throw IoError(where + ": unexpected header");
            continue;
        }
        if (line.empty()) continue;
        if (fields.size() != header.size()) throw IoError(where + ": expected " + std::to_string(header.size()) + " fields");
        NodeResult n;
        n.id = static_cast<std::uint32_t>(parse_double(fields[0], where));
        n.kind = fields[1];
        for (std::size_t i = 0; i < kMetricCount; ++i) {
            const double v = parse_double(fields[2 + i], where);
            if (v != 0.0) n.ledger.record(kAllMetrics[i], v);
        }
        n.x = parse_double(fields[2 + kMetricCount], where);
        n.y = parse_double(fields[3 + kMetricCount], where);
        n.idle_seconds = parse_double(fields[4 + kMetricCount], where);
        out.push_back(std::move(n));
    }
    if (line_no == 0) throw IoError(source + ": empty file");
    return out;
}

RunSummary summarize(const RunResult& run) {
    RunSummary s;
    s.scenario = run.scenario;
    s.seed = run.seed;
    s.duration = run.duration;
    s.mode = run.mode;
    s.acceptance = run.acceptance;
    s.nodes = run.nodes.size();
    for (const NodeResult& n : run.nodes) {
        s.vehicles += n.kind == "vehicle";
        for (std::size_t i = 0; i < kMetricCount; ++i) s.sums[i] += n.ledger.get(kAllMetrics[i]);
        s.total_idle_seconds += n.idle_seconds;
    }
    if (s.nodes > 0) {
        const auto count = static_cast<double>(s.nodes);
        for (std::size_t i = 0; i < kMetricCount; ++i) s.means[i] = s.sums[i] / count;
        s.mean_idle_seconds = s.total_idle_seconds / count;
    }
    s.frames_on_air = run.totals.frames_on_air;
    s.collided_transmissions = run.totals.collided_transmissions;
    s.rebroadcasts = run.totals.rebroadcasts;
    s.origins = run.totals.origins_by_kind;
    s.events = run.totals.events;
    return s;
}

ordered_json to_json(const RunSummary& s) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["document"] = "run-summary";
    j["scenario"] = s.scenario;
    j["seed"] = s.seed;
    j["duration"] = s.duration;
    j["mode"] = s.mode;
    j["acceptance"] = s.acceptance;
    j["nodes"] = s.nodes;
    j["vehicles"] = s.vehicles;
    ordered_json sums, means;
    for (std::size_t i = 0; i < kMetricCount; ++i) {
        const std::string key(column_name(kAllMetrics[i]));
        sums[key] = s.sums[i];
        means[key] = s.means[i];
    }
    j["sums"] = sums;
    j["means"] = means;
    j["totalIdleSeconds"] = s.total_idle_seconds;
    j["meanIdleSeconds"] = s.mean_idle_seconds;
    j["framesOnAir"] = s.frames_on_air;
    j["collidedTransmissions"] = s.collided_transmissions;
    j["rebroadcasts"] = s.rebroadcasts;
    ordered_json origins;
    for (std::size_t k = 0; k < kFrameKinds; ++k) origins[kind_name(k)] = s.origins[k];
    j["origins"] = origins;
    j["events"] = s.events;
    return j;
}

RunSummary summary_from_json(const nlohmann::json& j, const std::string& source) {
    try {
        if (j.at("schema_version").get<int>() != kSchemaVersion) throw IoError(source + ": unsupported schema_version");
        RunSummary s;
        s.scenario = j.at("scenario").get<std::string>();
        s.seed = j.at("seed").get<std::uint64_t>();
        s.duration = j.at("duration").get<double>();
        s.mode = j.at("mode").get<std::string>();
        s.acceptance = j.at("acceptance").get<std::string>();
        s.nodes = j.at("nodes").get<std::uint64_t>();
        s.vehicles = j.at("vehicles").get<std::uint64_t>();
        for (std::size_t i = 0; i < kMetricCount; ++i) {
            const std::string key(column_name(kAllMetrics[i]));
            s.sums[i] = j.at("sums").at(key).get<double>();
            s.means[i] = j.at("means").at(key).get<double>();
        }
        s.total_idle_seconds = j.at("totalIdleSeconds").get<double>();
        s.mean_idle_seconds = j.at("meanIdleSeconds").get<double>();
        s.frames_on_air = j.at("framesOnAir").get<std::uint64_t>();
        s.collided_transmissions = j.at("collidedTransmissions").get<std::uint64_t>();
        s.rebroadcasts = j.at("rebroadcasts").get<std::uint64_t>();
        for (std::size_t k = 0; k < kFrameKinds; ++k) s.origins[k] = j.at("origins").at(kind_name(k)).get<std::uint64_t>();
        s.events = j.at("events").get<std::uint64_t>();
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(source + ": " + e.what());
    }
}

Delta reduction(double baseline, double fuzzy) {
    Delta d{baseline, fuzzy, {}};
    if (baseline > 0.0) d.change = (baseline - fuzzy) / baseline;
    return d;
}

Delta increase(double baseline, double fuzzy) {
    Delta d{baseline, fuzzy, {}};
    if (baseline > 0.0) d.change = (fuzzy - baseline) / baseline;
    return d;
}

const Figure& ComparisonReport::figure(std::string_view name) const {
    for (const Figure& f : figures) {
        if (f.name == name) return f;
    }
    throw std::out_of_range("no figure named " + std::string(name));
}

ComparisonReport compare_runs(const RunSummary& b, const RunSummary& f) {
    std::vector<std::string> diffs;
    if (b.scenario != f.scenario) diffs.push_back("scenario (" + b.scenario + " vs " + f.scenario + ")");
    if (b.seed != f.seed) diffs.push_back("seed (" + std::to_string(b.seed) + " vs " + std::to_string(f.seed) + ")");
    if (b.duration != f.duration) diffs.push_back("duration");
    if (b.nodes != f.nodes) diffs.push_back("node count");
    if (!diffs.empty()) {
        std::string msg = "runs are not comparable:";
        for (const auto& d : diffs) msg += " " + d;
        throw ScenarioMismatch(msg);
    }

    ComparisonReport r;
    r.scenario = b.scenario;
    r.seed = b.seed;
    r.duration = b.duration;
    const double n = b.nodes > 0 ? static_cast<double>(b.nodes) : 1.0;

    auto reduce = [&](const char* name, const char* definition, Metric m) {
        return Figure{name, "reduction", definition, reduction(b.sum(m), f.sum(m)), reduction(b.mean(m), f.mean(m))};
    };
    r.figures.push_back(reduce("collidedPackets", "totalLostPackets summed over receivers", Metric::TotalLostPackets));
    r.figures.push_back(
        reduce("redundantSent", "sentPackets, originals plus rebroadcasts, summed over senders", Metric::SentPackets));
    r.figures.push_back({"networkOverhead", "reduction",
                         "frames placed on air by all nodes, originals plus rebroadcasts",
                         reduction(static_cast<double>(b.frames_on_air), static_cast<double>(f.frames_on_air)),
                         reduction(static_cast<double>(b.frames_on_air) / n, static_cast<double>(f.frames_on_air) / n)});
    r.figures.push_back({"channelIdleTime", "increase",
                         "duration minus the union of frozen MAC backoff slots and PHY busy intervals, per node",
                         increase(b.total_idle_seconds, f.total_idle_seconds),
                         increase(b.mean_idle_seconds, f.mean_idle_seconds)});
    for (Metric m : kAllMetrics) {
        const std::string name(column_name(m));
        r.metrics.emplace_back(name, reduce(name.c_str(), "", m));
    }
    return r;
}

ordered_json to_json(const ComparisonReport& r) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["document"] = "comparison-report";
    j["scenario"] = r.scenario;
    j["seed"] = r.seed;
    j["duration"] = r.duration;
    j["changeFormula"] = {{"reduction", "(baseline - fuzzy) / baseline"},
                          {"increase", "(fuzzy - baseline) / baseline"},
                          {"null", "baseline is zero"}};
    ordered_json figures = ordered_json::array();
    for (const Figure& f : r.figures) figures.push_back(figure_json(f));
    j["figures"] = figures;
    ordered_json metrics;
    for (const auto& [name, f] : r.metrics) {
        metrics[name] = {{"sum", delta_json(f.total)}, {"perNodeMean", delta_json(f.per_node)}};
    }
    j["metrics"] = metrics;
    return j;
}

void write_text(const std::string& path, std::string_view text) {
    std::error_code ec;
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent, ec);
    if (ec) throw IoError(path + ": cannot create directory: " + ec.message());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path + ": cannot open for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw IoError(path + ": write failed");
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path + ": cannot open for reading");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace vanet::metrics
