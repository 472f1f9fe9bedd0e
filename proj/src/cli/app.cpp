#include "vanet/cli/app.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "vanet/fuzzy/fis_io.hpp"
#include "vanet/metrics/report.hpp"
#include "vanet/miner/fcm.hpp"
#include "vanet/miner/rule_extraction.hpp"
#include "vanet/sim/simulator.hpp"

namespace vanet::cli {

using model::ConfigError;
using model::ConfigIssue;
using nlohmann::ordered_json;

model::Scenario resolve_scenario(const RunConfig& c) {
    model::Scenario s = model::resolve_scenario(c.scenario);
    if (!c.overrides.empty()) s = model::apply_overrides(std::move(s), c.overrides);
    if (c.mode) s.mode = *c.mode;
    if (c.acceptance) s.acceptance = *c.acceptance;
    if (c.seed) s.seed = *c.seed;
    if (c.duration) s.duration = *c.duration;
    if (auto issues = model::validate(s, "command line"); !issues.empty()) throw ConfigError(std::move(issues));
    return s;
}

std::shared_ptr<const fuzzy::Fis> load_gate(const std::string& path) {
    if (path.empty()) return std::make_shared<fuzzy::Fis>(fuzzy::default_gate_definition());
    if (!std::filesystem::is_regular_file(path)) throw ConfigError({{"fis", path, "file not found"}});
    try {
        return std::make_shared<fuzzy::Fis>(fuzzy::load_fis(path));
    } catch (const fuzzy::FisParseError& e) {
        throw ConfigError({{"fis", e.source() + ":" + std::to_string(e.line()), e.detail()}});
    } catch (const fuzzy::FisError& e) {
        throw ConfigError({{"fis", path, e.what()}});
    }
}

namespace {

struct RunOutcome {
    metrics::RunResult result;
    metrics::RunSummary summary;
};

RunOutcome simulate(const model::Scenario& s, std::shared_ptr<const fuzzy::Fis> gate, const std::string& trace_path) {
    std::ofstream trace;
    if (!trace_path.empty()) {
        std::filesystem::create_directories(std::filesystem::path(trace_path).parent_path());
        trace.open(trace_path, std::ios::binary | std::ios::trunc);
        if (!trace) throw metrics::IoError(trace_path + ": cannot open for writing");
    }
    sim::Simulator simulator(s, s.mode == mac::Mode::Fuzzy ? std::move(gate) : nullptr,
                             trace_path.empty() ? nullptr : &trace);
    simulator.run();
    RunOutcome o{simulator.result(), {}};
    o.summary = metrics::summarize(o.result);
    return o;
}

void export_run(const RunOutcome& o, const std::filesystem::path& dir) {
    metrics::write_text((dir / "nodes.csv").string(), metrics::nodes_csv(o.result));
    metrics::write_text((dir / "summary.json").string(), metrics::to_json(o.summary).dump(2) + "\n");
}

ordered_json config_json(const char* command, const RunConfig& c, const model::Scenario& s) {
    ordered_json j;
    j["schema_version"] = metrics::kSchemaVersion;
    j["document"] = "effective-config";
    j["command"] = command;
    j["scenarioSource"] = c.scenario;
    j["fis"] = c.fis.empty() ? "built-in" : c.fis;
    j["overrides"] = c.overrides;
    j["trace"] = c.trace;
    j["scenario"] = model::to_json(s);
    return j;
}

std::string percent(const std::optional<double>& v) {
    if (!v) return "n/a";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%+.1f%%", *v * 100.0);
    return buf;
}

void print_summary(std::ostream& out, const char* label, const metrics::RunSummary& s) {
    using metrics::Metric;
    out << label << ": sent=" << s.sum(Metric::SentPackets) << " lost=" << s.sum(Metric::TotalLostPackets)
        << " droppedByGate=" << s.sum(Metric::DroppedByGate) << " framesOnAir=" << s.frames_on_air
        << " meanIdleSeconds=" << s.mean_idle_seconds << "\n";
}

int cmd_run(const RunConfig& c, std::ostream& out) {
    const model::Scenario s = resolve_scenario(c);
    auto gate = s.mode == mac::Mode::Fuzzy ? load_gate(c.fis) : nullptr;
    const std::filesystem::path dir(c.out);
    const RunOutcome o = simulate(s, gate, c.trace ? (dir / "trace.log").string() : "");
    export_run(o, dir);
    metrics::write_text((dir / "config.json").string(), config_json("run", c, s).dump(2) + "\n");
    print_summary(out, mac::to_string(s.mode), o.summary);
    out << "wrote " << (dir / "nodes.csv").string() << " and " << (dir / "summary.json").string() << "\n";
    return kExitOk;
}

int cmd_compare(const RunConfig& c, std::ostream& out) {
    model::Scenario base = resolve_scenario(c);
    base.mode = mac::Mode::Baseline;
    model::Scenario fuzzy = base;
    fuzzy.mode = mac::Mode::Fuzzy;
    auto gate = load_gate(c.fis);
    const std::filesystem::path dir(c.out);
    auto trace_for = [&](const char* sub) { return c.trace ? (dir / sub / "trace.log").string() : std::string(); };

    auto b = std::async(std::launch::async, simulate, base, gate, trace_for("baseline"));
    auto f = std::async(std::launch::async, simulate, fuzzy, gate, trace_for("fuzzy"));
    const RunOutcome rb = b.get();
    const RunOutcome rf = f.get();

    export_run(rb, dir / "baseline");
    export_run(rf, dir / "fuzzy");
    const metrics::ComparisonReport report = metrics::compare_runs(rb.summary, rf.summary);
    metrics::write_text((dir / "report.json").string(), metrics::to_json(report).dump(2) + "\n");
    metrics::write_text((dir / "config.json").string(), config_json("compare", c, base).dump(2) + "\n");

    print_summary(out, "baseline", rb.summary);
    print_summary(out, "fuzzy", rf.summary);
    for (const auto& fig : report.figures) {
        out << fig.name << " " << fig.direction << ": " << percent(fig.total.change) << " (sum), "
            << percent(fig.per_node.change) << " (per-node mean)\n";
    }
    out << "wrote " << (dir / "report.json").string() << "\n";
    return kExitOk;
}

int cmd_fis_eval(const std::string& fis_path, double s, double sg, double rg, std::ostream& out) {
    const auto fis = load_gate(fis_path);
    const auto& def = fis->definition();
    const auto r = fis->infer(s, sg, rg);
    out << "inputs:";
    for (std::size_t i = 0; i < def.inputs.size(); ++i) out << " " << def.inputs[i].name << "=" << r.clamped_inputs[i];
    out << "\n";
    for (std::size_t i = 0; i < def.rules.size(); ++i) {
        out << "activation " << def.rules[i].name << " = " << r.activations[i] << "   "
            << fuzzy::format_rule(def, def.rules[i]) << "\n";
    }
    if (!r.fired()) {
        out << "crispF: none (no rule fired)\nclass: none\n";
    } else {
        out << "crispF: " << r.crisp << "\n";
        out << "class: " << fis->output_label(fis->classify_output(r.crisp)) << "\n";
    }
    out << "gate:";
    for (model::Acceptance a : {model::Acceptance::Bad, model::Acceptance::Good, model::Acceptance::VeryGood}) {
        const auto v = fis->gate(s, sg, rg, fis->output_rank(model::output_label(a)));
        out << " " << model::to_string(a) << "=" << fuzzy::to_string(v);
    }
    out << "\n";
    return kExitOk;
}

int cmd_mine_rules(const std::string& fis_path, const std::string& dataset, std::size_t k, const miner::FcmParams& base,
                   std::ostream& out) {
    const auto fis = load_gate(fis_path);
    miner::Dataset data;
    try {
        data = miner::load_dataset(dataset);
    } catch (const miner::MinerError& e) {
        throw ConfigError({{"dataset", dataset, e.what()}});
    }
    miner::FcmParams p = base;
    p.clusters = k;
    const miner::FcmResult res = miner::fcm_cluster(data, p);
    out << "# " << data.rows.size() << " rows, k=" << k << ", m=" << p.fuzzifier << ", iterations=" << res.iterations
        << ", J=" << res.objective << "\n";
    for (std::size_t c = 0; c < res.centers.size(); ++c) {
        const auto& v = res.centers[c];
        out << "# center " << c << ": " << v[0] << " " << v[1] << " " << v[2] << " " << v[3] << "\n";
    }
    for (const auto& rule : miner::extract_rules(res, fis->definition())) {
        out << fuzzy::format_rule(fis->definition(), rule) << "\n";
    }
    return kExitOk;
}

void report_config_error(const ConfigError& e, std::ostream& err) { err << e.to_json().dump(2) << "\n"; }

void add_run_flags(CLI::App* cmd, RunConfig& c, std::string& mode, std::string& acceptance, bool with_mode) {
    cmd->add_option("--scenario", c.scenario, "Preset name (scenario1, scenario2) or scenario JSON file");
    if (with_mode) cmd->add_option("--mode", mode, "baseline or fuzzy");
    cmd->add_option("--acceptance", acceptance, "Gate acceptance level: bad, good or vgood");
    cmd->add_option("--seed", c.seed, "Master seed (default " + std::to_string(model::kDefaultSeed) + ")");
    cmd->add_option("--out", c.out, "Output directory");
    cmd->add_option("--duration", c.duration, "Simulated seconds");
    cmd->add_option("--fis", c.fis, "Gate FIS file (default: built-in definition)");
    cmd->add_flag("--trace", c.trace, "Write one line per event to trace.log");
    cmd->add_option("--set", c.overrides, "Override a scenario key, e.g. --set vehicleCount=10")->take_all();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Vehicular broadcast simulator with a fuzzy transmission gate"};
    app.require_subcommand(1);

    RunConfig run_cfg, cmp_cfg;
    std::string run_mode, run_acc, cmp_mode, cmp_acc;
    auto* run = app.add_subcommand("run", "Run one simulation and export per-node results");
    add_run_flags(run, run_cfg, run_mode, run_acc, true);
    auto* compare = app.add_subcommand("compare", "Run baseline and fuzzy on the same seed and compare");
    add_run_flags(compare, cmp_cfg, cmp_mode, cmp_acc, false);

    std::string eval_fis;
    double s = 0, sg = 0, rg = 0;
    auto* eval = app.add_subcommand("fis-eval", "Evaluate the gate FIS at one input triple");
    eval->add_option("s", s, "Speed (m/s)")->required();
    eval->add_option("sg", sg, "Sender gain")->required();
    eval->add_option("rg", rg, "Receiver gain")->required();
    eval->add_option("--fis", eval_fis, "FIS file (default: built-in definition)");

    std::string mine_fis, dataset;
    std::size_t k = 2;
    miner::FcmParams fcm;
    auto* mine = app.add_subcommand("mine-rules", "Cluster a dataset with fuzzy C-means and propose rules");
    mine->add_option("dataset", dataset, "CSV with columns s, sg, rg, f")->required();
    mine->add_option("k", k, "Number of clusters")->required();
    mine->add_option("--fis", mine_fis, "FIS whose terms label the centers (default: built-in)");
    mine->add_option("--fuzzifier", fcm.fuzzifier, "FCM exponent m > 1");
    mine->add_option("--seed", fcm.seed, "Seed for the initial centers");
    mine->add_option("--max-iterations", fcm.max_iterations, "Iteration cap");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        report_config_error(ConfigError({{"arguments", "command line", e.what()}}), err);
        return kExitConfig;
    }

    try {
        auto finish = [](RunConfig& c, const std::string& mode, const std::string& acc) {
            std::vector<ConfigIssue> issues;
            if (!mode.empty()) {
                mac::Mode m;
                if (model::parse_mode(mode, m)) {
                    c.mode = m;
                } else {
                    issues.push_back({"mode", "command line", "expected baseline or fuzzy"});
                }
            }
            if (!acc.empty()) {
                model::Acceptance a;
                if (model::parse_acceptance(acc, a)) {
                    c.acceptance = a;
                } else {
                    issues.push_back({"acceptance", "command line", "expected bad, good or vgood"});
                }
            }
            try {
                resolve_scenario(c);
            } catch (const ConfigError& e) {
                issues.insert(issues.end(), e.issues().begin(), e.issues().end());
            }
            if (!issues.empty()) throw ConfigError(std::move(issues));
        };
        if (*run) {
            finish(run_cfg, run_mode, run_acc);
            return cmd_run(run_cfg, out);
        }
        if (*compare) {
            finish(cmp_cfg, cmp_mode, cmp_acc);
            return cmd_compare(cmp_cfg, out);
        }
        if (*eval) return cmd_fis_eval(eval_fis, s, sg, rg, out);
        if (*mine) return cmd_mine_rules(mine_fis, dataset, k, fcm, out);
    } catch (const ConfigError& e) {
        report_config_error(e, err);
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitRuntime;
}

}  // namespace vanet::cli
