// Experiment runner: every check of the library as a subcommand, with JSON
// reports and CSV tables. Exit status 0 iff every pass flag is true.

#include <CLI11.hpp>
#include <json.hpp>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "majorana/experiments.hpp"

using namespace majorana;
using nlohmann::json;

namespace {

struct RunSettings {
    std::uint64_t seed = 20240101;
    std::string out;
    std::string fields_dir;
    // experiment name -> key -> value
    std::map<std::string, std::map<std::string, std::string>> overrides;
};

// Flat INI: a [run] section (seed, out, fields) and one section per experiment.
RunSettings read_config(const std::string& path) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        pt::read_ini(path, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    RunSettings s;
    for (const auto& [section, body] : tree) {
        if (body.empty() && !body.data().empty()) throw ConfigError("config: key '" + section + "' outside any section");
        if (section == "run") {
            for (const auto& [key, v] : body) {
                const std::string val = v.get_value<std::string>();
                if (key == "seed") {
                    try {
                        s.seed = std::stoull(val);
                    } catch (const std::exception&) {
                        throw ConfigError("config: key 'seed' in [run]: not an unsigned integer");
                    }
                } else if (key == "out") {
                    s.out = val;
                } else if (key == "fields") {
                    s.fields_dir = val;
                } else {
                    throw ConfigError("config: unknown key '" + key + "' in [run]");
                }
            }
            continue;
        }
        const Experiment* e = find_experiment(section);
        if (!e) throw ConfigError("config: unknown section [" + section + "]");
        for (const auto& [key, v] : body) s.overrides[section][key] = v.get_value<std::string>();
        try {
            resolve_params(*e, s.overrides[section]);
        } catch (const ConfigError& err) {
            throw ConfigError("config: [" + section + "] " + err.what());
        }
    }
    return s;
}

// --set accepts "experiment.key=value", or "key=value" when a single experiment runs.
void apply_set(RunSettings& s, const std::string& item, const std::string& single) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + item + "'");
    std::string key = item.substr(0, eq), section = single;
    const auto dot = key.find('.');
    if (dot != std::string::npos) {
        section = key.substr(0, dot);
        key = key.substr(dot + 1);
    }
    if (section.empty()) throw ConfigError("--set '" + item + "': name the experiment as experiment.key=value");
    const Experiment* e = find_experiment(section);
    if (!e) throw ConfigError("--set '" + item + "': unknown experiment " + section);
    s.overrides[section][key] = item.substr(eq + 1);
}

std::string kind_name(ParamKind k) {
    switch (k) {
        case ParamKind::integer: return "int";
        case ParamKind::real: return "real";
        case ParamKind::integer_list: return "int list";
        case ParamKind::real_list: return "real list";
        case ParamKind::text: return "text";
    }
    return "?";
}

void list_experiments(std::ostream& os) {
    for (const auto& e : experiment_catalogue()) {
        os << e.name << " (" << e.topic << ")\n    " << e.summary << '\n';
        for (const auto& p : e.params) {
            os << "    " << p.key << " : " << kind_name(p.kind) << " = " << p.default_value;
            if (p.kind != ParamKind::text) os << "  in [" << p.lo << ", " << p.hi << "]";
            os << "  " << p.help << '\n';
        }
    }
}

std::string csv_path(const std::string& out, const std::string& table) {
    std::filesystem::path p(out);
    const std::string stem = p.stem().string();
    return (p.parent_path() / (stem + "." + table + ".csv")).string();
}

int run(const std::vector<std::string>& names, const RunSettings& s, bool as_json) {
    RunContext ctx;
    ctx.seed = s.seed;
    ctx.fields_dir = s.fields_dir;

    // resolve everything first so a bad key fails before any work starts
    std::vector<std::pair<const Experiment*, Params>> plan;
    for (const auto& name : names) {
        const Experiment* e = find_experiment(name);
        const auto it = s.overrides.find(name);
        plan.emplace_back(e, resolve_params(*e, it == s.overrides.end() ? std::map<std::string, std::string>{} : it->second));
    }
    for (const auto& [name, kv] : s.overrides)
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw ConfigError("settings given for " + name + ", which is not being run");

    json report{{"seed", s.seed}, {"experiments", json::array()}};
    bool all_pass = true;
    std::vector<Table> tables;
    for (const auto& [e, params] : plan) {
        const ExperimentResult res = run_experiment(*e, params, ctx);
        json je{{"name", e->name}, {"topic", e->topic}, {"records", json::array()}, {"tables", json::array()}};
        bool pass = true;
        for (const auto& r : res.records) {
            je["records"].push_back(to_json(r));
            pass = pass && r.pass;
            if (!as_json) {
                std::printf("%s  %-24s %-36s %-12.4g %s %g%s%s\n", r.pass ? "PASS" : "FAIL", r.experiment.c_str(),
                            r.metric.c_str(), r.value, predicate_name(r.predicate).c_str(),
                            r.predicate == Predicate::within ? r.target : r.tolerance,
                            r.note.empty() ? "" : "  # ", r.note.c_str());
            }
        }
        for (const auto& t : res.tables) {
            je["tables"].push_back(to_json(t));
            tables.push_back(t);
        }
        je["pass"] = pass;
        report["experiments"].push_back(je);
        all_pass = all_pass && pass;
        std::fflush(stdout);
    }
    report["all_pass"] = all_pass;

    if (!s.out.empty()) {
        const std::filesystem::path parent = std::filesystem::path(s.out).parent_path();
        if (!parent.empty()) std::filesystem::create_directories(parent);
        std::ofstream(s.out) << report.dump(2) << '\n';
        for (const auto& t : tables) std::ofstream(csv_path(s.out, t.name)) << to_csv(t);
    }
    if (as_json) std::cout << report.dump(2) << '\n';
    else std::printf("%s\n", all_pass ? "all checks passed" : "some checks FAILED");
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Majorana spinor field checks"};
    app.require_subcommand(1);

    std::string config_path, out, fields;
    std::optional<std::uint64_t> seed;
    bool as_json = false;
    std::vector<std::string> sets;
    app.add_option("--config", config_path, "INI file: [run] seed/out/fields and one section per experiment")
        ->check(CLI::ExistingFile);
    app.add_option("--seed", seed, "base seed; each experiment mixes in its name");
    app.add_option("--out", out, "JSON report path; tables go next to it as CSV");
    app.add_option("--fields", fields, "directory for the fields the experiments produce");
    app.add_flag("--json", as_json, "print the JSON report instead of the summary");
    app.add_option("--set", sets, "parameter override, experiment.key=value (repeatable)");

    app.add_subcommand("list", "print the experiments and their parameters")->fallthrough();
    app.add_subcommand("all", "run every experiment")->fallthrough();
    for (const auto& e : experiment_catalogue()) app.add_subcommand(e.name, e.summary)->fallthrough();

    CLI11_PARSE(app, argc, argv);
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "list") {
        list_experiments(std::cout);
        return 0;
    }

    try {
        RunSettings s = config_path.empty() ? RunSettings{} : read_config(config_path);
        if (seed) s.seed = *seed;
        if (!out.empty()) s.out = out;
        if (!fields.empty()) s.fields_dir = fields;
        std::vector<std::string> names;
        if (cmd == "all")
            for (const auto& e : experiment_catalogue()) names.push_back(e.name);
        else
            names.push_back(cmd);
        for (const auto& item : sets) apply_set(s, item, cmd == "all" ? std::string() : cmd);
        return run(names, s, as_json);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    }
}
