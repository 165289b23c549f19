#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "majorana/experiments.hpp"

namespace majorana {

using nlohmann::json;

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw ConfigError("empty list element in '" + s + "'");
        out.push_back(item.substr(b, e - b + 1));
    }
    if (out.empty()) throw ConfigError("empty list '" + s + "'");
    return out;
}

double parse_real(const std::string& key, const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': not a number: '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw ConfigError("key '" + key + "': not a number: '" + s + "'");
    return v;
}

int parse_int(const std::string& key, const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': not an integer: '" + s + "'");
    }
    if (used != s.size() || v < -2147483647L || v > 2147483647L) throw ConfigError("key '" + key + "': not an integer: '" + s + "'");
    return static_cast<int>(v);
}

void check_range(const ParamSpec& spec, double v) {
    if (v < spec.lo || v > spec.hi) {
        std::ostringstream os;
        os << "key '" << spec.key << "': value " << v << " outside [" << spec.lo << ", " << spec.hi << "]";
        throw ConfigError(os.str());
    }
}

void validate_value(const ParamSpec& spec, const std::string& s) {
    switch (spec.kind) {
        case ParamKind::integer: check_range(spec, parse_int(spec.key, s)); break;
        case ParamKind::real: check_range(spec, parse_real(spec.key, s)); break;
        case ParamKind::integer_list:
            for (const auto& x : split_list(s)) check_range(spec, parse_int(spec.key, x));
            break;
        case ParamKind::real_list:
            for (const auto& x : split_list(s)) check_range(spec, parse_real(spec.key, x));
            break;
        case ParamKind::text: break;
    }
}

}  // namespace

const std::string& Params::text(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("missing parameter '" + key + "'");
    return it->second;
}

int Params::integer(const std::string& key) const { return parse_int(key, text(key)); }
double Params::real(const std::string& key) const { return parse_real(key, text(key)); }

std::vector<int> Params::integers(const std::string& key) const {
    std::vector<int> out;
    for (const auto& s : split_list(text(key))) out.push_back(parse_int(key, s));
    return out;
}

std::vector<double> Params::reals(const std::string& key) const {
    std::vector<double> out;
    for (const auto& s : split_list(text(key))) out.push_back(parse_real(key, s));
    return out;
}

json Params::to_json(const std::vector<ParamSpec>& schema) const {
    json j = json::object();
    for (const auto& s : schema) {
        switch (s.kind) {
            case ParamKind::integer: j[s.key] = integer(s.key); break;
            case ParamKind::real: j[s.key] = real(s.key); break;
            case ParamKind::integer_list: j[s.key] = integers(s.key); break;
            case ParamKind::real_list: j[s.key] = reals(s.key); break;
            case ParamKind::text: j[s.key] = text(s.key); break;
        }
    }
    return j;
}

const Experiment* find_experiment(const std::string& name) {
    for (const auto& e : experiment_catalogue())
        if (e.name == name) return &e;
    return nullptr;
}

Params resolve_params(const Experiment& e, const std::map<std::string, std::string>& overrides) {
    std::map<std::string, std::string> values;
    for (const auto& s : e.params) values[s.key] = s.default_value;
    for (const auto& [k, v] : overrides) {
        const auto spec = std::find_if(e.params.begin(), e.params.end(), [&](const ParamSpec& s) { return s.key == k; });
        if (spec == e.params.end()) throw ConfigError("unknown key '" + k + "' for experiment " + e.name);
        validate_value(*spec, v);
        values[k] = v;
    }
    for (const auto& s : e.params) validate_value(s, values[s.key]);
    return Params(std::move(values));
}

std::uint64_t experiment_seed(const RunContext& ctx, const std::string& name) {
    // FNV-1a of the name, then a splitmix64 finalizer over the mix
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::uint64_t z = ctx.seed ^ h;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

bool evaluate(const ReportRecord& r) {
    if (!std::isfinite(r.value)) return false;
    switch (r.predicate) {
        case Predicate::abs_le: return std::abs(r.value) <= r.tolerance;
        case Predicate::ge: return r.value >= r.tolerance;
        case Predicate::eq: return r.value == r.tolerance;
        case Predicate::within: return std::abs(r.value - r.target) <= r.tolerance;
        case Predicate::info: return true;
    }
    return false;
}

std::string predicate_name(Predicate p) {
    switch (p) {
        case Predicate::abs_le: return "abs_le";
        case Predicate::ge: return "ge";
        case Predicate::eq: return "eq";
        case Predicate::within: return "within";
        case Predicate::info: return "info";
    }
    return "?";
}

ExperimentResult run_experiment(const Experiment& e, const Params& p, const RunContext& ctx) {
    const auto t0 = std::chrono::steady_clock::now();
    ExperimentResult res;
    json params = json::object();
    try {
        params = p.to_json(e.params);
        res = e.run(p, ctx);
    } catch (const std::exception& ex) {
        ReportRecord r;
        r.metric = "error";
        r.value = std::nan("");
        r.note = ex.what();
        res.records.push_back(r);
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (auto& r : res.records) {
        r.experiment = e.name;
        r.topic = e.topic;
        r.parameters = params;
        r.pass = r.metric != "error" && evaluate(r);
        if (r.wall_seconds == 0.0) r.wall_seconds = total;
    }
    return res;
}

json to_json(const ReportRecord& r, bool with_time) {
    json j{{"experiment", r.experiment},
           {"topic", r.topic},
           {"parameters", r.parameters},
           {"metric", r.metric},
           {"value", std::isfinite(r.value) ? json(r.value) : json(nullptr)},
           {"tolerance", r.tolerance},
           {"predicate", predicate_name(r.predicate)},
           {"pass", r.pass}};
    if (r.predicate == Predicate::within) j["target"] = r.target;
    if (!r.note.empty()) j["note"] = r.note;
    if (with_time) j["wall_seconds"] = r.wall_seconds;
    return j;
}

json to_json(const Table& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json o = json::object();
        for (std::size_t c = 0; c < t.columns.size() && c < row.size(); ++c) o[t.columns[c]] = row[c];
        rows.push_back(o);
    }
    return json{{"name", t.name}, {"rows", rows}};
}

std::string to_csv(const Table& t) {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
        os << '\n';
    }
    return os.str();
}

}  // namespace majorana
