#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace majorana {

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class ParamKind { integer, real, integer_list, real_list, text };

struct ParamSpec {
    std::string key;
    ParamKind kind = ParamKind::real;
    std::string default_value;
    double lo = -1e300;  // numeric range, checked element-wise for lists
    double hi = 1e300;
    std::string help;
};

// Resolved parameters of one experiment, kept as text and parsed on access.
class Params {
public:
    Params() = default;
    explicit Params(std::map<std::string, std::string> values) : values_(std::move(values)) {}

    int integer(const std::string& key) const;
    double real(const std::string& key) const;
    std::vector<int> integers(const std::string& key) const;
    std::vector<double> reals(const std::string& key) const;
    const std::string& text(const std::string& key) const;
    nlohmann::json to_json(const std::vector<ParamSpec>& schema) const;

private:
    std::map<std::string, std::string> values_;
};

enum class Predicate {
    abs_le,  // |value| <= tolerance
    ge,      // value >= tolerance
    eq,      // value == tolerance
    within,  // |value - target| <= tolerance, target in the record
    info,    // reported, always passes
};

struct ReportRecord {
    std::string experiment;
    std::string topic;
    nlohmann::json parameters;
    std::string metric;
    double value = 0.0;
    double tolerance = 0.0;
    double target = 0.0;
    Predicate predicate = Predicate::abs_le;
    bool pass = false;
    double wall_seconds = 0.0;
    std::string note;
};

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct ExperimentResult {
    std::vector<ReportRecord> records;
    std::vector<Table> tables;
};

struct RunContext {
    std::uint64_t seed = 20240101;
    std::string fields_dir;  // when set, experiments save their fields there
};

struct Experiment {
    std::string name;
    std::string topic;  // the part of the theory it exercises
    std::string summary;
    std::vector<ParamSpec> params;
    std::function<ExperimentResult(const Params&, const RunContext&)> run;
};

const std::vector<Experiment>& experiment_catalogue();
const Experiment* find_experiment(const std::string& name);

// Defaults overridden by the given values; throws ConfigError naming the key
// on an unknown key, a malformed value or a value out of range.
Params resolve_params(const Experiment& e, const std::map<std::string, std::string>& overrides);

// Runs and stamps experiment, topic and parameters on every record. An
// exception becomes a failed record; it never propagates.
ExperimentResult run_experiment(const Experiment& e, const Params& p, const RunContext& ctx);

// Per-experiment seed: the run seed mixed with a hash of the name.
std::uint64_t experiment_seed(const RunContext& ctx, const std::string& name);

bool evaluate(const ReportRecord& r);
std::string predicate_name(Predicate p);
nlohmann::json to_json(const ReportRecord& r, bool with_time = true);
nlohmann::json to_json(const Table& t);
std::string to_csv(const Table& t);

}  // namespace majorana
