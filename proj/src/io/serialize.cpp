#include "majorana/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "majorana/errors.hpp"

namespace majorana {

using nlohmann::json;

namespace {

constexpr const char* kFieldFormat = "majorana-field/1";
constexpr const char* kModeFormat = "majorana-modes/1";

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_row(std::ostream& os, long a, long b, long c, const MajoranaSpinor& v) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%ld %ld %ld %.17g %.17g %.17g %.17g\n", a, b, c, v[0], v[1], v[2], v[3]);
    os << buf;
}

json read_header(std::istream& is, const char* format) {
    std::string line;
    if (!std::getline(is, line)) throw FormatError("missing header line");
    json h = json::parse(line);
    if (h.value("format", std::string()) != format)
        throw FormatError("unexpected format tag, wanted " + std::string(format));
    return h;
}

// Reads the next row; returns false at a clean end of input.
bool read_row(std::istream& is, std::array<long, 3>& idx, MajoranaSpinor& v) {
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (!(ls >> idx[0] >> idx[1] >> idx[2] >> v[0] >> v[1] >> v[2] >> v[3]))
            throw FormatError("malformed row: " + line);
        return true;
    }
    return false;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return is;
}

}  // namespace

void write_field(std::ostream& os, const MajoranaSpinorField& f, const MassParam& mass) {
    const GridSpec& g = f.grid;
    json h{{"format", kFieldFormat},
           {"grid", {{"n", g.n}, {"box_length", g.box_length}, {"axes", g.axes}}},
           {"domain", f.domain == Domain::position ? "position" : "momentum"},
           {"mass", mass.m},
           {"rows", f.values.size()}};
    os << h.dump() << '\n';
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const auto k = g.unflatten(i);
        write_row(os, k[0], k[1], k[2], f.values[i]);
    }
}

StoredField read_field(std::istream& is) {
    const json h = read_header(is, kFieldFormat);
    GridSpec g;
    g.n = h.at("grid").at("n").get<int>();
    g.box_length = h.at("grid").at("box_length").get<double>();
    g.axes = h.at("grid").at("axes").get<int>();
    g.validate();
    const std::string dom = h.at("domain").get<std::string>();
    if (dom != "position" && dom != "momentum") throw FormatError("unknown domain " + dom);

    StoredField out{MajoranaSpinorField(g, dom == "position" ? Domain::position : Domain::momentum),
                    MassParam{h.at("mass").get<double>()}};
    std::vector<bool> seen(g.size(), false);
    std::array<long, 3> k{};
    MajoranaSpinor v;
    std::size_t rows = 0;
    while (read_row(is, k, v)) {
        for (long c : k)
            if (c < 0 || c >= g.n) throw FormatError("grid index out of range");
        if (g.axes == 1 && (k[0] != 0 || k[1] != 0)) throw FormatError("grid index out of range");
        const std::size_t idx = g.flatten({static_cast<int>(k[0]), static_cast<int>(k[1]), static_cast<int>(k[2])});
        if (seen[idx]) throw FormatError("duplicate grid index");
        seen[idx] = true;
        out.field.values[idx] = v;
        ++rows;
    }
    if (rows != g.size()) throw GridMismatch("field file has " + std::to_string(rows) + " rows, grid needs " + std::to_string(g.size()));
    return out;
}

void write_modes(std::ostream& os, const MajoranaModeField& m, const MassParam& mass) {
    const SphericalQuadSpec& q = m.quad;
    json h{{"format", kModeFormat},
           {"quad",
            {{"r_max", q.r_max}, {"n_r", q.n_r}, {"n_theta", q.n_theta}, {"n_phi", q.n_phi}, {"l_max", q.l_max},
             {"p_nodes", q.p_nodes}, {"p_weights", q.p_weights}}},
           {"mass", mass.m},
           {"rows", m.values.size()}};
    os << h.dump() << '\n';
    for (std::size_t ip = 0; ip < q.p_nodes.size(); ++ip)
        for (std::size_t k = 0; k < q.lm_count(); ++k) {
            const auto [l, mu] = lm_of_index(k);
            write_row(os, static_cast<long>(ip), l, mu, m.at(ip, l, mu));
        }
}

StoredModes read_modes(std::istream& is) {
    const json h = read_header(is, kModeFormat);
    const json& jq = h.at("quad");
    SphericalQuadSpec q;
    q.r_max = jq.at("r_max").get<double>();
    q.n_r = jq.at("n_r").get<int>();
    q.n_theta = jq.at("n_theta").get<int>();
    q.n_phi = jq.at("n_phi").get<int>();
    q.l_max = jq.at("l_max").get<int>();
    q.p_nodes = jq.at("p_nodes").get<std::vector<double>>();
    q.p_weights = jq.at("p_weights").get<std::vector<double>>();
    q.validate();

    StoredModes out{MajoranaModeField(q), MassParam{h.at("mass").get<double>()}};
    std::vector<bool> seen(q.mode_count(), false);
    std::array<long, 3> k{};
    MajoranaSpinor v;
    std::size_t rows = 0;
    while (read_row(is, k, v)) {
        const int l = static_cast<int>(k[1]), mu = static_cast<int>(k[2]);
        if (k[0] < 0 || static_cast<std::size_t>(k[0]) >= q.p_nodes.size() || l > q.l_max || !mode_in_range(l, mu))
            throw FormatError("mode index out of range");
        const std::size_t idx = out.modes.index(static_cast<std::size_t>(k[0]), l, mu);
        if (seen[idx]) throw FormatError("duplicate mode index");
        seen[idx] = true;
        out.modes.values[idx] = v;
        ++rows;
    }
    if (rows != q.mode_count()) throw GridMismatch("mode file has " + std::to_string(rows) + " rows, spec needs " + std::to_string(q.mode_count()));
    return out;
}

void save_field(const std::string& path, const MajoranaSpinorField& f, const MassParam& mass) {
    auto os = open_out(path);
    write_field(os, f, mass);
}

StoredField load_field(const std::string& path) {
    auto is = open_in(path);
    return read_field(is);
}

void save_modes(const std::string& path, const MajoranaModeField& m, const MassParam& mass) {
    auto os = open_out(path);
    write_modes(os, m, mass);
}

StoredModes load_modes(const std::string& path) {
    auto is = open_in(path);
    return read_modes(is);
}

}  // namespace majorana
