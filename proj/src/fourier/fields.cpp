#include "majorana/fields.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

#include "majorana/errors.hpp"
#include "majorana/theta.hpp"

namespace majorana {

void GridSpec::validate() const {
    if (n <= 0 || n % 2 != 0) throw DomainError("GridSpec: n must be a positive even integer");
    if (!(box_length > 0.0) || !std::isfinite(box_length)) throw DomainError("GridSpec: box length must be > 0");
    if (axes != 1 && axes != 3) throw DomainError("GridSpec: axes must be 1 or 3");
}

std::size_t GridSpec::size() const {
    std::size_t s = 1;
    for (int a = 0; a < axes; ++a) s *= static_cast<std::size_t>(n);
    return s;
}

double GridSpec::momentum_spacing() const { return 2.0 * std::numbers::pi / box_length; }

std::array<int, 3> GridSpec::unflatten(std::size_t idx) const {
    const auto nn = static_cast<std::size_t>(n);
    if (axes == 1) return {0, 0, static_cast<int>(idx)};
    return {static_cast<int>(idx / (nn * nn)), static_cast<int>((idx / nn) % nn), static_cast<int>(idx % nn)};
}

std::size_t GridSpec::flatten(const std::array<int, 3>& ijk) const {
    const auto nn = static_cast<std::size_t>(n);
    if (axes == 1) return static_cast<std::size_t>(ijk[2]);
    return (static_cast<std::size_t>(ijk[0]) * nn + static_cast<std::size_t>(ijk[1])) * nn +
           static_cast<std::size_t>(ijk[2]);
}

std::size_t GridSpec::partner_index(std::size_t idx) const {
    auto ijk = unflatten(idx);
    for (int a = 3 - axes; a < 3; ++a) ijk[a] = partner(ijk[a]);
    return flatten(ijk);
}

std::array<double, 3> GridSpec::position_vector(std::size_t idx) const {
    const auto ijk = unflatten(idx);
    std::array<double, 3> x{};
    for (int a = 3 - axes; a < 3; ++a) x[a] = position(ijk[a]);
    return x;
}

std::array<double, 3> GridSpec::momentum_vector(std::size_t idx) const {
    const auto ijk = unflatten(idx);
    std::array<double, 3> p{};
    for (int a = 3 - axes; a < 3; ++a) p[a] = momentum(ijk[a]);
    return p;
}

std::array<double, 3> GridSpec::effective_momentum_vector(std::size_t idx) const {
    const auto ijk = unflatten(idx);
    std::array<double, 3> p{};
    for (int a = 3 - axes; a < 3; ++a) p[a] = effective_momentum(ijk[a]);
    return p;
}

MajoranaSpinorField theta_map(const PauliSpinorField& psi) {
    MajoranaSpinorField out(psi.grid, psi.domain);
    for (std::size_t i = 0; i < psi.values.size(); ++i) out.values[i] = theta(psi.values[i]);
    return out;
}

PauliSpinorField inverse_theta_map(const MajoranaSpinorField& u) {
    PauliSpinorField out(u.grid, u.domain);
    for (std::size_t i = 0; i < u.values.size(); ++i) out.values[i] = inverse_theta(u.values[i]);
    return out;
}

double max_difference(const MajoranaSpinorField& a, const MajoranaSpinorField& b) {
    if (!(a.grid == b.grid) || a.values.size() != b.values.size()) throw GridMismatch("fields live on different grids");
    double d = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        for (int c = 0; c < 4; ++c) d = std::max(d, std::abs(a.values[i][c] - b.values[i][c]));
    return d;
}

double l2_difference(const MajoranaSpinorField& a, const MajoranaSpinorField& b) {
    if (!(a.grid == b.grid) || a.values.size() != b.values.size()) throw GridMismatch("fields live on different grids");
    double s = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) s += (a.values[i] - b.values[i]).norm_squared();
    return std::sqrt(a.measure() * s);
}

MajoranaSpinorField random_majorana_field(const GridSpec& g, Domain d, Rng& rng) {
    g.validate();
    MajoranaSpinorField f(g, d);
    for (auto& v : f.values)
        for (int c = 0; c < 4; ++c) v[c] = rng.normal();
    return f;
}

PauliSpinorField random_pauli_field(const GridSpec& g, Domain d, Rng& rng) {
    g.validate();
    PauliSpinorField f(g, d);
    for (auto& v : f.values)
        for (int c = 0; c < 2; ++c) {
            const double re = rng.normal();
            const double im = rng.normal();
            v[c] = complex(re, im);
        }
    return f;
}

}  // namespace majorana
