#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "majorana/matrix4.hpp"
#include "majorana/random.hpp"

namespace majorana {

// Periodic box [-L/2, L/2)^axes with n points per axis.
//   positions  x_k = -L/2 + k L/n,           k = 0..n-1
//   momenta    p_j = 2 pi (j - n/2) / L,      j = 0..n-1  (centred storage)
// Storage index j = 0 is the Nyquist frequency -n/2. Its effective momentum,
// used wherever a momentum enters as a multiplier (kernels, energies,
// derivatives), is 0 so that p -> -p stays an exact involution of the grid.
struct GridSpec {
    int n = 8;
    double box_length = 10.0;
    int axes = 3;

    void validate() const;

    std::size_t size() const;
    double spacing() const { return box_length / n; }
    double momentum_spacing() const;
    double cell_volume() const { return std::pow(spacing(), axes); }
    double momentum_cell_volume() const { return std::pow(momentum_spacing(), axes); }

    double position(int k) const { return -0.5 * box_length + k * spacing(); }
    int frequency(int j) const { return j - n / 2; }
    double momentum(int j) const { return frequency(j) * momentum_spacing(); }
    double effective_momentum(int j) const { return j == 0 ? 0.0 : momentum(j); }
    int partner(int j) const { return (n - j) % n; }  // p -> -p and x -> -x alike

    // Per-axis index triple of a linear index (axes == 1 uses only the last slot).
    std::array<int, 3> unflatten(std::size_t idx) const;
    std::size_t flatten(const std::array<int, 3>& ijk) const;
    std::size_t partner_index(std::size_t idx) const;

    std::array<double, 3> position_vector(std::size_t idx) const;
    std::array<double, 3> momentum_vector(std::size_t idx) const;
    std::array<double, 3> effective_momentum_vector(std::size_t idx) const;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

enum class Domain { position, momentum };

struct MassParam {
    double m = 1.0;
    double energy(double p_squared) const { return std::sqrt(p_squared + m * m); }
    double energy(const std::array<double, 3>& p) const {
        return energy(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    }
};

template <typename Spinor>
struct SpinorField {
    GridSpec grid;
    Domain domain = Domain::position;
    std::vector<Spinor> values;

    SpinorField() = default;
    SpinorField(const GridSpec& g, Domain d) : grid(g), domain(d), values(g.size()) {}

    double measure() const {
        return domain == Domain::position ? grid.cell_volume() : grid.momentum_cell_volume();
    }
    double norm_squared() const {
        double s = 0.0;
        for (const auto& v : values) s += v.norm_squared();
        return measure() * s;
    }
    double norm() const { return std::sqrt(norm_squared()); }
};

using MajoranaSpinorField = SpinorField<MajoranaSpinor>;
using PauliSpinorField = SpinorField<PauliSpinor>;

MajoranaSpinorField theta_map(const PauliSpinorField& psi);
PauliSpinorField inverse_theta_map(const MajoranaSpinorField& u);

// Max-norm distance between two fields on the same grid and domain.
double max_difference(const MajoranaSpinorField& a, const MajoranaSpinorField& b);
// L2 distance in the field's own measure.
double l2_difference(const MajoranaSpinorField& a, const MajoranaSpinorField& b);

// Components drawn independently from N(0, 1).
MajoranaSpinorField random_majorana_field(const GridSpec& g, Domain d, Rng& rng);
PauliSpinorField random_pauli_field(const GridSpec& g, Domain d, Rng& rng);

}  // namespace majorana
