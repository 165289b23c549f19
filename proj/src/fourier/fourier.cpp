#include "majorana/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "majorana/clifford.hpp"
#include "majorana/errors.hpp"
#include "majorana/theta.hpp"

namespace majorana {

namespace {

using Buffer = std::vector<complex>;

// Plain DFT over the storage layout, sign -1 (forward) or +1 (backward), unnormalized.
void dft(Buffer& buf, const GridSpec& g, int sign) {
    int dims[3] = {g.n, g.n, g.n};
    auto* data = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_plan plan = fftw_plan_dft(g.axes, dims, data, data, sign, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
}

// Storage index j (frequency j - n/2) <-> DFT bin (j + n/2) mod n.
std::size_t bin_of(const GridSpec& g, std::size_t idx) {
    auto ijk = g.unflatten(idx);
    for (int a = 3 - g.axes; a < 3; ++a) ijk[a] = (ijk[a] + g.n / 2) % g.n;
    return g.flatten(ijk);
}

// (-1)^(sum of frequencies): the phase from the box offset x_0 = -L/2.
double offset_sign(const GridSpec& g, std::size_t idx) {
    const auto ijk = g.unflatten(idx);
    int s = 0;
    for (int a = 3 - g.axes; a < 3; ++a) s += g.frequency(ijk[a]);
    return (s % 2 == 0) ? 1.0 : -1.0;
}

double forward_scale(const GridSpec& g) {
    return g.cell_volume() / std::pow(2.0 * std::numbers::pi, 0.5 * g.axes);
}

double backward_scale(const GridSpec& g) {
    return g.momentum_cell_volume() / std::pow(2.0 * std::numbers::pi, 0.5 * g.axes);
}

void require(const SpinorField<MajoranaSpinor>& f, Domain d, const char* what) {
    f.grid.validate();
    if (f.domain != d) throw GridMismatch(std::string(what) + ": field is in the wrong domain");
    if (f.values.size() != f.grid.size()) throw GridMismatch(std::string(what) + ": value count does not match grid");
}

void require(const SpinorField<PauliSpinor>& f, Domain d, const char* what) {
    f.grid.validate();
    if (f.domain != d) throw GridMismatch(std::string(what) + ": field is in the wrong domain");
    if (f.values.size() != f.grid.size()) throw GridMismatch(std::string(what) + ": value count does not match grid");
}

}  // namespace

PauliSpinorField pauli_fourier(const PauliSpinorField& psi) {
    require(psi, Domain::position, "pauli_fourier");
    const GridSpec& g = psi.grid;
    const std::size_t N = g.size();
    PauliSpinorField out(g, Domain::momentum);
    const double scale = forward_scale(g);
    Buffer buf(N);
    for (int c = 0; c < 2; ++c) {
        for (std::size_t i = 0; i < N; ++i) buf[i] = psi.values[i][c];
        dft(buf, g, FFTW_FORWARD);
        for (std::size_t j = 0; j < N; ++j) out.values[j][c] = scale * offset_sign(g, j) * buf[bin_of(g, j)];
    }
    return out;
}

PauliSpinorField inverse_pauli_fourier(const PauliSpinorField& phi) {
    require(phi, Domain::momentum, "inverse_pauli_fourier");
    const GridSpec& g = phi.grid;
    const std::size_t N = g.size();
    PauliSpinorField out(g, Domain::position);
    const double scale = backward_scale(g);
    Buffer buf(N);
    for (int c = 0; c < 2; ++c) {
        for (std::size_t j = 0; j < N; ++j) buf[bin_of(g, j)] = offset_sign(g, j) * phi.values[j][c];
        dft(buf, g, FFTW_BACKWARD);
        for (std::size_t i = 0; i < N; ++i) out.values[i][c] = scale * buf[i];
    }
    return out;
}

RealMatrix4 momentum_kernel(const std::array<double, 3>& p, const MassParam& mass) {
    const double p2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    if (mass.m == 0.0 && p2 == 0.0) throw DegenerateInput("momentum_kernel: undefined at m = 0, p = 0");
    const double E = mass.energy(p2);
    const RealMatrix4 num = (E + mass.m) * RealMatrix4::identity() - gp::slash_g0(p);
    return (1.0 / std::sqrt((E + mass.m) * 2.0 * E)) * num;
}

BlockWeights block_weights(const std::array<double, 3>& p, const MassParam& mass) {
    BlockWeights w;
    const double p2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    if (p2 == 0.0) return w;
    const double pn = std::sqrt(p2);
    const double E = mass.energy(p2);
    w.a = std::sqrt((E + mass.m) / (2.0 * E));
    // (E - m)/2E written without cancellation for small |p|/m
    w.b = pn / std::sqrt(2.0 * E * (E + mass.m));
    w.b_hat = (1.0 / pn) * gp::slash_g0(p);
    return w;
}

MajoranaSpinorField s_block_map(const MajoranaSpinorField& f, const MassParam& mass) {
    require(f, Domain::momentum, "s_block_map");
    const GridSpec& g = f.grid;
    MajoranaSpinorField out(g, Domain::momentum);
    for (std::size_t j = 0; j < g.size(); ++j) {
        const BlockWeights w = block_weights(g.effective_momentum_vector(j), mass);
        out.values[j] = w.a * f.values[j] - w.b * (w.b_hat * f.values[g.partner_index(j)]);
    }
    return out;
}

MajoranaSpinorField inverse_s_block_map(const MajoranaSpinorField& f, const MassParam& mass) {
    require(f, Domain::momentum, "inverse_s_block_map");
    const GridSpec& g = f.grid;
    MajoranaSpinorField out(g, Domain::momentum);
    for (std::size_t j = 0; j < g.size(); ++j) {
        const BlockWeights w = block_weights(g.effective_momentum_vector(j), mass);
        out.values[j] = w.a * f.values[j] + w.b * (w.b_hat * f.values[g.partner_index(j)]);
    }
    return out;
}

MajoranaSpinorField majorana_fourier(const MajoranaSpinorField& psi, const MassParam& mass) {
    require(psi, Domain::position, "majorana_fourier");
    return s_block_map(theta_map(pauli_fourier(inverse_theta_map(psi))), mass);
}

MajoranaSpinorField inverse_majorana_fourier(const MajoranaSpinorField& phi, const MassParam& mass) {
    require(phi, Domain::momentum, "inverse_majorana_fourier");
    return theta_map(inverse_pauli_fourier(inverse_theta_map(inverse_s_block_map(phi, mass))));
}

RealMatrix4 phase_matrix(double theta) {
    static const RealMatrix4 ig0 = gp::ig(0);
    return std::cos(theta) * RealMatrix4::identity() - std::sin(theta) * ig0;
}

MajoranaSpinorField majorana_fourier_direct(const MajoranaSpinorField& psi, const MassParam& mass) {
    require(psi, Domain::position, "majorana_fourier_direct");
    const GridSpec& g = psi.grid;
    if (g.n > 8) throw DomainError("majorana_fourier_direct: n > 8 is refused (cost guard)");
    const double scale = forward_scale(g);
    MajoranaSpinorField out(g, Domain::momentum);
    for (std::size_t j = 0; j < g.size(); ++j) {
        const auto p = g.momentum_vector(j);
        const auto pe = g.effective_momentum_vector(j);
        const bool degenerate = mass.m == 0.0 && pe[0] == 0.0 && pe[1] == 0.0 && pe[2] == 0.0;
        const RealMatrix4 A = degenerate ? RealMatrix4::identity() : momentum_kernel(pe, mass);
        MajoranaSpinor acc;
        for (std::size_t i = 0; i < g.size(); ++i) {
            const auto x = g.position_vector(i);
            const double px = p[0] * x[0] + p[1] * x[1] + p[2] * x[2];
            acc += phase_matrix(px) * (A * psi.values[i]);
        }
        out.values[j] = scale * acc;
    }
    return out;
}

MajoranaSpinorField spectral_derivative(const MajoranaSpinorField& psi, int axis) {
    require(psi, Domain::position, "spectral_derivative");
    const GridSpec& g = psi.grid;
    if (axis < 0 || axis >= g.axes) throw DomainError("spectral_derivative: axis out of range");
    const int slot = 3 - g.axes + axis;
    const std::size_t N = g.size();
    MajoranaSpinorField out(g, Domain::position);
    Buffer buf(N);
    for (int c = 0; c < 4; ++c) {
        for (std::size_t i = 0; i < N; ++i) buf[i] = psi.values[i][c];
        dft(buf, g, FFTW_FORWARD);
        for (std::size_t j = 0; j < N; ++j) {
            const double p = g.effective_momentum(g.unflatten(j)[slot]);
            const std::size_t b = bin_of(g, j);
            buf[b] *= complex(0.0, p / static_cast<double>(N));
        }
        dft(buf, g, FFTW_BACKWARD);
        for (std::size_t i = 0; i < N; ++i) out.values[i][c] = buf[i].real();
    }
    return out;
}

MajoranaSpinorField apply_dirac_operator(const MajoranaSpinorField& psi, const MassParam& mass) {
    require(psi, Domain::position, "apply_dirac_operator");
    MajoranaSpinorField out(psi.grid, Domain::position);
    const RealMatrix4 mig0 = mass.m * gp::ig(0);
    for (std::size_t i = 0; i < psi.values.size(); ++i) out.values[i] = mig0 * psi.values[i];
    for (int axis = 0; axis < psi.grid.axes; ++axis) {
        const MajoranaSpinorField d = spectral_derivative(psi, axis);
        const RealMatrix4 gen = gp::g0gj(3 - psi.grid.axes + axis + 1);
        for (std::size_t i = 0; i < psi.values.size(); ++i) out.values[i] += gen * d.values[i];
    }
    return out;
}

MajoranaSpinorField energy_transform(const MajoranaSpinorField& psi) {
    require(psi, Domain::position, "energy_transform");
    if (psi.grid.axes != 1) throw GridMismatch("energy_transform: needs a one-axis time grid");
    const MajoranaSpinorField f = theta_map(pauli_fourier(inverse_theta_map(psi)));
    MajoranaSpinorField out(psi.grid, Domain::momentum);
    for (std::size_t j = 0; j < f.values.size(); ++j) out.values[j] = f.values[psi.grid.partner_index(j)];
    return out;
}

MajoranaSpinorField inverse_energy_transform(const MajoranaSpinorField& phi) {
    require(phi, Domain::momentum, "inverse_energy_transform");
    if (phi.grid.axes != 1) throw GridMismatch("inverse_energy_transform: needs a one-axis time grid");
    MajoranaSpinorField f(phi.grid, Domain::momentum);
    for (std::size_t j = 0; j < f.values.size(); ++j) f.values[j] = phi.values[phi.grid.partner_index(j)];
    return theta_map(inverse_pauli_fourier(inverse_theta_map(f)));
}

}  // namespace majorana
