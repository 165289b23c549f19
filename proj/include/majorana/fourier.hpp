#pragma once

#include <array>

#include "majorana/fields.hpp"
#include "majorana/matrix4.hpp"

namespace majorana {

// Unitary Pauli-Fourier transform, F(p) = dx^d (2 pi)^(-d/2) sum_x e^{-i p.x} psi(x),
// so that cell-volume weighted norms agree exactly on both sides.
PauliSpinorField pauli_fourier(const PauliSpinorField& psi);
PauliSpinorField inverse_pauli_fourier(const PauliSpinorField& phi);

// A(p) = (E + m - B) / (sqrt(E + m) sqrt(2E)), B = p^j gamma^j gamma^0.
// Throws DegenerateInput at m = 0, p = 0.
RealMatrix4 momentum_kernel(const std::array<double, 3>& p, const MassParam& mass);

// Weights of A(p) = a - b B/|p|: a = sqrt((E+m)/2E), b = sqrt((E-m)/2E).
// At m = 0, p = 0 this returns (a, b) = (1, 0), the m -> 0+ limit.
struct BlockWeights {
    double a = 1.0;
    double b = 0.0;
    RealMatrix4 b_hat;  // B/|p|, zero when |p| = 0
};
BlockWeights block_weights(const std::array<double, 3>& p, const MassParam& mass);

// Orthogonal mixing of the values at +p and -p:
//   out(p) = a F(p) - b B^(p) F(-p)
MajoranaSpinorField s_block_map(const MajoranaSpinorField& f, const MassParam& mass);
MajoranaSpinorField inverse_s_block_map(const MajoranaSpinorField& f, const MassParam& mass);

// F_M = S o Theta o F_P o Theta^-1
MajoranaSpinorField majorana_fourier(const MajoranaSpinorField& psi, const MassParam& mass);
MajoranaSpinorField inverse_majorana_fourier(const MajoranaSpinorField& phi, const MassParam& mass);

// Literal kernel sum sum_x e^{-ig0 p.x} A(p) psi(x) with the unitary prefactor.
// Refuses n > 8.
MajoranaSpinorField majorana_fourier_direct(const MajoranaSpinorField& psi, const MassParam& mass);

// Spectral d/dx_axis (axis 0..2) of a position-space field, component-wise.
MajoranaSpinorField spectral_derivative(const MajoranaSpinorField& psi, int axis);

// iH psi = g0 g^j d_j psi + m ig0 psi
MajoranaSpinorField apply_dirac_operator(const MajoranaSpinorField& psi, const MassParam& mass);

// Time-axis transform with kernel e^{+ig0 p0 t}/sqrt(2 pi) on a 1-axis grid.
MajoranaSpinorField energy_transform(const MajoranaSpinorField& psi);
MajoranaSpinorField inverse_energy_transform(const MajoranaSpinorField& phi);

// cos(theta) I - sin(theta) ig0
RealMatrix4 phase_matrix(double theta);

}  // namespace majorana
