#pragma once

#include "majorana/matrix4.hpp"

namespace majorana {

struct ThetaBasis {
    MajoranaSpinor M_plus, M_minus;
    PauliSpinor P_plus, P_minus;
};

// M_plus: first nonzero column of (1 + g3g5)/2, normalized. M_minus = g1g5 M_plus,
// which makes Theta carry sigma^1 to g1g5 (and sigma^3 to g3g5, i to ig0).
// P_plus, P_minus: standard basis of C^2.
const ThetaBasis& theta_basis();

// Orthogonal matrix T with columns (M+, ig0 M+, M-, ig0 M-); Theta acts on the
// real coordinates (Re a, Im a, Re b, Im b) of a Pauli spinor (a, b).
const RealMatrix4& theta_matrix();

MajoranaSpinor theta(const PauliSpinor& psi);
PauliSpinor inverse_theta(const MajoranaSpinor& u);

// Real 4x4 form of a complex 2x2 matrix acting on (Re a, Im a, Re b, Im b).
RealMatrix4 complex_to_real(const Complex2& m);

// Theta o m o Theta^-1 by conjugating the linear action.
RealMatrix4 conjugate_by_theta(const Complex2& m);

// Same map by literal substitution: expand m in {1, s1, s3, s1 s3} with complex
// coefficients, then replace (i, s1, s3) by (ig0, g1g5, g3g5).
RealMatrix4 substitute_pauli_algebra(const Complex2& m);

}  // namespace majorana
