#include "majorana/theta.hpp"

#include <cmath>

#include "majorana/clifford.hpp"

namespace majorana {

namespace {

ThetaBasis build_theta_basis() {
    const RealMatrix4 g35 = gp::gj_g5(3);
    const RealMatrix4 proj = 0.5 * (RealMatrix4::identity() + g35);
    ThetaBasis tb;
    for (int c = 0; c < 4; ++c) {
        MajoranaSpinor col{{proj(0, c), proj(1, c), proj(2, c), proj(3, c)}};
        const double n = std::sqrt(col.norm_squared());
        if (n < 1e-12) continue;
        int first = 0;
        while (col[first] == 0.0) ++first;
        tb.M_plus = (col[first] > 0 ? 1.0 : -1.0) / n * col;
        break;
    }
    tb.M_minus = gp::gj_g5(1) * tb.M_plus;
    tb.P_plus = PauliSpinor{{complex(1), complex(0)}};
    tb.P_minus = PauliSpinor{{complex(0), complex(1)}};
    return tb;
}

RealMatrix4 build_theta_matrix() {
    const ThetaBasis& tb = theta_basis();
    const RealMatrix4 ig0 = gp::ig(0);
    const MajoranaSpinor cols[4] = {tb.M_plus, ig0 * tb.M_plus, tb.M_minus, ig0 * tb.M_minus};
    RealMatrix4 t;
    for (int c = 0; c < 4; ++c)
        for (int r = 0; r < 4; ++r) t(r, c) = cols[c][r];
    return t;
}

}  // namespace

const ThetaBasis& theta_basis() {
    static const ThetaBasis tb = build_theta_basis();
    return tb;
}

const RealMatrix4& theta_matrix() {
    static const RealMatrix4 t = build_theta_matrix();
    return t;
}

MajoranaSpinor theta(const PauliSpinor& psi) {
    const MajoranaSpinor coords{{psi[0].real(), psi[0].imag(), psi[1].real(), psi[1].imag()}};
    return theta_matrix() * coords;
}

PauliSpinor inverse_theta(const MajoranaSpinor& u) {
    const MajoranaSpinor c = theta_matrix().transpose() * u;
    return PauliSpinor{{complex(c[0], c[1]), complex(c[2], c[3])}};
}

RealMatrix4 complex_to_real(const Complex2& m) {
    RealMatrix4 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const complex z = m(i, j);
            r(2 * i, 2 * j) = z.real();
            r(2 * i, 2 * j + 1) = -z.imag();
            r(2 * i + 1, 2 * j) = z.imag();
            r(2 * i + 1, 2 * j + 1) = z.real();
        }
    return r;
}

RealMatrix4 conjugate_by_theta(const Complex2& m) {
    const RealMatrix4& t = theta_matrix();
    return t * complex_to_real(m) * t.transpose();
}

RealMatrix4 substitute_pauli_algebra(const Complex2& m) {
    // m = c0 + c3 s3 + c1 s1 + c13 s1 s3, with s1 s3 = [[0,-1],[1,0]].
    const complex c0 = 0.5 * (m(0, 0) + m(1, 1));
    const complex c3 = 0.5 * (m(0, 0) - m(1, 1));
    const complex c1 = 0.5 * (m(0, 1) + m(1, 0));
    const complex c13 = 0.5 * (m(1, 0) - m(0, 1));

    const RealMatrix4 one = RealMatrix4::identity();
    const RealMatrix4 ig0 = gp::ig(0);
    const RealMatrix4 s1 = gp::gj_g5(1);
    const RealMatrix4 s3 = gp::gj_g5(3);
    auto scalar = [&](complex z) { return z.real() * one + z.imag() * ig0; };
    return scalar(c0) + scalar(c3) * s3 + scalar(c1) * s1 + scalar(c13) * (s1 * s3);
}

}  // namespace majorana
