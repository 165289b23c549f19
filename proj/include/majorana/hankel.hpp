#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

#include "majorana/fields.hpp"
#include "majorana/matrix4.hpp"
#include "majorana/special_functions.hpp"

namespace majorana {

// Quadrature on a ball of radius r_max: Gauss-Legendre in r and cos(theta),
// uniform trapezoid in phi (phi_k = -pi + 2 pi k / n_phi). Momentum magnitudes
// and their weights are carried explicitly.
struct SphericalQuadSpec {
    double r_max = 8.0;
    int n_r = 64;
    int n_theta = 32;
    int n_phi = 32;
    int l_max = 8;
    std::vector<double> p_nodes;
    std::vector<double> p_weights;

    void validate() const;
    std::size_t node_count() const { return static_cast<std::size_t>(n_r) * n_theta * n_phi; }
    std::size_t lm_count() const { return static_cast<std::size_t>(l_max) * (l_max + 1); }
    std::size_t mode_count() const { return p_nodes.size() * lm_count(); }
    double p_max() const { return std::numbers::pi * n_r / r_max; }

    friend bool operator==(const SphericalQuadSpec&, const SphericalQuadSpec&) = default;
};

// Momentum nodes: n_r-point Gauss-Legendre on [0, pi n_r / r_max].
SphericalQuadSpec make_spherical_quad(double r_max, int n_r, int n_theta, int n_phi, int l_max);

// n_r = 64, n_theta = 32, n_phi = 32, l_max = 8.
SphericalQuadSpec reference_spherical_quad(double r_max = 8.0);

// Node coordinates and weights, expanded once per spec.
struct SphericalNodes {
    Quadrature r;          // on [0, r_max]
    Quadrature cos_theta;  // on [-1, 1]
    std::vector<double> theta;
    std::vector<double> phi;
    double phi_weight = 0.0;

    explicit SphericalNodes(const SphericalQuadSpec& q);
    // r^2 w_r w_theta w_phi
    double volume_weight(int ir, int it) const { return r.nodes[ir] * r.nodes[ir] * r.weights[ir] * cos_theta.weights[it] * phi_weight; }
    std::array<double, 3> position(int ir, int it, int ip) const;
};

// Modes (l, mu) with 1 <= l <= l_max and -l <= mu <= l-1, packed as l^2 + mu.
inline bool mode_in_range(int l, int mu) { return l >= 1 && mu >= -l && mu <= l - 1; }
inline std::size_t lm_index(int l, int mu) { return static_cast<std::size_t>(l * l + mu); }
std::array<int, 2> lm_of_index(std::size_t idx);
// mu <-> -mu-1 stays inside [-l, l-1] and is an involution.
inline int paired_mu(int mu) { return -mu - 1; }
inline double parity_sign(int mu) { return (mu % 2 == 0) ? 1.0 : -1.0; }

// Field sampled at the quadrature nodes, stored [ir][itheta][iphi].
template <typename Spinor>
struct SphericalField {
    SphericalQuadSpec quad;
    std::vector<Spinor> values;

    SphericalField() = default;
    explicit SphericalField(const SphericalQuadSpec& q) : quad(q), values(q.node_count()) {}

    std::size_t index(int ir, int it, int ip) const {
        return (static_cast<std::size_t>(ir) * quad.n_theta + it) * quad.n_phi + ip;
    }
    double norm_squared() const {
        const SphericalNodes nodes(quad);
        double s = 0.0;
        for (int ir = 0; ir < quad.n_r; ++ir)
            for (int it = 0; it < quad.n_theta; ++it) {
                const double w = nodes.volume_weight(ir, it);
                for (int ip = 0; ip < quad.n_phi; ++ip) s += w * values[index(ir, it, ip)].norm_squared();
            }
        return s;
    }
};

// One spinor per (p, l, mu), stored [p][l^2 + mu].
template <typename Spinor>
struct SphericalModeField {
    SphericalQuadSpec quad;
    std::vector<Spinor> values;

    SphericalModeField() = default;
    explicit SphericalModeField(const SphericalQuadSpec& q) : quad(q), values(q.mode_count()) {}

    std::size_t index(std::size_t ip, int l, int mu) const { return ip * quad.lm_count() + lm_index(l, mu); }
    Spinor& at(std::size_t ip, int l, int mu) { return values[index(ip, l, mu)]; }
    const Spinor& at(std::size_t ip, int l, int mu) const { return values[index(ip, l, mu)]; }

    double norm_squared() const {
        double s = 0.0;
        for (std::size_t ip = 0; ip < quad.p_nodes.size(); ++ip)
            for (std::size_t k = 0; k < quad.lm_count(); ++k)
                s += quad.p_weights[ip] * values[ip * quad.lm_count() + k].norm_squared();
        return s;
    }
};

using PauliSphericalField = SphericalField<PauliSpinor>;
using MajoranaSphericalField = SphericalField<MajoranaSpinor>;
using PauliModeField = SphericalModeField<PauliSpinor>;
using MajoranaModeField = SphericalModeField<MajoranaSpinor>;

template <typename Spinor>
SphericalField<Spinor> sample_spherical(const SphericalQuadSpec& q,
                                        const std::function<Spinor(const std::array<double, 3>&)>& f) {
    const SphericalNodes nodes(q);
    SphericalField<Spinor> out(q);
    for (int ir = 0; ir < q.n_r; ++ir)
        for (int it = 0; it < q.n_theta; ++it)
            for (int ip = 0; ip < q.n_phi; ++ip) out.values[out.index(ir, it, ip)] = f(nodes.position(ir, it, ip));
    return out;
}

// omega_lmu = (c1 Y_{l,mu} + c2 Y_{l,mu+1} s1)(1+s3)/2 + (c3 Y_{l-1,mu} s1 + c4 Y_{l-1,mu+1})(1-s3)/2
Complex2 pauli_spherical_matrix(int l, int mu, double theta, double phi);

// lambda_lmu(r) = omega_lmu (j_l(r)(1+s3)/2 + j_{l-1}(r)(1-s3)/2)
Complex2 lambda_matrix(int l, int mu, double r, double theta, double phi);

// Lambda_lmu = Theta o lambda_lmu o Theta^-1, by conjugation (default) or by substitution.
RealMatrix4 Lambda_matrix(int l, int mu, double r, double theta, double phi);
RealMatrix4 Lambda_matrix_substituted(int l, int mu, double r, double theta, double phi);

// Mode-pair weights a = sqrt((E+m)/2E), b = sqrt((E-m)/2E).
struct PairWeights {
    double a = 1.0;
    double b = 0.0;
};
PairWeights pair_weights(double p, const MassParam& mass);

// The Majorana-Hankel kernel
//   Delta = a Lambda_{l,mu}(pr) + kDeltaSign b (-1)^mu Lambda_{l,-mu-1}(pr) ig3,
// with the analysis H_M{Psi}(p,l,mu) = sum_x w (2p/sqrt(2pi)) Delta^T Psi(x).
inline constexpr double kDeltaSign = -1.0;
RealMatrix4 delta_kernel(double p, int l, int mu, double r, double theta, double phi, const MassParam& mass);

PauliModeField pauli_hankel(const PauliSphericalField& psi);
PauliSphericalField inverse_pauli_hankel(const PauliModeField& modes);

// The S' map mixing (p,l,mu) with (p,l,-mu-1); orthogonal for every p.
MajoranaModeField s_prime_map(const MajoranaModeField& g, const MassParam& mass);
MajoranaModeField inverse_s_prime_map(const MajoranaModeField& phi, const MassParam& mass);

// H_M = S' o Theta o H_P o Theta^-1. With azimuthal_derivative the synthesis
// returns d/dphi of the field instead of the field.
MajoranaModeField majorana_hankel(const MajoranaSphericalField& psi, const MassParam& mass);
MajoranaSphericalField inverse_majorana_hankel(const MajoranaModeField& modes, const MassParam& mass,
                                               bool azimuthal_derivative = false);

// Literal Delta-kernel quadrature. O(nodes x modes); only meant for small specs.
MajoranaModeField majorana_hankel_direct(const MajoranaSphericalField& psi, const MassParam& mass);

// Pointwise synthesis of a mode field at an arbitrary point, skipping zero modes.
MajoranaSpinor synthesize_majorana(const MajoranaModeField& modes, const MassParam& mass,
                                   const std::array<double, 3>& x);

// A mode field whose synthesis is smooth and Gaussian-localized: on the Pauli
// side each listed mode carries p e^{-p^2/2s^2} (c0 p^l, c1 p^{l-1}), the radial
// parity that makes the 3D momentum profile smooth at p = 0. Then Theta and S'.
struct ModeAmplitude {
    int l = 1;
    int mu = 0;
    PauliSpinor c;
};
MajoranaModeField smooth_mode_field(const SphericalQuadSpec& q, const MassParam& mass,
                                    const std::vector<ModeAmplitude>& amps, double width = 1.0);

struct AngularMomentumReport {
    double jz_residual = 0.0;     // ||H_M J_z H_M^-1 Phi - ig0 (mu+1/2) Phi|| / ||Phi||
    double dirac_residual = 0.0;  // ||H_M iH H_M^-1 Phi - ig0 E_p Phi|| / ||Phi||
    double roundtrip = 0.0;       // ||H_M H_M^-1 Phi - Phi|| / ||Phi||
};

// J_z = (1/2) i g0 g3 g5 + d/dphi is applied on the grid through the synthesis
// tables. The Dirac operator g0 g^j d_j + m ig0 uses central differences of the
// pointwise synthesis with step h.
AngularMomentumReport angular_momentum_check(const MajoranaModeField& modes, const MassParam& mass,
                                             bool with_dirac = true, double h = 1e-4);

}  // namespace majorana
