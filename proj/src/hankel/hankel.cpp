#include "majorana/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "majorana/clifford.hpp"
#include "majorana/errors.hpp"
#include "majorana/theta.hpp"

namespace majorana {

namespace {

const double kRadialNorm = 2.0 / std::sqrt(2.0 * std::numbers::pi);

void require_mode(int l, int mu) {
    if (!mode_in_range(l, mu)) throw ModeRangeError("mode (l, mu) outside 1 <= l, -l <= mu <= l-1");
}

// Coefficients of omega_lmu in front of Y_{l,mu}, Y_{l,mu+1}, Y_{l-1,mu}, Y_{l-1,mu+1}.
std::array<double, 4> omega_coefficients(int l, int mu) {
    const double l2p = 2.0 * l + 1.0, l2m = 2.0 * l - 1.0;
    return {-std::sqrt((l - mu) / l2p), std::sqrt((l + mu + 1) / l2p), std::sqrt(std::max(0, l + mu) / l2m),
            std::sqrt(std::max(0, l - mu - 1) / l2m)};
}

// Y_{l,mu} with out-of-range indices read as zero.
complex y_or_zero(int l, int mu, double theta, double phi) {
    if (l < 0 || std::abs(mu) > l) return complex(0.0);
    return spherical_harmonic(l, mu, theta, phi);
}

// Normalized Legendre part N_lmu P_l^mu(cos theta) for 0 <= l <= l_max, |mu| <= l.
struct LegendreTable {
    int l_max;
    std::vector<double> v;  // [l][mu + l_max]
    LegendreTable(int lm, double theta) : l_max(lm), v(static_cast<std::size_t>((lm + 1) * (2 * lm + 1)), 0.0) {
        for (int l = 0; l <= l_max; ++l)
            for (int mu = -l; mu <= l; ++mu) v[slot(l, mu)] = spherical_harmonic(l, mu, theta, 0.0).real();
    }
    std::size_t slot(int l, int mu) const { return static_cast<std::size_t>(l * (2 * l_max + 1) + mu + l_max); }
    double operator()(int l, int mu) const {
        if (l < 0 || std::abs(mu) > l) return 0.0;
        return v[slot(l, mu)];
    }
};

Complex2 omega_from_table(const LegendreTable& leg, int l, int mu, double phi) {
    const auto c = omega_coefficients(l, mu);
    const complex e0 = std::polar(1.0, mu * phi), e1 = std::polar(1.0, (mu + 1) * phi);
    Complex2 w;
    w(0, 0) = c[0] * leg(l, mu) * e0;
    w(1, 0) = c[1] * leg(l, mu + 1) * e1;
    w(0, 1) = c[2] * leg(l - 1, mu) * e0;
    w(1, 1) = c[3] * leg(l - 1, mu + 1) * e1;
    return w;
}

// diag(j_l, j_{l-1}) applied from the right to omega or from the left to a spinor.
PauliSpinor radial_diag(double jl, double jlm1, const PauliSpinor& v) { return PauliSpinor{{jl * v[0], jlm1 * v[1]}}; }

// omega_lmu at every (theta, phi) node, [lm][itheta][iphi].
struct AngularTable {
    std::size_t n_lm, n_theta, n_phi;
    std::vector<Complex2> w;
    AngularTable(const SphericalQuadSpec& q, const SphericalNodes& nodes)
        : n_lm(q.lm_count()), n_theta(static_cast<std::size_t>(q.n_theta)), n_phi(static_cast<std::size_t>(q.n_phi)),
          w(n_lm * n_theta * n_phi) {
        for (std::size_t it = 0; it < n_theta; ++it) {
            const LegendreTable leg(q.l_max, nodes.theta[it]);
            for (std::size_t k = 0; k < n_lm; ++k) {
                const auto [l, mu] = lm_of_index(k);
                for (std::size_t ip = 0; ip < n_phi; ++ip) w[at(k, it, ip)] = omega_from_table(leg, l, mu, nodes.phi[ip]);
            }
        }
    }
    std::size_t at(std::size_t k, std::size_t it, std::size_t ip) const { return (k * n_theta + it) * n_phi + ip; }
};

// j_l(p r) for l = 0..l_max, [ip][ir][l].
struct BesselTable {
    std::size_t n_p, n_r, n_l;
    std::vector<double> j;
    BesselTable(const SphericalQuadSpec& q, const SphericalNodes& nodes)
        : n_p(q.p_nodes.size()), n_r(static_cast<std::size_t>(q.n_r)), n_l(static_cast<std::size_t>(q.l_max) + 1),
          j(n_p * n_r * n_l) {
        for (std::size_t ip = 0; ip < n_p; ++ip)
            for (std::size_t ir = 0; ir < n_r; ++ir) {
                const auto seq = spherical_bessel_sequence(q.l_max, q.p_nodes[ip] * nodes.r.nodes[ir]);
                std::copy(seq.begin(), seq.end(), j.begin() + static_cast<std::ptrdiff_t>((ip * n_r + ir) * n_l));
            }
    }
    double operator()(std::size_t ip, std::size_t ir, int l) const { return j[(ip * n_r + ir) * n_l + static_cast<std::size_t>(l)]; }
};

template <typename Spinor>
void require_field(const SphericalField<Spinor>& f, const char* what) {
    f.quad.validate();
    if (f.values.size() != f.quad.node_count()) throw GridMismatch(std::string(what) + ": value count does not match nodes");
}

template <typename Spinor>
void require_modes(const SphericalModeField<Spinor>& f, const char* what) {
    f.quad.validate();
    if (f.values.size() != f.quad.mode_count()) throw GridMismatch(std::string(what) + ": value count does not match modes");
}

const RealMatrix4& ig3() {
    static const RealMatrix4 m = gp::ig(3);
    return m;
}

}  // namespace

void SphericalQuadSpec::validate() const {
    if (!(r_max > 0.0)) throw DomainError("SphericalQuadSpec: r_max must be positive");
    if (n_r < 1 || n_theta < 1 || n_phi < 1) throw DomainError("SphericalQuadSpec: node counts must be positive");
    if (l_max < 1 || l_max > 32) throw DomainError("SphericalQuadSpec: l_max must lie in [1, 32]");
    if (p_nodes.size() != p_weights.size()) throw DomainError("SphericalQuadSpec: p nodes and weights differ in length");
    for (double p : p_nodes)
        if (!(p > 0.0)) throw DomainError("SphericalQuadSpec: momentum nodes must be positive");
}

SphericalQuadSpec make_spherical_quad(double r_max, int n_r, int n_theta, int n_phi, int l_max) {
    SphericalQuadSpec q;
    q.r_max = r_max;
    q.n_r = n_r;
    q.n_theta = n_theta;
    q.n_phi = n_phi;
    q.l_max = l_max;
    if (!(r_max > 0.0) || n_r < 1) throw DomainError("make_spherical_quad: need r_max > 0 and n_r >= 1");
    Quadrature p = gauss_legendre(n_r, 0.0, q.p_max());
    q.p_nodes = std::move(p.nodes);
    q.p_weights = std::move(p.weights);
    q.validate();
    return q;
}

SphericalQuadSpec reference_spherical_quad(double r_max) { return make_spherical_quad(r_max, 64, 32, 32, 8); }

SphericalNodes::SphericalNodes(const SphericalQuadSpec& q)
    : r(gauss_legendre(q.n_r, 0.0, q.r_max)), cos_theta(gauss_legendre(q.n_theta)) {
    theta.resize(cos_theta.nodes.size());
    for (std::size_t i = 0; i < theta.size(); ++i) theta[i] = std::acos(cos_theta.nodes[i]);
    phi.resize(static_cast<std::size_t>(q.n_phi));
    for (int k = 0; k < q.n_phi; ++k) phi[static_cast<std::size_t>(k)] = -std::numbers::pi + 2.0 * std::numbers::pi * k / q.n_phi;
    phi_weight = 2.0 * std::numbers::pi / q.n_phi;
}

std::array<double, 3> SphericalNodes::position(int ir, int it, int ip) const {
    const double rr = r.nodes[ir], ct = cos_theta.nodes[it];
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    return {rr * st * std::cos(phi[ip]), rr * st * std::sin(phi[ip]), rr * ct};
}

std::array<int, 2> lm_of_index(std::size_t idx) {
    // block l covers l^2 - l .. l^2 + l - 1
    int l = 1;
    while (static_cast<std::size_t>(l * l + l - 1) < idx) ++l;
    return {l, static_cast<int>(idx) - l * l};
}

Complex2 pauli_spherical_matrix(int l, int mu, double theta, double phi) {
    require_mode(l, mu);
    const auto c = omega_coefficients(l, mu);
    Complex2 w;
    w(0, 0) = c[0] * y_or_zero(l, mu, theta, phi);
    w(1, 0) = c[1] * y_or_zero(l, mu + 1, theta, phi);
    w(0, 1) = c[2] * y_or_zero(l - 1, mu, theta, phi);
    w(1, 1) = c[3] * y_or_zero(l - 1, mu + 1, theta, phi);
    return w;
}

Complex2 lambda_matrix(int l, int mu, double r, double theta, double phi) {
    Complex2 w = pauli_spherical_matrix(l, mu, theta, phi);
    const auto j = spherical_bessel_sequence(l, r);
    w(0, 0) *= j[l];
    w(1, 0) *= j[l];
    w(0, 1) *= j[l - 1];
    w(1, 1) *= j[l - 1];
    return w;
}

RealMatrix4 Lambda_matrix(int l, int mu, double r, double theta, double phi) {
    return conjugate_by_theta(lambda_matrix(l, mu, r, theta, phi));
}

RealMatrix4 Lambda_matrix_substituted(int l, int mu, double r, double theta, double phi) {
    return substitute_pauli_algebra(lambda_matrix(l, mu, r, theta, phi));
}

PairWeights pair_weights(double p, const MassParam& mass) {
    PairWeights w;
    if (p == 0.0) return w;
    const double E = mass.energy(p * p);
    w.a = std::sqrt((E + mass.m) / (2.0 * E));
    w.b = p / std::sqrt(2.0 * E * (E + mass.m));
    return w;
}

RealMatrix4 delta_kernel(double p, int l, int mu, double r, double theta, double phi, const MassParam& mass) {
    require_mode(l, mu);
    const PairWeights w = pair_weights(p, mass);
    return w.a * Lambda_matrix(l, mu, p * r, theta, phi) +
           (kDeltaSign * w.b * parity_sign(mu)) * (Lambda_matrix(l, paired_mu(mu), p * r, theta, phi) * ig3());
}

PauliModeField pauli_hankel(const PauliSphericalField& psi) {
    require_field(psi, "pauli_hankel");
    const SphericalQuadSpec& q = psi.quad;
    const SphericalNodes nodes(q);
    const AngularTable ang(q, nodes);
    const BesselTable bes(q, nodes);
    const std::size_t n_lm = q.lm_count();

    // Angular projection: C(r, lm) = sum_{theta,phi} w omega^dagger psi.
    std::vector<PauliSpinor> C(static_cast<std::size_t>(q.n_r) * n_lm);
    for (int ir = 0; ir < q.n_r; ++ir)
        for (std::size_t k = 0; k < n_lm; ++k) {
            PauliSpinor acc;
            for (int it = 0; it < q.n_theta; ++it) {
                PauliSpinor row;
                for (int ip = 0; ip < q.n_phi; ++ip) {
                    const Complex2& w = ang.w[ang.at(k, it, ip)];
                    const PauliSpinor& v = psi.values[psi.index(ir, it, ip)];
                    row[0] += std::conj(w(0, 0)) * v[0] + std::conj(w(1, 0)) * v[1];
                    row[1] += std::conj(w(0, 1)) * v[0] + std::conj(w(1, 1)) * v[1];
                }
                acc += (nodes.cos_theta.weights[it] * nodes.phi_weight) * row;
            }
            C[ir * n_lm + k] = acc;
        }

    // Radial stage: H(p, lm) = sum_r w_r r^2 (2p/sqrt(2pi)) diag(j_l, j_{l-1}) C(r, lm).
    PauliModeField out(q);
    for (std::size_t ip = 0; ip < q.p_nodes.size(); ++ip) {
        const double pref = kRadialNorm * q.p_nodes[ip];
        for (std::size_t k = 0; k < n_lm; ++k) {
            const int l = lm_of_index(k)[0];
            PauliSpinor acc;
            for (int ir = 0; ir < q.n_r; ++ir) {
                const double wr = nodes.r.weights[ir] * nodes.r.nodes[ir] * nodes.r.nodes[ir];
                acc += wr * radial_diag(bes(ip, ir, l), bes(ip, ir, l - 1), C[ir * n_lm + k]);
            }
            out.values[ip * n_lm + k] = pref * acc;
        }
    }
    return out;
}

namespace {

PauliSphericalField pauli_synthesis(const PauliModeField& modes, bool azimuthal_derivative) {
    require_modes(modes, "inverse_pauli_hankel");
    const SphericalQuadSpec& q = modes.quad;
    const SphericalNodes nodes(q);
    const AngularTable ang(q, nodes);
    const BesselTable bes(q, nodes);
    const std::size_t n_lm = q.lm_count();

    // Radial stage: D(r, lm) = sum_p w_p (2p/sqrt(2pi)) diag(j_l, j_{l-1}) H(p, lm).
    std::vector<PauliSpinor> D(static_cast<std::size_t>(q.n_r) * n_lm);
    for (int ir = 0; ir < q.n_r; ++ir)
        for (std::size_t k = 0; k < n_lm; ++k) {
            const int l = lm_of_index(k)[0];
            PauliSpinor acc;
            for (std::size_t ip = 0; ip < q.p_nodes.size(); ++ip) {
                const double wp = q.p_weights[ip] * kRadialNorm * q.p_nodes[ip];
                acc += wp * radial_diag(bes(ip, ir, l), bes(ip, ir, l - 1), modes.values[ip * n_lm + k]);
            }
            D[ir * n_lm + k] = acc;
        }

    // Angular stage: psi = sum_lm omega D, or d/dphi of it: i diag(mu, mu+1) omega D.
    PauliSphericalField out(q);
    for (int ir = 0; ir < q.n_r; ++ir)
        for (int it = 0; it < q.n_theta; ++it)
            for (int ip = 0; ip < q.n_phi; ++ip) {
                PauliSpinor acc;
                for (std::size_t k = 0; k < n_lm; ++k) {
                    const PauliSpinor& d = D[ir * n_lm + k];
                    if (d[0] == 0.0 && d[1] == 0.0) continue;
                    PauliSpinor v = ang.w[ang.at(k, it, ip)] * d;
                    if (azimuthal_derivative) {
                        const int mu = lm_of_index(k)[1];
                        v = PauliSpinor{{complex(0.0, mu) * v[0], complex(0.0, mu + 1) * v[1]}};
                    }
                    acc += v;
                }
                out.values[out.index(ir, it, ip)] = acc;
            }
    return out;
}

MajoranaModeField theta_modes(const PauliModeField& f) {
    MajoranaModeField out(f.quad);
    for (std::size_t i = 0; i < f.values.size(); ++i) out.values[i] = theta(f.values[i]);
    return out;
}

PauliModeField inverse_theta_modes(const MajoranaModeField& f) {
    PauliModeField out(f.quad);
    for (std::size_t i = 0; i < f.values.size(); ++i) out.values[i] = inverse_theta(f.values[i]);
    return out;
}

// Applies [[a, s c],[-s c, a]] with c = kDeltaSign b (-1)^mu ig3 on each (mu, -mu-1) pair;
// s = +1 forward, -1 for the inverse (the transpose).
MajoranaModeField pair_mix(const MajoranaModeField& f, const MassParam& mass, double s) {
    const SphericalQuadSpec& q = f.quad;
    MajoranaModeField out(q);
    for (std::size_t ip = 0; ip < q.p_nodes.size(); ++ip) {
        const PairWeights w = pair_weights(q.p_nodes[ip], mass);
        for (int l = 1; l <= q.l_max; ++l)
            for (int mu = -l; mu <= l - 1; ++mu) {
                const double c = s * kDeltaSign * w.b * parity_sign(mu);
                out.at(ip, l, mu) = w.a * f.at(ip, l, mu) + c * (ig3() * f.at(ip, l, paired_mu(mu)));
            }
    }
    return out;
}

}  // namespace

PauliSphericalField inverse_pauli_hankel(const PauliModeField& modes) { return pauli_synthesis(modes, false); }

MajoranaModeField s_prime_map(const MajoranaModeField& g, const MassParam& mass) {
    require_modes(g, "s_prime_map");
    return pair_mix(g, mass, 1.0);
}

MajoranaModeField inverse_s_prime_map(const MajoranaModeField& phi, const MassParam& mass) {
    require_modes(phi, "inverse_s_prime_map");
    return pair_mix(phi, mass, -1.0);
}

MajoranaModeField majorana_hankel(const MajoranaSphericalField& psi, const MassParam& mass) {
    require_field(psi, "majorana_hankel");
    PauliSphericalField p(psi.quad);
    for (std::size_t i = 0; i < psi.values.size(); ++i) p.values[i] = inverse_theta(psi.values[i]);
    return s_prime_map(theta_modes(pauli_hankel(p)), mass);
}

MajoranaSphericalField inverse_majorana_hankel(const MajoranaModeField& modes, const MassParam& mass,
                                               bool azimuthal_derivative) {
    require_modes(modes, "inverse_majorana_hankel");
    const PauliSphericalField p = pauli_synthesis(inverse_theta_modes(inverse_s_prime_map(modes, mass)), azimuthal_derivative);
    MajoranaSphericalField out(modes.quad);
    for (std::size_t i = 0; i < p.values.size(); ++i) out.values[i] = theta(p.values[i]);
    return out;
}

MajoranaModeField majorana_hankel_direct(const MajoranaSphericalField& psi, const MassParam& mass) {
    require_field(psi, "majorana_hankel_direct");
    const SphericalQuadSpec& q = psi.quad;
    if (q.node_count() * q.mode_count() > 50'000'000) throw DomainError("majorana_hankel_direct: spec too large (cost guard)");
    const SphericalNodes nodes(q);
    MajoranaModeField out(q);
    for (std::size_t ip = 0; ip < q.p_nodes.size(); ++ip) {
        const double p = q.p_nodes[ip];
        for (int l = 1; l <= q.l_max; ++l)
            for (int mu = -l; mu <= l - 1; ++mu) {
                MajoranaSpinor acc;
                for (int ir = 0; ir < q.n_r; ++ir)
                    for (int it = 0; it < q.n_theta; ++it)
                        for (int iph = 0; iph < q.n_phi; ++iph) {
                            const RealMatrix4 d =
                                delta_kernel(p, l, mu, nodes.r.nodes[ir], nodes.theta[it], nodes.phi[iph], mass);
                            acc += nodes.volume_weight(ir, it) * (d.transpose() * psi.values[psi.index(ir, it, iph)]);
                        }
                out.at(ip, l, mu) = (kRadialNorm * p) * acc;
            }
    }
    return out;
}

namespace {

// Pointwise synthesis with the mode-level work (S'^-1, Theta^-1, zero-mode scan) done once.
class PointSynthesizer {
public:
    PointSynthesizer(const MajoranaModeField& modes, const MassParam& mass)
        : q_(modes.quad), g_(inverse_theta_modes(inverse_s_prime_map(modes, mass))) {
        const std::size_t n_lm = q_.lm_count();
        for (std::size_t k = 0; k < n_lm; ++k)
            for (std::size_t ip = 0; ip < q_.p_nodes.size(); ++ip) {
                const PauliSpinor& v = g_.values[ip * n_lm + k];
                if (v[0] != 0.0 || v[1] != 0.0) {
                    active_.push_back(k);
                    l_top_ = std::max(l_top_, lm_of_index(k)[0]);
                    break;
                }
            }
    }

    MajoranaSpinor operator()(const std::array<double, 3>& x) const {
        if (active_.empty()) return MajoranaSpinor{};
        const std::size_t n_lm = q_.lm_count();
        const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
        const double theta_x = r > 0.0 ? std::acos(std::clamp(x[2] / r, -1.0, 1.0)) : 0.0;
        const double phi_x = std::atan2(x[1], x[0]);
        const LegendreTable leg(l_top_, theta_x);

        std::vector<PauliSpinor> d(active_.size());
        for (std::size_t ip = 0; ip < q_.p_nodes.size(); ++ip) {
            const auto j = spherical_bessel_sequence(l_top_, q_.p_nodes[ip] * r);
            const double wp = q_.p_weights[ip] * kRadialNorm * q_.p_nodes[ip];
            for (std::size_t a = 0; a < active_.size(); ++a) {
                const int l = lm_of_index(active_[a])[0];
                d[a] += wp * radial_diag(j[l], j[l - 1], g_.values[ip * n_lm + active_[a]]);
            }
        }
        PauliSpinor acc;
        for (std::size_t a = 0; a < active_.size(); ++a) {
            const auto [l, mu] = lm_of_index(active_[a]);
            acc += omega_from_table(leg, l, mu, phi_x) * d[a];
        }
        return theta(acc);
    }

private:
    SphericalQuadSpec q_;
    PauliModeField g_;
    std::vector<std::size_t> active_;
    int l_top_ = 1;
};

}  // namespace

MajoranaSpinor synthesize_majorana(const MajoranaModeField& modes, const MassParam& mass,
                                   const std::array<double, 3>& x) {
    require_modes(modes, "synthesize_majorana");
    return PointSynthesizer(modes, mass)(x);
}

MajoranaModeField smooth_mode_field(const SphericalQuadSpec& q, const MassParam& mass,
                                    const std::vector<ModeAmplitude>& amps, double width) {
    q.validate();
    PauliModeField h(q);
    for (const auto& m : amps) {
        require_mode(m.l, m.mu);
        if (m.l > q.l_max) throw ModeRangeError("smooth_mode_field: l exceeds l_max");
        for (std::size_t ip = 0; ip < q.p_nodes.size(); ++ip) {
            const double p = q.p_nodes[ip];
            const double g = p * std::exp(-0.5 * p * p / (width * width)) * std::pow(p, m.l - 1);
            h.at(ip, m.l, m.mu) += PauliSpinor{{g * p * m.c[0], g * m.c[1]}};
        }
    }
    return s_prime_map(theta_modes(h), mass);
}

namespace {

double relative_mode_error(const MajoranaModeField& a, const MajoranaModeField& b, double ref) {
    MajoranaModeField d(a.quad);
    for (std::size_t i = 0; i < a.values.size(); ++i) d.values[i] = a.values[i] - b.values[i];
    return std::sqrt(d.norm_squared()) / ref;
}

}  // namespace

AngularMomentumReport angular_momentum_check(const MajoranaModeField& modes, const MassParam& mass, bool with_dirac,
                                             double h) {
    require_modes(modes, "angular_momentum_check");
    AngularMomentumReport rep;
    const double ref = std::sqrt(modes.norm_squared());
    if (ref == 0.0) return rep;
    const SphericalQuadSpec& q = modes.quad;
    const std::size_t n_lm = q.lm_count();
    const RealMatrix4 ig0 = gp::ig(0);

    const MajoranaSphericalField psi = inverse_majorana_hankel(modes, mass);
    rep.roundtrip = relative_mode_error(majorana_hankel(psi, mass), modes, ref);

    // J_z = (1/2) i g0 g3 g5 + d/dphi, with i g0 g3 g5 = -(ig0)(ig3)(ig5).
    const RealMatrix4 spin = -0.5 * (gp::ig(0) * gp::ig(3) * gp::ig(5));
    MajoranaSphericalField jpsi = inverse_majorana_hankel(modes, mass, true);
    for (std::size_t i = 0; i < jpsi.values.size(); ++i) jpsi.values[i] += spin * psi.values[i];
    MajoranaModeField expect(q);
    for (std::size_t ip = 0; ip < q.p_nodes.size(); ++ip)
        for (std::size_t k = 0; k < n_lm; ++k) {
            const int mu = lm_of_index(k)[1];
            expect.values[ip * n_lm + k] = (mu + 0.5) * (ig0 * modes.values[ip * n_lm + k]);
        }
    rep.jz_residual = relative_mode_error(majorana_hankel(jpsi, mass), expect, ref);

    if (!with_dirac) return rep;
    // iH = g0 g^j d_j + m ig0 by central differences of the pointwise synthesis.
    const SphericalNodes nodes(q);
    const RealMatrix4 mig0 = mass.m * ig0;
    const PointSynthesizer synth(modes, mass);
    MajoranaSphericalField hpsi(q);
    for (int ir = 0; ir < q.n_r; ++ir)
        for (int it = 0; it < q.n_theta; ++it)
            for (int ip = 0; ip < q.n_phi; ++ip) {
                const std::size_t idx = hpsi.index(ir, it, ip);
                const auto x = nodes.position(ir, it, ip);
                MajoranaSpinor acc = mig0 * psi.values[idx];
                for (int j = 0; j < 3; ++j) {
                    auto xp = x, xm = x;
                    xp[j] += h;
                    xm[j] -= h;
                    const MajoranaSpinor dj = (0.5 / h) * (synth(xp) - synth(xm));
                    acc += gp::g0gj(j + 1) * dj;
                }
                hpsi.values[idx] = acc;
            }
    for (std::size_t ip = 0; ip < q.p_nodes.size(); ++ip) {
        const double E = mass.energy(q.p_nodes[ip] * q.p_nodes[ip]);
        for (std::size_t k = 0; k < n_lm; ++k) expect.values[ip * n_lm + k] = E * (ig0 * modes.values[ip * n_lm + k]);
    }
    rep.dirac_residual = relative_mode_error(majorana_hankel(hpsi, mass), expect, ref);
    return rep;
}

}  // namespace majorana
