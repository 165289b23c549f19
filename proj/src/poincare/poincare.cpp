#include "majorana/poincare.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "majorana/clifford.hpp"
#include "majorana/errors.hpp"
#include "majorana/fourier.hpp"

namespace majorana {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

void require_momentum(const MajoranaSpinorField& f, const char* what) {
    f.grid.validate();
    if (f.domain != Domain::momentum) throw GridMismatch(std::string(what) + ": field must be in momentum space");
    if (f.values.size() != f.grid.size()) throw GridMismatch(std::string(what) + ": value count does not match grid");
}

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// Time row and column must be (+-1, 0, 0, 0) within tol.
bool splits_time(const LorentzMatrix& L, double tol) {
    if (std::abs(std::abs(L(0, 0)) - 1.0) > tol) return false;
    for (int j = 1; j < 4; ++j)
        if (std::abs(L(0, j)) > tol || std::abs(L(j, 0)) > tol) return false;
    return true;
}

double det3(const std::array<std::array<double, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Spin+ element covering the spatial rotation R (det R = 1).
PinElement rotation_lift(const std::array<std::array<double, 3>, 3>& R) {
    const double tr = R[0][0] + R[1][1] + R[2][2];
    const double w = std::acos(std::clamp(0.5 * (tr - 1.0), -1.0, 1.0));
    std::array<double, 3> n{0.0, 0.0, 0.0};
    if (w < 1e-12) return spin_plus_element({0, 0, 0}, {0, 0, 0});
    if (std::numbers::pi - w > 1e-6) {
        const double s = 2.0 * std::sin(w);
        n = {(R[2][1] - R[1][2]) / s, (R[0][2] - R[2][0]) / s, (R[1][0] - R[0][1]) / s};
    } else {
        // R = 2 n n^T - I; take the largest diagonal for a stable axis, positive.
        int k = 0;
        for (int i = 1; i < 3; ++i)
            if (R[i][i] > R[k][k]) k = i;
        n[k] = std::sqrt(std::max(0.0, 0.5 * (R[k][k] + 1.0)));
        for (int i = 0; i < 3; ++i)
            if (i != k) n[i] = R[i][k] / (2.0 * n[k]);
        const double nn = std::sqrt(dot3(n, n));
        for (auto& v : n) v /= nn;
    }
    return spin_plus_element({-0.5 * w * n[0], -0.5 * w * n[1], -0.5 * w * n[2]}, {0, 0, 0});
}

void fft3(std::vector<complex>& buf, int n, int sign) {
    auto* data = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_plan plan = fftw_plan_dft_3d(n, n, n, data, data, sign, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
}

}  // namespace

MajoranaSpinorField evolve(const MajoranaSpinorField& phi, double x0, const MassParam& mass) {
    require_momentum(phi, "evolve");
    MajoranaSpinorField out(phi.grid, Domain::momentum);
    for (std::size_t j = 0; j < phi.values.size(); ++j) {
        const double E = mass.energy(phi.grid.effective_momentum_vector(j));
        out.values[j] = phase_matrix(E * x0) * phi.values[j];
    }
    return out;
}

MajoranaSpinorField translate(const MajoranaSpinorField& phi, const FourVector& b, const MassParam& mass) {
    require_momentum(phi, "translate");
    MajoranaSpinorField out(phi.grid, Domain::momentum);
    const std::array<double, 3> bs{b[1], b[2], b[3]};
    for (std::size_t j = 0; j < phi.values.size(); ++j) {
        const double E = mass.energy(phi.grid.effective_momentum_vector(j));
        // the spatial phase uses the grid momentum, as in the transform kernel
        const double theta = E * b[0] - dot3(phi.grid.momentum_vector(j), bs);
        out.values[j] = phase_matrix(theta) * phi.values[j];
    }
    return out;
}

std::array<double, 2> exact_cos_sin(double a) {
    const double k = std::nearbyint(a / kHalfPi);
    if (std::abs(a - k * kHalfPi) <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(a))) {
        switch (((static_cast<long long>(k) % 4) + 4) % 4) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    return {std::cos(a), std::sin(a)};
}

MajoranaModeField rotate_z(const MajoranaModeField& modes, double theta) {
    const SphericalQuadSpec& q = modes.quad;
    if (modes.values.size() != q.mode_count()) throw GridMismatch("rotate_z: value count does not match modes");
    const RealMatrix4 ig0 = gp::ig(0);
    MajoranaModeField out(q);
    for (int l = 1; l <= q.l_max; ++l)
        for (int mu = -l; mu <= l - 1; ++mu) {
            const auto [c, s] = exact_cos_sin((mu + 0.5) * theta);
            const RealMatrix4 f = c * RealMatrix4::identity() + s * ig0;
            for (std::size_t ip = 0; ip < q.p_nodes.size(); ++ip) out.at(ip, l, mu) = f * modes.at(ip, l, mu);
        }
    return out;
}

namespace {

// B_p without building the Lorentz matrix; m > 0 is checked by the callers.
RealMatrix4 standard_boost_matrix(const std::array<double, 3>& p, const MassParam& mass) {
    const double E = mass.energy(p);
    return (1.0 / std::sqrt((E + mass.m) * 2.0 * mass.m)) * ((E + mass.m) * RealMatrix4::identity() - gp::slash_g0(p));
}

}  // namespace

PinElement standard_boost(const std::array<double, 3>& p, const MassParam& mass) {
    if (!(mass.m > 0.0)) throw DomainError("standard_boost: needs m > 0");
    return make_pin_element(standard_boost_matrix(p, mass));
}

namespace {

// B_p^-1 = (E + m + B) / (sqrt(E+m) sqrt(2m)) since (E+m)^2 - B^2 = 2m(E+m).
RealMatrix4 inverse_standard_boost(const std::array<double, 3>& p, const MassParam& mass) {
    const double E = mass.energy(p);
    return (1.0 / std::sqrt((E + mass.m) * 2.0 * mass.m)) * ((E + mass.m) * RealMatrix4::identity() + gp::slash_g0(p));
}

std::array<double, 3> pulled_back_momentum(const LorentzMatrix& Linv, const std::array<double, 3>& p, double E) {
    const auto q4 = majorana::apply(Linv, FourVector{E, p[0], p[1], p[2]});
    return {q4[1], q4[2], q4[3]};
}

void require_spin_plus(const PinElement& S, const char* what) {
    const LorentzMatrix& L = S.lorentz;
    if (L(0, 0) < 1.0 - 1e-12 || determinant(L) < 0.0) throw NotPinElement(std::string(what) + ": needs a Spin+ element");
}

}  // namespace

RealMatrix4 wigner_rotation(const PinElement& S, const std::array<double, 3>& p, const MassParam& mass) {
    if (!(mass.m > 0.0)) throw DomainError("wigner_rotation: needs m > 0");
    require_spin_plus(S, "wigner_rotation");
    const auto q = pulled_back_momentum(lorentz_inverse(S.lorentz), p, mass.energy(p));
    return inverse_standard_boost(p, mass) * S.S * standard_boost_matrix(q, mass);
}

MomentumEvaluator boost_action(MomentumEvaluator phi, const PinElement& S, const MassParam& mass) {
    if (!(mass.m > 0.0)) throw DomainError("boost_action: needs m > 0");
    require_spin_plus(S, "boost_action");
    const LorentzMatrix Linv = lorentz_inverse(S.lorentz);
    return [phi = std::move(phi), S, Linv, mass](const std::array<double, 3>& p) {
        const double Ep = mass.energy(p);
        const auto q = pulled_back_momentum(Linv, p, Ep);
        const double Eq = mass.energy(q);
        const RealMatrix4 R = inverse_standard_boost(p, mass) * S.S * standard_boost_matrix(q, mass);
        return std::sqrt(Eq / Ep) * (R * phi(q));
    };
}

PoincareElement compose(const PoincareElement& g1, const PoincareElement& g2) {
    PoincareElement g;
    g.pin = compose(g1.pin, g2.pin);
    const FourVector pulled = majorana::apply(lorentz_inverse(g2.pin.lorentz), g1.b);
    for (int i = 0; i < 4; ++i) g.b[i] = g2.b[i] + pulled[i];
    return g;
}

PinElement canonical_lift(const LorentzMatrix& L) {
    if (!splits_time(L, 1e-9)) throw DomainError("canonical_lift: Lorentz matrix mixes time and space");
    std::array<std::array<double, 3>, 3> M{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M[i][j] = L(i + 1, j + 1);
    const bool t_flip = L(0, 0) < 0.0, s_flip = det3(M) < 0.0;

    // discrete part: (t, s) -> 1, eta, -eta, -1
    RealMatrix4 delta_lift = RealMatrix4::identity();
    if (!t_flip && s_flip) delta_lift = gp::ig(0);
    if (t_flip && !s_flip) delta_lift = gp::g0g5();
    if (t_flip && s_flip) delta_lift = gp::ig5();
    if (s_flip)
        for (auto& row : M)
            for (auto& v : row) v = -v;

    const PinElement lift = compose(make_pin_element(delta_lift), rotation_lift(M));
    if (max_abs(lift.lorentz - L) > 1e-9) throw DomainError("canonical_lift: not a time-split Lorentz matrix");
    return lift;
}

double lift_sign(const PinElement& S) {
    const RealMatrix4 c = canonical_lift(S.lorentz).S;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < 16; ++i) {
        num += S.S.a[i] * c.a[i];
        den += c.a[i] * c.a[i];
    }
    return num / den;
}

ConfigAction poincare_apply_config(const MajoranaSpinorField& psi, const PoincareElement& g, const MassParam& mass) {
    psi.grid.validate();
    if (psi.domain != Domain::position) throw GridMismatch("poincare_apply_config: field must be in position space");
    if (psi.grid.axes != 3) throw GridMismatch("poincare_apply_config: needs a three-axis grid");
    const GridSpec& grid = psi.grid;
    const LorentzMatrix& L = g.pin.lorentz;
    if (!splits_time(L, 1e-9)) throw DomainError("poincare_apply_config: Lorentz matrix is not grid preserving");

    // Spatial block of Lambda^-1 = transpose of the spatial block; entries in {0, +-1}.
    std::array<std::array<int, 3>, 3> Minv{};
    for (int i = 0; i < 3; ++i) {
        int nonzero = 0;
        for (int j = 0; j < 3; ++j) {
            const double v = L(j + 1, i + 1);
            const double r = std::nearbyint(v);
            if (std::abs(v - r) > 1e-9 || std::abs(r) > 1.0) throw DomainError("poincare_apply_config: Lorentz matrix is not grid preserving");
            Minv[i][j] = static_cast<int>(r);
            nonzero += Minv[i][j] != 0;
        }
        if (nonzero != 1) throw DomainError("poincare_apply_config: Lorentz matrix is not grid preserving");
    }
    std::array<int, 3> shift{};
    for (int i = 0; i < 3; ++i) {
        const double cells = g.b[i + 1] / grid.spacing();
        const double r = std::nearbyint(cells);
        if (std::abs(cells - r) > 1e-9) throw DomainError("poincare_apply_config: spatial translation is not a whole number of cells");
        shift[i] = static_cast<int>(r);
    }

    MajoranaSpinorField source = psi;
    if (g.b[0] != 0.0) source = inverse_majorana_fourier(evolve(majorana_fourier(psi, mass), g.b[0], mass), mass);

    ConfigAction out{MajoranaSpinorField(grid, Domain::position), lift_sign(g.pin)};
    const int n = grid.n;
    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
        const auto k = grid.unflatten(idx);
        std::array<int, 3> y{};
        for (int i = 0; i < 3; ++i) {
            int c = shift[i];
            for (int j = 0; j < 3; ++j) c += Minv[i][j] * (k[j] - n / 2);
            y[i] = ((c + n / 2) % n + n) % n;
        }
        out.field.values[idx] = g.pin.S * source.values[grid.flatten(y)];
    }
    return out;
}

ProjectiveSign projective_sign_check(const PoincareElement& g1, const PoincareElement& g2,
                                     const MajoranaSpinorField& psi, const MassParam& mass) {
    auto canonical = [](const PoincareElement& g) { return PoincareElement{canonical_lift(g.pin.lorentz), g.b}; };
    const PoincareElement c1 = canonical(g1), c2 = canonical(g2);
    const PoincareElement c12 = canonical(compose(c1, c2));

    const MajoranaSpinorField A = poincare_apply_config(poincare_apply_config(psi, c2, mass).field, c1, mass).field;
    const MajoranaSpinorField B = poincare_apply_config(psi, c12, mass).field;
    double ab = 0.0, bb = 0.0;
    for (std::size_t i = 0; i < A.values.size(); ++i) {
        ab += dot(A.values[i], B.values[i]);
        bb += B.values[i].norm_squared();
    }
    ProjectiveSign out;
    const double s = ab / bb;
    out.sign = s >= 0.0 ? 1.0 : -1.0;
    out.sign_defect = std::abs(s - out.sign);
    double rr = 0.0;
    for (std::size_t i = 0; i < A.values.size(); ++i) rr += (A.values[i] - out.sign * B.values[i]).norm_squared();
    out.residual = std::sqrt(rr / (psi.norm_squared() / psi.measure()));
    return out;
}

TransitionTable transition_operator(double x0, const GridSpec& grid, const MassParam& mass, double p_cutoff) {
    grid.validate();
    if (grid.axes != 3) throw GridMismatch("transition_operator: needs a three-axis grid");
    const int n = grid.n;
    const std::size_t N = grid.size();
    const RealMatrix4 ig0 = gp::ig(0);

    // (X - iY) per momentum with X, Y the cos / sin coefficients of p.d.
    std::vector<RealMatrix4> X(N), Y(N);
    for (std::size_t j = 0; j < N; ++j) {
        const auto pe = grid.effective_momentum_vector(j);
        const bool degenerate = mass.m == 0.0 && dot3(pe, pe) == 0.0;
        const RealMatrix4 A = degenerate ? RealMatrix4::identity() : momentum_kernel(pe, mass);
        const RealMatrix4 AA = A * A, AgA = A * ig0 * A;
        const double E = mass.energy(pe);
        const double c = std::cos(E * x0), s = std::sin(E * x0);
        double w = 1.0;
        if (p_cutoff > 0.0) {
            const auto p = grid.momentum_vector(j);
            w = std::exp(-0.5 * dot3(p, p) / (p_cutoff * p_cutoff));
        }
        X[j] = w * (c * AA - s * AgA);
        Y[j] = w * (s * AA + c * AgA);
    }

    TransitionTable t{grid, x0, std::vector<RealMatrix4>(N)};
    const double scale = 1.0 / std::pow(grid.box_length, 3);
    std::vector<complex> buf(N);
    for (int e = 0; e < 16; ++e) {
        std::fill(buf.begin(), buf.end(), complex(0.0));
        for (std::size_t j = 0; j < N; ++j) {
            const auto q = grid.unflatten(j);
            std::array<int, 3> bin{};
            int fsum = 0;
            for (int a = 0; a < 3; ++a) {
                const int f = grid.frequency(q[a]);
                fsum += f;
                bin[a] = (f % n + n) % n;
            }
            // e^{i p.d} with d = (k - n/2) dx is (-1)^q e^{2 pi i q k / n}
            const double sign = (fsum % 2 == 0) ? 1.0 : -1.0;
            buf[grid.flatten(bin)] = sign * complex(X[j].a[e], -Y[j].a[e]);
        }
        fft3(buf, n, FFTW_BACKWARD);
        for (std::size_t k = 0; k < N; ++k) t.values[k].a[e] = scale * buf[k].real();
    }
    return t;
}

MajoranaSpinorField apply_transition(const TransitionTable& t, const MajoranaSpinorField& psi) {
    psi.grid.validate();
    if (psi.domain != Domain::position) throw GridMismatch("apply_transition: field must be in position space");
    if (!(psi.grid == t.grid)) throw GridMismatch("apply_transition: grid differs from the table");
    const GridSpec& g = psi.grid;
    const int n = g.n;
    const double dv = g.cell_volume();
    MajoranaSpinorField out(g, Domain::position);
    for (std::size_t ix = 0; ix < g.size(); ++ix) {
        const auto kx = g.unflatten(ix);
        MajoranaSpinor acc;
        for (std::size_t iy = 0; iy < g.size(); ++iy) {
            const auto ky = g.unflatten(iy);
            std::array<int, 3> d{};
            for (int a = 0; a < 3; ++a) d[a] = ((kx[a] - ky[a] + n / 2) % n + n) % n;
            acc += t.values[g.flatten(d)] * psi.values[iy];
        }
        out.values[ix] = dv * acc;
    }
    return out;
}

std::vector<CausalityRecord> causality_scan(double x0, double box_length, const std::vector<int>& ns,
                                            const MassParam& mass, double offset, double window_fraction) {
    if (!(x0 > 0.0)) throw DomainError("causality_scan: needs x0 > 0");
    std::vector<CausalityRecord> out;
    for (int n : ns) {
        GridSpec g;
        g.n = n;
        g.box_length = box_length;
        g.axes = 3;
        g.validate();
        const double pc = window_fraction * std::numbers::pi * n / box_length;
        const TransitionTable win = transition_operator(x0, g, mass, pc);
        const TransitionTable raw = transition_operator(x0, g, mass, 0.0);

        const double cells = offset / g.spacing();
        if (std::abs(cells - std::nearbyint(cells)) > 1e-9) throw DomainError("causality_scan: offset is not a whole number of cells");
        const int k = ((static_cast<int>(std::nearbyint(cells)) + n / 2) % n + n) % n;
        const std::size_t at = g.flatten({k, n / 2, n / 2});

        CausalityRecord rec;
        rec.n = n;
        rec.offset = offset;
        rec.x0 = x0;
        rec.norm = frobenius_norm(win.values[at]);
        rec.raw_norm = frobenius_norm(raw.values[at]);
        rec.origin_norm = frobenius_norm(win.values[g.flatten({n / 2, n / 2, n / 2})]);
        for (std::size_t i = 0; i < g.size(); ++i) {
            const auto d = g.position_vector(i);
            if (std::sqrt(dot3(d, d)) >= x0 + 2.0) rec.max_spacelike = std::max(rec.max_spacelike, frobenius_norm(win.values[i]));
        }
        out.push_back(rec);
    }
    return out;
}

}  // namespace majorana
