#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "majorana/clifford.hpp"
#include "majorana/commutant.hpp"
#include "majorana/errors.hpp"
#include "majorana/fourier.hpp"
#include "majorana/poincare.hpp"

using namespace majorana;
using std::numbers::pi;

namespace {

GridSpec grid(int n, double L = 10.0) {
    GridSpec g;
    g.n = n;
    g.box_length = L;
    g.axes = 3;
    return g;
}

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// Smooth, localized position field with random spinor coefficients.
MajoranaSpinorField gaussian_field(const GridSpec& g, Rng& rng, double width = 1.2) {
    MajoranaSpinor c0, c1;
    for (int i = 0; i < 4; ++i) {
        c0[i] = rng.normal();
        c1[i] = rng.normal();
    }
    MajoranaSpinorField f(g, Domain::position);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto x = g.position_vector(i);
        const double w = std::exp(-0.5 * dot3(x, x) / (width * width));
        f.values[i] = w * (c0 + x[0] * c1);
    }
    return f;
}

LorentzMatrix quarter_turn_z() {
    // x -> y, y -> -x
    LorentzMatrix L = LorentzMatrix::zero();
    L(0, 0) = 1;
    L(1, 2) = -1;
    L(2, 1) = 1;
    L(3, 3) = 1;
    return L;
}

PoincareElement element(const LorentzMatrix& L, FourVector b = {}) { return {canonical_lift(L), b}; }

std::array<double, 3> random_momentum(Rng& rng, double scale) {
    return {scale * rng.normal(), scale * rng.normal(), scale * rng.normal()};
}

PinElement random_spin_plus(Rng& rng, double scale) {
    return spin_plus_element(random_momentum(rng, scale), random_momentum(rng, scale));
}

bool is_orthogonal(const RealMatrix4& R, double tol) {
    return max_abs(R.transpose() * R - RealMatrix4::identity()) < tol;
}

}  // namespace

TEST_CASE("evolve: identity, period, quarter period, additivity, norm") {
    Rng rng(11);
    const GridSpec g = grid(8);
    const MassParam mass{0.8};
    const auto phi = random_majorana_field(g, Domain::momentum, rng);

    CHECK(max_difference(evolve(phi, 0.0, mass), phi) == 0.0);

    const auto a = evolve(evolve(phi, 0.7, mass), -1.9, mass);
    CHECK(max_difference(a, evolve(phi, -1.2, mass)) < 1e-12);
    CHECK(std::abs(evolve(phi, 3.3, mass).norm() - phi.norm()) / phi.norm() < 1e-13);

    // the p = 0 mode (storage centre) has E = m
    const std::size_t rest = g.flatten({4, 4, 4});
    const auto full = evolve(phi, 2 * pi / mass.m, mass);
    for (int c = 0; c < 4; ++c) CHECK(full.values[rest][c] == doctest::Approx(phi.values[rest][c]).epsilon(1e-13));

    // quarter period on an arbitrary mode sends v to -ig0 v
    const std::size_t j = g.flatten({5, 2, 7});
    const double E = mass.energy(g.effective_momentum_vector(j));
    const auto q = evolve(phi, pi / (2 * E), mass);
    const auto expect = -1.0 * (gp::ig(0) * phi.values[j]);
    for (int c = 0; c < 4; ++c) CHECK(q.values[j][c] == doctest::Approx(expect[c]).epsilon(1e-12));
}

TEST_CASE("evolve rejects position fields") {
    const GridSpec g = grid(4);
    CHECK_THROWS_AS(evolve(MajoranaSpinorField(g, Domain::position), 1.0, MassParam{}), GridMismatch);
}

TEST_CASE("translate: one-cell shift is a cyclic permutation") {
    Rng rng(12);
    const GridSpec g = grid(8);
    const MassParam mass{1.0};
    const auto psi = random_majorana_field(g, Domain::position, rng);
    const auto phi = majorana_fourier(psi, mass);

    for (int axis = 0; axis < 3; ++axis) {
        FourVector b{};
        b[axis + 1] = g.spacing();
        const auto shifted = inverse_majorana_fourier(translate(phi, b, mass), mass);
        // Psi'(x) = Psi(x + b)
        double err = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            auto k = g.unflatten(i);
            k[axis] = (k[axis] + 1) % g.n;
            err = std::max(err, std::sqrt((shifted.values[i] - psi.values[g.flatten(k)]).norm_squared()));
        }
        CHECK(err < 1e-10);
    }
}

TEST_CASE("translate: time shift is evolve, additivity, norm") {
    Rng rng(13);
    const GridSpec g = grid(8);
    const MassParam mass{0.5};
    const auto phi = random_majorana_field(g, Domain::momentum, rng);

    CHECK(max_difference(translate(phi, {0, 0, 0, 0}, mass), phi) == 0.0);
    CHECK(max_difference(translate(phi, {1.7, 0, 0, 0}, mass), evolve(phi, 1.7, mass)) < 1e-14);

    const FourVector b1{0.3, -1.1, 0.4, 2.0}, b2{-0.9, 0.6, 1.3, -0.2};
    const FourVector b12{b1[0] + b2[0], b1[1] + b2[1], b1[2] + b2[2], b1[3] + b2[3]};
    CHECK(max_difference(translate(translate(phi, b1, mass), b2, mass), translate(phi, b12, mass)) < 1e-12);
    CHECK(std::abs(translate(phi, b1, mass).norm() - phi.norm()) / phi.norm() < 1e-13);
}

TEST_CASE("exact_cos_sin reduces multiples of pi/2") {
    CHECK(exact_cos_sin(0.0) == std::array<double, 2>{1.0, 0.0});
    CHECK(exact_cos_sin(pi / 2) == std::array<double, 2>{0.0, 1.0});
    CHECK(exact_cos_sin(-pi) == std::array<double, 2>{-1.0, 0.0});
    CHECK(exact_cos_sin(4.5 * pi) == std::array<double, 2>{0.0, 1.0});
    const auto cs = exact_cos_sin(0.3);
    CHECK(cs[0] == std::cos(0.3));
    CHECK(cs[1] == std::sin(0.3));
}

TEST_CASE("rotate_z: 2 pi is -1 exactly, 4 pi is the identity") {
    const SphericalQuadSpec q = make_spherical_quad(6.0, 6, 6, 8, 4);
    Rng rng(14);
    MajoranaModeField modes(q);
    for (auto& v : modes.values)
        for (int c = 0; c < 4; ++c) v[c] = rng.normal();

    const auto r2 = rotate_z(modes, 2 * pi);
    const auto r4 = rotate_z(modes, 4 * pi);
    const auto r0 = rotate_z(modes, 0.0);
    bool minus = true, ident = true, zero = true;
    for (std::size_t i = 0; i < modes.values.size(); ++i) {
        minus = minus && r2.values[i] == -1.0 * modes.values[i];
        ident = ident && r4.values[i] == modes.values[i];
        zero = zero && r0.values[i] == modes.values[i];
    }
    CHECK(minus);
    CHECK(ident);
    CHECK(zero);

    // additivity away from the exact angles, and norm
    const auto a = rotate_z(rotate_z(modes, 0.4), 1.1);
    const auto b = rotate_z(modes, 1.5);
    double err = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) err = std::max(err, std::sqrt((a.values[i] - b.values[i]).norm_squared()));
    CHECK(err < 1e-13);
    CHECK(std::abs(rotate_z(modes, 0.4).norm_squared() - modes.norm_squared()) / modes.norm_squared() < 1e-13);
}

TEST_CASE("rotate_z matches a quarter-turn of the synthesized field") {
    const SphericalQuadSpec q = make_spherical_quad(8.0, 24, 12, 16, 3);
    const MassParam mass{1.0};
    std::vector<ModeAmplitude> amps{{1, 0, {{complex(1.0, 0.2), complex(-0.4, 0.5)}}},
                                    {2, -2, {{complex(0.3, -0.7), complex(0.6, 0.1)}}},
                                    {3, 1, {{complex(-0.5, 0.0), complex(0.2, 0.9)}}}};
    const auto modes = smooth_mode_field(q, mass, amps);
    const auto psi = inverse_majorana_hankel(modes, mass);
    const auto rotated = inverse_majorana_hankel(rotate_z(modes, pi / 2), mass);

    // rotate_z(theta) = exp(theta J_z): Psi'(phi) = e^{theta s} Psi(phi + theta),
    // i.e. the active rotation by -theta. Its spinor factor is the Spin+ lift.
    const PinElement S = canonical_lift(quarter_turn_z().transpose());
    const int shift = q.n_phi / 4;
    double num = 0.0, den = 0.0;
    for (int ir = 0; ir < q.n_r; ++ir)
        for (int it = 0; it < q.n_theta; ++it)
            for (int ip = 0; ip < q.n_phi; ++ip) {
                const auto expect = S.S * psi.values[psi.index(ir, it, (ip + shift) % q.n_phi)];
                num += (rotated.values[rotated.index(ir, it, ip)] - expect).norm_squared();
                den += expect.norm_squared();
            }
    CHECK(std::sqrt(num / den) < 1e-3);
}

TEST_CASE("standard_boost: rest, Lambda, intertwining") {
    const MassParam mass{1.3};
    CHECK(max_abs(standard_boost({0, 0, 0}, mass).S - RealMatrix4::identity()) == 0.0);

    const PinElement B = standard_boost({1.3 / std::sqrt(3.0), 1.3 / std::sqrt(3.0), -1.3 / std::sqrt(3.0)}, mass);
    CHECK(B.lorentz(0, 0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    Rng rng(15);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = random_momentum(rng, 2.0);
        const double E = mass.energy(p);
        const PinElement Bp = standard_boost(p, mass);
        // Lambda (m, 0) = (E, p)
        const auto k = majorana::apply(Bp.lorentz, {mass.m, 0, 0, 0});
        CHECK(std::abs(k[0] - E) < 1e-10);
        for (int j = 0; j < 3; ++j) CHECK(std::abs(k[j + 1] - p[j]) < 1e-10);
        const RealMatrix4 lhs = Bp.S * (mass.m * gp::ig(0));
        const RealMatrix4 rhs = gp::islash({E, p[0], p[1], p[2]}) * Bp.S;
        CHECK(max_abs(lhs - rhs) < 1e-10);
    }
    CHECK_THROWS_AS(standard_boost({1, 0, 0}, MassParam{0.0}), DomainError);
}

TEST_CASE("Wigner rotation commutes with ig0 and is orthogonal") {
    Rng rng(16);
    const MassParam mass{0.7};
    const RealMatrix4 ig0 = gp::ig(0);
    std::vector<RealMatrix4> rs;
    for (int trial = 0; trial < 40; ++trial) {
        const PinElement S = random_spin_plus(rng, 0.5);
        const auto p = random_momentum(rng, 1.5);
        const RealMatrix4 R = wigner_rotation(S, p, mass);
        CHECK(max_abs(R * ig0 - ig0 * R) < 1e-10);
        CHECK(is_orthogonal(R, 1e-10));
        CHECK(determinant(R) == doctest::Approx(1.0).epsilon(1e-10));
        rs.push_back(R);
    }
    // the R's act irreducibly as SU(2) on R^4 with complex structure ig0
    const CommutantDims d = commutant_certificate(rs);
    CHECK(d.dim_commutant == 4);
    CHECK(d.dim_symmetric_commutant == 1);

    // a pure rotation is its own Wigner rotation and leaves E_p fixed
    const PinElement rot = spin_plus_element({0.2, -0.5, 0.9}, {0, 0, 0});
    const auto p = random_momentum(rng, 1.0);
    CHECK(max_abs(wigner_rotation(rot, p, mass) - rot.S) < 1e-12);

    CHECK_THROWS_AS(wigner_rotation(make_pin_element(gp::ig(0)), p, mass), NotPinElement);
}

TEST_CASE("boost_action: identity, pure rotation, z-boost norm") {
    const MassParam mass{1.0};
    const MajoranaSpinor c{{0.8, -0.3, 0.5, 0.1}};
    const MomentumEvaluator phi = [c](const std::array<double, 3>& p) {
        return std::exp(-0.5 * dot3(p, p)) * c;
    };
    const std::array<double, 3> probe{0.3, -0.2, 0.7};

    const auto id = boost_action(phi, spin_plus_element({0, 0, 0}, {0, 0, 0}), mass);
    CHECK(std::sqrt((id(probe) - phi(probe)).norm_squared()) < 1e-15);

    // isotropic profile: a rotation only turns the spinor
    const PinElement rot = spin_plus_element({0.4, 0.1, -0.3}, {0, 0, 0});
    const auto rotated = boost_action(phi, rot, mass);
    CHECK(std::sqrt((rotated(probe) - rot.S * phi(probe)).norm_squared()) < 1e-12);

    // the boosted profile is squeezed along z and pushed towards +z
    const Quadrature gx = gauss_legendre(48, -6.5, 6.5);
    const Quadrature gz = gauss_legendre(160, -8.0, 18.0);
    auto norm2 = [&](const MomentumEvaluator& f) {
        double s = 0.0;
        for (std::size_t i = 0; i < gx.nodes.size(); ++i)
            for (std::size_t j = 0; j < gx.nodes.size(); ++j)
                for (std::size_t k = 0; k < gz.nodes.size(); ++k)
                    s += gx.weights[i] * gx.weights[j] * gz.weights[k] *
                         f({gx.nodes[i], gx.nodes[j], gz.nodes[k]}).norm_squared();
        return s;
    };
    const double n0 = norm2(phi);
    for (double eta : {0.1, 0.5, 1.0}) {
        const auto boosted = boost_action(phi, spin_plus_element({0, 0, 0}, {0, 0, 0.5 * eta}), mass);
        CHECK(std::abs(norm2(boosted) - n0) / n0 < 1e-6);
    }

    CHECK_THROWS_AS(boost_action(phi, make_pin_element(gp::ig5()), mass), NotPinElement);
    CHECK_THROWS_AS(boost_action(phi, rot, MassParam{0.0}), DomainError);
}

TEST_CASE("Poincare composition law") {
    Rng rng(17);
    const PoincareElement g1{random_spin_plus(rng, 0.4), {0.2, -0.4, 1.0, 0.3}};
    const PoincareElement g2{random_spin_plus(rng, 0.4), {-0.7, 0.5, 0.1, -1.2}};
    const PoincareElement g = compose(g1, g2);
    CHECK(max_abs(g.pin.S - g1.pin.S * g2.pin.S) < 1e-12);
    // P(g1) P(g2) Psi (x) = S1 S2 Psi(L2^-1 (L1^-1 x + b1) + b2)
    const FourVector x{0.3, 1.1, -0.6, 0.9};
    const auto y1 = majorana::apply(lorentz_inverse(g1.pin.lorentz), x);
    FourVector z1{};
    for (int i = 0; i < 4; ++i) z1[i] = y1[i] + g1.b[i];
    auto y = majorana::apply(lorentz_inverse(g2.pin.lorentz), z1);
    const auto w = majorana::apply(lorentz_inverse(g.pin.lorentz), x);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(w[i] + g.b[i] - (y[i] + g2.b[i])) < 1e-12);
}

TEST_CASE("canonical lift of discrete and rotation elements") {
    const LorentzMatrix eta = LorentzMatrix::diagonal(1, -1, -1, -1);
    CHECK(max_abs(canonical_lift(LorentzMatrix::identity()).S - RealMatrix4::identity()) < 1e-15);
    CHECK(max_abs(canonical_lift(eta).S - gp::ig(0)) < 1e-15);
    CHECK(max_abs(canonical_lift(-1.0 * eta).S - gp::g0g5()) < 1e-15);
    CHECK(max_abs(canonical_lift(-1.0 * LorentzMatrix::identity()).S - gp::ig5()) < 1e-15);

    // every Omega element carries its own sign against the lift
    for (const PinElement& w : omega_elements()) CHECK(std::abs(std::abs(lift_sign(w)) - 1.0) < 1e-15);

    Rng rng(18);
    for (int trial = 0; trial < 30; ++trial) {
        const PinElement rot = spin_plus_element(random_momentum(rng, 0.8), {0, 0, 0});
        const PinElement lift = canonical_lift(rot.lorentz);
        CHECK(max_abs(lift.lorentz - rot.lorentz) < 1e-10);
        CHECK(std::abs(std::abs(lift_sign(rot)) - 1.0) < 1e-10);
    }
    // half-turns sit on the branch cut of the axis-angle map
    const PinElement half = spin_plus_element({0.0, -0.5 * pi, 0.0}, {0, 0, 0});
    CHECK(max_abs(canonical_lift(half.lorentz).lorentz - half.lorentz) < 1e-10);

    LorentzMatrix boost = LorentzMatrix::identity();
    boost(0, 3) = boost(3, 0) = std::sinh(0.3);
    boost(0, 0) = boost(3, 3) = std::cosh(0.3);
    CHECK_THROWS_AS(canonical_lift(boost), DomainError);
}

TEST_CASE("poincare_apply_config: identity, parity, translation, time shift") {
    Rng rng(19);
    const GridSpec g = grid(8);
    const MassParam mass{1.0};
    const auto psi = random_majorana_field(g, Domain::position, rng);

    const auto same = poincare_apply_config(psi, element(LorentzMatrix::identity()), mass);
    CHECK(max_difference(same.field, psi) == 0.0);
    CHECK(same.sign == 1.0);

    const auto par = poincare_apply_config(psi, element(LorentzMatrix::diagonal(1, -1, -1, -1)), mass);
    double err = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto expect = gp::ig(0) * psi.values[g.partner_index(i)];
        err = std::max(err, std::sqrt((par.field.values[i] - expect).norm_squared()));
    }
    CHECK(err == 0.0);

    // spatial b is a cyclic relabelling and agrees with translate
    const FourVector b{0, 2 * g.spacing(), 0, -g.spacing()};
    const auto shifted = poincare_apply_config(psi, element(LorentzMatrix::identity(), b), mass);
    const auto via_fourier = inverse_majorana_fourier(translate(majorana_fourier(psi, mass), b, mass), mass);
    CHECK(max_difference(shifted.field, via_fourier) < 1e-10);

    const auto timed = poincare_apply_config(psi, element(LorentzMatrix::identity(), {0.6, 0, 0, 0}), mass);
    const auto evolved = inverse_majorana_fourier(evolve(majorana_fourier(psi, mass), 0.6, mass), mass);
    CHECK(max_difference(timed.field, evolved) < 1e-12);

    CHECK_THROWS_AS(poincare_apply_config(psi, element(LorentzMatrix::identity(), {0, 0.3, 0, 0}), mass), DomainError);
    CHECK_THROWS_AS(poincare_apply_config(psi, {spin_plus_element({0, 0, 0.3}, {0, 0, 0}), {}}, mass), DomainError);
}

TEST_CASE("projective signs") {
    Rng rng(20);
    const GridSpec g = grid(8);
    const MassParam mass{1.0};
    const auto psi = random_majorana_field(g, Domain::position, rng);

    const auto id = projective_sign_check(element(LorentzMatrix::identity()), element(LorentzMatrix::identity()), psi, mass);
    CHECK(id.sign == 1.0);
    CHECK(id.residual < 1e-10);

    // two quarter-turns against the canonical half-turn
    const PoincareElement quarter = element(quarter_turn_z());
    const auto qq = projective_sign_check(quarter, quarter, psi, mass);
    const RealMatrix4 product = quarter.pin.S * quarter.pin.S;
    const RealMatrix4 half = canonical_lift(quarter_turn_z() * quarter_turn_z()).S;
    const double expected = max_abs(product - half) < 1e-12 ? 1.0 : -1.0;
    CHECK(max_abs(product - expected * half) < 1e-12);
    CHECK(qq.sign == expected);
    CHECK(qq.residual < 1e-10);
    CHECK(qq.sign_defect < 1e-10);

    const PoincareElement parity = element(LorentzMatrix::diagonal(1, -1, -1, -1));
    const auto pp = projective_sign_check(parity, parity, psi, mass);
    CHECK(pp.sign == -1.0);
    CHECK(pp.residual < 1e-10);

    // mixed: quarter-turn with translation, then parity
    const PoincareElement moved{quarter.pin, {0, g.spacing(), -3 * g.spacing(), 0}};
    const auto mp = projective_sign_check(moved, parity, psi, mass);
    CHECK(std::abs(mp.sign) == 1.0);
    CHECK(mp.residual < 1e-10);
}

TEST_CASE("matrix identities behind the discrete delta") {
    Rng rng(21);
    const RealMatrix4 ig0 = gp::ig(0);
    for (double m : {0.0, 0.5, 2.0}) {
        const MassParam mass{m};
        for (int trial = 0; trial < 20; ++trial) {
            const auto p = random_momentum(rng, 1.5);
            const double E = mass.energy(p);
            const RealMatrix4 A = momentum_kernel(p, mass);
            CHECK(max_abs(A * ig0 * A - (m / E) * ig0) < 1e-12);
            CHECK(max_abs(A * A - (RealMatrix4::identity() - (1.0 / E) * gp::slash_g0(p))) < 1e-12);
        }
    }
}

TEST_CASE("transition operator: discrete delta at x0 = 0") {
    for (double m : {1.0, 0.0}) {
        const GridSpec g = grid(16);
        const TransitionTable t = transition_operator(0.0, g, MassParam{m});
        const std::size_t origin = g.flatten({8, 8, 8});
        double off = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (i != origin) off = std::max(off, frobenius_norm(t.values[i]));
        CHECK(off < 1e-10);
        CHECK(max_abs(g.cell_volume() * t.values[origin] - RealMatrix4::identity()) < 1e-10);
    }
}

TEST_CASE("transition operator reproduces evolve, and composes") {
    Rng rng(22);
    const GridSpec g = grid(8, 8.0);
    const MassParam mass{0.9};
    const auto psi = gaussian_field(g, rng);

    const TransitionTable t = transition_operator(0.8, g, mass);
    const auto conv = apply_transition(t, psi);
    const auto evolved = inverse_majorana_fourier(evolve(majorana_fourier(psi, mass), 0.8, mass), mass);
    CHECK(max_difference(conv, evolved) < 1e-10);

    const auto twice = apply_transition(transition_operator(0.5, g, mass), apply_transition(transition_operator(0.3, g, mass), psi));
    CHECK(max_difference(twice, conv) < 1e-9);

    CHECK_THROWS_AS(apply_transition(t, MajoranaSpinorField(grid(4, 8.0), Domain::position)), GridMismatch);
}

TEST_CASE("causality scan decreases under refinement") {
    const MassParam mass{1.0};
    const auto recs = causality_scan(2.0, 10.0, {8, 16, 32}, mass, 5.0);
    REQUIRE(recs.size() == 3);
    for (std::size_t i = 0; i + 1 < recs.size(); ++i) CHECK(recs[i + 1].norm < recs[i].norm);
    CHECK(recs.back().norm < 1e-4);
    // inside the light cone T stays of order one (in units of the lattice delta)
    for (const auto& r : recs) CHECK(r.origin_norm > r.norm);
    for (const auto& r : recs) MESSAGE("n=", r.n, " windowed=", r.norm, " raw=", r.raw_norm, " max_spacelike=", r.max_spacelike);
    CHECK_THROWS_AS(causality_scan(0.0, 10.0, {8}, mass, 5.0), DomainError);
}
