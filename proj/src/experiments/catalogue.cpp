#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <sstream>

#include "majorana/clifford.hpp"
#include "majorana/commutant.hpp"
#include "majorana/experiments.hpp"
#include "majorana/fourier.hpp"
#include "majorana/hankel.hpp"
#include "majorana/pin.hpp"
#include "majorana/poincare.hpp"
#include "majorana/reference_oracles.hpp"
#include "majorana/serialize.hpp"

namespace majorana {

namespace {

using std::numbers::pi;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

ReportRecord record(std::string metric, double value, double tol, Predicate pred = Predicate::abs_le,
                    std::string note = {}) {
    ReportRecord r;
    r.metric = std::move(metric);
    r.value = value;
    r.tolerance = tol;
    r.predicate = pred;
    r.note = std::move(note);
    return r;
}

ReportRecord info(std::string metric, double value, std::string note = {}) {
    return record(std::move(metric), value, 0.0, Predicate::info, std::move(note));
}

// Stamps the time of a sub-part on the records it produced.
void stamp(std::vector<ReportRecord>& recs, std::size_t from, Clock::time_point t0) {
    const double s = seconds_since(t0);
    for (std::size_t i = from; i < recs.size(); ++i) recs[i].wall_seconds = s;
}

GridSpec make_grid(int n, double L, int axes = 3) {
    GridSpec g;
    g.n = n;
    g.box_length = L;
    g.axes = axes;
    g.validate();
    return g;
}

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string field_path(const RunContext& ctx, const std::string& file) {
    std::filesystem::create_directories(ctx.fields_dir);
    return (std::filesystem::path(ctx.fields_dir) / file).string();
}

// Smooth position field: a Gaussian envelope times a linear spinor polynomial.
MajoranaSpinorField gaussian_field(const GridSpec& g, Rng& rng, double width) {
    MajoranaSpinor c0, c1;
    for (int i = 0; i < 4; ++i) c0[i] = rng.normal();
    for (int i = 0; i < 4; ++i) c1[i] = rng.normal();
    MajoranaSpinorField f(g, Domain::position);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto x = g.position_vector(i);
        f.values[i] = std::exp(-0.5 * dot3(x, x) / (width * width)) * (c0 + x[0] * c1);
    }
    return f;
}

ParamSpec int_param(std::string key, int def, double lo, double hi, std::string help) {
    return {std::move(key), ParamKind::integer, std::to_string(def), lo, hi, std::move(help)};
}

ParamSpec real_param(std::string key, double def, double lo, double hi, std::string help) {
    return {std::move(key), ParamKind::real, fmt(def), lo, hi, std::move(help)};
}

ParamSpec list_param(std::string key, ParamKind kind, std::string def, double lo, double hi, std::string help) {
    return {std::move(key), kind, std::move(def), lo, hi, std::move(help)};
}

void require_even(const Params& p, const std::string& key) {
    if (p.integer(key) % 2 != 0) throw ConfigError("key '" + key + "' must be even");
}

// ---------------------------------------------------------------- clifford

ExperimentResult check_clifford(const Params& p, const RunContext& ctx) {
    ExperimentResult res;
    auto& recs = res.records;

    auto t0 = Clock::now();
    const GammaSet& g = gammas();
    const int idx[5] = {0, 1, 2, 3, 5};
    int mismatches = 0;
    for (int a : idx)
        for (int b : idx) {
            IntMatrix4 expect{};
            if (a == b) expect = (-2 * (a == 5 ? 1 : g.metric[a])) * IntMatrix4::identity();
            mismatches += anticommutator(g.ig(a), g.ig(b)) == expect ? 0 : 1;
        }
    recs.push_back(record("anticommutator_mismatches", mismatches, 0, Predicate::eq, "25 pairs, exact integer equality"));
    stamp(recs, 0, t0);

    t0 = Clock::now();
    std::size_t from = recs.size();
    Rng rng(experiment_seed(ctx, "check-clifford"));
    const int samples = p.integer("covering_samples");
    const double range = p.real("covering_range");
    auto draw = [&] {
        std::array<double, 3> v{};
        for (auto& x : v) x = rng.uniform(-range, range);
        return v;
    };
    double worst = 0.0;
    int sign_mismatch = 0;
    for (int t = 0; t < samples; ++t) {
        const auto ta = draw(), ba = draw(), tb = draw(), bb = draw();
        const PinElement a = spin_plus_element(ta, ba), b = spin_plus_element(tb, bb);
        worst = std::max(worst, max_abs(compose(a, b).lorentz - a.lorentz * b.lorentz));
        sign_mismatch += lambda_of(-a.S) == a.lorentz ? 0 : 1;
    }
    recs.push_back(record("covering_homomorphism_residual", worst, 1e-10));
    recs.push_back(record("covering_sign_mismatches", sign_mismatch, 0, Predicate::eq, "Lambda(S) == Lambda(-S) bit for bit"));
    stamp(recs, from, t0);

    t0 = Clock::now();
    from = recs.size();
    std::vector<RealMatrix4> su2;
    for (int j = 1; j <= 3; ++j) su2.push_back(gp::ig5g0gj(j));
    const CommutantDims d = commutant_certificate(su2);
    recs.push_back(record("commutant_dim", d.dim_commutant, 4, Predicate::eq));
    recs.push_back(record("symmetric_commutant_dim", d.dim_symmetric_commutant, 1, Predicate::eq));
    // the same 2x2 rotation on both halves of R^4 is reducible
    RealMatrix4 block{};
    block(0, 1) = -1;
    block(1, 0) = 1;
    block(2, 3) = -1;
    block(3, 2) = 1;
    const CommutantDims c = commutant_certificate({block});
    recs.push_back(record("control_symmetric_commutant_dim", c.dim_symmetric_commutant, 2, Predicate::ge));
    stamp(recs, from, t0);
    return res;
}

// ---------------------------------------------------------------- theta

ExperimentResult theta_isometry(const Params& p, const RunContext& ctx) {
    Rng rng(experiment_seed(ctx, "theta-isometry"));
    const GridSpec g = make_grid(p.integer("n"), p.real("box_length"));
    double norm_dev = 0.0, roundtrip = 0.0;
    for (int t = 0; t < p.integer("fields"); ++t) {
        const PauliSpinorField psi = random_pauli_field(g, Domain::position, rng);
        const MajoranaSpinorField u = theta_map(psi);
        norm_dev = std::max(norm_dev, std::abs(u.norm() - psi.norm()) / psi.norm());
        const PauliSpinorField back = inverse_theta_map(u);
        for (std::size_t i = 0; i < psi.values.size(); ++i)
            roundtrip = std::max(roundtrip, std::sqrt((back.values[i] - psi.values[i]).norm_squared()));
    }
    ExperimentResult res;
    res.records.push_back(record("max_relative_norm_deviation", norm_dev, 1e-12));
    res.records.push_back(record("max_roundtrip_error", roundtrip, 1e-12));
    return res;
}

// ---------------------------------------------------------------- fourier

ExperimentResult fourier_unitarity(const Params& p, const RunContext& ctx) {
    require_even(p, "n");
    require_even(p, "direct_n");
    Rng rng(experiment_seed(ctx, "fourier-unitarity"));
    const GridSpec g = make_grid(p.integer("n"), p.real("box_length"));
    ExperimentResult res;
    auto t0 = Clock::now();
    double norm_dev = 0.0, roundtrip = 0.0;
    bool saved = false;
    for (double m : p.reals("masses")) {
        const MassParam mass{m};
        for (int t = 0; t < p.integer("fields"); ++t) {
            const MajoranaSpinorField psi = random_majorana_field(g, Domain::position, rng);
            const MajoranaSpinorField phi = majorana_fourier(psi, mass);
            norm_dev = std::max(norm_dev, std::abs(phi.norm() - psi.norm()) / psi.norm());
            roundtrip = std::max(roundtrip, max_difference(inverse_majorana_fourier(phi, mass), psi));
            if (!ctx.fields_dir.empty() && !saved) {
                save_field(field_path(ctx, "fourier_input.field"), psi, mass);
                save_field(field_path(ctx, "fourier_transform.field"), phi, mass);
                saved = true;
            }
        }
    }
    res.records.push_back(record("max_relative_norm_deviation", norm_dev, 1e-10));
    res.records.push_back(record("max_roundtrip_error", roundtrip, 1e-10));
    stamp(res.records, 0, t0);

    t0 = Clock::now();
    const std::size_t from = res.records.size();
    const GridSpec gd = make_grid(p.integer("direct_n"), p.real("box_length"));
    double direct = 0.0;
    for (double m : p.reals("masses")) {
        const MajoranaSpinorField psi = random_majorana_field(gd, Domain::position, rng);
        direct = std::max(direct, max_difference(majorana_fourier(psi, {m}), majorana_fourier_direct(psi, {m})));
    }
    res.records.push_back(record("fast_vs_direct_max_difference", direct, 1e-8));
    stamp(res.records, from, t0);
    return res;
}

ExperimentResult fourier_diagonalization(const Params& p, const RunContext& ctx) {
    require_even(p, "n");
    Rng rng(experiment_seed(ctx, "fourier-diagonalization"));
    const GridSpec g = make_grid(p.integer("n"), p.real("box_length"));
    const RealMatrix4 ig0 = gp::ig(0);
    double worst = 0.0;
    for (double m : p.reals("masses")) {
        const MassParam mass{m};
        for (int t = 0; t < p.integer("fields"); ++t) {
            const MajoranaSpinorField psi = random_majorana_field(g, Domain::position, rng);
            const MajoranaSpinorField lhs = majorana_fourier(apply_dirac_operator(psi, mass), mass);
            MajoranaSpinorField rhs = majorana_fourier(psi, mass);
            for (std::size_t j = 0; j < g.size(); ++j)
                rhs.values[j] = mass.energy(g.effective_momentum_vector(j)) * (ig0 * rhs.values[j]);
            worst = std::max(worst, l2_difference(lhs, rhs) / psi.norm());
        }
    }
    ExperimentResult res;
    res.records.push_back(record("max_relative_residual", worst, 1e-10, Predicate::abs_le,
                                 "||F(iH psi) - ig0 E F(psi)|| / ||psi||"));
    return res;
}

ExperimentResult energy_transform_check(const Params& p, const RunContext& ctx) {
    require_even(p, "n");
    Rng rng(experiment_seed(ctx, "energy-transform"));
    const GridSpec t = make_grid(p.integer("n"), p.real("time_length"), 1);
    double norm_dev = 0.0, roundtrip = 0.0;
    for (int k = 0; k < p.integer("fields"); ++k) {
        const MajoranaSpinorField psi = random_majorana_field(t, Domain::position, rng);
        const MajoranaSpinorField e = energy_transform(psi);
        norm_dev = std::max(norm_dev, std::abs(e.norm() - psi.norm()) / psi.norm());
        roundtrip = std::max(roundtrip, max_difference(inverse_energy_transform(e), psi));
    }
    ExperimentResult res;
    res.records.push_back(record("max_relative_norm_deviation", norm_dev, 1e-12));
    res.records.push_back(record("max_roundtrip_error", roundtrip, 1e-12));
    return res;
}

// ---------------------------------------------------------------- hankel

ExperimentResult hankel_specialfns(const Params& p, const RunContext& ctx) {
    Rng rng(experiment_seed(ctx, "hankel-specialfns"));
    const int lmax = p.integer("l_max");
    const int samples = p.integer("samples");
    ExperimentResult res;
    auto& recs = res.records;

    auto t0 = Clock::now();
    double bessel = 0.0, legendre = 0.0;
    for (int l = 0; l <= lmax; ++l)
        for (int t = 0; t < samples; ++t) {
            const double r = (t % 2 == 0) ? rng.uniform(0.01, 10.0) : rng.uniform(10.0, 100.0);
            const double ref = oracle::bessel_closed_form(l, r);
            bessel = std::max(bessel, std::abs(spherical_bessel(l, r) - ref) / std::abs(ref));
        }
    for (int l = 0; l <= lmax; ++l)
        for (int mu = 0; mu <= l; ++mu)
            for (int t = 0; t < samples / 10 + 1; ++t) {
                const double xi = rng.uniform(-0.999, 0.999);
                const double ref = oracle::legendre_rodrigues(l, mu, xi);
                legendre = std::max(legendre, std::abs(assoc_legendre(l, mu, xi) - ref) / std::abs(ref));
            }
    recs.push_back(record("bessel_max_relative_error", bessel, 1e-12, Predicate::abs_le, "against 100-digit Rayleigh closed form"));
    recs.push_back(record("legendre_max_relative_error", legendre, 1e-12, Predicate::abs_le, "against exact-coefficient Rodrigues formula"));
    stamp(recs, 0, t0);

    t0 = Clock::now();
    std::size_t from = recs.size();
    const int lo = p.integer("omega_l_max");
    const Quadrature ct = gauss_legendre(3 * lo);
    const int nphi = 4 * lo + 4;
    double ortho = 0.0;
    for (int l1 = 1; l1 <= lo; ++l1)
        for (int m1 = -l1; m1 <= l1 - 1; ++m1)
            for (int l2 = 1; l2 <= lo; ++l2)
                for (int m2 = -l2; m2 <= l2 - 1; ++m2) {
                    Complex2 acc;
                    for (std::size_t i = 0; i < ct.nodes.size(); ++i)
                        for (int k = 0; k < nphi; ++k) {
                            const double th = std::acos(ct.nodes[i]), ph = -pi + 2 * pi * k / nphi;
                            acc = acc + complex(ct.weights[i] * 2 * pi / nphi) *
                                            (pauli_spherical_matrix(l1, m1, th, ph).adjoint() * pauli_spherical_matrix(l2, m2, th, ph));
                        }
                    const Complex2 expect = (l1 == l2 && m1 == m2) ? Complex2::identity() : Complex2{};
                    ortho = std::max(ortho, max_abs(acc - expect));
                }
    recs.push_back(record("omega_orthonormality_error", ortho, 1e-10));
    stamp(recs, from, t0);

    t0 = Clock::now();
    from = recs.size();
    const RealMatrix4 ig5 = gp::ig(5), ig1 = gp::ig(1);
    double ident = 0.0;
    for (int t = 0; t < p.integer("identity_points"); ++t) {
        const int l = 1 + static_cast<int>(rng.uniform() * lmax);
        const int mu = -l + static_cast<int>(rng.uniform() * 2 * l);
        const double r = rng.uniform(0, 20), th = rng.uniform(0, pi), ph = rng.uniform(-pi, pi);
        const RealMatrix4 lhs = ig5 * Lambda_matrix(l, mu, r, th, ph);
        const RealMatrix4 rhs = -parity_sign(mu) * (Lambda_matrix(l, paired_mu(mu), r, th, ph) * ig1);
        ident = std::max(ident, max_abs(lhs - rhs));
    }
    recs.push_back(record("pseudoscalar_identity_error", ident, 1e-12, Predicate::abs_le,
                          "ig5 Lambda_lmu = -(-1)^mu Lambda_{l,-mu-1} ig1"));
    stamp(recs, from, t0);
    return res;
}

// Compact bump (1 - r^2/R^2)^6 times a spinor polynomial of degree two.
MajoranaSpinor bump_field(const std::array<double, 3>& x, double R) {
    const double r2 = dot3(x, x);
    const double b = r2 < R * R ? std::pow(1 - r2 / (R * R), 6) : 0.0;
    return b * MajoranaSpinor{{1 + 0.3 * x[0] - 0.2 * x[1] * x[2], 0.5 - 0.4 * x[2] + 0.1 * x[0] * x[0],
                               0.2 * x[1] + 0.3 * x[2] * x[2], -0.7 + 0.25 * x[0] * x[1]}};
}

double relative_difference(const MajoranaSphericalField& a, const MajoranaSphericalField& b) {
    MajoranaSphericalField d(a.quad);
    for (std::size_t i = 0; i < a.values.size(); ++i) d.values[i] = a.values[i] - b.values[i];
    return std::sqrt(d.norm_squared() / b.norm_squared());
}

ExperimentResult hankel_roundtrip(const Params& p, const RunContext& ctx) {
    const MassParam mass{p.real("mass")};
    const double r_max = p.real("r_max"), R = p.real("bump_fraction") * r_max;
    auto run = [&](int n_r, bool save) {
        const SphericalQuadSpec q = make_spherical_quad(r_max, n_r, p.integer("n_theta"), p.integer("n_phi"), p.integer("l_max"));
        const auto psi = sample_spherical<MajoranaSpinor>(q, [R](const auto& x) { return bump_field(x, R); });
        const MajoranaModeField modes = majorana_hankel(psi, mass);
        if (save) save_modes(field_path(ctx, "hankel_modes.modes"), modes, mass);
        const double norm_dev = std::abs(std::sqrt(modes.norm_squared() / psi.norm_squared()) - 1);
        return std::array<double, 2>{relative_difference(inverse_majorana_hankel(modes, mass), psi), norm_dev};
    };
    const int n_r = p.integer("n_r");
    const auto coarse = run(n_r, !ctx.fields_dir.empty());
    const auto fine = run(2 * n_r, false);
    ExperimentResult res;
    res.records.push_back(record("roundtrip_error", coarse[0], 1e-3));
    res.records.push_back(info("roundtrip_error_refined", fine[0], "radial nodes doubled"));
    res.records.push_back(record("refinement_ratio", coarse[0] / fine[0], 4.0, Predicate::ge));
    res.records.push_back(record("norm_deviation", coarse[1], 1e-3));
    return res;
}

ExperimentResult angular_momentum(const Params& p, const RunContext& ctx) {
    const MassParam mass{p.real("mass")};
    const SphericalQuadSpec q = make_spherical_quad(p.real("r_max"), p.integer("n_r"), p.integer("n_theta"),
                                                    p.integer("n_phi"), p.integer("l_max"));
    const PauliSpinor c{{complex(1, 0.3), complex(-0.2, 0.5)}};
    const PauliSpinor d{{complex(-0.4, 0.1), complex(0.7, -0.6)}};
    const auto modes = smooth_mode_field(q, mass, {{1, 0, c}, {1, -1, d}, {2, -2, c}, {2, 1, d}});
    if (!ctx.fields_dir.empty()) save_modes(field_path(ctx, "angular_modes.modes"), modes, mass);
    const AngularMomentumReport rep = angular_momentum_check(modes, mass, true, p.real("dirac_step"));
    ExperimentResult res;
    res.records.push_back(record("jz_residual", rep.jz_residual, 1e-3, Predicate::abs_le, "||J_z Phi - ig0 (mu+1/2) Phi|| / ||Phi||"));
    res.records.push_back(record("dirac_residual", rep.dirac_residual, 1e-3, Predicate::abs_le, "||iH Phi - ig0 E_p Phi|| / ||Phi||"));
    res.records.push_back(info("synthesis_roundtrip", rep.roundtrip));
    return res;
}

// ---------------------------------------------------------------- poincare

ExperimentResult evolve_dirac_residual(const Params& p, const RunContext& ctx) {
    require_even(p, "n");
    Rng rng(experiment_seed(ctx, "evolve-dirac-residual"));
    const GridSpec g = make_grid(p.integer("n"), p.real("box_length"));
    const MassParam mass{p.real("mass")};
    const MajoranaSpinorField psi = gaussian_field(g, rng, p.real("width"));
    const MajoranaSpinorField phi = majorana_fourier(psi, mass);
    const double t = p.real("time");
    auto at = [&](double s) { return inverse_majorana_fourier(evolve(phi, s, mass), mass); };
    const MajoranaSpinorField h = apply_dirac_operator(at(t), mass);

    // || (psi(t+dt) - psi(t-dt)) / 2dt + iH psi(t) || / ||psi||
    auto residual = [&](double dt) {
        const MajoranaSpinorField plus = at(t + dt), minus = at(t - dt);
        MajoranaSpinorField r(g, Domain::position);
        for (std::size_t i = 0; i < g.size(); ++i) r.values[i] = (1.0 / (2 * dt)) * (plus.values[i] - minus.values[i]) + h.values[i];
        return r.norm() / psi.norm();
    };
    const double dt = p.real("dt");
    const double r1 = residual(dt), r2 = residual(dt / 2);
    ExperimentResult res;
    res.records.push_back(info("residual_dt", r1));
    res.records.push_back(info("residual_dt_half", r2));
    ReportRecord ratio = record("error_ratio", r1 / r2, 0.3, Predicate::within, "second order: ratio 4 under halving");
    ratio.target = 4.0;
    res.records.push_back(ratio);
    return res;
}

ExperimentResult boost_unitarity(const Params& p, const RunContext& ctx) {
    Rng rng(experiment_seed(ctx, "boost-unitarity"));
    const MassParam mass{p.real("mass")};
    const double w = p.real("width");
    MajoranaSpinor c;
    for (int i = 0; i < 4; ++i) c[i] = rng.normal();
    const MomentumEvaluator phi = [c, w](const std::array<double, 3>& k) {
        return std::exp(-0.5 * dot3(k, k) / (w * w)) * c;
    };
    // squeezed along z and pushed towards +z by the boost
    const Quadrature gx = gauss_legendre(p.integer("transverse_nodes"), -6.5 * w, 6.5 * w);
    const double eta_max = [&] {
        double e = 0;
        for (double x : p.reals("rapidities")) e = std::max(e, std::abs(x));
        return e;
    }();
    const double reach = 6.5 * w * std::exp(eta_max) + std::sinh(eta_max) * mass.m;
    const Quadrature gz = gauss_legendre(p.integer("longitudinal_nodes"), -reach, reach);
    auto norm2 = [&](const MomentumEvaluator& f) {
        double s = 0.0;
        for (std::size_t i = 0; i < gx.nodes.size(); ++i)
            for (std::size_t j = 0; j < gx.nodes.size(); ++j)
                for (std::size_t k = 0; k < gz.nodes.size(); ++k)
                    s += gx.weights[i] * gx.weights[j] * gz.weights[k] * f({gx.nodes[i], gx.nodes[j], gz.nodes[k]}).norm_squared();
        return s;
    };
    ExperimentResult res;
    const double n0 = norm2(phi);
    for (double eta : p.reals("rapidities")) {
        const auto t0 = Clock::now();
        const auto boosted = boost_action(phi, spin_plus_element({0, 0, 0}, {0, 0, 0.5 * eta}), mass);
        res.records.push_back(record("norm_deviation_rapidity_" + fmt(eta), std::abs(norm2(boosted) - n0) / n0, 1e-6));
        res.records.back().wall_seconds = seconds_since(t0);
    }
    const RealMatrix4 ig0 = gp::ig(0);
    double comm = 0.0;
    for (int t = 0; t < p.integer("wigner_samples"); ++t) {
        std::array<double, 3> th{}, b{}, k{};
        for (auto& x : th) x = 0.5 * rng.normal();
        for (auto& x : b) x = 0.5 * rng.normal();
        for (auto& x : k) x = 1.5 * rng.normal();
        const RealMatrix4 R = wigner_rotation(spin_plus_element(th, b), k, mass);
        comm = std::max(comm, max_abs(R * ig0 - ig0 * R));
    }
    res.records.push_back(record("wigner_commutator_max", comm, 1e-10, Predicate::abs_le, "||R ig0 - ig0 R||"));
    return res;
}

LorentzMatrix quarter_turn(int axis) {
    // rotation by +pi/2 about the given spatial axis (1, 2, 3)
    const int a = axis % 3 + 1, b = (axis + 1) % 3 + 1;
    LorentzMatrix L = LorentzMatrix::zero();
    L(0, 0) = 1;
    L(axis, axis) = 1;
    L(a, b) = -1;
    L(b, a) = 1;
    return L;
}

ExperimentResult rotation_2pi_sign(const Params& p, const RunContext& ctx) {
    Rng rng(experiment_seed(ctx, "rotation-2pi-sign"));
    const SphericalQuadSpec q = make_spherical_quad(p.real("r_max"), p.integer("n_r"), p.integer("n_theta"),
                                                    p.integer("n_phi"), p.integer("l_max"));
    if (q.n_phi % 4 != 0) throw ConfigError("key 'n_phi' must be a multiple of 4");
    MajoranaModeField modes(q);
    for (auto& v : modes.values)
        for (int c = 0; c < 4; ++c) v[c] = rng.normal();
    const auto r2 = rotate_z(modes, 2 * pi), r4 = rotate_z(modes, 4 * pi);
    int bad2 = 0, bad4 = 0;
    for (std::size_t i = 0; i < modes.values.size(); ++i) {
        bad2 += r2.values[i] == -1.0 * modes.values[i] ? 0 : 1;
        bad4 += r4.values[i] == modes.values[i] ? 0 : 1;
    }
    ExperimentResult res;
    res.records.push_back(record("two_pi_mismatches", bad2, 0, Predicate::eq, "rotate_z(2 pi) == -1 bit for bit"));
    res.records.push_back(record("four_pi_mismatches", bad4, 0, Predicate::eq, "rotate_z(4 pi) == 1 bit for bit"));

    // rotate_z(pi/2) against a grid quarter-turn of the synthesized field
    const MassParam mass{p.real("mass")};
    const auto smooth = smooth_mode_field(q, mass,
                                          {{1, 0, {{complex(1.0, 0.2), complex(-0.4, 0.5)}}},
                                           {2, -2, {{complex(0.3, -0.7), complex(0.6, 0.1)}}},
                                           {2, 1, {{complex(-0.5, 0.0), complex(0.2, 0.9)}}}});
    const auto psi = inverse_majorana_hankel(smooth, mass);
    const auto rotated = inverse_majorana_hankel(rotate_z(smooth, pi / 2), mass);
    const RealMatrix4 S = canonical_lift(quarter_turn(3).transpose()).S;
    double num = 0.0, den = 0.0;
    for (int ir = 0; ir < q.n_r; ++ir)
        for (int it = 0; it < q.n_theta; ++it)
            for (int ip = 0; ip < q.n_phi; ++ip) {
                const auto expect = S * psi.values[psi.index(ir, it, (ip + q.n_phi / 4) % q.n_phi)];
                num += (rotated.values[rotated.index(ir, it, ip)] - expect).norm_squared();
                den += expect.norm_squared();
            }
    res.records.push_back(record("quarter_turn_residual", std::sqrt(num / den), 1e-3));
    return res;
}

ExperimentResult projective_signs(const Params& p, const RunContext& ctx) {
    require_even(p, "n");
    Rng rng(experiment_seed(ctx, "projective-signs"));
    const GridSpec g = make_grid(p.integer("n"), p.real("box_length"));
    const MassParam mass{p.real("mass")};
    const auto psi = random_majorana_field(g, Domain::position, rng);
    auto el = [](const LorentzMatrix& L, FourVector b = {}) { return PoincareElement{canonical_lift(L), b}; };
    const double dx = g.spacing();
    const LorentzMatrix parity = LorentzMatrix::diagonal(1, -1, -1, -1);
    const LorentzMatrix time_rev = LorentzMatrix::diagonal(-1, 1, 1, 1);

    struct Case {
        std::string name;
        PoincareElement g1, g2;
    };
    const std::vector<Case> cases{
        {"identity_identity", el(LorentzMatrix::identity()), el(LorentzMatrix::identity())},
        {"quarter_z_quarter_z", el(quarter_turn(3)), el(quarter_turn(3))},
        {"parity_parity", el(parity), el(parity)},
        {"time_reversal_time_reversal", el(time_rev), el(time_rev)},
        {"quarter_x_quarter_z", el(quarter_turn(1)), el(quarter_turn(3))},
        {"shifted_quarter_y_parity", el(quarter_turn(2), {0, dx, -3 * dx, 2 * dx}), el(parity)},
        {"parity_time_reversal", el(parity), el(time_rev, {0, 0, dx, 0})},
    };
    ExperimentResult res;
    double worst_res = 0.0, worst_defect = 0.0;
    for (const auto& c : cases) {
        const ProjectiveSign s = projective_sign_check(c.g1, c.g2, psi, mass);
        res.records.push_back(info("sign_" + c.name, s.sign));
        worst_res = std::max(worst_res, s.residual);
        worst_defect = std::max(worst_defect, s.sign_defect);
    }
    res.records.push_back(record("max_residual", worst_res, 1e-10));
    res.records.push_back(record("max_sign_defect", worst_defect, 1e-10, Predicate::abs_le, "distance of the realized ratio from +-1"));
    const ProjectiveSign pp = projective_sign_check(el(parity), el(parity), psi, mass);
    res.records.push_back(record("parity_squared_sign", pp.sign, -1.0, Predicate::eq));
    return res;
}

ExperimentResult transition_delta(const Params& p, const RunContext& ctx) {
    require_even(p, "n");
    require_even(p, "conv_n");
    ExperimentResult res;
    auto& recs = res.records;
    const MassParam mass{p.real("mass")};

    auto t0 = Clock::now();
    for (double m : {mass.m, 0.0}) {
        const GridSpec g = make_grid(p.integer("n"), p.real("box_length"));
        const TransitionTable t = transition_operator(0.0, g, MassParam{m});
        const std::size_t origin = g.flatten({g.n / 2, g.n / 2, g.n / 2});
        double off = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (i != origin) off = std::max(off, frobenius_norm(t.values[i]));
        const double on = max_abs(g.cell_volume() * t.values[origin] - RealMatrix4::identity());
        const std::string tag = m == 0.0 ? "_massless" : "";
        recs.push_back(record("delta_offsite_max" + tag, off, 1e-10));
        recs.push_back(record("delta_onsite_deviation" + tag, on, 1e-10, Predicate::abs_le, "|dV T(0) - 1|"));
    }
    stamp(recs, 0, t0);

    t0 = Clock::now();
    const std::size_t from = recs.size();
    Rng rng(experiment_seed(ctx, "transition-delta"));
    const GridSpec g = make_grid(p.integer("conv_n"), p.real("conv_box_length"));
    const auto psi = gaussian_field(g, rng, 1.2);
    const double x0 = p.real("x0");
    const auto conv = apply_transition(transition_operator(x0, g, mass), psi);
    const auto evolved = inverse_majorana_fourier(evolve(majorana_fourier(psi, mass), x0, mass), mass);
    recs.push_back(record("convolution_vs_evolve", max_difference(conv, evolved), 1e-10));
    const auto twice = apply_transition(transition_operator(0.5 * x0, g, mass),
                                        apply_transition(transition_operator(0.5 * x0, g, mass), psi));
    recs.push_back(record("composition_error", max_difference(twice, conv), 1e-9));
    stamp(recs, from, t0);
    return res;
}

ExperimentResult causality(const Params& p, const RunContext&) {
    const auto ns = p.integers("ns");
    for (int n : ns)
        if (n % 2 != 0) throw ConfigError("key 'ns' must hold even sizes");
    const MassParam mass{p.real("mass")};
    const auto recs = causality_scan(p.real("x0"), p.real("box_length"), ns, mass, p.real("offset"), p.real("window_fraction"));
    ExperimentResult res;
    Table table{"causality", {"n", "offset", "x0", "norm", "raw_norm", "max_spacelike", "origin_norm"}, {}};
    int violations = 0;
    for (std::size_t i = 0; i < recs.size(); ++i) {
        const auto& r = recs[i];
        table.rows.push_back({double(r.n), r.offset, r.x0, r.norm, r.raw_norm, r.max_spacelike, r.origin_norm});
        res.records.push_back(info("spacelike_norm_n" + std::to_string(r.n), r.norm));
        res.records.push_back(info("raw_spacelike_norm_n" + std::to_string(r.n), r.raw_norm, "no momentum window"));
        if (i > 0 && !(r.norm < recs[i - 1].norm)) ++violations;
    }
    res.records.push_back(record("monotonicity_violations", violations, 0, Predicate::eq, "windowed norm at the fixed offset must decrease"));
    double timelike = 1e300;
    for (const auto& r : recs) timelike = std::min(timelike, r.origin_norm / r.norm);
    res.records.push_back(record("min_origin_to_spacelike_ratio", timelike, 1.0, Predicate::ge, "T stays non-vanishing inside the cone"));
    res.tables.push_back(std::move(table));
    return res;
}

std::vector<Experiment> build_catalogue() {
    using K = ParamKind;
    std::vector<Experiment> c;
    c.push_back({"check-clifford", "clifford-algebra",
                 "Exact anticommutators, covering homomorphism, irreducibility certificate",
                 {int_param("covering_samples", 1000, 1, 1e6, "random Spin+ pairs"),
                  real_param("covering_range", 2.0, 0.0, 10.0, "parameters drawn from [-range, range]")},
                 check_clifford});
    c.push_back({"theta-isometry", "pauli-majorana-isomorphism", "Theta map preserves norms and inverts exactly",
                 {int_param("n", 8, 2, 64, "grid points per axis"), real_param("box_length", 10.0, 1e-3, 1e6, "box side"),
                  int_param("fields", 100, 1, 1e5, "random Pauli fields")},
                 theta_isometry});
    c.push_back({"fourier-unitarity", "majorana-fourier-transform", "Unitarity, round trip and literal-kernel agreement",
                 {int_param("n", 16, 2, 128, "grid points per axis"), real_param("box_length", 10.0, 1e-3, 1e6, "box side"),
                  list_param("masses", K::real_list, "0,0.5,1,10", 0.0, 1e6, "masses"),
                  int_param("fields", 20, 1, 1e4, "random fields per mass"),
                  int_param("direct_n", 8, 2, 8, "grid size for the literal kernel sum")},
                 fourier_unitarity});
    c.push_back({"fourier-diagonalization", "majorana-fourier-transform", "F_M turns iH into ig0 E_p",
                 {int_param("n", 16, 2, 128, "grid points per axis"), real_param("box_length", 10.0, 1e-3, 1e6, "box side"),
                  list_param("masses", K::real_list, "0,0.5,1,10", 0.0, 1e6, "masses"),
                  int_param("fields", 3, 1, 1e4, "random fields per mass")},
                 fourier_diagonalization});
    c.push_back({"energy-transform", "majorana-fourier-transform", "Time-axis transform is unitary",
                 {int_param("n", 64, 2, 1 << 20, "time samples"), real_param("time_length", 20.0, 1e-3, 1e6, "time window"),
                  int_param("fields", 5, 1, 1e4, "random fields")},
                 energy_transform_check});
    c.push_back({"hankel-specialfns", "majorana-hankel-transform",
                 "Bessel and Legendre against extended-precision oracles, omega orthonormality, pseudo-scalar identity",
                 {int_param("l_max", 8, 1, 32, "largest degree"), int_param("samples", 200, 10, 1e5, "Bessel samples per degree"),
                  int_param("omega_l_max", 4, 1, 8, "largest l in the orthonormality check"),
                  int_param("identity_points", 100, 1, 1e5, "random points for the identity")},
                 hankel_specialfns});
    c.push_back({"hankel-roundtrip", "majorana-hankel-transform", "Band-limited analysis-synthesis round trip and refinement",
                 {real_param("r_max", 8.0, 0.1, 1e3, "ball radius"), int_param("n_r", 64, 4, 512, "radial nodes"),
                  int_param("n_theta", 32, 2, 256, "polar nodes"), int_param("n_phi", 32, 2, 512, "azimuthal nodes"),
                  int_param("l_max", 8, 1, 32, "largest l"), real_param("mass", 1.0, 0.0, 1e6, "mass"),
                  real_param("bump_fraction", 0.75, 0.05, 1.0, "bump radius over r_max")},
                 hankel_roundtrip});
    c.push_back({"angular-momentum", "majorana-hankel-transform", "J_z and the Dirac operator act diagonally on modes",
                 {real_param("r_max", 8.0, 0.1, 1e3, "ball radius"), int_param("n_r", 64, 4, 512, "radial nodes"),
                  int_param("n_theta", 32, 2, 256, "polar nodes"), int_param("n_phi", 32, 2, 512, "azimuthal nodes"),
                  int_param("l_max", 8, 2, 32, "largest l"), real_param("mass", 0.7, 0.0, 1e6, "mass"),
                  real_param("dirac_step", 1e-4, 1e-8, 1e-1, "finite-difference step")},
                 angular_momentum});
    c.push_back({"evolve-dirac-residual", "poincare-representation", "Evolved fields solve the free Dirac equation to second order",
                 {int_param("n", 16, 2, 128, "grid points per axis"), real_param("box_length", 10.0, 1e-3, 1e6, "box side"),
                  real_param("mass", 1.0, 0.0, 1e6, "mass"), real_param("width", 1.2, 1e-3, 1e3, "Gaussian width"),
                  real_param("time", 0.5, -1e6, 1e6, "evaluation time"), real_param("dt", 0.02, 1e-6, 1.0, "coarse step")},
                 evolve_dirac_residual});
    c.push_back({"boost-unitarity", "poincare-representation", "Boosts preserve the momentum-space norm; Wigner factor commutes with ig0",
                 {real_param("mass", 1.0, 1e-6, 1e6, "mass (> 0)"), real_param("width", 1.0, 1e-3, 1e3, "Gaussian width"),
                  list_param("rapidities", K::real_list, "0.1,0.5,1.0", -3.0, 3.0, "z-boost rapidities"),
                  int_param("transverse_nodes", 48, 4, 400, "Gauss-Legendre nodes in x and y"),
                  int_param("longitudinal_nodes", 240, 4, 1000, "Gauss-Legendre nodes in z"),
                  int_param("wigner_samples", 200, 1, 1e6, "random (S, p) for the commutator")},
                 boost_unitarity});
    c.push_back({"rotation-2pi-sign", "poincare-representation", "A 2 pi rotation is -1; quarter turns agree with the grid",
                 {real_param("r_max", 8.0, 0.1, 1e3, "ball radius"), int_param("n_r", 24, 4, 512, "radial nodes"),
                  int_param("n_theta", 12, 2, 256, "polar nodes"), int_param("n_phi", 16, 4, 512, "azimuthal nodes"),
                  int_param("l_max", 3, 2, 32, "largest l"), real_param("mass", 1.0, 0.0, 1e6, "mass")},
                 rotation_2pi_sign});
    c.push_back({"projective-signs", "poincare-representation", "Composition holds up to a sign that is exactly +-1",
                 {int_param("n", 8, 2, 64, "grid points per axis"), real_param("box_length", 10.0, 1e-3, 1e6, "box side"),
                  real_param("mass", 1.0, 0.0, 1e6, "mass")},
                 projective_signs});
    c.push_back({"transition-delta", "poincare-representation", "Transition operator: discrete delta, convolution equals evolve",
                 {int_param("n", 16, 2, 64, "grid for the delta check"), real_param("box_length", 10.0, 1e-3, 1e6, "box side"),
                  real_param("mass", 1.0, 0.0, 1e6, "mass"), int_param("conv_n", 8, 2, 16, "grid for the convolution"),
                  real_param("conv_box_length", 8.0, 1e-3, 1e6, "box side for the convolution"),
                  real_param("x0", 0.8, -1e3, 1e3, "evolution time")},
                 transition_delta});
    c.push_back({"causality-scan", "poincare-representation", "Spacelike transition norm decreases under refinement",
                 {list_param("ns", K::integer_list, "8,16,32", 2, 64, "grid sizes"),
                  real_param("box_length", 10.0, 1e-3, 1e6, "box side"), real_param("mass", 1.0, 0.0, 1e6, "mass"),
                  real_param("x0", 2.0, 1e-6, 1e3, "time"), real_param("offset", 5.0, 0.0, 1e6, "spatial offset along x"),
                  real_param("window_fraction", 0.15, 1e-3, 10.0, "momentum window over the lattice cutoff")},
                 causality});
    return c;
}

}  // namespace

const std::vector<Experiment>& experiment_catalogue() {
    static const std::vector<Experiment> catalogue = build_catalogue();
    return catalogue;
}

}  // namespace majorana
