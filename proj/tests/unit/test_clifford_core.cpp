#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>

#include "majorana/clifford.hpp"
#include "majorana/commutant.hpp"
#include "majorana/errors.hpp"
#include "majorana/pin.hpp"
#include "majorana/random.hpp"
#include "majorana/theta.hpp"

using namespace majorana;
using std::numbers::pi;

namespace {

IntMatrix4 int_rows(std::array<int, 16> v) {
    IntMatrix4 m;
    m.a = v;
    return m;
}

// Oracle exponential from Eigen's Pade-based implementation.
RealMatrix4 eigen_expm(const RealMatrix4& g) {
    Eigen::Matrix4d m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = g(r, c);
    const Eigen::Matrix4d e = m.exp();
    RealMatrix4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(r, c) = e(r, c);
    return out;
}

// Oracle for lambda_of: solve S^-1 ig^mu S = L^mu_nu ig^nu by least squares over
// all 16 entries, independent of the trace formula.
LorentzMatrix lambda_by_conjugation(const RealMatrix4& S) {
    const RealMatrix4 Si = inverse(S);
    Eigen::Matrix<double, 16, 4> basis;
    for (int nu = 0; nu < 4; ++nu)
        for (int k = 0; k < 16; ++k) basis(k, nu) = gp::ig(nu).a[k];
    LorentzMatrix L;
    for (int mu = 0; mu < 4; ++mu) {
        const RealMatrix4 c = Si * gp::ig(mu) * S;
        Eigen::Matrix<double, 16, 1> rhs;
        for (int k = 0; k < 16; ++k) rhs(k) = c.a[k];
        const Eigen::Vector4d sol = basis.colPivHouseholderQr().solve(rhs);
        for (int nu = 0; nu < 4; ++nu) L(mu, nu) = sol(nu);
    }
    return L;
}

// Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
int exact_rank(std::vector<std::vector<long long>> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int rank = 0;
    long long prev = 1;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int k = c + 1; k < cols; ++k) a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

int brute_force_commutant_dim(const std::vector<IntMatrix4>& gens, bool symmetric) {
    std::vector<std::vector<long long>> rows;
    for (const auto& G : gens)
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                std::vector<long long> row(16, 0);
                for (int j = 0; j < 4; ++j) {
                    row[r * 4 + j] += G(j, c);
                    row[j * 4 + c] -= G(r, j);
                }
                if (symmetric) {
                    std::vector<long long> srow;
                    for (int a = 0; a < 4; ++a)
                        for (int b = a; b < 4; ++b) srow.push_back(a == b ? row[a * 4 + a] : row[a * 4 + b] + row[b * 4 + a]);
                    row = srow;
                }
                rows.push_back(row);
            }
    const int unknowns = symmetric ? 10 : 16;
    return unknowns - (rows.empty() ? 0 : exact_rank(rows));
}

std::array<double, 3> random3(Rng& rng, double lo, double hi) {
    return {rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)};
}

}  // namespace

TEST_CASE("basis reproduces the displayed generators") {
    const GammaSet& g = gammas();
    CHECK(g.ig1 == IntMatrix4::diagonal(1, -1, -1, 1));
    CHECK(g.ig0 == int_rows({0, 0, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 0, 0}));
    CHECK(g.ig2 == int_rows({0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0}));
    CHECK(g.ig3 == int_rows({0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0}));
    CHECK(g.ig0 * g.ig0 == -IntMatrix4::identity());
}

TEST_CASE("pseudo-scalar follows the defining product, not the displayed sign") {
    const GammaSet& g = gammas();
    const IntMatrix4 displayed = int_rows({0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0});
    CHECK(g.ig5 == -(g.ig0 * g.ig1 * g.ig2 * g.ig3));
    // The displayed matrix is the opposite sign; row 0 is therefore (0, +1, 0, 0).
    CHECK(displayed == g.ig0 * g.ig1 * g.ig2 * g.ig3);
    CHECK(g.ig5 == -displayed);
    CHECK(g.ig5(0, 1) == 1);
}

TEST_CASE("all 25 anticommutators are exact") {
    const GammaSet& g = gammas();
    const int idx[5] = {0, 1, 2, 3, 5};
    for (int a : idx)
        for (int b : idx) {
            IntMatrix4 expect{};
            if (a == b) {
                // (ig^mu)^2 = -g^{mu mu}; (ig5)^2 = -1
                const int gmm = (a == 5) ? 1 : g.metric[a];
                expect = (-2 * gmm) * IntMatrix4::identity();
            }
            CAPTURE(a);
            CAPTURE(b);
            CHECK(anticommutator(g.ig(a), g.ig(b)) == expect);
        }
}

TEST_CASE("generators are orthogonal with entries in {-1,0,1}") {
    const GammaSet& g = gammas();
    for (int a : {0, 1, 2, 3, 5}) {
        CHECK(g.ig(a).transpose() * g.ig(a) == IntMatrix4::identity());
        for (int v : g.ig(a).a) CHECK(std::abs(v) <= 1);
    }
}

TEST_CASE("anticommutator examples") {
    const GammaSet& g = gammas();
    CHECK(anticommutator(g.ig0, g.ig0) == -2 * IntMatrix4::identity());
    CHECK(anticommutator(g.ig1, g.ig2) == IntMatrix4::zero());
    CHECK(anticommutator(IntMatrix4::identity(), IntMatrix4::identity()) == 2 * IntMatrix4::identity());
}

TEST_CASE("is_majorana") {
    using C = std::complex<double>;
    CHECK(is_majorana({C(1), C(0), C(0), C(0)}));
    CHECK_FALSE(is_majorana({C(0, 1), C(0), C(0), C(0)}));
    const MajoranaSpinor u{{0.3, -1.2, 2.0, 0.7}};
    const MajoranaSpinor v = gp::ig(0) * u;
    CHECK(is_majorana({C(v[0]), C(v[1]), C(v[2]), C(v[3])}));
    CHECK(is_majorana({C(1, 1e-15), C(0), C(0), C(0)}, 1e-14));
}

TEST_CASE("gamma products in real form") {
    const RealMatrix4 I = RealMatrix4::identity();
    for (int j = 1; j <= 3; ++j) {
        CHECK(gp::g0gj(j) * gp::g0gj(j) == I);                  // boost generators square to +1
        CHECK(gp::ig5g0gj(j) * gp::ig5g0gj(j) == -I);          // rotation generators square to -1
        CHECK(gp::g0gj(j).transpose() == gp::g0gj(j));
        CHECK(gp::ig5g0gj(j).transpose() == -gp::ig5g0gj(j));
    }
    CHECK(gp::gj_g5(3) * gp::gj_g5(3) == I);
    const std::array<double, 3> p{0.3, -1.1, 0.7};
    const RealMatrix4 B = gp::slash_g0(p);
    CHECK(B.transpose() == B);
    CHECK(max_abs(B * B - (0.09 + 1.21 + 0.49) * I) < 1e-15);
}

TEST_CASE("matrix_exp against closed forms and an independent Pade oracle") {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        const double th = rng.uniform(-4, 4);
        const RealMatrix4 J = gp::ig5g0gj(1 + t % 3);
        const RealMatrix4 K = gp::g0gj(1 + t % 3);
        CHECK(max_abs(matrix_exp(th * J) - (std::cos(th) * RealMatrix4::identity() + std::sin(th) * J)) < 1e-14);
        CHECK(max_abs(matrix_exp(th * K) - (std::cosh(th) * RealMatrix4::identity() + std::sinh(th) * K)) <
              1e-14 * std::cosh(th));
    }
    for (int t = 0; t < 50; ++t) {
        RealMatrix4 g;
        for (auto& v : g.a) v = rng.uniform(-2, 2);
        const RealMatrix4 ref = eigen_expm(g);
        CHECK(max_abs(matrix_exp(g) - ref) < 1e-13 * std::max(1.0, max_abs(ref)));
    }
    CHECK(matrix_exp(RealMatrix4::zero()) == RealMatrix4::identity());
}

TEST_CASE("spin_plus_element examples") {
    const PinElement id = spin_plus_element({0, 0, 0}, {0, 0, 0});
    CHECK(id.S == RealMatrix4::identity());
    CHECK(max_abs(id.lorentz - LorentzMatrix::identity()) == 0.0);

    const PinElement half = spin_plus_element({0, 0, pi}, {0, 0, 0});
    CHECK(max_abs(half.S + RealMatrix4::identity()) < 1e-14);
    CHECK(max_abs(half.lorentz - LorentzMatrix::identity()) < 1e-14);

    const PinElement full = spin_plus_element({0, 0, 2 * pi}, {0, 0, 0});
    CHECK(max_abs(full.S - RealMatrix4::identity()) < 1e-14);
    CHECK(max_abs(full.lorentz - LorentzMatrix::identity()) < 1e-14);

    // Generator angle pi/2 is a rotation by pi about z.
    const PinElement quarter = spin_plus_element({0, 0, pi / 2}, {0, 0, 0});
    CHECK(max_abs(quarter.lorentz - LorentzMatrix::diagonal(1, -1, -1, 1)) < 1e-14);
}

TEST_CASE("rotation sense of the z generator") {
    const double th = 0.4;
    const PinElement r = spin_plus_element({0, 0, th / 2}, {0, 0, 0});
    CHECK(r.lorentz(1, 1) == doctest::Approx(std::cos(th)).epsilon(1e-14));
    CHECK(r.lorentz(1, 2) == doctest::Approx(std::sin(th)).epsilon(1e-14));
    CHECK(r.lorentz(2, 1) == doctest::Approx(-std::sin(th)).epsilon(1e-14));
}

TEST_CASE("lambda_of examples and oracle agreement") {
    CHECK(max_abs(lambda_of(RealMatrix4::identity()) - LorentzMatrix::identity()) == 0.0);
    CHECK(max_abs(lambda_of(gp::ig(0)) - LorentzMatrix::diagonal(1, -1, -1, -1)) == 0.0);
    for (double b : {0.1, 0.5, 1.3}) {
        const PinElement e = spin_plus_element({0, 0, 0}, {0, 0, b});
        CHECK(e.lorentz(0, 0) == doctest::Approx(std::cosh(2 * b)).epsilon(1e-13));
        CHECK(std::abs(std::abs(e.lorentz(0, 3)) - std::sinh(2 * b)) < 1e-12 * std::cosh(2 * b));
    }
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        const auto th = random3(rng, -1, 1);
        const auto bo = random3(rng, -1, 1);
        const PinElement e = spin_plus_element(th, bo);
        CHECK(max_abs(e.lorentz - lambda_by_conjugation(e.S)) < 1e-10);
        CHECK(lambda_residual(e.S, e.lorentz) < 1e-12 * std::max(1.0, max_abs(e.S) * max_abs(e.S)));
        CHECK(lorentz_defect(e.lorentz) < 1e-12 * std::max(1.0, max_abs(e.lorentz) * max_abs(e.lorentz)));
        CHECK(lambda_of(-e.S) == e.lorentz);
    }
}

TEST_CASE("lambda_of rejects non-Pin input") {
    CHECK_THROWS_AS(lambda_of(RealMatrix4::diagonal(1, 2, 1, 1)), NotPinElement);
    CHECK_THROWS_AS(lambda_of(RealMatrix4::zero()), NotPinElement);
    CHECK_THROWS_AS(make_pin_element(2.0 * RealMatrix4::identity()), NotPinElement);
}

TEST_CASE("covering homomorphism on random Spin+ elements") {
    // Arguments are drawn in a fixed order; argument evaluation order is unspecified.
    Rng rng(2024);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const auto ta = random3(rng, -2, 2), ba = random3(rng, -2, 2);
        const auto tb = random3(rng, -2, 2), bb = random3(rng, -2, 2);
        const PinElement a = spin_plus_element(ta, ba);
        const PinElement b = spin_plus_element(tb, bb);
        const PinElement ab = compose(a, b);
        worst = std::max(worst, max_abs(ab.lorentz - a.lorentz * b.lorentz));
        CHECK(max_abs(ab.S - a.S * b.S) <= 1e-15 * max_abs(a.S) * max_abs(b.S) * 4);
        CHECK(lambda_of(-a.S) == a.lorentz);
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("omega elements cover Delta") {
    const auto om = omega_elements();
    REQUIRE(om.size() == 8);
    const LorentzMatrix expect[4] = {LorentzMatrix::identity(), LorentzMatrix::diagonal(1, -1, -1, -1),
                                     LorentzMatrix::diagonal(-1, 1, 1, 1), LorentzMatrix::diagonal(-1, -1, -1, -1)};
    for (int k = 0; k < 8; ++k) {
        CHECK(om[k].S.transpose() * om[k].S == RealMatrix4::identity());
        CHECK(max_abs(om[k].lorentz - expect[k / 2]) == 0.0);
    }
}

TEST_CASE("commutant certificate against exact brute force") {
    const GammaSet& g = gammas();
    const std::vector<IntMatrix4> su2_int = {g.ig5 * (-(g.ig0 * g.ig1)), g.ig5 * (-(g.ig0 * g.ig2)),
                                             g.ig5 * (-(g.ig0 * g.ig3))};
    std::vector<RealMatrix4> su2;
    for (const auto& m : su2_int) su2.push_back(to_real(m));
    for (int j = 0; j < 3; ++j) CHECK(su2[j] == gp::ig5g0gj(j + 1));

    const CommutantDims d = commutant_certificate(su2);
    CHECK(d.dim_commutant == 4);
    CHECK(d.dim_symmetric_commutant == 1);
    CHECK(d.dim_commutant == brute_force_commutant_dim(su2_int, false));
    CHECK(d.dim_symmetric_commutant == brute_force_commutant_dim(su2_int, true));

    CHECK(commutant_certificate({}).dim_commutant == 16);
    CHECK(commutant_certificate({}).dim_symmetric_commutant == 10);
    CHECK(commutant_certificate({RealMatrix4::identity()}).dim_commutant == 16);

    // Block-reducible control: the same 2x2 rotation on both halves of R^4.
    const IntMatrix4 block = int_rows({0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0});
    const CommutantDims ctl = commutant_certificate({to_real(block)});
    CHECK(ctl.dim_symmetric_commutant >= 2);
    CHECK(ctl.dim_commutant == brute_force_commutant_dim({block}, false));
    CHECK(ctl.dim_symmetric_commutant == brute_force_commutant_dim({block}, true));
}

TEST_CASE("Theta basis invariants") {
    const ThetaBasis& tb = theta_basis();
    const RealMatrix4 g35 = gp::gj_g5(3);
    const RealMatrix4 ig0 = gp::ig(0);
    CHECK(g35 * tb.M_plus == tb.M_plus);
    CHECK(g35 * tb.M_minus == -1.0 * tb.M_minus);
    const MajoranaSpinor vs[4] = {tb.M_plus, tb.M_minus, ig0 * tb.M_plus, ig0 * tb.M_minus};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(dot(vs[a], vs[b]) == (a == b ? 1.0 : 0.0));
    CHECK(tb.M_plus == MajoranaSpinor{{1, 0, 0, 0}});
    CHECK(theta_matrix().transpose() * theta_matrix() == RealMatrix4::identity());
}

TEST_CASE("Theta map examples") {
    const ThetaBasis& tb = theta_basis();
    const RealMatrix4 ig0 = gp::ig(0);
    CHECK(theta(tb.P_plus) == tb.M_plus);
    CHECK(theta(PauliSpinor{}) == MajoranaSpinor{});
    const PauliSpinor mix = complex(2) * tb.P_plus + complex(0, 3) * tb.P_minus;
    CHECK(theta(mix) == 2.0 * tb.M_plus + 3.0 * (ig0 * tb.M_minus));
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        const PauliSpinor p{{complex(rng.normal(), rng.normal()), complex(rng.normal(), rng.normal())}};
        const PauliSpinor back = inverse_theta(theta(p));
        CHECK(std::abs(back[0] - p[0]) + std::abs(back[1] - p[1]) < 1e-15);
        CHECK(theta(p).norm_squared() == doctest::Approx(p.norm_squared()).epsilon(1e-15));
        const MajoranaSpinor lhs = theta(complex(0, 1) * p);
        const MajoranaSpinor rhs = ig0 * theta(p);
        for (int c = 0; c < 4; ++c) CHECK(std::abs(lhs[c] - rhs[c]) < 1e-15);
    }
}

TEST_CASE("Theta carries the Pauli algebra to (ig0, g1g5, g3g5)") {
    const Complex2 I2 = Complex2::identity();
    const Complex2 s1{{complex(0), complex(1), complex(1), complex(0)}};
    const Complex2 s3{{complex(1), complex(0), complex(0), complex(-1)}};
    CHECK(conjugate_by_theta(complex(0, 1) * I2) == gp::ig(0));
    CHECK(conjugate_by_theta(s1) == gp::gj_g5(1));
    CHECK(conjugate_by_theta(s3) == gp::gj_g5(3));
    Rng rng(9);
    for (int t = 0; t < 100; ++t) {
        Complex2 m;
        for (auto& z : m.a) z = complex(rng.normal(), rng.normal());
        CHECK(max_abs(conjugate_by_theta(m) - substitute_pauli_algebra(m)) < 1e-14);
    }
}
