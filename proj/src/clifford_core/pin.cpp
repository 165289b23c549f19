#include "majorana/pin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "majorana/clifford.hpp"
#include "majorana/errors.hpp"

namespace majorana {

namespace {

using Wide = Matrix4<long double>;

template <typename T>
T inf_norm(const Matrix4<T>& m) {
    T best = 0;
    for (int r = 0; r < 4; ++r) {
        T s = 0;
        for (int c = 0; c < 4; ++c) s += std::abs(m(r, c));
        best = std::max(best, s);
    }
    return best;
}

const std::array<Wide, 4>& wide_gammas() {
    static const std::array<Wide, 4> g{matrix_cast<long double>(gp::ig(0)), matrix_cast<long double>(gp::ig(1)),
                                       matrix_cast<long double>(gp::ig(2)), matrix_cast<long double>(gp::ig(3))};
    return g;
}

constexpr std::array<long double, 4> eta{1.0L, -1.0L, -1.0L, -1.0L};

// The covering map amplifies rounding by |S| |S^-1| ~ cosh(rapidity), so the
// trace formula and the residual are evaluated in extended precision.
LorentzMatrix lambda_unchecked(const Wide& S, const Wide& Sinv) {
    const auto& g = wide_gammas();
    LorentzMatrix L;
    for (int mu = 0; mu < 4; ++mu) {
        const Wide conj = Sinv * g[mu] * S;
        for (int nu = 0; nu < 4; ++nu)
            L(mu, nu) = static_cast<double>(-0.25L * eta[nu] * (conj * g[nu]).trace());
    }
    return L;
}

double residual_with(const Wide& S, const Wide& Sinv, const LorentzMatrix& L) {
    const auto& g = wide_gammas();
    long double worst = 0;
    for (int mu = 0; mu < 4; ++mu) {
        Wide d = Sinv * g[mu] * S;
        for (int nu = 0; nu < 4; ++nu) d -= static_cast<long double>(L(mu, nu)) * g[nu];
        for (long double v : d.a) worst = std::max(worst, std::abs(v));
    }
    return static_cast<double>(worst);
}

}  // namespace

RealMatrix4 matrix_exp(const RealMatrix4& g) {
    const Wide gw = matrix_cast<long double>(g);
    const long double norm = inf_norm(gw);
    int squarings = 0;
    long double scale = 1;
    while (norm * scale > 0.5L) {
        scale *= 0.5L;
        ++squarings;
    }
    const Wide x = scale * gw;
    Wide sum = Wide::identity();
    Wide term = Wide::identity();
    for (int k = 1; k < 64; ++k) {
        term = (term * x) * (1.0L / k);
        sum += term;
        if (inf_norm(term) <= std::numeric_limits<long double>::epsilon() * inf_norm(sum)) break;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return matrix_cast<double>(sum);
}

LorentzMatrix lambda_of(const RealMatrix4& S, double tol) { return lambda_of(matrix_cast<long double>(S), tol); }

LorentzMatrix lambda_of(const Matrix4<long double>& Sw, double tol) {
    Wide Sinv;
    try {
        Sinv = inverse(Sw);
    } catch (const std::domain_error&) {
        throw NotPinElement("lambda_of: matrix is singular");
    }
    LorentzMatrix L = lambda_unchecked(Sw, Sinv);
    const double scale = std::max(1.0, static_cast<double>(inf_norm(Sw) * inf_norm(Sinv)));
    if (residual_with(Sw, Sinv, L) > tol * scale)
        throw NotPinElement("lambda_of: S does not conjugate the gamma matrices into each other");
    return L;
}

double lambda_residual(const RealMatrix4& S, const LorentzMatrix& L) {
    const Wide Sw = matrix_cast<long double>(S);
    return residual_with(Sw, inverse(Sw), L);
}

PinElement make_pin_element(const RealMatrix4& S, int sign) {
    const double n = std::max(1.0, inf_norm(S));
    if (std::abs(determinant(S) - 1.0) > 1e-12 * n * n * n * n)
        throw NotPinElement("make_pin_element: det S != 1");
    return PinElement{S, lambda_of(S), sign};
}

PinElement spin_plus_element(const std::array<double, 3>& theta, const std::array<double, 3>& b) {
    RealMatrix4 gen;
    for (int j = 1; j <= 3; ++j) {
        gen += theta[j - 1] * gp::ig5g0gj(j);
        gen += b[j - 1] * gp::g0gj(j);
    }
    return make_pin_element(matrix_exp(gen));
}

PinElement compose(const PinElement& a, const PinElement& b) {
    const Wide prod = matrix_cast<long double>(a.S) * matrix_cast<long double>(b.S);
    return PinElement{matrix_cast<double>(prod), lambda_of(prod), a.sign * b.sign};
}

std::vector<PinElement> omega_elements() {
    const RealMatrix4 base[4] = {RealMatrix4::identity(), gp::ig(0), gp::g0g5(), gp::ig5()};
    std::vector<PinElement> out;
    for (const auto& m : base) {
        out.push_back(make_pin_element(m));
        out.push_back(make_pin_element(-m));
    }
    return out;
}

double lorentz_defect(const LorentzMatrix& L) {
    const LorentzMatrix e = LorentzMatrix::diagonal(1, -1, -1, -1);
    return max_abs(L.transpose() * e * L - e);
}

LorentzMatrix lorentz_inverse(const LorentzMatrix& L) {
    const LorentzMatrix e = LorentzMatrix::diagonal(1, -1, -1, -1);
    return e * L.transpose() * e;
}

std::array<double, 4> apply(const LorentzMatrix& L, const std::array<double, 4>& x) {
    std::array<double, 4> y{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) y[i] += L(i, j) * x[j];
    return y;
}

}  // namespace majorana
