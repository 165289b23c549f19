#include "majorana/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "majorana/errors.hpp"

namespace majorana {

namespace {

double legendre_nonneg(int l, int mu, double xi) {
    // P_mu^mu = (-1)^mu (2mu-1)!! (1 - xi^2)^{mu/2}
    const double s = std::sqrt(std::max(0.0, (1.0 - xi) * (1.0 + xi)));
    double pmm = 1.0;
    for (int k = 1; k <= mu; ++k) pmm *= -(2.0 * k - 1.0) * s;
    if (l == mu) return pmm;
    double pm1 = xi * (2.0 * mu + 1.0) * pmm;
    if (l == mu + 1) return pm1;
    double pl = 0.0;
    for (int k = mu + 2; k <= l; ++k) {
        pl = (xi * (2.0 * k - 1.0) * pm1 - (k + mu - 1.0) * pmm) / (k - mu);
        pmm = pm1;
        pm1 = pl;
    }
    return pl;
}

// (l - mu)! / (l + mu)! for mu >= 0
double factorial_ratio(int l, int mu) {
    double r = 1.0;
    for (int k = l - mu + 1; k <= l + mu; ++k) r /= k;
    return r;
}

}  // namespace

double assoc_legendre(int l, int mu, double xi) {
    if (l < 0 || std::abs(mu) > l) throw DomainError("assoc_legendre: need 0 <= |mu| <= l");
    if (mu >= 0) return legendre_nonneg(l, mu, xi);
    const int m = -mu;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    return sign * factorial_ratio(l, m) * legendre_nonneg(l, m, xi);
}

std::complex<double> spherical_harmonic(int l, int mu, double theta, double phi) {
    if (l < 0 || std::abs(mu) > l) throw DomainError("spherical_harmonic: need 0 <= |mu| <= l");
    // For mu < 0 the ratio (l-mu)!/(l+mu)! is the reciprocal of the mu > 0 one.
    const double ratio = mu >= 0 ? factorial_ratio(l, mu) : 1.0 / factorial_ratio(l, -mu);
    const double norm = std::sqrt((2.0 * l + 1.0) / (4.0 * std::numbers::pi) * ratio);
    return std::polar(norm * assoc_legendre(l, mu, std::cos(theta)), mu * phi);
}

std::vector<double> spherical_bessel_sequence(int lmax, double r) {
    if (lmax < 0) throw DomainError("spherical_bessel: order must be >= 0");
    if (r < 0.0) throw DomainError("spherical_bessel: argument must be >= 0");
    std::vector<double> j(static_cast<std::size_t>(lmax) + 1, 0.0);
    if (r == 0.0) {
        j[0] = 1.0;
        return j;
    }

    if (r < 1.0) {
        const double h = -0.5 * r * r;
        double pre = 1.0;  // r^l / (2l+1)!!
        for (int l = 0; l <= lmax; ++l) {
            if (l > 0) pre *= r / (2.0 * l + 1.0);
            double term = 1.0, sum = 1.0;
            for (int k = 1; k < 40; ++k) {
                term *= h / (k * (2.0 * l + 2.0 * k + 1.0));
                sum += term;
                if (std::abs(term) < 1e-18 * std::abs(sum)) break;
            }
            j[static_cast<std::size_t>(l)] = pre * sum;
        }
        return j;
    }

    const double j0 = std::sin(r) / r;
    const double j1 = std::sin(r) / (r * r) - std::cos(r) / r;
    j[0] = j0;
    if (lmax == 0) return j;
    j[1] = j1;

    if (r >= lmax) {
        for (int l = 1; l < lmax; ++l) j[l + 1] = (2.0 * l + 1.0) / r * j[l] - j[l - 1];
        return j;
    }

    const int start = lmax + static_cast<int>(std::sqrt(40.0 * (lmax + 1))) + 10;
    double up = 0.0, cur = 1e-30;
    for (int k = start; k >= 1; --k) {
        const double down = (2.0 * k + 1.0) / r * cur - up;
        up = cur;
        cur = down;
        if (k - 1 <= lmax) j[static_cast<std::size_t>(k - 1)] = cur;
        if (k <= lmax) j[static_cast<std::size_t>(k)] = up;
        if (std::abs(cur) > 1e250) {
            cur *= 1e-250;
            up *= 1e-250;
            for (int l = k - 1; l <= lmax; ++l) j[static_cast<std::size_t>(l)] *= 1e-250;
        }
    }
    const double scale = std::abs(j0) >= std::abs(j1) ? j0 / j[0] : j1 / j[1];
    for (auto& v : j) v *= scale;
    return j;
}

double spherical_bessel(int l, double r) { return spherical_bessel_sequence(l, r)[static_cast<std::size_t>(l)]; }

Quadrature gauss_legendre(int n, double a, double b) {
    if (n < 1) throw DomainError("gauss_legendre: need n >= 1");
    Quadrature q;
    q.nodes.resize(static_cast<std::size_t>(n));
    q.weights.resize(static_cast<std::size_t>(n));
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // x is the i-th largest root; store ascending
        q.nodes[static_cast<std::size_t>(n - 1 - i)] = mid + half * x;
        q.nodes[static_cast<std::size_t>(i)] = mid - half * x;
        q.weights[static_cast<std::size_t>(i)] = half * w;
        q.weights[static_cast<std::size_t>(n - 1 - i)] = half * w;
    }
    return q;
}

}  // namespace majorana
