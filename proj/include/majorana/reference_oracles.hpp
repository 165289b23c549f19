#pragma once

// Slow extended-precision references for the special functions. Header only;
// pulls in Boost.Multiprecision, so include it only where an oracle is needed.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace majorana::oracle {

using big = boost::multiprecision::cpp_bin_float_100;

// j_l by the Rayleigh closed form: j_0 = sin x/x, j_1 = sin x/x^2 - cos x/x and the
// three-term relation generating the Rayleigh polynomials, all in 100-digit arithmetic.
inline double bessel_closed_form(int l, double r) {
    const big x = r;
    big j0 = sin(x) / x;
    if (l == 0) return static_cast<double>(j0);
    big j1 = sin(x) / (x * x) - cos(x) / x;
    for (int k = 1; k < l; ++k) {
        big j2 = (2 * k + 1) / x * j1 - j0;
        j0 = j1;
        j1 = j2;
    }
    return static_cast<double>(j1);
}

// j_l by its power series x^l sum_k (-x^2/2)^k / (k! (2l+2k+1)!!), 100-digit arithmetic.
inline double bessel_series(int l, double r) {
    const big x = r, h = -x * x / 2;
    big pre = 1;
    for (int k = 1; k <= l; ++k) pre *= x / (2 * k + 1);
    big term = 1, sum = 1;
    for (int k = 1; k < 2000; ++k) {
        term *= h / (k * (2 * l + 2 * k + 1));
        sum += term;
        if (abs(term) < big("1e-60") * abs(sum) && k > x) break;
    }
    return static_cast<double>(pre * sum);
}

// P_l^mu (Condon-Shortley phase) by the Rodrigues formula, with exact integer
// coefficients of d^{l+mu}/dxi^{l+mu} (xi^2-1)^l. Requires 0 <= mu <= l.
inline double legendre_rodrigues(int l, int mu, double xi_d) {
    using boost::multiprecision::cpp_int;
    const big xi = xi_d;
    const int d = l + mu;
    big poly = 0;
    // (xi^2 - 1)^l = sum_k C(l,k) (-1)^(l-k) xi^(2k); differentiate d times.
    for (int k = 0; k <= l; ++k) {
        if (2 * k < d) continue;
        cpp_int coef = 1;
        for (int i = 0; i < k; ++i) coef = coef * (l - i) / (i + 1);  // C(l, k)
        if ((l - k) % 2) coef = -coef;
        for (int i = 0; i < d; ++i) coef *= (2 * k - i);
        poly += big(coef) * pow(xi, 2 * k - d);
    }
    cpp_int denom = 1;
    for (int i = 1; i <= l; ++i) denom *= 2 * i;  // 2^l l!
    big val = poly / big(denom) * pow(1 - xi * xi, big(mu) / 2);
    if (mu % 2) val = -val;
    return static_cast<double>(val);
}

}  // namespace majorana::oracle
