#pragma once

#include <complex>
#include <vector>

namespace majorana {

// P_l^mu(xi) with the Condon-Shortley phase, i.e. the Rodrigues form
// (-1)^mu / (2^l l!) (1 - xi^2)^{mu/2} d^{l+mu}/dxi^{l+mu} (xi^2 - 1)^l.
// Upward recurrence in l from P_mu^mu; negative mu by reflection.
double assoc_legendre(int l, int mu, double xi);

// Y_lmu(theta, phi) = sqrt((2l+1)/4pi (l-mu)!/(l+mu)!) P_l^mu(cos theta) e^{i mu phi}
std::complex<double> spherical_harmonic(int l, int mu, double theta, double phi);

// j_l(r) for r >= 0.
double spherical_bessel(int l, double r);

// j_0(r) .. j_lmax(r) in one sweep. Power series for r < 1, upward recurrence
// for r >= lmax, otherwise Miller's downward recurrence normalized against the
// closed form of j_0 (or j_1 where j_0 is near a zero).
std::vector<double> spherical_bessel_sequence(int lmax, double r);

struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [a, b], nodes ascending.
Quadrature gauss_legendre(int n, double a = -1.0, double b = 1.0);

}  // namespace majorana
