#pragma once

#include <array>
#include <vector>

#include "majorana/matrix4.hpp"

namespace majorana {

// exp(G) by scaling and squaring: G is scaled by 2^-s until its infinity norm
// is at most 1/2, the Taylor series is summed until a term drops below 1e-16
// relative, then the result is squared s times.
RealMatrix4 matrix_exp(const RealMatrix4& g);

struct PinElement {
    RealMatrix4 S;
    LorentzMatrix lorentz;
    int sign = 1;
};

// Lambda^mu_nu = -1/4 tr(S^-1 (i gamma^mu) S (i gamma_nu)), so that
// S^-1 (i gamma^mu) S = Lambda^mu_nu (i gamma^nu). Throws NotPinElement when
// the reconstruction residual exceeds tol (relative to the size of S).
LorentzMatrix lambda_of(const RealMatrix4& S, double tol = 1e-10);

LorentzMatrix lambda_of(const Matrix4<long double>& S, double tol = 1e-10);

// Residual max_mu |S^-1 ig^mu S - Lambda^mu_nu ig^nu|_inf.
double lambda_residual(const RealMatrix4& S, const LorentzMatrix& L);

// Validates det S = 1 and the covering relation, fills the Lorentz matrix.
PinElement make_pin_element(const RealMatrix4& S, int sign = 1);

// exp(theta^j i gamma^5 gamma^0 gamma^j + b^j gamma^0 gamma^j). The rotation
// angle and the rapidity of the induced Lorentz matrix are 2|theta| and 2|b|.
PinElement spin_plus_element(const std::array<double, 3>& theta, const std::array<double, 3>& b);

// Group product. S1 S2 is formed in extended precision and its Lorentz matrix
// taken before rounding: Lambda(S) has condition number ~ |Lambda| |S|, so a
// rounded product would lose several digits for strongly boosted elements.
PinElement compose(const PinElement& a, const PinElement& b);

// {+1, -1, +ig0, -ig0, +g0g5, -g0g5, +ig5, -ig5}
std::vector<PinElement> omega_elements();

// Minkowski metric helpers.
double lorentz_defect(const LorentzMatrix& L);  // max |L^T eta L - eta|
LorentzMatrix lorentz_inverse(const LorentzMatrix& L);  // eta L^T eta
std::array<double, 4> apply(const LorentzMatrix& L, const std::array<double, 4>& x);

}  // namespace majorana
