#pragma once

#include <array>
#include <complex>

#include "majorana/matrix4.hpp"

namespace majorana {

// The four i*gamma^mu and i*gamma^5 of the real Majorana basis. All entries
// are integers in {-1, 0, 1}.
struct GammaSet {
    IntMatrix4 ig0, ig1, ig2, ig3, ig5;
    std::array<int, 4> metric{1, -1, -1, -1};

    const IntMatrix4& ig(int mu) const;
};

GammaSet build_majorana_basis();

// Shared immutable instance.
const GammaSet& gammas();

template <typename T>
Matrix4<T> anticommutator(const Matrix4<T>& a, const Matrix4<T>& b) {
    return a * b + b * a;
}

using DiracSpinor = std::array<std::complex<double>, 4>;

// In the Majorana basis the Majorana condition is reality of every component.
bool is_majorana(const DiracSpinor& u, double tol = 0.0);

// Real-matrix forms of gamma products, using gamma^mu gamma^nu = -(i gamma^mu)(i gamma^nu).
namespace gp {
RealMatrix4 ig(int mu);              // i gamma^mu, mu = 0..3
RealMatrix4 ig5();                   // i gamma^5
RealMatrix4 g0gj(int j);             // gamma^0 gamma^j (boost generator), j = 1..3
RealMatrix4 ig5g0gj(int j);          // i gamma^5 gamma^0 gamma^j (rotation generator)
RealMatrix4 gj_g5(int j);            // gamma^j gamma^5, j = 1..3
RealMatrix4 g0g5();                  // gamma^0 gamma^5
RealMatrix4 slash_g0(const std::array<double, 3>& p);  // p^j gamma^j gamma^0
RealMatrix4 islash(const std::array<double, 4>& p);    // i p-slash = p_mu i gamma^mu
}  // namespace gp

}  // namespace majorana
