#include "majorana/clifford.hpp"

#include <cmath>
#include <stdexcept>

namespace majorana {

namespace {

IntMatrix4 rows(std::array<int, 16> v) {
    IntMatrix4 m;
    m.a = v;
    return m;
}

}  // namespace

const IntMatrix4& GammaSet::ig(int mu) const {
    switch (mu) {
        case 0: return ig0;
        case 1: return ig1;
        case 2: return ig2;
        case 3: return ig3;
        case 5: return ig5;
        default: throw std::out_of_range("gamma index must be 0..3 or 5");
    }
}

GammaSet build_majorana_basis() {
    GammaSet g;
    g.ig0 = rows({0, 0, 1, 0,
                  0, 0, 0, 1,
                  -1, 0, 0, 0,
                  0, -1, 0, 0});
    g.ig1 = IntMatrix4::diagonal(1, -1, -1, 1);
    g.ig2 = rows({0, 0, 1, 0,
                  0, 0, 0, 1,
                  1, 0, 0, 0,
                  0, 1, 0, 0});
    g.ig3 = rows({0, 1, 0, 0,
                  1, 0, 0, 0,
                  0, 0, 0, -1,
                  0, 0, -1, 0});
    // Fixed by the defining product rather than copied from a display: the
    // displayed pseudo-scalar equals +(ig0)(ig1)(ig2)(ig3), which breaks the
    // Hankel-mode Dirac relation downstream.
    g.ig5 = -(g.ig0 * g.ig1 * g.ig2 * g.ig3);
    return g;
}

const GammaSet& gammas() {
    static const GammaSet g = build_majorana_basis();
    return g;
}

bool is_majorana(const DiracSpinor& u, double tol) {
    for (const auto& z : u)
        if (std::abs(z.imag()) > tol) return false;
    return true;
}

namespace gp {

RealMatrix4 ig(int mu) { return to_real(gammas().ig(mu)); }

RealMatrix4 ig5() { return to_real(gammas().ig5); }

RealMatrix4 g0gj(int j) { return -(ig(0) * ig(j)); }

RealMatrix4 ig5g0gj(int j) { return ig5() * g0gj(j); }

RealMatrix4 gj_g5(int j) { return -(ig(j) * ig5()); }

RealMatrix4 g0g5() { return -(ig(0) * ig5()); }

RealMatrix4 slash_g0(const std::array<double, 3>& p) {
    RealMatrix4 b;
    for (int j = 1; j <= 3; ++j) b -= p[j - 1] * (ig(j) * ig(0));
    return b;
}

RealMatrix4 islash(const std::array<double, 4>& p) {
    RealMatrix4 s = p[0] * ig(0);
    for (int j = 1; j <= 3; ++j) s -= p[j] * ig(j);
    return s;
}

}  // namespace gp

}  // namespace majorana
