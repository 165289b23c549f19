#pragma once

#include <array>
#include <functional>
#include <vector>

#include "majorana/fields.hpp"
#include "majorana/hankel.hpp"
#include "majorana/pin.hpp"

namespace majorana {

using FourVector = std::array<double, 4>;

// e^{-i g0 E_p x0} on every momentum mode.
MajoranaSpinorField evolve(const MajoranaSpinorField& phi, double x0, const MassParam& mass);

struct EvolvedField {
    MajoranaSpinorField base;  // momentum space
    double x0 = 0.0;
    MajoranaSpinorField at(const MassParam& mass) const { return evolve(base, x0, mass); }
};

// e^{-i g0 (E_p b0 - p.b)}: the momentum image of Psi(x) -> Psi(x + b).
// A pure time shift b = (t, 0) is therefore evolve(t).
MajoranaSpinorField translate(const MajoranaSpinorField& phi, const FourVector& b, const MassParam& mass);

// cos((mu+1/2) theta) + sin((mu+1/2) theta) ig0 on each (p, l, mu). Angles that
// are whole multiples of pi/2 are reduced exactly, so theta = 2 pi gives -1.
MajoranaModeField rotate_z(const MajoranaModeField& modes, double theta);

// (cos a, sin a) with exact values when a is a multiple of pi/2.
std::array<double, 2> exact_cos_sin(double a);

// B_p = (p-slash g0 + m) / (sqrt(E+m) sqrt(2m)), so that B_p (ig0 m) = (i p-slash) B_p.
PinElement standard_boost(const std::array<double, 3>& p, const MassParam& mass);

// R = B_p^-1 S B_q with q = Lambda^-1 p (spatial part); R commutes with ig0.
RealMatrix4 wigner_rotation(const PinElement& S, const std::array<double, 3>& p, const MassParam& mass);

using MomentumEvaluator = std::function<MajoranaSpinor(const std::array<double, 3>&)>;

// Phi'(p) = sqrt(E_q / E_p) R Phi(q), q = Lambda^-1 p.
MomentumEvaluator boost_action(MomentumEvaluator phi, const PinElement& S, const MassParam& mass);

struct PoincareElement {
    PinElement pin;
    FourVector b{};
};

// (S1, b1)(S2, b2) = (S1 S2, b2 + Lambda2^-1 b1)
PoincareElement compose(const PoincareElement& g1, const PoincareElement& g2);

// Lift of a Lorentz matrix whose time row and column are (+-1, 0, 0, 0):
// the discrete part 1, eta, -eta, -1 lifts to I, ig0, g0g5, ig5 and the
// spatial rotation by angle w in [0, pi] about n lifts to spin_plus(-w n / 2).
PinElement canonical_lift(const LorentzMatrix& L);

// Realized sign s with S = s * canonical_lift(Lambda(S)).
double lift_sign(const PinElement& S);

struct ConfigAction {
    MajoranaSpinorField field;
    double sign = 1.0;  // of S against the canonical lift
};

// Psi'(x) = S Psi(Lambda^-1 x + b) at x0 = 0 on a position grid. Lambda must be
// grid preserving (time sign, spatial signed permutation) and b a whole number
// of cells in space; the time part of b is applied through evolve.
ConfigAction poincare_apply_config(const MajoranaSpinorField& psi, const PoincareElement& g, const MassParam& mass);

struct ProjectiveSign {
    double sign = 1.0;      // P(g1) P(g2) = sign P(g1 g2), canonical lifts throughout
    double residual = 0.0;  // ||P(g1)P(g2)Psi - sign P(g1 g2)Psi|| / ||Psi||
    double sign_defect = 0.0;  // distance of the realized ratio from +-1
};

ProjectiveSign projective_sign_check(const PoincareElement& g1, const PoincareElement& g2,
                                     const MajoranaSpinorField& psi, const MassParam& mass);

// T(d) = (1/L^3) sum_p A(p) e^{-i g0 (E_p x0 - p.d)} A(p) on every lattice offset
// d_k = (k - n/2) dx, stored like a position field. A Gaussian momentum window
// exp(-|p|^2 / 2 pc^2) is applied when pc > 0.
struct TransitionTable {
    GridSpec grid;
    double x0 = 0.0;
    std::vector<RealMatrix4> values;
};

TransitionTable transition_operator(double x0, const GridSpec& grid, const MassParam& mass, double p_cutoff = 0.0);

// Psi'(x) = sum_y T(x - y) Psi(y) dx^3 with periodic offsets. Direct sum.
MajoranaSpinorField apply_transition(const TransitionTable& t, const MajoranaSpinorField& psi);

struct CausalityRecord {
    int n = 0;
    double offset = 0.0;
    double x0 = 0.0;
    double norm = 0.0;           // Frobenius norm of T at the fixed offset, windowed
    double raw_norm = 0.0;       // same without the window
    double max_spacelike = 0.0;  // windowed, over all offsets with |d| >= x0 + 2
    double origin_norm = 0.0;    // windowed, at d = 0
};

// T at the offset (offset, 0, 0) for each n at fixed L. The window width is
// pc = window_fraction * pi * n / L, a fixed fraction of the lattice cutoff.
std::vector<CausalityRecord> causality_scan(double x0, double box_length, const std::vector<int>& ns,
                                            const MassParam& mass, double offset, double window_fraction = 0.15);

}  // namespace majorana
