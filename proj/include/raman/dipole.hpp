#pragma once

#include <array>

#include "raman/labeled_operator.hpp"
#include "raman/polarization.hpp"
#include "raman/scheme.hpp"

namespace raman {

// Reduced coupling g_{F F_b} between a ground hyperfine component F and an
// excited component F_b:
//   g = (-1)^(F+J_a+I+1) sqrt((2F+1)(2F_b+1)) {I F J_a; 1 J_b F_b}.
// Returns 0 whenever the 6j triangle rules fail.
double reduced_coupling(HalfInt ground_F, HalfInt F_b, const LevelScheme& scheme);

// The three spherical components of the dimensionless dipole operator for the
// transition ground_F -> J_b. Each component maps the excited manifold to the
// (2 ground_F + 1)-dimensional ground block:
//   entry(M; F_b, M_b) = (-1)^(F-M) 3j(F,1,F_b; -M,q,M_b) g_{F F_b}.
struct DipoleComponents {
    std::array<LabeledOperator, 3> by_q;  // index q+1
    const LabeledOperator& q(int q) const { return by_q[q + 1]; }
};

DipoleComponents build_g(HalfInt ground_F, const LevelScheme& scheme,
                         const BasisLayout& layout);

// Polarization projection p = sum_q g_q conj(l_q).
LabeledOperator project(const DipoleComponents& g, const PolVector& l);

// Field and pulse parameters in Gaussian (CGS) units.
struct PhysicalParams {
    double e_c;     // coherent pulse amplitude
    double omega;   // cavity angular frequency
    double V_c;     // cavity (quantization) volume
    double d_abs;   // |d|, reduced dipole matrix element
    double T;       // pulse duration
};

struct RabiAngles {
    double theta_c;  // coherent pulse reduced area
    double theta;    // vacuum Rabi angle
};

// theta_c = |d| e_c T / hbar; theta = |d| e_0 T / hbar with
// e_0 = sqrt(2 pi hbar omega / V_c). Throws on non-positive input.
RabiAngles reduced_rabi(const PhysicalParams& params);

}  // namespace raman
