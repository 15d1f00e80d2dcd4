#pragma once

#include <Eigen/Dense>

#include "raman/dipole.hpp"
#include "raman/labeled_operator.hpp"
#include "raman/polarization.hpp"
#include "raman/scheme.hpp"

namespace raman {

struct RamanInput {
    LevelScheme scheme;
    double theta_c;  // coherent pulse reduced area, >= 0
    double theta;    // vacuum Rabi angle, >= 0
    PolVector l_c;   // pulse polarization
    PolVector l;     // cavity polarization
};

struct EmissionDiagnostics {
    Eigen::VectorXd qa_eigenvalues;   // spectrum of Q_a (ground manifold)
    double qa_hermiticity = 0.0;      // max |Q_a^2 - (Q_a^2)^dagger| entry
    double direct_summed_residual = 0.0;  // ||Q_a^2 direct - summed||_F
};

struct EmissionResult {
    double w = 0.0;  // single-photon emission probability, in [0, 1]
    EmissionDiagnostics diagnostics;
};

// Q_a^2 on the ground manifold, assembled from dipole-operator products with
// the excited indices summed by matrix multiplication:
//   theta_c^2 p_c p_c^+ + theta^2 p p^+ + theta theta_c (p p_c^+ + p_c p^+).
LabeledOperator qa_squared_direct(const RamanInput& input);

// The same operator with the excited-manifold sums carried out analytically
// through 3j/6j recoupling: theta_c^2 A_c + theta^2 A + theta theta_c (B + B^+).
// The three blocks come from one parameterized constructor.
LabeledOperator qa_squared_summed(const RamanInput& input);

// Spectral application of f(x) = sin^2(sqrt(x)/2)/(sqrt(x)/2)^2 to a Hermitian
// positive-semidefinite Q^2; f(0) = 1. Throws when the input is not Hermitian
// within 1e-10 or has an eigenvalue below -1e-10.
LabeledOperator matrix_sinc2_half(const LabeledOperator& q_squared);

// Spectral application of f(x) = cos(sqrt(x)); same preconditions.
LabeledOperator matrix_cos(const LabeledOperator& q_squared);

// w = Tr(R R^+)/(2F_a+1) with R the F'_a <- F_a block of cos(Q_a).
EmissionResult emission_probability(const RamanInput& input);

// Cross-check route through the excited-manifold operator Q_b^2:
//   R = (theta theta_c / 2) p [sin^2(Q_b/2)/(Q_b/2)^2] p_c^+.
double emission_probability_qb(const RamanInput& input);

// Frobenius norm of  theta theta_c p Q_b^(2n) p_c^+  minus the F'_a <- F_a
// block of Q_a^(2(n+1)); a diagnostic that must vanish identically.
double bridge_identity_residual(const RamanInput& input, int n);

}  // namespace raman
