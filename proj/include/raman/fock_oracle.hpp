#pragma once

#include <Eigen/Dense>

#include "raman/kernel.hpp"

namespace raman {

// Truncated atom (x) Fock basis: atom index runs over the ground layout then
// the excited layout; the photon number is the slow index.
class FockBasis {
public:
    FockBasis(const BasisLayout& layout, int n_max);

    int dim() const { return static_cast<int>(labels_.size()); }
    int atom_dim() const { return atom_dim_; }
    int n_max() const { return n_max_; }
    int index(int atom_index, int n_photon) const { return n_photon * atom_dim_ + atom_index; }
    const std::vector<BasisLabel>& labels() const { return labels_; }

private:
    int atom_dim_;
    int n_max_;
    std::vector<BasisLabel> labels_;
};

// The non-Hermitian raising part G = theta_c p_c - i theta a^+ p on the
// truncated basis (a^+ has matrix elements sqrt(n+1)).
LabeledOperator build_g_operator(const RamanInput& input, int n_max);

// The Hermitian interaction generator G + G^+.
LabeledOperator build_generator(const RamanInput& input, int n_max);

// Q^2 = theta_c^2 p_c^+ p_c + theta^2 a a^+ p^+ p on the truncated basis;
// supported on the excited manifold.
LabeledOperator build_q_squared(const RamanInput& input, int n_max);

// Evolution operator by direct matrix exponential, S = exp(i (G + G^+)).
LabeledOperator evolution_exponential(const RamanInput& input, int n_max);

// Evolution operator assembled from the closed form
//   S = C - (1/2) G F G^+ + i G H + i H G^+
// with C = cos Q, H = sin(Q)/Q, F = sin^2(Q/2)/(Q/2)^2 as spectral functions
// of Q^2 (identity on the ground manifold, where Q^2 vanishes).
LabeledOperator closed_form_s(const RamanInput& input, int n_max);

struct EvolveReport {
    double w = 0.0;                       // population of the one-photon sector
    double trace = 0.0;                   // Tr rho after evolution
    Eigen::VectorXd photon_populations;   // per photon number 0..n_max
};

// rho_0 = P_{F_a}/(2F_a+1) (x) |0><0|; evolve with S and read out the
// photon-number populations.
EvolveReport evolve_report(const RamanInput& input, int n_max);

// Single-photon probability from the full Fock-space evolution.
double evolve_and_measure(const RamanInput& input, int n_max);

}  // namespace raman
