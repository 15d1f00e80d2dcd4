#pragma once

#include <Eigen/Dense>

// Internal spectral helpers shared by the kernel and the Fock-space oracle.
namespace raman::detail {

// sin(sqrt(x))/sqrt(x) with the removable singularity handled by Taylor.
double fn_sinc_sqrt(double x);

// cos(sqrt(x)).
double fn_cos_sqrt(double x);

// sin^2(sqrt(x)/2)/(sqrt(x)/2)^2.
double fn_sinc2_half(double x);

// f(Q^2) via self-adjoint eigendecomposition. Eigenvalues in [-1e-10, 0) are
// clamped to 0; anything lower, or a non-Hermitian input, throws with `what`
// in the message.
Eigen::MatrixXcd hermitian_function(const Eigen::MatrixXcd& q_squared,
                                    double (*fn)(double), const char* what);

}  // namespace raman::detail
