#include "raman/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "matrix_functions.hpp"
#include "raman/wigner.hpp"

namespace raman {

namespace {

void check_input(const RamanInput& in) {
    if (!(in.theta >= 0.0) || !(in.theta_c >= 0.0) ||
        !std::isfinite(in.theta) || !std::isfinite(in.theta_c))
        throw std::invalid_argument("Raman input angles must be finite and non-negative");
}

// p_c and p embedded into the full ground space (zero rows outside their block).
struct GroundProjections {
    LabeledOperator p_c_full;  // ground_dim x excited_dim, F_a rows filled
    LabeledOperator p_full;    // ground_dim x excited_dim, F'_a rows filled
};

GroundProjections ground_projections(const RamanInput& in, const BasisLayout& layout) {
    const auto g_c = build_g(in.scheme.F_a, in.scheme, layout);
    const auto g = build_g(in.scheme.F_prime_a, in.scheme, layout);
    const LabeledOperator p_c = project(g_c, in.l_c);
    const LabeledOperator p = project(g, in.l);

    GroundProjections out{
        LabeledOperator::zero(layout.ground_labels(), layout.excited_labels()),
        LabeledOperator::zero(layout.ground_labels(), layout.excited_labels())};
    const int na = in.scheme.F_a.twice() + 1;
    const int npa = in.scheme.F_prime_a.twice() + 1;
    out.p_c_full.matrix.topRows(na) = p_c.matrix;
    out.p_full.matrix.bottomRows(npa) = p.matrix;
    return out;
}

// One ground-block of the recoupled Q_a^2 (Eqs. 27-34 structure). Rows carry
// momentum F_r, columns F_s; the tensor argument pairs are
//   B: (conj l_c, l),  A_c: (conj l_c, l_c),  A: (conj l, l).
// The overall phase is carried as (-1)^(I - J_b + M'), whose exponent is a
// whole number for every scheme that couples at all (I - J_b and M' are
// half-odd together); the factor (-1)^(F'_a - F_a) sometimes quoted with a_k
// only flips the sign of the off-diagonal block, which Eq. 24 fixes to +.
Eigen::MatrixXcd summed_block(HalfInt F_r, HalfInt F_s, const PolVector& first,
                              const PolVector& second, const LevelScheme& s) {
    const int nr = F_r.twice() + 1, ns = F_s.twice() + 1;
    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(nr, ns);
    const PolTensor f = pol_tensor(first.conjugated(), second);

    for (int k = 0; k <= 2; ++k) {
        const double b_k = std::sqrt(double(F_r.twice() + 1) * double(F_s.twice() + 1)) *
                           wigner_6j(HalfInt(k), F_r, F_s, s.I, s.J_a, s.J_a);
        const double a_k = (2 * k + 1) *
                           wigner_6j(HalfInt(k), HalfInt(1), HalfInt(1), s.J_b, s.J_a, s.J_a) *
                           b_k;
        if (a_k == 0.0) continue;
        for (int i = 0; i < nr; ++i) {
            const HalfInt M = HalfInt::from_twice(-F_r.twice() + 2 * i);
            for (int j = 0; j < ns; ++j) {
                const HalfInt Mp = HalfInt::from_twice(-F_s.twice() + 2 * j);
                Complex sum = 0.0;
                for (int q = -k; q <= k; ++q) {
                    const double w = wigner_3j(HalfInt(k), F_r, F_s, HalfInt(q), M, -Mp);
                    if (w == 0.0) continue;
                    sum += w * f.component(k, q);
                }
                if (sum == Complex(0.0)) continue;
                block(i, j) += double(parity_phase(s.I - s.J_b + Mp)) * a_k * sum;
            }
        }
    }
    return block;
}

}  // namespace

namespace detail {

double fn_cos_sqrt(double x) {
    return std::cos(std::sqrt(x));
}

double fn_sinc_sqrt(double x) {
    if (x < 1e-6) return 1.0 - x / 6.0 + x * x / 120.0 - x * x * x / 5040.0;
    const double r = std::sqrt(x);
    return std::sin(r) / r;
}

double fn_sinc2_half(double x) {
    // sin^2(sqrt(x)/2)/(sqrt(x)/2)^2 = 2(1 - cos sqrt(x))/x; removable at 0.
    if (x < 1e-6) return 1.0 - x / 12.0 + x * x / 360.0 - x * x * x / 20160.0;
    const double h = 0.5 * std::sqrt(x);
    const double s = std::sin(h) / h;
    return s * s;
}

Eigen::MatrixXcd hermitian_function(const Eigen::MatrixXcd& q_squared,
                                    double (*fn)(double), const char* what) {
    const double herm = (q_squared - q_squared.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-10)
        throw std::invalid_argument(std::string(what) +
                                    ": input is not Hermitian (residual " +
                                    std::to_string(herm) + ")");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(q_squared);
    Eigen::VectorXd ev = es.eigenvalues();
    for (int i = 0; i < ev.size(); ++i) {
        if (ev[i] < -1e-10)
            throw std::invalid_argument(std::string(what) +
                                        ": eigenvalue " + std::to_string(ev[i]) +
                                        " below PSD tolerance");
        ev[i] = fn(std::max(ev[i], 0.0));
    }
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace detail

LabeledOperator qa_squared_direct(const RamanInput& in) {
    check_input(in);
    const BasisLayout layout = validate(in.scheme);
    const auto [p_c, p] = ground_projections(in, layout);
    const double tc = in.theta_c, t = in.theta;

    Eigen::MatrixXcd q = tc * tc * (p_c.matrix * p_c.matrix.adjoint()) +
                         t * t * (p.matrix * p.matrix.adjoint()) +
                         t * tc * (p.matrix * p_c.matrix.adjoint() +
                                   p_c.matrix * p.matrix.adjoint());
    return {std::move(q), layout.ground_labels(), layout.ground_labels()};
}

LabeledOperator qa_squared_summed(const RamanInput& in) {
    check_input(in);
    const BasisLayout layout = validate(in.scheme);
    const LevelScheme& s = in.scheme;
    const int na = s.F_a.twice() + 1;
    const int npa = s.F_prime_a.twice() + 1;
    const double tc = in.theta_c, t = in.theta;

    Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(na + npa, na + npa);
    q.topLeftCorner(na, na) = tc * tc * summed_block(s.F_a, s.F_a, in.l_c, in.l_c, s);
    q.bottomRightCorner(npa, npa) = t * t * summed_block(s.F_prime_a, s.F_prime_a, in.l, in.l, s);
    const Eigen::MatrixXcd b = summed_block(s.F_a, s.F_prime_a, in.l_c, in.l, s);
    q.topRightCorner(na, npa) = t * tc * b;
    q.bottomLeftCorner(npa, na) = t * tc * b.adjoint();
    return {std::move(q), layout.ground_labels(), layout.ground_labels()};
}

LabeledOperator matrix_sinc2_half(const LabeledOperator& q_squared) {
    if (!q_squared.is_square())
        throw std::invalid_argument("matrix_sinc2_half: operator is not square");
    return {detail::hermitian_function(q_squared.matrix, detail::fn_sinc2_half,
                                       "matrix_sinc2_half"),
            q_squared.row_labels, q_squared.col_labels};
}

LabeledOperator matrix_cos(const LabeledOperator& q_squared) {
    if (!q_squared.is_square())
        throw std::invalid_argument("matrix_cos: operator is not square");
    return {detail::hermitian_function(q_squared.matrix, detail::fn_cos_sqrt, "matrix_cos"),
            q_squared.row_labels, q_squared.col_labels};
}

EmissionResult emission_probability(const RamanInput& in) {
    check_input(in);
    const LabeledOperator qa2 = qa_squared_summed(in);
    const LabeledOperator qa2_direct = qa_squared_direct(in);

    EmissionResult res;
    res.diagnostics.qa_hermiticity = qa2.hermiticity_residual();
    res.diagnostics.direct_summed_residual = (qa2.matrix - qa2_direct.matrix).norm();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(qa2.matrix);
    Eigen::VectorXd ev = es.eigenvalues();
    res.diagnostics.qa_eigenvalues.resize(ev.size());
    Eigen::VectorXd cos_ev(ev.size());
    for (int i = 0; i < ev.size(); ++i) {
        if (ev[i] < -1e-10)
            throw std::invalid_argument("emission_probability: Q_a^2 eigenvalue " +
                                        std::to_string(ev[i]) + " below PSD tolerance");
        const double x = std::max(ev[i], 0.0);
        res.diagnostics.qa_eigenvalues[i] = std::sqrt(x);
        cos_ev[i] = std::cos(std::sqrt(x));
    }
    const Eigen::MatrixXcd cos_qa =
        es.eigenvectors() * cos_ev.asDiagonal() * es.eigenvectors().adjoint();

    const int na = in.scheme.F_a.twice() + 1;
    const int npa = in.scheme.F_prime_a.twice() + 1;
    const auto r_block = cos_qa.bottomLeftCorner(npa, na);
    // Tr(R R^+) <= 2F_a+1 holds exactly; trim eigensolver roundoff only.
    res.w = std::min(r_block.squaredNorm() / double(na), 1.0);
    return res;
}

double emission_probability_qb(const RamanInput& in) {
    check_input(in);
    const BasisLayout layout = validate(in.scheme);
    const auto g_c = build_g(in.scheme.F_a, in.scheme, layout);
    const auto g = build_g(in.scheme.F_prime_a, in.scheme, layout);
    const LabeledOperator p_c = project(g_c, in.l_c);
    const LabeledOperator p = project(g, in.l);
    const double tc = in.theta_c, t = in.theta;

    LabeledOperator qb2{tc * tc * (p_c.matrix.adjoint() * p_c.matrix) +
                            t * t * (p.matrix.adjoint() * p.matrix),
                        layout.excited_labels(), layout.excited_labels()};
    const LabeledOperator f = matrix_sinc2_half(qb2);
    const Eigen::MatrixXcd r = 0.5 * t * tc * (p.matrix * f.matrix * p_c.matrix.adjoint());
    return std::min(r.squaredNorm() / double(in.scheme.F_a.twice() + 1), 1.0);
}

double bridge_identity_residual(const RamanInput& in, int n) {
    if (n < 0 || n > 3)
        throw std::invalid_argument("bridge_identity_residual: n must be in 0..3");
    check_input(in);
    const BasisLayout layout = validate(in.scheme);
    const auto g_c = build_g(in.scheme.F_a, in.scheme, layout);
    const auto g = build_g(in.scheme.F_prime_a, in.scheme, layout);
    const LabeledOperator p_c = project(g_c, in.l_c);
    const LabeledOperator p = project(g, in.l);
    const double tc = in.theta_c, t = in.theta;

    const Eigen::MatrixXcd qb2 =
        tc * tc * (p_c.matrix.adjoint() * p_c.matrix) + t * t * (p.matrix.adjoint() * p.matrix);
    Eigen::MatrixXcd qb_pow = Eigen::MatrixXcd::Identity(qb2.rows(), qb2.cols());
    for (int i = 0; i < n; ++i) qb_pow = qb_pow * qb2;
    const Eigen::MatrixXcd lhs = t * tc * (p.matrix * qb_pow * p_c.matrix.adjoint());

    const Eigen::MatrixXcd qa2 = qa_squared_direct(in).matrix;
    Eigen::MatrixXcd qa_pow = Eigen::MatrixXcd::Identity(qa2.rows(), qa2.cols());
    for (int i = 0; i < n + 1; ++i) qa_pow = qa_pow * qa2;
    const int na = in.scheme.F_a.twice() + 1;
    const int npa = in.scheme.F_prime_a.twice() + 1;
    const Eigen::MatrixXcd rhs = qa_pow.bottomLeftCorner(npa, na);

    return (lhs - rhs).norm();
}

}  // namespace raman
