#include "raman/fock_oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "matrix_functions.hpp"

namespace raman {

namespace {

struct FockPieces {
    BasisLayout layout;
    FockBasis basis;
    Eigen::MatrixXcd p_c;   // (2F_a+1) x excited_dim
    Eigen::MatrixXcd p;     // (2F'_a+1) x excited_dim
};

FockPieces make_pieces(const RamanInput& in, int n_max) {
    if (n_max < 1) throw std::invalid_argument("Fock oracle requires n_max >= 1");
    BasisLayout layout = validate(in.scheme);
    FockBasis basis(layout, n_max);
    const auto g_c = build_g(in.scheme.F_a, in.scheme, layout);
    const auto g = build_g(in.scheme.F_prime_a, in.scheme, layout);
    return {std::move(layout), std::move(basis), project(g_c, in.l_c).matrix,
            project(g, in.l).matrix};
}

}  // namespace

FockBasis::FockBasis(const BasisLayout& layout, int n_max)
    : atom_dim_(layout.ground_dim() + layout.excited_dim()), n_max_(n_max) {
    if (n_max < 0) throw std::invalid_argument("FockBasis: n_max must be non-negative");
    for (int n = 0; n <= n_max; ++n) {
        for (const auto& l : layout.ground_labels())
            labels_.push_back({l.manifold, l.F, l.M, n});
        for (const auto& l : layout.excited_labels())
            labels_.push_back({l.manifold, l.F, l.M, n});
    }
}

LabeledOperator build_g_operator(const RamanInput& in, int n_max) {
    const auto pc = make_pieces(in, n_max);
    const int ng = pc.layout.ground_dim();
    const int ne = pc.layout.excited_dim();
    const int na = in.scheme.F_a.twice() + 1;
    const int exc0 = ng;  // excited block offset within the atom index

    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(pc.basis.dim(), pc.basis.dim());
    for (int n = 0; n <= n_max; ++n) {
        // theta_c p_c: (F_a, n) <- (excited, n)
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < ne; ++j)
                g(pc.basis.index(i, n), pc.basis.index(exc0 + j, n)) +=
                    in.theta_c * pc.p_c(i, j);
        // -i theta a^+ p: (F'_a, n+1) <- (excited, n)
        if (n + 1 <= n_max) {
            const double amp = in.theta * std::sqrt(double(n + 1));
            for (int i = 0; i < in.scheme.F_prime_a.twice() + 1; ++i)
                for (int j = 0; j < ne; ++j)
                    g(pc.basis.index(na + i, n + 1), pc.basis.index(exc0 + j, n)) +=
                        Complex(0.0, -amp) * pc.p(i, j);
        }
    }
    return {std::move(g), pc.basis.labels(), pc.basis.labels()};
}

LabeledOperator build_generator(const RamanInput& in, int n_max) {
    LabeledOperator g = build_g_operator(in, n_max);
    g.matrix = (g.matrix + g.matrix.adjoint()).eval();
    return g;
}

LabeledOperator build_q_squared(const RamanInput& in, int n_max) {
    const auto pc = make_pieces(in, n_max);
    const int ng = pc.layout.ground_dim();
    const int ne = pc.layout.excited_dim();

    // Truncated ladder operators: a^+ |n_max> = 0.
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_max + 1, n_max + 1);
    for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(double(n));
    const Eigen::MatrixXd a_adag = a * a.transpose();

    const Eigen::MatrixXcd atom_c = pc.p_c.adjoint() * pc.p_c;  // excited x excited
    const Eigen::MatrixXcd atom = pc.p.adjoint() * pc.p;

    Eigen::MatrixXcd q2 = Eigen::MatrixXcd::Zero(pc.basis.dim(), pc.basis.dim());
    for (int n = 0; n <= n_max; ++n)
        for (int m = 0; m <= n_max; ++m) {
            if (n == m) {
                for (int i = 0; i < ne; ++i)
                    for (int j = 0; j < ne; ++j)
                        q2(pc.basis.index(ng + i, n), pc.basis.index(ng + j, m)) =
                            in.theta_c * in.theta_c * atom_c(i, j) +
                            in.theta * in.theta * a_adag(n, m) * atom(i, j);
            } else if (a_adag(n, m) != 0.0) {
                for (int i = 0; i < ne; ++i)
                    for (int j = 0; j < ne; ++j)
                        q2(pc.basis.index(ng + i, n), pc.basis.index(ng + j, m)) =
                            in.theta * in.theta * a_adag(n, m) * atom(i, j);
            }
        }
    return {std::move(q2), pc.basis.labels(), pc.basis.labels()};
}

LabeledOperator evolution_exponential(const RamanInput& in, int n_max) {
    LabeledOperator v = build_generator(in, n_max);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(v.matrix);
    Eigen::VectorXcd phases(es.eigenvalues().size());
    for (int i = 0; i < phases.size(); ++i)
        phases[i] = std::exp(Complex(0.0, es.eigenvalues()[i]));
    v.matrix = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    return v;
}

LabeledOperator closed_form_s(const RamanInput& in, int n_max) {
    const LabeledOperator g = build_g_operator(in, n_max);
    const Eigen::MatrixXcd q2 = build_q_squared(in, n_max).matrix;

    const Eigen::MatrixXcd c = detail::hermitian_function(q2, detail::fn_cos_sqrt, "closed_form_s");
    const Eigen::MatrixXcd h = detail::hermitian_function(q2, detail::fn_sinc_sqrt, "closed_form_s");
    const Eigen::MatrixXcd f = detail::hermitian_function(q2, detail::fn_sinc2_half, "closed_form_s");

    Eigen::MatrixXcd s = c - 0.5 * (g.matrix * f * g.matrix.adjoint()) +
                         Complex(0.0, 1.0) * (g.matrix * h) +
                         Complex(0.0, 1.0) * (h * g.matrix.adjoint());
    return {std::move(s), g.row_labels, g.col_labels};
}

EvolveReport evolve_report(const RamanInput& in, int n_max) {
    const LabeledOperator s = evolution_exponential(in, n_max);
    const int na = in.scheme.F_a.twice() + 1;
    const int dim = s.rows();
    const int atom_dim = dim / (n_max + 1);

    // rho_0 = P_{F_a}/(2F_a+1) (x) |0><0|; the F_a block leads the atom index.
    Eigen::MatrixXcd rho0 = Eigen::MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < na; ++i) rho0(i, i) = 1.0 / double(na);
    const Eigen::MatrixXcd rho = s.matrix * rho0 * s.matrix.adjoint();

    EvolveReport rep;
    rep.photon_populations = Eigen::VectorXd::Zero(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        for (int a = 0; a < atom_dim; ++a)
            rep.photon_populations[n] += rho(n * atom_dim + a, n * atom_dim + a).real();
    rep.trace = rep.photon_populations.sum();
    rep.w = rep.photon_populations[1];
    return rep;
}

double evolve_and_measure(const RamanInput& in, int n_max) {
    return evolve_report(in, n_max).w;
}

}  // namespace raman
