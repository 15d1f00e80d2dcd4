#include "raman/dipole.hpp"

#include <cmath>
#include <stdexcept>

#include "raman/wigner.hpp"

namespace raman {

double reduced_coupling(HalfInt ground_F, HalfInt F_b, const LevelScheme& s) {
    const double six_j = wigner_6j(s.I, ground_F, s.J_a, HalfInt(1), s.J_b, F_b);
    if (six_j == 0.0) return 0.0;
    const double norm =
        std::sqrt(double(ground_F.twice() + 1) * double(F_b.twice() + 1));
    return parity_phase(ground_F + s.J_a + s.I + HalfInt(1)) * norm * six_j;
}

DipoleComponents build_g(HalfInt ground_F, const LevelScheme& scheme,
                         const BasisLayout& layout) {
    std::vector<BasisLabel> rows;
    for (int m2 = -ground_F.twice(); m2 <= ground_F.twice(); m2 += 2)
        rows.push_back({Manifold::ground, ground_F, HalfInt::from_twice(m2)});

    DipoleComponents g{{LabeledOperator::zero(rows, layout.excited_labels()),
                        LabeledOperator::zero(rows, layout.excited_labels()),
                        LabeledOperator::zero(rows, layout.excited_labels())}};

    for (int q = -1; q <= 1; ++q) {
        auto& op = g.by_q[q + 1];
        for (int i = 0; i < op.rows(); ++i) {
            const HalfInt M = rows[i].M;
            for (int j = 0; j < op.cols(); ++j) {
                const BasisLabel& e = layout.excited_labels()[j];
                if (e.M.twice() != M.twice() - 2 * q) continue;  // M_b = M - q
                const double red = reduced_coupling(ground_F, e.F, scheme);
                if (red == 0.0) continue;
                const double three_j = wigner_3j(ground_F, HalfInt(1), e.F,
                                                 -M, HalfInt(q), e.M);
                if (three_j == 0.0) continue;
                op.matrix(i, j) = parity_phase(ground_F - M) * three_j * red;
            }
        }
    }
    return g;
}

LabeledOperator project(const DipoleComponents& g, const PolVector& l) {
    LabeledOperator p = LabeledOperator::zero(g.by_q[0].row_labels, g.by_q[0].col_labels);
    for (int q = -1; q <= 1; ++q)
        p.matrix += std::conj(l.spherical(q)) * g.q(q).matrix;
    return p;
}

RabiAngles reduced_rabi(const PhysicalParams& p) {
    if (p.e_c < 0.0)
        throw std::invalid_argument("reduced_rabi: e_c must be non-negative");
    if (p.omega <= 0.0 || p.V_c <= 0.0 || p.d_abs <= 0.0 || p.T <= 0.0)
        throw std::invalid_argument("reduced_rabi: parameters must be positive");
    constexpr double hbar = 1.054571817e-27;  // erg s
    const double e_0 = std::sqrt(2.0 * M_PI * hbar * p.omega / p.V_c);
    return {p.d_abs * p.e_c * p.T / hbar, p.d_abs * e_0 * p.T / hbar};
}

}  // namespace raman
