#pragma once

#include <Eigen/Dense>
#include <vector>

#include "raman/scheme.hpp"

namespace raman {

// Complex matrix whose rows and columns carry basis labels. Products and
// adjoints are only formed when the inner label lists match exactly, which
// turns basis-ordering mistakes into immediate errors instead of silent
// wrong numbers.
struct LabeledOperator {
    Eigen::MatrixXcd matrix;
    std::vector<BasisLabel> row_labels;
    std::vector<BasisLabel> col_labels;

    LabeledOperator() = default;
    LabeledOperator(Eigen::MatrixXcd m, std::vector<BasisLabel> rows,
                    std::vector<BasisLabel> cols);

    static LabeledOperator zero(std::vector<BasisLabel> rows, std::vector<BasisLabel> cols);

    int rows() const { return static_cast<int>(matrix.rows()); }
    int cols() const { return static_cast<int>(matrix.cols()); }
    bool is_square() const { return rows() == cols() && row_labels == col_labels; }

    LabeledOperator adjoint() const;
    LabeledOperator operator*(const LabeledOperator& other) const;
    LabeledOperator operator+(const LabeledOperator& other) const;
    LabeledOperator operator-(const LabeledOperator& other) const;
    friend LabeledOperator operator*(std::complex<double> s, const LabeledOperator& op);

    // max |A - A^dagger| entry; requires a square, label-consistent operator.
    double hermiticity_residual() const;

    double frobenius_norm() const { return matrix.norm(); }
};

}  // namespace raman
