#include "raman/labeled_operator.hpp"

#include <stdexcept>

namespace raman {

LabeledOperator::LabeledOperator(Eigen::MatrixXcd m, std::vector<BasisLabel> rows,
                                 std::vector<BasisLabel> cols)
    : matrix(std::move(m)), row_labels(std::move(rows)), col_labels(std::move(cols)) {
    if (matrix.rows() != static_cast<Eigen::Index>(row_labels.size()) ||
        matrix.cols() != static_cast<Eigen::Index>(col_labels.size()))
        throw std::logic_error("LabeledOperator: matrix dimensions do not match label lists");
}

LabeledOperator LabeledOperator::zero(std::vector<BasisLabel> rows,
                                      std::vector<BasisLabel> cols) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows.size(), cols.size());
    return {std::move(m), std::move(rows), std::move(cols)};
}

LabeledOperator LabeledOperator::adjoint() const {
    return {matrix.adjoint(), col_labels, row_labels};
}

LabeledOperator LabeledOperator::operator*(const LabeledOperator& other) const {
    if (col_labels != other.row_labels)
        throw std::logic_error("LabeledOperator: inner basis labels do not match in product");
    return {matrix * other.matrix, row_labels, other.col_labels};
}

LabeledOperator LabeledOperator::operator+(const LabeledOperator& other) const {
    if (row_labels != other.row_labels || col_labels != other.col_labels)
        throw std::logic_error("LabeledOperator: basis labels do not match in sum");
    return {matrix + other.matrix, row_labels, col_labels};
}

LabeledOperator LabeledOperator::operator-(const LabeledOperator& other) const {
    if (row_labels != other.row_labels || col_labels != other.col_labels)
        throw std::logic_error("LabeledOperator: basis labels do not match in difference");
    return {matrix - other.matrix, row_labels, col_labels};
}

LabeledOperator operator*(std::complex<double> s, const LabeledOperator& op) {
    return {s * op.matrix, op.row_labels, op.col_labels};
}

double LabeledOperator::hermiticity_residual() const {
    if (!is_square())
        throw std::logic_error("hermiticity_residual: operator is not square");
    return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace raman
