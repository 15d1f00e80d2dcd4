#include "raman/polarization.hpp"

#include <cmath>
#include <stdexcept>

#include "raman/wigner.hpp"

namespace raman {

namespace {
constexpr double kSqrt2Inv = 0.7071067811865475244;
}

PolVector::PolVector(Complex x, Complex y, Complex z) : cart_{x, y, z} {
    const double n = std::sqrt(std::norm(x) + std::norm(y) + std::norm(z));
    if (n < 1e-300) throw std::invalid_argument("polarization vector must be nonzero");
    for (auto& c : cart_) c /= n;
}

Complex PolVector::spherical(int q) const {
    switch (q) {
        case +1: return -(cart_[0] + Complex(0, 1) * cart_[1]) * kSqrt2Inv;
        case 0: return cart_[2];
        case -1: return (cart_[0] - Complex(0, 1) * cart_[1]) * kSqrt2Inv;
        default: throw std::invalid_argument("spherical component q must be -1, 0 or +1");
    }
}

PolVector PolVector::conjugated() const {
    return {std::conj(cart_[0]), std::conj(cart_[1]), std::conj(cart_[2])};
}

bool PolVector::is_real() const {
    for (const auto& c : cart_)
        if (std::abs(c.imag()) > 1e-14) return false;
    return true;
}

std::pair<PolVector, PolVector> linear_pair(double psi) {
    return {PolVector::x_axis(), PolVector(std::cos(psi), std::sin(psi), 0.0)};
}

Complex PolTensor::component(int k, int q) const {
    if (k < 0 || k > 2) throw std::invalid_argument("tensor rank k must be 0, 1 or 2");
    if (std::abs(q) > k) return {0.0, 0.0};
    return f_[k][q + 2];
}

void PolTensor::set(int k, int q, Complex v) {
    f_[k][q + 2] = v;
}

PolTensor pol_tensor(const PolVector& l_c, const PolVector& l) {
    PolTensor t;
    for (int k = 0; k <= 2; ++k) {
        for (int q = -k; q <= k; ++q) {
            Complex sum = 0.0;
            for (int q1 = -1; q1 <= 1; ++q1) {
                for (int q2 = -1; q2 <= 1; ++q2) {
                    const double w = wigner_3j(HalfInt(k), HalfInt(1), HalfInt(1),
                                               HalfInt(q), HalfInt(q1), HalfInt(q2));
                    if (w == 0.0) continue;
                    sum += l_c.spherical(-q1) * l.spherical(-q2) * w;
                }
            }
            if (q % 2 != 0) sum = -sum;
            t.set(k, q, sum);
        }
    }
    return t;
}

}  // namespace raman
