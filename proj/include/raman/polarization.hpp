#pragma once

#include <array>
#include <complex>
#include <utility>

namespace raman {

using Complex = std::complex<double>;

// Unit polarization vector. Spherical (circular) components follow the
// Condon-Shortley convention fixed for the whole artifact:
//   l_{+1} = -(l_x + i l_y)/sqrt(2),  l_0 = l_z,  l_{-1} = (l_x - i l_y)/sqrt(2).
class PolVector {
public:
    PolVector(Complex x, Complex y, Complex z);

    static PolVector x_axis() { return {1.0, 0.0, 0.0}; }
    static PolVector y_axis() { return {0.0, 1.0, 0.0}; }
    static PolVector z_axis() { return {0.0, 0.0, 1.0}; }

    Complex cartesian(int axis) const { return cart_[axis]; }
    Complex spherical(int q) const;  // q in {-1, 0, +1}

    // Componentwise complex conjugate (still unit norm).
    PolVector conjugated() const;

    bool is_real() const;

private:
    std::array<Complex, 3> cart_;
};

// Laser along x, cavity polarization rotated by psi about z; both real.
std::pair<PolVector, PolVector> linear_pair(double psi);

// Rank-k polarization tensor, k in {0,1,2}, q in {-k..k}.
class PolTensor {
public:
    Complex component(int k, int q) const;  // 0 whenever |q| > k
    void set(int k, int q, Complex v);

private:
    std::array<std::array<Complex, 5>, 3> f_{};  // [k][q+2]
};

// f^k_q = sum_{q1,q2} (-1)^q (l_c)_{-q1} (l)_{-q2} 3j(k,1,1; q,q1,q2),
// evaluated on the spherical components of the two vectors as given.
PolTensor pol_tensor(const PolVector& l_c, const PolVector& l);

}  // namespace raman
