#pragma once

#include "raman/half_int.hpp"

namespace raman {

// True iff (j1, j2, j3) can couple: |j1-j2| <= j3 <= j1+j2 with integer perimeter.
bool triangle_ok(HalfInt j1, HalfInt j2, HalfInt j3);

// Wigner 3j symbol (Condon-Shortley convention), Racah single-sum formula.
// Exactly 0.0 when a selection rule fails. Throws std::invalid_argument when
// some m_i - j_i is not a whole number (malformed projection).
double wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3,
                 HalfInt m1, HalfInt m2, HalfInt m3);

// Wigner 6j symbol; exactly 0.0 when any of the four triads fails the triangle rule.
double wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3,
                 HalfInt j4, HalfInt j5, HalfInt j6);

}  // namespace raman
