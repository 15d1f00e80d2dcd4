#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "raman/half_int.hpp"

namespace raman {

// Level configuration of the Lambda system: two resolved ground hyperfine
// components F_a (laser-coupled) and F'_a (cavity-coupled) with electronic
// momentum J_a, and the unresolved excited manifold J_b with all its
// hyperfine components F_b = |J_b - I| ... J_b + I.
struct LevelScheme {
    HalfInt F_a;
    HalfInt F_prime_a;
    HalfInt I;
    HalfInt J_a;
    HalfInt J_b;

    // "rb85": F_a=2, F'_a=3, I=5/2, J_a=1/2, J_b=3/2
    // "cs133": F_a=3, F'_a=4, I=7/2, J_a=1/2, J_b=3/2
    static LevelScheme preset(std::string_view name);
};

class SchemeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Manifold { ground, excited };

struct BasisLabel {
    Manifold manifold;
    HalfInt F;
    HalfInt M;
    int photon = -1;  // -1: atom-only basis
    bool operator==(const BasisLabel&) const = default;
};

// Canonical basis ordering for every matrix in the artifact.
// Ground: F_a block first, M ascending from -F_a, then the F'_a block;
// excited: F_b ascending, M ascending within each F_b.
class BasisLayout {
public:
    BasisLayout(const LevelScheme& scheme, std::vector<HalfInt> f_b_list, bool dark);

    int ground_dim() const { return static_cast<int>(ground_.size()); }
    int excited_dim() const { return static_cast<int>(excited_.size()); }

    int ground_index(HalfInt F, HalfInt M) const;
    int excited_index(HalfInt F_b, HalfInt M_b) const;

    const std::vector<BasisLabel>& ground_labels() const { return ground_; }
    const std::vector<BasisLabel>& excited_labels() const { return excited_; }
    const std::vector<HalfInt>& f_b_list() const { return f_b_; }

    const LevelScheme& scheme() const { return scheme_; }

    // No F_b couples to both ground components; w is identically 0.
    bool dark() const { return dark_; }

private:
    LevelScheme scheme_;
    std::vector<HalfInt> f_b_;
    std::vector<BasisLabel> ground_;
    std::vector<BasisLabel> excited_;
    bool dark_ = false;
};

// Checks the hyperfine ranges and builds the canonical layout.
// Throws SchemeError when F_a or F'_a is outside {|J_a-I|..J_a+I},
// when F_a == F'_a, or when the F_b list would be empty.
BasisLayout validate(const LevelScheme& scheme);

}  // namespace raman
