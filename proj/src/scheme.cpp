#include "raman/scheme.hpp"

#include <algorithm>

#include "raman/wigner.hpp"

namespace raman {

LevelScheme LevelScheme::preset(std::string_view name) {
    if (name == "rb85")
        return {HalfInt(2), HalfInt(3), HalfInt::from_twice(5), HalfInt::from_twice(1),
                HalfInt::from_twice(3)};
    if (name == "cs133")
        return {HalfInt(3), HalfInt(4), HalfInt::from_twice(7), HalfInt::from_twice(1),
                HalfInt::from_twice(3)};
    throw SchemeError("unknown preset '" + std::string(name) + "' (expected rb85 or cs133)");
}

BasisLayout::BasisLayout(const LevelScheme& scheme, std::vector<HalfInt> f_b_list, bool dark)
    : scheme_(scheme), f_b_(std::move(f_b_list)), dark_(dark) {
    for (HalfInt F : {scheme.F_a, scheme.F_prime_a})
        for (int m2 = -F.twice(); m2 <= F.twice(); m2 += 2)
            ground_.push_back({Manifold::ground, F, HalfInt::from_twice(m2)});
    for (HalfInt F_b : f_b_)
        for (int m2 = -F_b.twice(); m2 <= F_b.twice(); m2 += 2)
            excited_.push_back({Manifold::excited, F_b, HalfInt::from_twice(m2)});
}

int BasisLayout::ground_index(HalfInt F, HalfInt M) const {
    if (!F.same_ladder(M) || abs(M) > F)
        throw std::out_of_range("ground_index: invalid projection " + M.to_string() +
                                " for F=" + F.to_string());
    if (F == scheme_.F_a) return (M.twice() + F.twice()) / 2;
    if (F == scheme_.F_prime_a)
        return scheme_.F_a.twice() + 1 + (M.twice() + F.twice()) / 2;
    throw std::out_of_range("ground_index: F=" + F.to_string() + " is not a ground component");
}

int BasisLayout::excited_index(HalfInt F_b, HalfInt M_b) const {
    if (!F_b.same_ladder(M_b) || abs(M_b) > F_b)
        throw std::out_of_range("excited_index: invalid projection " + M_b.to_string() +
                                " for F_b=" + F_b.to_string());
    int offset = 0;
    for (HalfInt f : f_b_) {
        if (f == F_b) return offset + (M_b.twice() + F_b.twice()) / 2;
        offset += f.twice() + 1;
    }
    throw std::out_of_range("excited_index: F_b=" + F_b.to_string() + " not in excited manifold");
}

BasisLayout validate(const LevelScheme& s) {
    for (HalfInt j : {s.F_a, s.F_prime_a, s.I, s.J_a, s.J_b})
        if (j.is_negative())
            throw SchemeError("angular momenta must be non-negative");

    const HalfInt g_lo = abs(s.J_a - s.I);
    const HalfInt g_hi = s.J_a + s.I;
    for (HalfInt F : {s.F_a, s.F_prime_a}) {
        if (F < g_lo || F > g_hi || !F.same_ladder(g_lo))
            throw SchemeError("ground component F=" + F.to_string() + " outside hyperfine range " +
                              g_lo.to_string() + ".." + g_hi.to_string());
    }
    if (s.F_a == s.F_prime_a)
        throw SchemeError("F_a and F'_a must be distinct ground components");

    std::vector<HalfInt> f_b;
    for (int t = abs(s.J_b - s.I).twice(); t <= (s.J_b + s.I).twice(); t += 2)
        f_b.push_back(HalfInt::from_twice(t));
    if (f_b.empty())
        throw SchemeError("excited hyperfine list is empty");

    // A Raman path needs one F_b dipole-coupled to both ground components.
    const bool bridged = triangle_ok(s.J_a, HalfInt(1), s.J_b) &&
                         std::any_of(f_b.begin(), f_b.end(), [&s](HalfInt fb) {
                             return triangle_ok(s.F_a, HalfInt(1), fb) &&
                                    triangle_ok(s.F_prime_a, HalfInt(1), fb);
                         });
    return BasisLayout(s, std::move(f_b), !bridged);
}

}  // namespace raman
