#pragma once

#include <cmath>
#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace raman {

// Exact half-integer value (angular momenta F, J, I and projections M),
// stored as twice its value so that triangle and parity checks are exact.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int whole) : twice_(2 * whole) {}

    static constexpr HalfInt from_twice(int t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }

    constexpr int twice() const { return twice_; }
    constexpr double value() const { return 0.5 * twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr bool is_negative() const { return twice_ < 0; }

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
    constexpr auto operator<=>(const HalfInt&) const = default;

    // Half-integers differing by a whole number belong to the same ladder;
    // a projection M is valid for momentum F iff same ladder and |M| <= F.
    constexpr bool same_ladder(HalfInt o) const { return (twice_ - o.twice_) % 2 == 0; }

    std::string to_string() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    // Accepts "2", "-1", "5/2", "-3/2", "2.5".
    static HalfInt parse(std::string_view text) {
        const std::string s(text);
        if (s.empty()) throw std::invalid_argument("empty half-integer");
        std::size_t pos = 0;
        if (auto slash = s.find('/'); slash != std::string::npos) {
            const long num = std::stol(s.substr(0, slash), &pos);
            if (pos != slash) throw std::invalid_argument("bad half-integer: " + s);
            const std::string den_s = s.substr(slash + 1);
            const long den = std::stol(den_s, &pos);
            if (pos != den_s.size()) throw std::invalid_argument("bad half-integer: " + s);
            if (den == 2) return from_twice(static_cast<int>(num));
            if (den == 1) return from_twice(static_cast<int>(2 * num));
            throw std::invalid_argument("half-integer denominator must be 1 or 2: " + s);
        }
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad half-integer: " + s);
        const double t = 2.0 * v;
        const double r = std::round(t);
        if (std::abs(t - r) > 1e-9)
            throw std::invalid_argument("not a half-integer: " + s);
        return from_twice(static_cast<int>(r));
    }

private:
    int twice_ = 0;
};

constexpr HalfInt abs(HalfInt h) {
    return h.is_negative() ? -h : h;
}

// (-1)^x for a half-integer x that must be a whole number.
inline int parity_phase(HalfInt x) {
    if (!x.is_integer())
        throw std::invalid_argument("phase exponent " + x.to_string() + " is not an integer");
    return (x.twice() / 2) % 2 == 0 ? 1 : -1;
}

}  // namespace raman
