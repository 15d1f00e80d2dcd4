#include "raman/wigner.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace raman {

namespace {

constexpr int kMaxFact = 128;

// ln(n!) table, built once; immutable afterwards.
const std::array<double, kMaxFact + 1>& log_fact_table() {
    static const std::array<double, kMaxFact + 1> table = [] {
        std::array<double, kMaxFact + 1> t{};
        t[0] = 0.0;
        for (int n = 1; n <= kMaxFact; ++n) t[n] = t[n - 1] + std::log(double(n));
        return t;
    }();
    return table;
}

double log_fact(int n) {
    return log_fact_table()[n];
}

// ln of the triangle coefficient Delta(j1,j2,j3); arguments are doubled.
double log_triangle(int a2, int b2, int c2) {
    return log_fact((a2 + b2 - c2) / 2) + log_fact((a2 - b2 + c2) / 2) +
           log_fact((-a2 + b2 + c2) / 2) - log_fact((a2 + b2 + c2) / 2 + 1);
}

bool triangle_ok2(int a2, int b2, int c2) {
    if ((a2 + b2 + c2) % 2 != 0) return false;
    return std::abs(a2 - b2) <= c2 && c2 <= a2 + b2;
}

}  // namespace

bool triangle_ok(HalfInt j1, HalfInt j2, HalfInt j3) {
    return triangle_ok2(j1.twice(), j2.twice(), j3.twice());
}

double wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3,
                 HalfInt m1, HalfInt m2, HalfInt m3) {
    const int a2 = j1.twice(), b2 = j2.twice(), c2 = j3.twice();
    const int p2 = m1.twice(), q2 = m2.twice(), r2 = m3.twice();

    if ((a2 - p2) % 2 != 0 || (b2 - q2) % 2 != 0 || (c2 - r2) % 2 != 0)
        throw std::invalid_argument("wigner_3j: projection m_i - j_i is not a whole number");
    if (a2 < 0 || b2 < 0 || c2 < 0)
        throw std::invalid_argument("wigner_3j: negative angular momentum");

    if (p2 + q2 + r2 != 0) return 0.0;
    if (!triangle_ok2(a2, b2, c2)) return 0.0;
    if (std::abs(p2) > a2 || std::abs(q2) > b2 || std::abs(r2) > c2) return 0.0;

    // Racah sum index bounds (all whole numbers here).
    const int t_min = std::max({0, (b2 - c2 - p2) / 2, (a2 - c2 + q2) / 2});
    const int t_max = std::min({(a2 + b2 - c2) / 2, (a2 - p2) / 2, (b2 + q2) / 2});
    if (t_min > t_max) return 0.0;

    const double log_pref =
        0.5 * (log_triangle(a2, b2, c2) +
               log_fact((a2 + p2) / 2) + log_fact((a2 - p2) / 2) +
               log_fact((b2 + q2) / 2) + log_fact((b2 - q2) / 2) +
               log_fact((c2 + r2) / 2) + log_fact((c2 - r2) / 2));

    double sum = 0.0;
    for (int t = t_min; t <= t_max; ++t) {
        const double log_den = log_fact(t) +
                               log_fact((a2 + b2 - c2) / 2 - t) +
                               log_fact((a2 - p2) / 2 - t) +
                               log_fact((b2 + q2) / 2 - t) +
                               log_fact((c2 - b2 + p2) / 2 + t) +
                               log_fact((c2 - a2 - q2) / 2 + t);
        const double term = std::exp(log_pref - log_den);
        sum += (t % 2 == 0) ? term : -term;
    }

    const int phase_exp = (a2 - b2 - r2) / 2;
    const double phase = (phase_exp % 2 == 0) ? 1.0 : -1.0;
    return phase * sum;
}

double wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3,
                 HalfInt j4, HalfInt j5, HalfInt j6) {
    const int a2 = j1.twice(), b2 = j2.twice(), c2 = j3.twice();
    const int d2 = j4.twice(), e2 = j5.twice(), f2 = j6.twice();
    if (a2 < 0 || b2 < 0 || c2 < 0 || d2 < 0 || e2 < 0 || f2 < 0)
        throw std::invalid_argument("wigner_6j: negative angular momentum");

    if (!triangle_ok2(a2, b2, c2) || !triangle_ok2(a2, e2, f2) ||
        !triangle_ok2(d2, b2, f2) || !triangle_ok2(d2, e2, c2))
        return 0.0;

    const double log_pref = 0.5 * (log_triangle(a2, b2, c2) + log_triangle(a2, e2, f2) +
                                   log_triangle(d2, b2, f2) + log_triangle(d2, e2, c2));

    const int s1 = (a2 + b2 + c2) / 2, s2 = (a2 + e2 + f2) / 2;
    const int s3 = (d2 + b2 + f2) / 2, s4 = (d2 + e2 + c2) / 2;
    const int p1 = (a2 + b2 + d2 + e2) / 2, p2 = (b2 + c2 + e2 + f2) / 2,
              p3 = (a2 + c2 + d2 + f2) / 2;

    const int t_min = std::max({s1, s2, s3, s4});
    const int t_max = std::min({p1, p2, p3});
    if (t_min > t_max) return 0.0;

    double sum = 0.0;
    for (int t = t_min; t <= t_max; ++t) {
        const double log_term = log_fact(t + 1) -
                                log_fact(t - s1) - log_fact(t - s2) -
                                log_fact(t - s3) - log_fact(t - s4) -
                                log_fact(p1 - t) - log_fact(p2 - t) - log_fact(p3 - t);
        const double term = std::exp(log_pref + log_term);
        sum += (t % 2 == 0) ? term : -term;
    }
    return sum;
}

}  // namespace raman
