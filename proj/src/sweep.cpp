#include "raman/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace raman {

namespace {
constexpr double kDegToRad = M_PI / 180.0;
}

double evaluate_w(const LevelScheme& scheme, double theta, double theta_c, double psi_deg) {
    const auto [l_c, l] = linear_pair(psi_deg * kDegToRad);
    return emission_probability({scheme, theta_c, theta, l_c, l}).w;
}

void run_sweep(const LevelScheme& scheme, const SweepSpec& spec,
               const std::function<void(const SweepRecord&)>& emit) {
    if (!(spec.min <= spec.max)) throw std::invalid_argument("sweep: min must be <= max");
    if (!(spec.step > 0.0)) throw std::invalid_argument("sweep: step must be positive");
    validate(scheme);

    const long count = static_cast<long>(std::floor((spec.max - spec.min) / spec.step + 1e-9));
    for (long i = 0; i <= count; ++i) {
        const double x = spec.min + double(i) * spec.step;
        SweepRecord r{};
        if (spec.axis == SweepAxis::theta) {
            r.theta = x;
            r.theta_c = spec.lock_areas ? x : spec.theta_c;
            r.psi_deg = spec.psi_deg;
        } else {
            r.theta = spec.theta;
            r.theta_c = spec.lock_areas ? spec.theta : spec.theta_c;
            r.psi_deg = x;
        }
        r.w = evaluate_w(scheme, r.theta, r.theta_c, r.psi_deg);
        emit(r);
    }
}

std::vector<SweepRecord> run_sweep(const LevelScheme& scheme, const SweepSpec& spec) {
    std::vector<SweepRecord> out;
    run_sweep(scheme, spec, [&out](const SweepRecord& r) { out.push_back(r); });
    return out;
}

OptimumReport optimize_theta(const LevelScheme& scheme, double psi_deg, double theta_min,
                             double theta_max, double grid_step,
                             double refinement_tolerance) {
    if (!(theta_min <= theta_max))
        throw std::invalid_argument("optimize: theta_min must be <= theta_max");
    if (!(grid_step > 0.0) || !(refinement_tolerance > 0.0))
        throw std::invalid_argument("optimize: step and tolerance must be positive");
    validate(scheme);

    const auto f = [&](double theta) { return evaluate_w(scheme, theta, theta, psi_deg); };

    // Global coarse scan.
    double best_x = theta_min;
    double best_w = f(theta_min);
    const long count = static_cast<long>(std::floor((theta_max - theta_min) / grid_step + 1e-9));
    for (long i = 1; i <= count; ++i) {
        const double x = theta_min + double(i) * grid_step;
        const double w = f(x);
        if (w > best_w) {
            best_w = w;
            best_x = x;
        }
    }

    // Golden-section refinement around the best grid point.
    double a = std::max(theta_min, best_x - grid_step);
    double b = std::min(theta_max, best_x + grid_step);
    constexpr double invphi = 0.6180339887498949;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > refinement_tolerance) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
        if (fc > best_w) {
            best_w = fc;
            best_x = c;
        }
        if (fd > best_w) {
            best_w = fd;
            best_x = d;
        }
    }
    return {best_x, best_w, grid_step, refinement_tolerance};
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string csv_header() {
    return "theta,theta_c,psi_deg,w";
}

std::string csv_line(const SweepRecord& r) {
    return format_double(r.theta) + "," + format_double(r.theta_c) + "," +
           format_double(r.psi_deg) + "," + format_double(r.w);
}

}  // namespace raman
