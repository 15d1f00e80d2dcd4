#pragma once

#include <functional>
#include <string>
#include <vector>

#include "raman/kernel.hpp"

namespace raman {

// One evaluation point; the CSV/JSON output unit.
struct SweepRecord {
    double theta;
    double theta_c;
    double psi_deg;
    double w;
};

struct OptimumReport {
    double theta_star;
    double w_star;
    double grid_step;
    double refinement_tolerance;
};

// Emission probability for linear polarizations at relative angle psi
// (degrees); the configuration of the paper's figures.
double evaluate_w(const LevelScheme& scheme, double theta, double theta_c, double psi_deg);

enum class SweepAxis { theta, psi };

struct SweepSpec {
    SweepAxis axis;
    double min;
    double max;
    double step;
    double theta = 0.0;     // fixed theta for psi sweeps
    double theta_c = 0.0;   // fixed theta_c unless lock_areas
    double psi_deg = 0.0;   // fixed psi for theta sweeps
    bool lock_areas = false;  // theta_c follows theta
};

// Records at min, min+step, ..., <= max, emitted in axis order.
void run_sweep(const LevelScheme& scheme, const SweepSpec& spec,
               const std::function<void(const SweepRecord&)>& emit);
std::vector<SweepRecord> run_sweep(const LevelScheme& scheme, const SweepSpec& spec);

// 1-D maximization of w(theta) with theta_c = theta: coarse grid scan, then
// golden-section refinement around the best grid point. w is oscillatory, so
// the global grid pass is not optional.
OptimumReport optimize_theta(const LevelScheme& scheme, double psi_deg, double theta_min,
                             double theta_max, double grid_step = 0.05,
                             double refinement_tolerance = 1e-4);

// Fixed output contract: header `theta,theta_c,psi_deg,w`, floats with
// 10 significant digits.
std::string csv_header();
std::string csv_line(const SweepRecord& r);
std::string format_double(double v);

}  // namespace raman
