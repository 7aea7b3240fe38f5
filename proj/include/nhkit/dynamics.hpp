#ifndef NHKIT_DYNAMICS_HPP
#define NHKIT_DYNAMICS_HPP

#include "nhkit/common.hpp"
#include "nhkit/model.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nhkit::dyn {

// Time-dependent pairing strengths along (or off) the fixed line, with the
// step size and horizon of the stepwise time-ordered product.
struct DriveSpec {
    std::function<double(double)> delta_a_of_t;
    std::function<double(double)> delta_b_of_t;
    double zeta = 0.0;  // phase offset of the built-in drive
    double dt = 1e-3;
    double horizon = 2.0;
    double convergence_tol = 1e-6;  // step-halving disagreement flag level
};

// delta_a = 1 + sin(t^2 + zeta), delta_b = 1 - sin(t^2 + zeta): the sum stays
// constant, so the instantaneous ground state never changes.
DriveSpec fixed_line_drive(double zeta, double dt = 1e-3, double horizon = 2.0);

enum class Normalization { normalized, raw };

// F(t) = |prod_blocks <phi_b(0)|phi_b(t)>|^2; the normalized policy divides
// the amplitude by prod_b |phi_b(t)| so values stay in [0, 1].
struct FidelitySeries {
    std::vector<double> times;
    std::vector<double> values;      // under `policy`
    std::vector<double> raw_values;  // unnormalized |amplitude|^2
    Normalization policy = Normalization::normalized;
};

// Quench: prepare the ground state of `pre` (mu = 0), evolve each invariant
// block under `pos` (any mu) by exact diagonalization, report fidelity on
// the given time grid.
FidelitySeries evolve_quench(const model::ModelParams& pre,
                             const model::ModelParams& pos,
                             const std::vector<double>& times);

struct DrivenResult {
    FidelitySeries series;
    double convergence_estimate = 0.0;  // max |F_dt - F_{dt/2}| on the grid
    bool converged = false;
};

// Driven evolution: stepwise propagators expm(-i H((n+1/2) dt) dt) per block
// (midpoint parameter evaluation), with the initial state taken as the
// ground state at the drive's t = 0 values.
DrivenResult evolve_driven(const model::ModelParams& pre, const DriveSpec& drive);

// Fidelity surface over time x parameter, with per-column drop times and
// per-column error markers instead of whole-scan aborts.
struct ScanResult {
    std::vector<double> times;
    std::vector<double> parameters;
    std::string parameter_name;
    Eigen::MatrixXd values;  // times.size() x parameters.size()
    std::vector<std::optional<double>> drop_times;
    std::vector<std::string> cell_errors;  // empty string = column ok
    double threshold = 0.5;
};

ScanResult scan_quench(const std::vector<model::ModelParams>& pre_family,
                       const std::vector<model::ModelParams>& pos_family,
                       const std::vector<double>& time_grid,
                       const std::vector<double>& param_grid,
                       const std::string& parameter_name = "parameter",
                       double threshold = 0.5);

// First time the series crosses below the threshold, linearly interpolated
// between grid points; nullopt when it never does.
std::optional<double> detect_drop(const FidelitySeries& series, double threshold);

}  // namespace nhkit::dyn

#endif
