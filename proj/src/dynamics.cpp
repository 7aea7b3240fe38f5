#include "nhkit/dynamics.hpp"

#include "nhkit/numerics.hpp"
#include "nhkit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace nhkit::dyn {

namespace {

// (alpha_0^+ - beta_0^+)|0> / sqrt(2) on the (alpha_0, beta_0) space.
Vector zero_sector_vector() {
    Vector v = Vector::Zero(4);
    v(1) = 1.0 / std::sqrt(2.0);
    v(2) = -1.0 / std::sqrt(2.0);
    return v;
}

// (alpha_pi^+ beta_pi^+ - 1)|0> / sqrt(2) on the (alpha_pi, beta_pi) space.
Vector pi_sector_vector() {
    Vector v = Vector::Zero(4);
    v(3) = 1.0 / std::sqrt(2.0);
    v(0) = -1.0 / std::sqrt(2.0);
    return v;
}

std::vector<Matrix> block_matrices(const model::ModelParams& p,
                                   const std::vector<double>& ks) {
    const auto boundary = model::boundary_blocks(p);
    std::vector<Matrix> hs = {boundary.h0, boundary.hpi};
    for (double k : ks) hs.push_back(spectral::pair_block(p, k));
    return hs;
}

std::vector<Vector> initial_vectors(const model::ModelParams& pre,
                                    const std::vector<double>& ks) {
    std::vector<Vector> vs = {zero_sector_vector(), pi_sector_vector()};
    for (double k : ks) {
        vs.push_back(spectral::pair_ground_vector(spectral::mode_basis(pre, k)));
    }
    return vs;
}

// One invariant block propagated to arbitrary times, diagonalizing once and
// falling back to per-time expm when the block is defective.
struct BlockPropagator {
    Vector v0;
    Matrix h;
    bool use_eig = false;
    num::EigenDecomposition ed;
    Vector coeffs;

    BlockPropagator(Matrix h_in, Vector v0_in)
        : v0(std::move(v0_in)), h(std::move(h_in)) {
        ed = num::eig_complex(h);
        use_eig = !ed.defective;
        if (use_eig) {
            coeffs = ed.left.adjoint() * v0;
            // Mode amplitudes at rounding-noise level would otherwise seed
            // exponentially growing modes the initial state does not occupy.
            const double floor = 1e-13 * coeffs.cwiseAbs().maxCoeff();
            for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
                if (std::abs(coeffs(i)) < floor) coeffs(i) = 0.0;
            }
        }
    }

    Vector at(double t) const {
        if (use_eig) {
            Vector phases(ed.values.size());
            for (Eigen::Index i = 0; i < ed.values.size(); ++i) {
                phases(i) = std::exp(-I * t * ed.values(i)) * coeffs(i);
            }
            return ed.right * phases;
        }
        return num::expm(Matrix(-I * t * h)) * v0;
    }
};

// Accumulates one block into the normalized overlap ratio and the raw
// squared amplitude. The ratio stays bounded by 1 per block; the raw product
// may legitimately overflow to +inf under non-Hermitian growth.
void accumulate(const Vector& v0, const Vector& vt, double t, Complex& ratio,
                double& raw) {
    if (!vt.allFinite()) {
        throw std::runtime_error("evolution overflow at t = " + std::to_string(t));
    }
    const Complex amp = v0.dot(vt);
    const double norm = vt.norm();
    if (norm == 0.0) {
        throw std::runtime_error("evolved block vanished at t = " + std::to_string(t));
    }
    ratio *= amp / norm;
    raw *= std::norm(amp);
}

void push_fidelity(FidelitySeries& out, double t, Complex ratio, double raw) {
    const double value =
        out.policy == Normalization::raw ? raw : std::norm(ratio);
    if (!std::isfinite(value)) {
        throw std::runtime_error("fidelity overflow at t = " + std::to_string(t));
    }
    out.times.push_back(t);
    out.values.push_back(value);
    out.raw_values.push_back(raw);
}

void require_quenchable(const model::ModelParams& pre,
                        const model::ModelParams& pos) {
    model::validate(pre);
    model::validate(pos);
    if (pre.mu != 0.0) {
        throw std::invalid_argument("quench must start on the mu = 0 line");
    }
    if (pre.cells != pos.cells) {
        throw std::invalid_argument("quench endpoints must share the cell count");
    }
    if (pre.boundary != model::Boundary::periodic ||
        pos.boundary != model::Boundary::periodic) {
        throw std::invalid_argument("block evolution needs periodic boundary");
    }
}

}  // namespace

DriveSpec fixed_line_drive(double zeta, double dt, double horizon) {
    DriveSpec d;
    d.delta_a_of_t = [zeta](double t) { return 1.0 + std::sin(t * t + zeta); };
    d.delta_b_of_t = [zeta](double t) { return 1.0 - std::sin(t * t + zeta); };
    d.zeta = zeta;
    d.dt = dt;
    d.horizon = horizon;
    return d;
}

FidelitySeries evolve_quench(const model::ModelParams& pre,
                             const model::ModelParams& pos,
                             const std::vector<double>& times) {
    require_quenchable(pre, pos);
    const auto ks = model::momentum_grid(pre.cells).pairs;
    const auto hs = block_matrices(pos, ks);
    const auto v0s = initial_vectors(pre, ks);

    std::vector<BlockPropagator> blocks;
    for (std::size_t b = 0; b < hs.size(); ++b) {
        blocks.emplace_back(hs[b], v0s[b]);
    }
    FidelitySeries out;
    for (double t : times) {
        Complex ratio = 1.0;
        double raw = 1.0;
        for (const auto& block : blocks) {
            accumulate(block.v0, block.at(t), t, ratio, raw);
        }
        push_fidelity(out, t, ratio, raw);
    }
    return out;
}

namespace {

// Stepwise time-ordered march; records fidelity every `record_every` steps.
FidelitySeries march(const model::ModelParams& pre, const DriveSpec& drive,
                     double dt, int steps, int record_every) {
    model::ModelParams p0 = pre;
    p0.delta_a = drive.delta_a_of_t(0.0);
    p0.delta_b = drive.delta_b_of_t(0.0);
    const auto ks = model::momentum_grid(pre.cells).pairs;
    const auto v0s = initial_vectors(p0, ks);
    std::vector<Vector> vs = v0s;

    FidelitySeries out;
    {
        Complex ratio = 1.0;
        double raw = 1.0;
        for (std::size_t b = 0; b < vs.size(); ++b) {
            accumulate(v0s[b], vs[b], 0.0, ratio, raw);
        }
        push_fidelity(out, 0.0, ratio, raw);
    }
    model::ModelParams pt = p0;
    for (int n = 0; n < steps; ++n) {
        const double t = (n + 0.5) * dt;  // midpoint parameter evaluation
        pt.delta_a = drive.delta_a_of_t(t);
        pt.delta_b = drive.delta_b_of_t(t);
        const auto hs = block_matrices(pt, ks);
        for (std::size_t b = 0; b < vs.size(); ++b) {
            vs[b] = num::expm(Matrix(-I * dt * hs[b])) * vs[b];
        }
        if ((n + 1) % record_every == 0) {
            const double t_rec = (n + 1) * dt;
            Complex ratio = 1.0;
            double raw = 1.0;
            for (std::size_t b = 0; b < vs.size(); ++b) {
                accumulate(v0s[b], vs[b], t_rec, ratio, raw);
            }
            push_fidelity(out, t_rec, ratio, raw);
        }
    }
    return out;
}

}  // namespace

DrivenResult evolve_driven(const model::ModelParams& pre, const DriveSpec& drive) {
    model::validate(pre);
    if (pre.mu != 0.0) {
        throw std::invalid_argument("driven evolution stays on the mu = 0 line");
    }
    if (pre.boundary != model::Boundary::periodic) {
        throw std::invalid_argument("block evolution needs periodic boundary");
    }
    if (!(drive.dt > 0.0) || !(drive.horizon > 0.0)) {
        throw std::invalid_argument("drive needs dt > 0 and horizon > 0");
    }
    if (!drive.delta_a_of_t || !drive.delta_b_of_t) {
        throw std::invalid_argument("drive functions must be set");
    }
    const int steps = static_cast<int>(std::llround(drive.horizon / drive.dt));
    if (steps < 1) {
        throw std::invalid_argument("horizon shorter than one step");
    }
    DrivenResult result;
    result.series = march(pre, drive, drive.dt, steps, 1);
    const FidelitySeries halved = march(pre, drive, drive.dt / 2.0, 2 * steps, 2);
    for (std::size_t i = 0; i < result.series.values.size(); ++i) {
        result.convergence_estimate =
            std::max(result.convergence_estimate,
                     std::abs(result.series.values[i] - halved.values[i]));
    }
    result.converged = result.convergence_estimate <= drive.convergence_tol;
    return result;
}

ScanResult scan_quench(const std::vector<model::ModelParams>& pre_family,
                       const std::vector<model::ModelParams>& pos_family,
                       const std::vector<double>& time_grid,
                       const std::vector<double>& param_grid,
                       const std::string& parameter_name, double threshold) {
    if (pre_family.size() != param_grid.size() ||
        pos_family.size() != param_grid.size()) {
        throw std::invalid_argument("family sizes must match the parameter grid");
    }
    if (time_grid.empty()) {
        throw std::invalid_argument("time grid must not be empty");
    }
    ScanResult scan;
    scan.times = time_grid;
    scan.parameters = param_grid;
    scan.parameter_name = parameter_name;
    scan.threshold = threshold;
    scan.values.setConstant(static_cast<Eigen::Index>(time_grid.size()),
                            static_cast<Eigen::Index>(param_grid.size()),
                            std::numeric_limits<double>::quiet_NaN());
    scan.drop_times.resize(param_grid.size());
    scan.cell_errors.resize(param_grid.size());
    for (std::size_t c = 0; c < param_grid.size(); ++c) {
        try {
            const FidelitySeries series =
                evolve_quench(pre_family[c], pos_family[c], time_grid);
            for (std::size_t r = 0; r < series.values.size(); ++r) {
                scan.values(static_cast<Eigen::Index>(r),
                            static_cast<Eigen::Index>(c)) = series.values[r];
            }
            scan.drop_times[c] = detect_drop(series, threshold);
        } catch (const std::exception& e) {
            scan.cell_errors[c] = e.what();
        }
    }
    return scan;
}

std::optional<double> detect_drop(const FidelitySeries& series, double threshold) {
    if (series.times.empty() || series.values.empty()) {
        throw std::invalid_argument("empty fidelity series");
    }
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw std::invalid_argument("threshold must lie in (0, 1)");
    }
    if (series.values.front() < threshold) return series.times.front();
    for (std::size_t i = 1; i < series.values.size(); ++i) {
        const double prev = series.values[i - 1];
        const double cur = series.values[i];
        if (cur < threshold) {
            const double span = prev - cur;
            const double frac = span > 0.0 ? (prev - threshold) / span : 1.0;
            return series.times[i - 1] +
                   frac * (series.times[i] - series.times[i - 1]);
        }
    }
    return std::nullopt;
}

}  // namespace nhkit::dyn
