#include "nhkit/cli.hpp"

#include "nhkit/dynamics.hpp"
#include "nhkit/majorana.hpp"
#include "nhkit/numerics.hpp"
#include "nhkit/spectral.hpp"
#include "nhkit/spin.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

namespace nhkit::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Minimal deterministic CSV accumulator: header row, comma separators,
// one trailing newline per row.
class Csv {
public:
    explicit Csv(const std::vector<std::string>& header) { row(header); }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) buf_ += ',';
            buf_ += cells[i];
        }
        buf_ += '\n';
    }

    const std::string& str() const { return buf_; }

private:
    std::string buf_;
};

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << content;
    if (!out.good()) throw std::runtime_error("write failed: " + path.string());
}

ordered_json params_json(const model::ModelParams& p) {
    return ordered_json{
        {"J", p.J},
        {"delta_a", p.delta_a},
        {"delta_b", p.delta_b},
        {"mu", p.mu},
        {"cells", p.cells},
        {"boundary",
         p.boundary == model::Boundary::periodic ? "periodic" : "open"}};
}

ordered_json base_meta(const RunConfig& cfg) {
    ordered_json meta;
    meta["command"] = cfg.command;
    meta["params"] = params_json(cfg.params);
    return meta;
}

void emit(const RunConfig& cfg, const Csv& csv, const ordered_json& meta) {
    fs::path dir(cfg.output_dir);
    fs::create_directories(dir);
    write_file(dir / (cfg.command + ".csv"), csv.str());
    write_file(dir / (cfg.command + ".meta.json"), meta.dump(2) + "\n");
}

struct Check {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

int emit_checks(const RunConfig& cfg, const std::vector<Check>& checks,
                ordered_json meta) {
    Csv csv({"check", "value", "tolerance", "pass"});
    int failures = 0;
    for (const Check& c : checks) {
        csv.row({c.name, fmt17(c.value), fmt17(c.tolerance), c.pass ? "1" : "0"});
        if (!c.pass) ++failures;
    }
    meta["checks"] = checks.size();
    meta["failures"] = failures;
    emit(cfg, csv, meta);
    if (failures > 0) {
        for (const Check& c : checks) {
            if (!c.pass) {
                std::cerr << cfg.command << ": " << c.name << " value "
                          << fmt17(c.value) << " exceeds " << fmt17(c.tolerance)
                          << "\n";
            }
        }
        return 3;
    }
    std::cout << cfg.command << ": " << checks.size() << " checks passed\n";
    return 0;
}

int run_spectrum(const RunConfig& cfg) {
    const auto grid = model::momentum_grid(cfg.params.cells);
    Csv csv({"k", "rho", "sigma", "re_closed", "im_closed", "re_eig", "im_eig",
             "abs_diff"});
    double worst = 0.0;
    for (double k : grid.pairs) {
        std::vector<std::pair<Complex, spectral::BandIndex>> closed;
        for (spectral::BandIndex b : spectral::kBands) {
            closed.push_back({spectral::quasiparticle_energy(cfg.params, k, b), b});
        }
        std::sort(closed.begin(), closed.end(), [](const auto& a, const auto& b) {
            return num::lex_less(a.first, b.first);
        });
        const auto eigs = num::eigenvalues(model::core_matrix(cfg.params, k));
        for (std::size_t i = 0; i < closed.size(); ++i) {
            const double diff = std::abs(closed[i].first - eigs[i]);
            worst = std::max(worst, diff);
            csv.row({fmt17(k), std::to_string(closed[i].second.rho),
                     std::to_string(closed[i].second.sigma),
                     fmt17(closed[i].first.real()), fmt17(closed[i].first.imag()),
                     fmt17(eigs[i].real()), fmt17(eigs[i].imag()), fmt17(diff)});
        }
    }
    ordered_json meta = base_meta(cfg);
    meta["max_abs_diff"] = worst;
    emit(cfg, csv, meta);
    std::cout << "spectrum: max |closed - eig| = " << fmt17(worst) << "\n";
    return 0;
}

int run_ground_state(const RunConfig& cfg) {
    const auto g = spectral::ground_state(cfg.params);
    Csv csv({"block", "k", "rayleigh_re", "rayleigh_im", "residual"});
    double worst_residual = 0.0;
    Complex energy_sum = 0.0;
    auto report = [&](const std::string& label, const std::string& ktext,
                      const Matrix& h, const Vector& v) {
        const Vector hv = h * v;
        const Complex rayleigh = v.dot(hv);
        const double residual = (hv - rayleigh * v).norm();
        worst_residual = std::max(worst_residual, residual);
        energy_sum += rayleigh;
        csv.row({label, ktext, fmt17(rayleigh.real()), fmt17(rayleigh.imag()),
                 fmt17(residual)});
    };
    report("zero_pi_sector", "", model::boundary_blocks(cfg.params).combined,
           g.boundary_vector);
    for (std::size_t i = 0; i < g.ks.size(); ++i) {
        report("pair", fmt17(g.ks[i]), spectral::pair_block(cfg.params, g.ks[i]),
               g.pair_vectors[i]);
    }
    ordered_json meta = base_meta(cfg);
    meta["energy_closed_form"] = g.energy;
    meta["boundary_energy"] = g.boundary_energy;
    meta["energy_block_sum_re"] = energy_sum.real();
    meta["energy_block_sum_im"] = energy_sum.imag();
    meta["max_block_residual"] = worst_residual;
    emit(cfg, csv, meta);
    std::cout << "ground-state: energy = " << fmt17(g.energy)
              << ", max block residual = " << fmt17(worst_residual) << "\n";
    return 0;
}

int run_fixed_line_drive(const RunConfig& cfg) {
    const auto drive = dyn::fixed_line_drive(cfg.zeta, cfg.dt, cfg.horizon);
    const auto result = dyn::evolve_driven(cfg.params, drive);
    Csv csv({"t", "fidelity", "raw"});
    for (std::size_t i = 0; i < result.series.times.size(); ++i) {
        csv.row({fmt17(result.series.times[i]), fmt17(result.series.values[i]),
                 fmt17(result.series.raw_values[i])});
    }
    ordered_json meta = base_meta(cfg);
    meta["zeta"] = cfg.zeta;
    meta["dt"] = cfg.dt;
    meta["horizon"] = cfg.horizon;
    meta["normalization_policy"] = "normalized";
    meta["convergence_estimate"] = result.convergence_estimate;
    meta["converged"] = result.converged;
    emit(cfg, csv, meta);
    std::cout << "fixed-line-drive: zeta = " << fmt17(cfg.zeta)
              << ", convergence estimate = "
              << fmt17(result.convergence_estimate)
              << (result.converged ? "" : " (NOT converged)") << "\n";
    return 0;
}

int run_quench_scan(const RunConfig& cfg) {
    std::vector<model::ModelParams> pre_family, pos_family;
    for (double v : cfg.scan_values) {
        model::ModelParams pre = cfg.params;
        pre.mu = 0.0;
        model::ModelParams pos = cfg.params;
        if (cfg.scan_parameter == "mu") {
            pos.mu = v;
        } else {  // ratio delta_a / delta_b at fixed sum
            const double sum = cfg.params.delta_a + cfg.params.delta_b;
            if (!(v > 0.0)) {
                throw std::invalid_argument("ratio values must be positive");
            }
            pre.delta_a = pos.delta_a = sum * v / (1.0 + v);
            pre.delta_b = pos.delta_b = sum / (1.0 + v);
        }
        pre_family.push_back(pre);
        pos_family.push_back(pos);
    }
    std::vector<double> times;
    for (int j = 0; j <= cfg.t_steps; ++j) {
        times.push_back(cfg.t_max * j / cfg.t_steps);
    }
    const auto scan = dyn::scan_quench(pre_family, pos_family, times,
                                       cfg.scan_values, cfg.scan_parameter,
                                       cfg.threshold);
    std::vector<std::string> header = {"t"};
    for (double v : cfg.scan_values) header.push_back(fmt17(v));
    Csv csv(header);
    for (std::size_t r = 0; r < times.size(); ++r) {
        std::vector<std::string> cells = {fmt17(times[r])};
        for (std::size_t c = 0; c < cfg.scan_values.size(); ++c) {
            cells.push_back(fmt17(scan.values(static_cast<Eigen::Index>(r),
                                              static_cast<Eigen::Index>(c))));
        }
        csv.row(cells);
    }
    ordered_json meta = base_meta(cfg);
    meta["scan_parameter"] = cfg.scan_parameter;
    meta["threshold"] = cfg.threshold;
    meta["t_max"] = cfg.t_max;
    meta["t_steps"] = cfg.t_steps;
    meta["normalization_policy"] = "normalized";
    meta["drop_times"] = ordered_json::array();
    for (const auto& d : scan.drop_times) {
        if (d) {
            meta["drop_times"].push_back(*d);
        } else {
            meta["drop_times"].push_back(nullptr);
        }
    }
    meta["cell_errors"] = scan.cell_errors;
    emit(cfg, csv, meta);
    std::size_t failed = 0;
    for (const auto& e : scan.cell_errors) {
        if (!e.empty()) ++failed;
    }
    std::cout << "quench-scan: " << cfg.scan_values.size() - failed << "/"
              << cfg.scan_values.size() << " columns computed\n";
    return failed == cfg.scan_values.size() ? 3 : 0;
}

int run_zero_modes(const RunConfig& cfg) {
    const auto branch = cfg.branch == "plus" ? majorana::Branch::lambda_plus
                                             : majorana::Branch::lambda_minus;
    const auto pair = majorana::zero_modes(cfg.params, branch);
    const auto res = majorana::resonance(cfg.params);
    const Matrix ladder = majorana::build_majorana(cfg.params, pair.lambda);
    const double res_left =
        (ladder * pair.psi_left).norm() / pair.psi_left.norm();
    const double res_right =
        (ladder * pair.psi_right).norm() / pair.psi_right.norm();
    const Vector edge = majorana::edge_state(pair);

    Csv csv({"state", "site", "sublattice", "re", "im", "abs"});
    auto dump = [&](const std::string& label, const Vector& v) {
        for (const auto& amp : majorana::site_profile(v)) {
            csv.row({label, std::to_string(amp.site),
                     amp.sublattice == majorana::Sublattice::A ? "A" : "B",
                     fmt17(amp.value.real()), fmt17(amp.value.imag()),
                     fmt17(std::abs(amp.value))});
        }
    };
    dump("left", pair.psi_left);
    dump("right", pair.psi_right);
    dump("edge", edge);

    ordered_json meta = base_meta(cfg);
    meta["branch"] = cfg.branch;
    meta["gamma"] = res.gamma;
    meta["beta"] = res.beta;
    meta["lambda"] = pair.lambda;
    meta["residual_left"] = res_left;
    meta["residual_right"] = res_right;
    emit(cfg, csv, meta);
    const double tol = 1e-10;
    if (res_left > tol || res_right > tol) {
        std::cerr << "zero-modes: residuals " << fmt17(res_left) << ", "
                  << fmt17(res_right) << " exceed " << fmt17(tol) << "\n";
        return 3;
    }
    std::cout << "zero-modes: lambda = " << fmt17(pair.lambda)
              << ", residuals " << fmt17(res_left) << " / " << fmt17(res_right)
              << "\n";
    return 0;
}

int run_ladder_energy(const RunConfig& cfg) {
    const auto e = majorana::ladder_ground_energy(cfg.params);
    const double abs_diff = std::abs(e.closed_form - e.numeric_sum);
    const double rel_diff = abs_diff / std::abs(e.closed_form);
    Csv csv({"cells", "closed_form", "numeric_sum", "abs_diff", "rel_diff"});
    csv.row({std::to_string(cfg.params.cells), fmt17(e.closed_form),
             fmt17(e.numeric_sum), fmt17(abs_diff), fmt17(rel_diff)});
    ordered_json meta = base_meta(cfg);
    meta["closed_form"] = e.closed_form;
    meta["numeric_sum"] = e.numeric_sum;
    meta["rel_diff"] = rel_diff;
    emit(cfg, csv, meta);
    std::cout << "ladder-energy: closed form " << fmt17(e.closed_form)
              << ", numeric " << fmt17(e.numeric_sum) << "\n";
    return 0;
}

std::vector<Check> identity_checks(const std::vector<spin::IdentityCheck>& in) {
    std::vector<Check> out;
    for (const auto& c : in) out.push_back({c.name, c.residual, c.tolerance, c.pass});
    return out;
}

int run_spin_check(const RunConfig& cfg) {
    const auto checks =
        spin::ghz_report(cfg.sites, cfg.params.J, cfg.imbalances);
    ordered_json meta = base_meta(cfg);
    meta["sites"] = cfg.sites;
    meta["imbalances"] = cfg.imbalances;
    return emit_checks(cfg, identity_checks(checks), std::move(meta));
}

int run_heisenberg_check(const RunConfig& cfg) {
    const auto checks = spin::heisenberg_report(cfg.sites);
    ordered_json meta = base_meta(cfg);
    meta["sites"] = cfg.sites;
    return emit_checks(cfg, identity_checks(checks), std::move(meta));
}

// Cross-representation consistency checks, each pitting two independently
// built objects against one another.
std::vector<Check> oracle_checks() {
    std::vector<Check> checks;
    auto push = [&](const std::string& name, double value, double tol) {
        checks.push_back({name, value, tol, value <= tol});
    };

    {  // Free ring: closed-form energy vs single-particle band filling.
        model::ModelParams p{1.0, 0.0, 0.0, 0.0, 8, model::Boundary::periodic};
        double filled = 0.0;
        for (int m = 0; m < 2 * p.cells; ++m) {
            filled += std::min(
                0.0, 2.0 * p.J * std::cos(std::numbers::pi * m / p.cells));
        }
        push("free_ring_band_filling_2N16",
             std::abs(spectral::ground_energy(p) - filled), 1e-12);
    }
    {  // Closed-form energy vs brute-force minimum real eigenvalue.
        model::ModelParams p{1.0, 1.5, 0.5, 0.0, 2, model::Boundary::periodic};
        const auto vals = num::eigenvalues(model::fock_hamiltonian(p));
        double min_re = vals.front().real();
        for (Complex v : vals) min_re = std::min(min_re, v.real());
        push("fock_min_real_2N4", std::abs(spectral::ground_energy(p) - min_re),
             1e-10);
    }
    {
        model::ModelParams p{1.0, 1.2, 0.8, 0.0, 4, model::Boundary::periodic};
        const auto vals = num::eigenvalues(model::fock_hamiltonian(p));
        double min_re = vals.front().real();
        for (Complex v : vals) min_re = std::min(min_re, v.real());
        push("fock_min_real_2N8", std::abs(spectral::ground_energy(p) - min_re),
             1e-9);
    }
    {  // Full Fock spectrum vs sums over independently built blocks, mu != 0.
        model::ModelParams p{1.0, 1.5, 0.5, 0.15, 4, model::Boundary::periodic};
        const auto full = num::eigenvalues(model::fock_hamiltonian(p));
        const auto boundary =
            num::eigenvalues(model::boundary_blocks(p).combined);
        std::vector<Complex> assembled = boundary;
        for (double k : model::momentum_grid(p.cells).pairs) {
            const auto pair_vals = num::eigenvalues(spectral::pair_block(p, k));
            std::vector<Complex> next;
            next.reserve(assembled.size() * pair_vals.size());
            for (Complex a : assembled) {
                for (Complex b : pair_vals) next.push_back(a + b);
            }
            assembled.swap(next);
        }
        push("block_assembly_2N8_mu0.15", num::multiset_distance(full, assembled),
             1e-9);
    }
    {  // Spin picture vs fermion picture, odd dimer count included.
        model::ModelParams p{1.0, 1.5, 0.5, 0.0, 3, model::Boundary::periodic};
        push("spin_vs_fock_multiset_2N6",
             num::multiset_distance(
                 num::eigenvalues(spin::spin_hamiltonian(p)),
                 num::eigenvalues(model::fock_hamiltonian(p))),
             1e-9);
    }
    {  // Block-diagonal quench fidelity vs full Fock-space evolution.
        model::ModelParams pre{1.0, 1.2, 0.8, 0.0, 2, model::Boundary::periodic};
        model::ModelParams pos = pre;
        pos.mu = 0.05;
        std::vector<double> times;
        for (int j = 0; j <= 20; ++j) times.push_back(0.5 * j);
        const auto series = dyn::evolve_quench(pre, pos, times);
        const Vector psi0 = spectral::fourier_matrix(pre.cells) *
                            spectral::assemble_state(spectral::ground_state(pre));
        const auto ed = num::eig_complex(model::fock_hamiltonian(pos));
        const Vector coeffs = ed.left.adjoint() * psi0;
        double worst = 0.0;
        for (std::size_t i = 0; i < times.size(); ++i) {
            Vector phases(ed.values.size());
            for (Eigen::Index j = 0; j < ed.values.size(); ++j) {
                phases(j) = std::exp(-I * times[i] * ed.values(j)) * coeffs(j);
            }
            const Vector vt = ed.right * phases;
            const double full = std::norm(psi0.dot(vt) / vt.norm());
            worst = std::max(worst, std::abs(full - series.values[i]));
        }
        push("block_vs_full_fidelity_2N4", worst, 1e-9);
    }
    {  // Engineered-impurity zero modes against the assembled lattice.
        model::ModelParams p{1.0, 2.0, 0.0, 0.0, 8, model::Boundary::periodic};
        double worst = 0.0;
        for (auto branch :
             {majorana::Branch::lambda_minus, majorana::Branch::lambda_plus}) {
            const auto pair = majorana::zero_modes(p, branch);
            const Matrix ladder = majorana::build_majorana(p, pair.lambda);
            worst = std::max(worst, (ladder * pair.psi_left).norm() /
                                        pair.psi_left.norm());
            worst = std::max(worst, (ladder * pair.psi_right).norm() /
                                        pair.psi_right.norm());
        }
        push("zero_mode_residuals_N8", worst, 1e-10);
    }
    {  // Elliptic closed form vs summed dispersion.
        model::ModelParams p{1.0, 1.5, 0.5, 0.0, 64, model::Boundary::periodic};
        const auto e = majorana::ladder_ground_energy(p);
        push("ladder_energy_N64",
             std::abs(e.closed_form - e.numeric_sum) / std::abs(e.closed_form),
             1e-3);
    }
    {  // Canonical anticommutation relations of the normal modes.
        model::ModelParams p{1.0, 1.7, 0.4, 0.0, 16, model::Boundary::periodic};
        const double k = model::momentum_grid(p.cells).pairs[2];
        const auto basis = spectral::mode_basis(p, k);
        const Matrix id = Matrix::Identity(16, 16);
        double worst = 0.0;
        for (spectral::BandIndex a : spectral::kBands) {
            const Matrix op_a = spectral::mode_annihilator(basis, a);
            for (spectral::BandIndex b : spectral::kBands) {
                const Matrix op_b = spectral::mode_annihilator(basis, b);
                const Matrix cr_b = spectral::mode_creator(basis, b);
                const Matrix mixed = op_a * cr_b + cr_b * op_a;
                const Matrix same = op_a * op_b + op_b * op_a;
                const bool diag = spectral::band_row(a) == spectral::band_row(b);
                worst = std::max(worst,
                                 (mixed - (diag ? id : Matrix::Zero(16, 16)))
                                     .cwiseAbs()
                                     .maxCoeff());
                worst = std::max(worst, same.cwiseAbs().maxCoeff());
            }
        }
        push("canonical_anticommutators", worst, 1e-12);
    }
    return checks;
}

int run_oracle_verify(const RunConfig& cfg) {
    return emit_checks(cfg, oracle_checks(), base_meta(cfg));
}

}  // namespace

RunConfig parse_config(int argc, const char* const* argv) {
    RunConfig cfg;
    std::string boundary = "periodic";

    CLI::App app{"Exact solution toolkit for a non-Hermitian Kitaev chain "
                 "with staggered imbalanced pairing"};
    app.require_subcommand(1);
    app.allow_config_extras(false);
    app.set_config("--config", "", "flat key = value configuration file");

    app.add_option("--J", cfg.params.J, "hopping strength")
        ->capture_default_str();
    app.add_option("--delta-a", cfg.params.delta_a, "pair creation strength")
        ->capture_default_str();
    app.add_option("--delta-b", cfg.params.delta_b, "pair annihilation strength")
        ->capture_default_str();
    app.add_option("--mu", cfg.params.mu, "chemical potential")
        ->capture_default_str();
    app.add_option("--N", cfg.params.cells, "dimer count (2N sites)")
        ->capture_default_str();
    app.add_option("--boundary", boundary, "periodic or open")
        ->check(CLI::IsMember({"periodic", "open"}))
        ->capture_default_str();
    app.add_option("--output", cfg.output_dir, "output directory")
        ->capture_default_str();
    app.add_option("--zeta", cfg.zeta, "drive phase offset")
        ->capture_default_str();
    app.add_option("--dt", cfg.dt, "time step")->capture_default_str();
    app.add_option("--T", cfg.horizon, "time horizon")->capture_default_str();
    app.add_option("--scan", cfg.scan_parameter, "scan parameter: mu or ratio")
        ->check(CLI::IsMember({"mu", "ratio"}))
        ->capture_default_str();
    app.add_option("--values", cfg.scan_values, "scan parameter values")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--t-max", cfg.t_max, "scan time horizon")
        ->capture_default_str();
    app.add_option("--t-steps", cfg.t_steps, "scan time steps")
        ->capture_default_str();
    app.add_option("--threshold", cfg.threshold, "fidelity drop threshold")
        ->capture_default_str();
    app.add_option("--branch", cfg.branch, "zero-mode branch: minus or plus")
        ->check(CLI::IsMember({"minus", "plus"}))
        ->capture_default_str();
    app.add_option("--sites", cfg.sites, "spin chain length (even)")
        ->capture_default_str();
    app.add_option("--imbalances", cfg.imbalances,
                   "delta_a - delta_b values for the spin checks")
        ->delimiter(',')
        ->capture_default_str();

    for (const char* name :
         {"spectrum", "ground-state", "fixed-line-drive", "quench-scan",
          "zero-modes", "ladder-energy", "spin-check", "heisenberg-check",
          "oracle-verify"}) {
        app.add_subcommand(name)->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        throw ExitRequest{app.exit(e) == 0 ? 0 : 2};
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.params.boundary = boundary == "open" ? model::Boundary::open
                                             : model::Boundary::periodic;
    if (cfg.params.cells < 2 || cfg.params.cells % 2 != 0) {
        throw std::invalid_argument("N must be even and at least 2");
    }
    if (cfg.sites < 2 || cfg.sites % 2 != 0 || cfg.sites > 12) {
        throw std::invalid_argument("sites must be even, between 2 and 12");
    }
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (!(cfg.horizon > 0.0)) throw std::invalid_argument("T must be positive");
    if (cfg.t_steps < 1) throw std::invalid_argument("t-steps must be at least 1");
    if (!(cfg.threshold > 0.0 && cfg.threshold < 1.0)) {
        throw std::invalid_argument("threshold must lie in (0, 1)");
    }
    if (cfg.scan_values.empty()) {
        throw std::invalid_argument("values must not be empty");
    }
    model::validate(cfg.params);
    return cfg;
}

int run(const RunConfig& cfg) {
    if (cfg.command == "spectrum") return run_spectrum(cfg);
    if (cfg.command == "ground-state") return run_ground_state(cfg);
    if (cfg.command == "fixed-line-drive") return run_fixed_line_drive(cfg);
    if (cfg.command == "quench-scan") return run_quench_scan(cfg);
    if (cfg.command == "zero-modes") return run_zero_modes(cfg);
    if (cfg.command == "ladder-energy") return run_ladder_energy(cfg);
    if (cfg.command == "spin-check") return run_spin_check(cfg);
    if (cfg.command == "heisenberg-check") return run_heisenberg_check(cfg);
    if (cfg.command == "oracle-verify") return run_oracle_verify(cfg);
    throw std::invalid_argument("unknown command: " + cfg.command);
}

int main_entry(int argc, const char* const* argv) {
    try {
        return run(parse_config(argc, argv));
    } catch (const ExitRequest& e) {
        return e.code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace nhkit::cli
