#include "nhkit/spectral.hpp"

#include <Eigen/SVD>

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nhkit::spectral {

namespace {

void require_fixed_line(const model::ModelParams& p) {
    model::validate(p);
    if (p.mu != 0.0) {
        throw std::invalid_argument("closed-form mode data needs mu = 0");
    }
}

void require_band(BandIndex b) {
    if ((b.rho != 1 && b.rho != -1) || (b.sigma != 1 && b.sigma != -1)) {
        throw std::invalid_argument("band indices must be +-1");
    }
}

Vector phase_fixed(Vector v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > 1e-12) {
            v *= std::abs(v(i)) / v(i);
            break;
        }
    }
    return v;
}

}  // namespace

double mode_angle(const model::ModelParams& p, double k) {
    require_fixed_line(p);
    const double s = p.delta_a + p.delta_b;
    const double d = 2.0 * p.J - s;
    return std::atan2(std::sin(k) * d, 2.0 * p.J + s + std::cos(k) * d);
}

Complex quasiparticle_energy(const model::ModelParams& p, double k, BandIndex b) {
    require_fixed_line(p);
    require_band(b);
    const double s = p.delta_a + p.delta_b;
    const double re = std::hypot(2.0 * p.J * std::cos(k / 2.0), s * std::sin(k / 2.0));
    const double im = (p.delta_a - p.delta_b) * std::cos(k / 2.0);
    return Complex(b.rho * re, b.sigma * im);
}

int band_row(BandIndex b) {
    require_band(b);
    return (b.rho == 1 ? 0 : 2) + (b.sigma == 1 ? 0 : 1);
}

ModeBasis mode_basis(const model::ModelParams& p, double k) {
    require_fixed_line(p);
    ModeBasis mb;
    mb.k = k;
    mb.theta = mode_angle(p, k);
    for (BandIndex b : kBands) {
        const double rho = b.rho, sigma = b.sigma;
        const Complex u = std::exp(I * (mb.theta - k / 2.0));
        const Complex v = std::exp(I * (mb.theta - k));
        const Complex w = std::exp(-I * k / 2.0);
        Eigen::Vector4cd c;
        c << 1.0 + rho * sigma * I * u,
            rho * v + I * sigma * w,
            1.0 - rho * sigma * I * u,
            -rho * v + I * sigma * w;
        if (band_row(b) == 0) mb.omega = c.squaredNorm();
        mb.coeff.row(band_row(b)) = c.transpose() / std::sqrt(c.squaredNorm());
    }
    return mb;
}

const model::FockSpace& pair_space() {
    static const model::FockSpace fs(
        {"alpha_+k", "beta_+k", "alpha_-k", "beta_-k"});
    return fs;
}

namespace {

// psi = (alpha_k, beta_k, alpha_-k^+, beta_-k^+) as 16-dim matrices.
std::array<Matrix, 4> psi_components() {
    const auto& fs = pair_space();
    return {fs.annihilation(0), fs.annihilation(1),
            fs.creation(2), fs.creation(3)};
}

}  // namespace

Matrix pair_block(const model::ModelParams& p, double k) {
    const Matrix h = model::core_matrix(p, k);
    const auto psi = psi_components();
    Matrix block = Matrix::Zero(16, 16);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            if (h(a, b) != 0.0) {
                block += h(a, b) * (psi[a].adjoint() * psi[b]);
            }
        }
    }
    return block;
}

Matrix mode_annihilator(const ModeBasis& basis, BandIndex b) {
    const auto psi = psi_components();
    const auto row = basis.coeff.row(band_row(b));
    Matrix op = Matrix::Zero(16, 16);
    for (int i = 0; i < 4; ++i) op += row(i) * psi[i];
    return op;
}

Matrix mode_creator(const ModeBasis& basis, BandIndex b) {
    return mode_annihilator(basis, b).adjoint();
}

Vector vacuum_state(const ModeBasis& basis) {
    Matrix stacked(64, 16);
    for (BandIndex b : kBands) {
        stacked.middleRows(16 * band_row(b), 16) = mode_annihilator(basis, b);
    }
    Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double tol = 1e-8 * sv(0);
    int kernel_dim = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) < tol) ++kernel_dim;
    }
    if (kernel_dim != 1) {
        throw ExceptionalPointError(
            "mode vacuum not unique at k = " + std::to_string(basis.k) +
            " (kernel dimension " + std::to_string(kernel_dim) + ")");
    }
    return phase_fixed(svd.matrixV().col(15));
}

Vector pair_ground_vector(const ModeBasis& basis) {
    const Vector vac = vacuum_state(basis);
    Vector v = mode_creator(basis, {-1, 1}) * (mode_creator(basis, {-1, -1}) * vac);
    const double n = v.norm();
    if (n < 1e-12) {
        throw ExceptionalPointError(
            "pair ground vector vanishes at k = " + std::to_string(basis.k));
    }
    return phase_fixed(v / n);
}

double ground_energy(const model::ModelParams& p) {
    require_fixed_line(p);
    if (p.boundary != model::Boundary::periodic) {
        throw std::invalid_argument("closed-form ground energy needs periodic boundary");
    }
    double e = -(2.0 * p.J + p.delta_a + p.delta_b);
    for (double k : model::momentum_grid(p.cells).pairs) {
        e += 2.0 * quasiparticle_energy(p, k, {-1, 1}).real();
    }
    return e;
}

GroundState ground_state(const model::ModelParams& p) {
    require_fixed_line(p);
    if (p.boundary != model::Boundary::periodic) {
        throw std::invalid_argument("closed-form ground state needs periodic boundary");
    }
    GroundState g;
    g.params = p;
    g.ks = model::momentum_grid(p.cells).pairs;
    for (double k : g.ks) {
        g.pair_vectors.push_back(pair_ground_vector(mode_basis(p, k)));
    }
    const auto& fs = pair_space();  // same four-mode layout as the {0, pi} sector
    const Matrix a0d = fs.creation(0), b0d = fs.creation(1);
    const Matrix apid = fs.creation(2), bpid = fs.creation(3);
    const Matrix id = Matrix::Identity(16, 16);
    Vector v = 0.5 * (apid * bpid - id) * ((a0d - b0d) * fs.vacuum());
    g.boundary_vector = phase_fixed(std::move(v));
    g.boundary_energy = -(2.0 * p.J + p.delta_a + p.delta_b);
    g.energy = ground_energy(p);
    return g;
}

std::vector<std::string> joint_mode_labels(int cells) {
    std::vector<std::string> labels = {"alpha_0", "beta_0", "alpha_pi", "beta_pi"};
    const auto grid = model::momentum_grid(cells);
    for (std::size_t m = 0; m < grid.pairs.size(); ++m) {
        const std::string tag = std::to_string(m + 1);
        labels.push_back("alpha_+k" + tag);
        labels.push_back("beta_+k" + tag);
        labels.push_back("alpha_-k" + tag);
        labels.push_back("beta_-k" + tag);
    }
    return labels;
}

Matrix fourier_matrix(int cells) {
    if (cells > 4) {
        throw std::invalid_argument("fourier_matrix capped at 8 sites");
    }
    const int nsites = 2 * cells;
    std::vector<std::string> site_labels;
    for (int l = 1; l <= nsites; ++l) site_labels.push_back("c" + std::to_string(l));
    const model::FockSpace real_space(site_labels);
    const Eigen::Index dim = real_space.dim();

    // alpha_k^+ = N^{-1/2} sum_j e^{ikj} c_{2j-1}^+, beta_k^+ likewise on even sites.
    auto momentum_creator = [&](double k, bool even_sublattice) {
        Matrix op = Matrix::Zero(dim, dim);
        for (int j = 1; j <= cells; ++j) {
            const int site = even_sublattice ? 2 * j : 2 * j - 1;
            op += std::exp(I * (k * j)) * real_space.creation(site - 1);
        }
        return Matrix(op / std::sqrt(static_cast<double>(cells)));
    };

    const auto grid = model::momentum_grid(cells);
    std::vector<Matrix> creators;
    for (double k : grid.singles) {
        creators.push_back(momentum_creator(k, false));
        creators.push_back(momentum_creator(k, true));
    }
    for (double k : grid.pairs) {
        creators.push_back(momentum_creator(k, false));
        creators.push_back(momentum_creator(k, true));
        creators.push_back(momentum_creator(-k, false));
        creators.push_back(momentum_creator(-k, true));
    }

    Matrix t(dim, dim);
    for (Eigen::Index n = 0; n < dim; ++n) {
        Vector v = real_space.vacuum();
        for (int i = nsites - 1; i >= 0; --i) {
            if ((n >> i) & 1) v = creators[static_cast<std::size_t>(i)] * v;
        }
        t.col(n) = v;
    }
    return t;
}

Vector assemble_state(const GroundState& g) {
    const int modes = 2 * g.params.cells;
    if (modes > 12) {
        throw std::invalid_argument("assemble_state capped at 12 modes");
    }
    const Eigen::Index dim = Eigen::Index{1} << modes;
    Vector v(dim);
    for (Eigen::Index n = 0; n < dim; ++n) {
        Complex amp = g.boundary_vector(n & 15);
        for (std::size_t pair = 0; pair < g.pair_vectors.size(); ++pair) {
            amp *= g.pair_vectors[pair]((n >> (4 + 4 * pair)) & 15);
        }
        v(n) = amp;
    }
    return v;
}

}  // namespace nhkit::spectral
