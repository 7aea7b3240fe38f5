#include "nhkit/majorana.hpp"

#include "nhkit/numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nhkit::majorana {

int ladder_index(int site, Sublattice s) {
    if (site < 1) throw std::invalid_argument("site index is 1-based");
    return 2 * (site - 1) + (s == Sublattice::B ? 1 : 0);
}

Matrix build_majorana(const model::ModelParams& p, double lambda) {
    model::validate(p);
    const int nsites = 2 * p.cells;
    const int dim = 2 * nsites;
    const double d8 = (p.delta_a - p.delta_b) / 8.0;
    const double kp = (2.0 * p.J + (p.delta_a + p.delta_b)) / 4.0;
    const double km = (2.0 * p.J - (p.delta_a + p.delta_b)) / 4.0;
    auto wrap = [nsites](int l) { return (l - 1) % nsites + 1; };
    auto at = [](int site, Sublattice s) { return ladder_index(site, s); };

    Matrix x = Matrix::Zero(dim, dim);  // enters as x - x^+
    for (int j = 1; j <= p.cells; ++j) {
        x(at(2 * j, Sublattice::A), at(wrap(2 * j + 1), Sublattice::A)) += d8;
        x(at(wrap(2 * j + 1), Sublattice::B), at(2 * j, Sublattice::B)) += d8;
        x(at(2 * j, Sublattice::A), at(2 * j - 1, Sublattice::A)) += d8;
        x(at(2 * j - 1, Sublattice::B), at(2 * j, Sublattice::B)) += d8;
    }
    Matrix y = Matrix::Zero(dim, dim);  // enters as y + y^+
    for (int l = 1; l <= nsites; ++l) {
        y(at(l, Sublattice::B), at(wrap(l + 1), Sublattice::A)) += kp / 2.0;
        y(at(wrap(l + 1), Sublattice::B), at(l, Sublattice::A)) += km / 2.0;
    }
    Matrix m = (x - x.adjoint()) + (y + y.adjoint());

    // Impurity scales away the couplings on the ring-closing bond.
    Matrix yb = Matrix::Zero(dim, dim);
    yb(at(nsites, Sublattice::B), at(1, Sublattice::A)) += kp / 2.0;
    yb(at(1, Sublattice::B), at(nsites, Sublattice::A)) += km / 2.0;
    Matrix xb = Matrix::Zero(dim, dim);
    xb(at(nsites, Sublattice::A), at(1, Sublattice::A)) += d8;
    xb(at(1, Sublattice::B), at(nsites, Sublattice::B)) += d8;
    m -= lambda * ((yb + yb.adjoint()) + (xb - xb.adjoint()));
    return m;
}

Complex ladder_mode_energy(const model::ModelParams& p, double K,
                           spectral::BandIndex b) {
    model::validate(p);
    if ((b.rho != 1 && b.rho != -1) || (b.sigma != 1 && b.sigma != -1)) {
        throw std::invalid_argument("band indices must be +-1");
    }
    const double s = p.delta_a + p.delta_b;
    const double re =
        0.25 * std::hypot(2.0 * p.J * std::cos(K), s * std::sin(K));
    const double im = 0.25 * (p.delta_a - p.delta_b) * std::cos(K);
    return Complex(b.rho * re, b.sigma * im);
}

std::vector<Complex> ladder_spectrum(const model::ModelParams& p) {
    std::vector<Complex> values;
    values.reserve(4 * static_cast<std::size_t>(p.cells));
    for (int m = 0; m < p.cells; ++m) {
        const double K = std::numbers::pi * m / p.cells;
        for (spectral::BandIndex b : spectral::kBands) {
            values.push_back(ladder_mode_energy(p, K, b));
        }
    }
    return values;
}

LadderEnergy ladder_ground_energy(const model::ModelParams& p) {
    model::validate(p);
    const double s = p.delta_a + p.delta_b;
    const double big = std::max(2.0 * p.J, s);
    const double small = std::min(2.0 * p.J, s);
    if (big <= 0.0) {
        throw std::invalid_argument("elliptic ground energy needs max(2J, da+db) > 0");
    }
    LadderEnergy e;
    const double modulus = std::sqrt(1.0 - (small / big) * (small / big));
    e.closed_form = -(p.cells / std::numbers::pi) * big * num::elliptic_e(modulus);
    for (Complex v : ladder_spectrum(p)) {
        if (v.real() < 0.0) e.numeric_sum += v.real();
    }
    return e;
}

ResonanceData resonance(const model::ModelParams& p) {
    model::validate(p);
    const double J = p.J, da = p.delta_a, db = p.delta_b;
    const double denom = 2.0 * (J * J - da * db);
    if (denom == 0.0) {
        throw std::domain_error("decay rate undefined at J^2 = da*db");
    }
    ResonanceData r;
    r.gamma = (std::abs(da + db) * std::hypot(da - db, 2.0 * J) - 2.0 * J * J -
               da * da - db * db) /
              denom;
    r.beta = (da == db)
                 ? 0.0
                 : (std::hypot(2.0 * J, db - da) - 2.0 * J) / (db - da);
    r.lambda_minus = 1.0 - std::pow(r.gamma, p.cells);
    r.lambda_plus = 1.0 - std::pow(r.gamma, -p.cells);
    if (!std::isfinite(r.lambda_minus) || !std::isfinite(r.lambda_plus)) {
        throw std::overflow_error("impurity strength overflow: |gamma|^N out of range");
    }
    return r;
}

ZeroModePair zero_modes(const model::ModelParams& p, Branch branch) {
    const ResonanceData r = resonance(p);
    const int dim = 4 * p.cells;
    ZeroModePair pair;
    pair.branch = branch;
    pair.lambda = branch == Branch::lambda_minus ? r.lambda_minus : r.lambda_plus;
    pair.psi_left = Vector::Zero(dim);
    pair.psi_right = Vector::Zero(dim);
    for (int j = 1; j <= p.cells; ++j) {
        const double fwd = std::pow(r.gamma, j - 1);
        const double bwd = std::pow(r.gamma, p.cells - j);
        if (branch == Branch::lambda_minus) {
            pair.psi_left(ladder_index(2 * j - 1, Sublattice::A)) = fwd;
            pair.psi_left(ladder_index(2 * j - 1, Sublattice::B)) = r.beta * fwd;
            pair.psi_right(ladder_index(2 * j, Sublattice::B)) = bwd;
            pair.psi_right(ladder_index(2 * j, Sublattice::A)) = r.beta * bwd;
        } else {
            pair.psi_right(ladder_index(2 * j - 1, Sublattice::B)) = bwd;
            pair.psi_right(ladder_index(2 * j - 1, Sublattice::A)) = -r.beta * bwd;
            pair.psi_left(ladder_index(2 * j, Sublattice::A)) = fwd;
            pair.psi_left(ladder_index(2 * j, Sublattice::B)) = -r.beta * fwd;
        }
    }
    return pair;
}

Vector edge_state(const ZeroModePair& pair) {
    const double inv = 1.0 / std::sqrt(2.0);
    return inv * (pair.psi_right / pair.psi_right.norm() +
                  pair.psi_left / pair.psi_left.norm());
}

std::vector<SiteAmplitude> site_profile(const Vector& ladder_vector) {
    if (ladder_vector.size() % 2 != 0) {
        throw std::invalid_argument("ladder vector length must be even");
    }
    std::vector<SiteAmplitude> profile;
    profile.reserve(static_cast<std::size_t>(ladder_vector.size()));
    for (Eigen::Index i = 0; i < ladder_vector.size(); ++i) {
        SiteAmplitude amp;
        amp.site = static_cast<int>(i / 2) + 1;
        amp.sublattice = (i % 2 == 0) ? Sublattice::A : Sublattice::B;
        amp.value = ladder_vector(i);
        profile.push_back(amp);
    }
    return profile;
}

}  // namespace nhkit::majorana
