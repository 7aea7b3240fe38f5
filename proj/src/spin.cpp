#include "nhkit/spin.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace nhkit::spin {

namespace {

void require_sites(int nsites) {
    if (nsites < 2 || nsites % 2 != 0 || nsites > 12) {
        throw std::invalid_argument("site count must be even, in [2, 12]");
    }
}

struct Factor {
    char axis;
    int site;  // 1-based
};

// Product of single-site Paulis on distinct sites, applied entry-wise.
void add_term(Matrix& h, Complex coeff, const std::vector<Factor>& factors,
              int nsites) {
    const Eigen::Index dim = Eigen::Index{1} << nsites;
    for (Eigen::Index n = 0; n < dim; ++n) {
        auto state = static_cast<unsigned>(n);
        Complex amp = coeff;
        for (const Factor& f : factors) {
            const unsigned bit = 1u << (f.site - 1);
            const bool down = (state & bit) != 0;
            switch (f.axis) {
                case 'x':
                    state ^= bit;
                    break;
                case 'y':
                    amp *= down ? -I : I;
                    state ^= bit;
                    break;
                case 'z':
                    if (down) amp = -amp;
                    break;
                default:
                    throw std::invalid_argument("axis must be x, y or z");
            }
        }
        h(static_cast<Eigen::Index>(state), n) += amp;
    }
}

std::vector<Factor> with_string(std::vector<Factor> factors, int nsites) {
    for (int i = 2; i <= nsites - 1; ++i) factors.push_back({'z', i});
    return factors;
}

}  // namespace

Matrix pauli(char axis) {
    Matrix m(2, 2);
    switch (axis) {
        case 'x':
            m << 0, 1, 1, 0;
            break;
        case 'y':
            m << 0, -I, I, 0;
            break;
        case 'z':
            m << 1, 0, 0, -1;
            break;
        default:
            throw std::invalid_argument("axis must be x, y or z");
    }
    return m;
}

Matrix site_operator(char axis, int site, int nsites) {
    require_sites(nsites);
    if (site < 1 || site > nsites) {
        throw std::invalid_argument("site index out of range");
    }
    Matrix m = Matrix::Zero(Eigen::Index{1} << nsites, Eigen::Index{1} << nsites);
    add_term(m, 1.0, {{axis, site}}, nsites);
    return m;
}

Matrix boundary_string(int nsites) {
    require_sites(nsites);
    Matrix m = Matrix::Zero(Eigen::Index{1} << nsites, Eigen::Index{1} << nsites);
    add_term(m, 1.0, with_string({}, nsites), nsites);
    return m;
}

Matrix ising_chain(int nsites) {
    require_sites(nsites);
    const Eigen::Index dim = Eigen::Index{1} << nsites;
    Matrix h = Matrix::Zero(dim, dim);
    for (int l = 1; l < nsites; ++l) {
        add_term(h, -1.0, {{'x', l}, {'x', l + 1}}, nsites);
    }
    add_term(h, -1.0, with_string({{'y', 1}, {'y', nsites}}, nsites), nsites);
    return h;
}

Matrix imbalance_coupling(int nsites) {
    require_sites(nsites);
    const Eigen::Index dim = Eigen::Index{1} << nsites;
    Matrix h = Matrix::Zero(dim, dim);
    const int cells = nsites / 2;
    for (int j = 1; j <= cells; ++j) {
        add_term(h, 1.0, {{'x', 2 * j - 1}, {'y', 2 * j}}, nsites);
        add_term(h, 1.0, {{'y', 2 * j - 1}, {'x', 2 * j}}, nsites);
    }
    for (int j = 1; j < cells; ++j) {
        add_term(h, -1.0, {{'y', 2 * j}, {'x', 2 * j + 1}}, nsites);
        add_term(h, -1.0, {{'x', 2 * j}, {'y', 2 * j + 1}}, nsites);
    }
    add_term(h, 1.0, with_string({{'y', 1}, {'x', nsites}}, nsites), nsites);
    add_term(h, 1.0, with_string({{'y', nsites}, {'x', 1}}, nsites), nsites);
    return h;
}

Matrix spin_hamiltonian(const model::ModelParams& p) {
    model::validate(p);
    const int nsites = 2 * p.cells;
    require_sites(nsites);
    const double scale = std::abs(p.J) + std::abs(p.delta_a) + std::abs(p.delta_b);
    if (std::abs(p.delta_a + p.delta_b - 2.0 * p.J) > 1e-12 * scale || p.mu != 0.0) {
        throw std::invalid_argument(
            "spin picture needs da + db = 2J and mu = 0");
    }
    return p.J * ising_chain(nsites) +
           I * ((p.delta_a - p.delta_b) / 4.0) * imbalance_coupling(nsites);
}

Vector ghz_state(int nsites, int sign) {
    require_sites(nsites);
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("sign must be +-1");
    }
    const Eigen::Index dim = Eigen::Index{1} << nsites;
    const double amp = 1.0 / std::sqrt(2.0 * dim);
    Vector v(dim);
    for (Eigen::Index n = 0; n < dim; ++n) {
        const int parity = std::popcount(static_cast<unsigned>(n)) % 2 == 0 ? 1 : -1;
        v(n) = amp * (1.0 + sign * parity);
    }
    return v;
}

std::vector<IdentityCheck> ghz_report(int nsites, double j_coupling,
                                      const std::vector<double>& imbalances) {
    require_sites(nsites);
    const double tol = 1e-12;
    const Matrix h0 = ising_chain(nsites);
    const Matrix coupling = imbalance_coupling(nsites);
    const Vector gp = ghz_state(nsites, 1);
    const Vector gm = ghz_state(nsites, -1);
    std::vector<IdentityCheck> checks;
    auto push = [&](std::string name, double residual) {
        checks.push_back({std::move(name), residual, tol, residual <= tol});
    };

    push("ising_ghz_plus_eigenvalue", (h0 * gp - (-nsites + 2.0) * gp).norm());
    push("ising_ghz_minus_eigenvalue", (h0 * gm + double(nsites) * gm).norm());
    push("coupling_annihilates_ghz_minus", (coupling * gm).norm());

    for (int l = 2; l <= nsites - 1; ++l) {
        const Eigen::Index dim = Eigen::Index{1} << nsites;
        // sy_l (sx_{l-1} - sx_{l+1}) kills both GHZ states on interior bonds.
        Matrix bond = Matrix::Zero(dim, dim);
        add_term(bond, 1.0, {{'y', l}, {'x', l - 1}}, nsites);
        add_term(bond, -1.0, {{'y', l}, {'x', l + 1}}, nsites);
        const double res = std::max((bond * gp).norm(), (bond * gm).norm());
        push("bulk_cancellation_site_" + std::to_string(l), res);
    }

    for (double dd : imbalances) {
        model::ModelParams p;
        p.J = j_coupling;
        p.cells = nsites / 2;
        p.delta_a = j_coupling + dd / 2.0;
        p.delta_b = j_coupling - dd / 2.0;
        const Matrix h = spin_hamiltonian(p);
        const double target = -nsites * j_coupling;
        char label[64];
        std::snprintf(label, sizeof label, "ghz_minus_ground_imbalance_%g", dd);
        push(label, (h * gm - target * gm).norm());
    }
    return checks;
}

std::vector<IdentityCheck> heisenberg_report(int nsites) {
    require_sites(nsites);
    const Eigen::Index dim = Eigen::Index{1} << nsites;
    const double tol = 1e-14 * dim;
    Matrix ring = Matrix::Zero(dim, dim);
    for (int l = 1; l <= nsites; ++l) {
        const int lp = l == nsites ? 1 : l + 1;
        for (char axis : {'x', 'y', 'z'}) {
            add_term(ring, 1.0, {{axis, l}, {axis, lp}}, nsites);
        }
    }
    Matrix staggered = Matrix::Zero(dim, dim);
    for (int j = 1; j <= nsites / 2; ++j) {
        const int next = 2 * j + 1 > nsites ? 1 : 2 * j + 1;
        add_term(staggered, 1.0, {{'x', 2 * j - 1}, {'y', 2 * j}}, nsites);
        add_term(staggered, -1.0, {{'y', 2 * j}, {'x', next}}, nsites);
    }
    const Matrix added = I * staggered;

    Vector right(dim), left(dim);
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    for (Eigen::Index n = 0; n < dim; ++n) {
        const int parity = std::popcount(static_cast<unsigned>(n)) % 2 == 0 ? 1 : -1;
        right(n) = amp;
        left(n) = amp * parity;
    }

    std::vector<IdentityCheck> checks;
    auto push = [&](std::string name, double residual) {
        checks.push_back({std::move(name), residual, tol, residual <= tol});
    };
    push("staggered_term_kills_right_polarized", (added * right).norm());
    push("staggered_term_kills_left_polarized", (added * left).norm());
    push("ring_eigenvalue_right_polarized",
         (ring * right - double(nsites) * right).norm());
    push("full_eigenvalue_right_polarized",
         ((ring + added) * right - double(nsites) * right).norm());
    push("full_eigenvalue_left_polarized",
         ((ring + added) * left - double(nsites) * left).norm());
    return checks;
}

}  // namespace nhkit::spin
