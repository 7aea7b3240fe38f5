#include "nhkit/model.hpp"

#include <bit>
#include <cmath>
#include <initializer_list>
#include <iterator>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace nhkit::model {

namespace {

void require_even_cells(int cells) {
    if (cells < 2 || cells % 2 != 0) {
        throw std::invalid_argument("cells must be even and at least 2");
    }
}

}  // namespace

void validate(const ModelParams& p) {
    if (p.cells < 1) {
        throw std::invalid_argument("cells must be at least 1");
    }
    for (double v : {p.J, p.delta_a, p.delta_b, p.mu}) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("model parameters must be finite");
        }
    }
}

int site_count(const ModelParams& p) { return 2 * p.cells; }

MomentumGrid momentum_grid(int cells) {
    require_even_cells(cells);
    MomentumGrid g;
    g.singles = {0.0, std::numbers::pi};
    for (int m = 1; m < cells / 2; ++m) {
        g.pairs.push_back(2.0 * std::numbers::pi * m / cells);
    }
    return g;
}

Matrix core_matrix(const ModelParams& p, double k) {
    validate(p);
    if (!(k > 0.0 && k < std::numbers::pi)) {
        throw std::invalid_argument("core_matrix needs k strictly inside (0, pi)");
    }
    const Complex ek = std::exp(I * k);
    const Complex emk = std::exp(-I * k);
    const double J = p.J, da = p.delta_a, db = p.delta_b, mu = p.mu;
    Matrix h(4, 4);
    h << -2.0 * mu, J * (1.0 + emk), 0.0, db - da * emk,
        J * (1.0 + ek), -2.0 * mu, da * ek - db, 0.0,
        0.0, db * emk - da, 2.0 * mu, -J * (1.0 + emk),
        da - db * ek, 0.0, -J * (1.0 + ek), 2.0 * mu;
    return h;
}

FockSpace::FockSpace(std::vector<std::string> mode_labels)
    : labels_(std::move(mode_labels)) {
    if (labels_.empty() || labels_.size() > 12) {
        throw std::invalid_argument("FockSpace supports 1..12 modes");
    }
}

Matrix FockSpace::annihilation(int mode) const {
    if (mode < 0 || mode >= modes()) {
        throw std::invalid_argument("mode index out of range");
    }
    const Eigen::Index d = dim();
    Matrix a = Matrix::Zero(d, d);
    const unsigned bit = 1u << mode;
    const unsigned below = bit - 1u;
    for (Eigen::Index n = 0; n < d; ++n) {
        const auto un = static_cast<unsigned>(n);
        if (un & bit) {
            const double sign = (std::popcount(un & below) % 2 == 0) ? 1.0 : -1.0;
            a(static_cast<Eigen::Index>(un ^ bit), n) = sign;
        }
    }
    return a;
}

Matrix FockSpace::creation(int mode) const {
    return annihilation(mode).adjoint();
}

Matrix FockSpace::number_op(int mode) const {
    return creation(mode) * annihilation(mode);
}

Vector FockSpace::vacuum() const {
    Vector v = Vector::Zero(dim());
    v(0) = 1.0;
    return v;
}

BoundaryBlocks boundary_blocks(const ModelParams& p) {
    validate(p);
    const double J = p.J, da = p.delta_a, db = p.delta_b, mu = p.mu;

    BoundaryBlocks blocks;
    {
        const FockSpace fs({"alpha_0", "beta_0"});
        const Matrix a = fs.annihilation(0), b = fs.annihilation(1);
        const Matrix ad = a.adjoint(), bd = b.adjoint();
        blocks.h0 = 2.0 * J * (ad * b + bd * a) +
                    2.0 * mu * (a * ad - bd * b) +
                    (db - da) * (ad * bd + a * b);
    }
    {
        const FockSpace fs({"alpha_pi", "beta_pi"});
        const Matrix a = fs.annihilation(0), b = fs.annihilation(1);
        const Matrix ad = a.adjoint(), bd = b.adjoint();
        blocks.hpi = 2.0 * mu * (a * ad - bd * b) +
                     (db + da) * (ad * bd + b * a);
    }
    blocks.combined = Matrix::Zero(16, 16);
    for (Eigen::Index n = 0; n < 16; ++n) {
        for (Eigen::Index m = 0; m < 16; ++m) {
            if ((n >> 2) == (m >> 2)) blocks.combined(n, m) += blocks.h0(n & 3, m & 3);
            if ((n & 3) == (m & 3)) blocks.combined(n, m) += blocks.hpi(n >> 2, m >> 2);
        }
    }
    return blocks;
}

Matrix fock_hamiltonian(const ModelParams& p) {
    validate(p);
    const int nsites = site_count(p);
    if (nsites > 12) {
        throw std::invalid_argument("fock_hamiltonian capped at 12 sites");
    }
    const Eigen::Index dim = Eigen::Index{1} << nsites;
    Matrix h = Matrix::Zero(dim, dim);

    struct Op {
        int site;  // 1-based
        bool dagger;
    };
    // Operator list reads left to right; applied right to left onto kets.
    auto add_term = [&](Complex coeff, std::initializer_list<Op> ops) {
        for (Eigen::Index n = 0; n < dim; ++n) {
            auto state = static_cast<unsigned>(n);
            double sign = 1.0;
            bool alive = true;
            for (auto it = std::rbegin(ops); it != std::rend(ops); ++it) {
                const unsigned bit = 1u << (it->site - 1);
                const bool occupied = (state & bit) != 0;
                if (it->dagger == occupied) {
                    alive = false;
                    break;
                }
                if (std::popcount(state & (bit - 1u)) % 2 != 0) sign = -sign;
                state ^= bit;
            }
            if (alive) {
                h(static_cast<Eigen::Index>(state), n) += coeff * sign;
            }
        }
    };

    const bool periodic = p.boundary == Boundary::periodic;
    auto wrap = [&](int site) { return site > nsites ? site - nsites : site; };

    for (int l = 1; l <= nsites; ++l) {
        if (l == nsites && !periodic) break;
        const int lp = wrap(l + 1);
        add_term(p.J, {{l, true}, {lp, false}});
        add_term(p.J, {{lp, true}, {l, false}});
    }
    for (Eigen::Index n = 0; n < dim; ++n) {
        h(n, n) += p.mu * (nsites - 2.0 * std::popcount(static_cast<unsigned>(n)));
    }
    for (int j = 1; j <= p.cells; ++j) {
        const int even = 2 * j;
        const int odd = 2 * j - 1;
        add_term(p.delta_a, {{even, false}, {odd, false}});
        add_term(p.delta_b, {{odd, true}, {even, true}});
        if (2 * j + 1 > nsites && !periodic) continue;
        const int next = wrap(2 * j + 1);
        add_term(p.delta_a, {{even, true}, {next, true}});
        add_term(p.delta_b, {{next, false}, {even, false}});
    }
    return h;
}

}  // namespace nhkit::model
