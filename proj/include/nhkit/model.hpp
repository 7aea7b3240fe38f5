#ifndef NHKIT_MODEL_HPP
#define NHKIT_MODEL_HPP

#include "nhkit/common.hpp"

#include <string>
#include <vector>

namespace nhkit::model {

enum class Boundary { periodic, open };

// Chain of 2N spinless fermion sites (N dimers): hopping J, staggered pair
// creation/annihilation strengths delta_a / delta_b, chemical potential mu
// entering as mu * sum(1 - 2 n_l). The momentum-space machinery needs an
// even dimer count (enforced by momentum_grid); the real-space builders
// accept any N >= 1.
struct ModelParams {
    double J = 1.0;
    double delta_a = 0.0;
    double delta_b = 0.0;
    double mu = 0.0;
    int cells = 4;  // N; site count is 2N
    Boundary boundary = Boundary::periodic;
};

void validate(const ModelParams& p);

int site_count(const ModelParams& p);

// k = 2 pi m / N, m = 0..N-1, folded onto {0, pi} plus +-k pairs.
struct MomentumGrid {
    std::vector<double> singles;  // {0, pi}
    std::vector<double> pairs;    // k in (0, pi), ascending, N/2 - 1 values
};

MomentumGrid momentum_grid(int cells);

// 4x4 momentum-sector matrix h_k over (alpha_k, beta_k, alpha_-k^+, beta_-k^+),
// k strictly inside (0, pi).
Matrix core_matrix(const ModelParams& p, double k);

// Dense Fock-space machinery for a handful of fermionic modes.
// Basis convention: bit i of the basis index is the occupation of mode i;
// annihilation carries the sign string over lower-indexed modes, so the
// canonical anticommutation relations hold with integer-exact signs.
class FockSpace {
public:
    explicit FockSpace(std::vector<std::string> mode_labels);

    int modes() const { return static_cast<int>(labels_.size()); }
    Eigen::Index dim() const { return Eigen::Index{1} << modes(); }
    const std::vector<std::string>& labels() const { return labels_; }

    Matrix annihilation(int mode) const;
    Matrix creation(int mode) const;
    Matrix number_op(int mode) const;
    Vector vacuum() const;

private:
    std::vector<std::string> labels_;
};

// Many-body blocks of the k = 0 and k = pi sectors. h0 lives on the 4-dim
// Fock space of (alpha_0, beta_0), hpi on (alpha_pi, beta_pi); combined is
// their sum on the joint 16-dim space with the k = 0 modes as low bits.
struct BoundaryBlocks {
    Matrix h0;        // 4x4
    Matrix hpi;       // 4x4
    Matrix combined;  // 16x16
};

BoundaryBlocks boundary_blocks(const ModelParams& p);

// Brute-force many-body Hamiltonian on the full 2^(2N) Fock space of the
// real-space modes c_1..c_2N. Oracle use only; capped at 2N <= 12.
Matrix fock_hamiltonian(const ModelParams& p);

}  // namespace nhkit::model

#endif
