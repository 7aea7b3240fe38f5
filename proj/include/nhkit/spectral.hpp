#ifndef NHKIT_SPECTRAL_HPP
#define NHKIT_SPECTRAL_HPP

#include "nhkit/common.hpp"
#include "nhkit/model.hpp"

#include <vector>

namespace nhkit::spectral {

// Band labels: rho = +-1 selects the real branch, sigma = +-1 the imaginary one.
struct BandIndex {
    int rho = 1;
    int sigma = 1;
};

inline constexpr BandIndex kBands[4] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};

// Mixing angle theta(k) entering the mode coefficients (valid on the mu = 0 line).
double mode_angle(const model::ModelParams& p, double k);

// Closed-form quasiparticle energy
//   eps = rho * sqrt((2J cos(k/2))^2 + (da+db)^2 sin^2(k/2))
//         + i sigma (da - db) cos(k/2),  mu = 0.
Complex quasiparticle_energy(const model::ModelParams& p, double k, BandIndex b);

// Normal-mode data for one +-k pair. Row r of `coeff` holds the coefficients
// of annihilator A_{rho sigma} over (alpha_k, beta_k, alpha_-k^+, beta_-k^+),
// already divided by sqrt(omega); rows are ordered as kBands. The creators
// are the conjugate transposes, which is what the canonical anticommutation
// relations fix on the mu = 0 line.
struct ModeBasis {
    double k = 0.0;
    double theta = 0.0;
    double omega = 0.0;  // squared norm of the raw coefficient vector
    Eigen::Matrix4cd coeff;
};

ModeBasis mode_basis(const model::ModelParams& p, double k);

int band_row(BandIndex b);

// Joint Fock space of the four modes (alpha_k, beta_k, alpha_-k, beta_-k).
const model::FockSpace& pair_space();

// 16-dim many-body block psi^+ h_k psi of one +-k pair (any mu).
Matrix pair_block(const model::ModelParams& p, double k);

// Annihilator A_{rho sigma} and creator A^+_{rho sigma} on the pair space.
Matrix mode_annihilator(const ModeBasis& basis, BandIndex b);
Matrix mode_creator(const ModeBasis& basis, BandIndex b);

// Simultaneous kernel of the four annihilators; unique up to phase, fixed by
// making the first nonvanishing amplitude real positive. Throws
// ExceptionalPointError if the kernel is not one-dimensional.
Vector vacuum_state(const ModeBasis& basis);

// Two-quasiparticle ground vector of one pair block:
// A^+_{-+} A^+_{--} |vac>, normalized and phase-fixed.
Vector pair_ground_vector(const ModeBasis& basis);

// Closed-form ground data of the chain on the mu = 0 line, periodic boundary.
struct GroundState {
    model::ModelParams params;
    std::vector<double> ks;            // pair momenta, ascending
    std::vector<Vector> pair_vectors;  // 16-dim vectors per k
    Vector boundary_vector;            // 16-dim vector of the {0, pi} sector
    double boundary_energy = 0.0;      // -(2J + da + db)
    double energy = 0.0;               // total ground energy
};

GroundState ground_state(const model::ModelParams& p);

// E_g = 2 sum_{k in (0,pi)} Re eps_{-+}(k) - (2J + da + db).
double ground_energy(const model::ModelParams& p);

// Mode labels of the joint momentum-space Fock basis: the {0, pi} sector
// first, then (alpha_k, beta_k, alpha_-k, beta_-k) per ascending pair k.
std::vector<std::string> joint_mode_labels(int cells);

// Unitary mapping joint momentum-mode occupation states to the real-space
// Fock basis (columns indexed by joint occupation). Oracle use; 2N <= 8.
Matrix fourier_matrix(int cells);

// Product of the block vectors as one vector on the joint occupation basis.
Vector assemble_state(const GroundState& g);

}  // namespace nhkit::spectral

#endif
