#ifndef NHKIT_MAJORANA_HPP
#define NHKIT_MAJORANA_HPP

#include "nhkit/common.hpp"
#include "nhkit/model.hpp"
#include "nhkit/spectral.hpp"

#include <vector>

namespace nhkit::majorana {

enum class Sublattice { A, B };

// Slot of site l (1-based) on the 4N-dim ladder basis
// (-i a_1, b_1, -i a_2, b_2, ...): A-slots even, B-slots odd.
int ladder_index(int site, Sublattice s);

// Single-particle ladder matrix of the Majorana representation with an
// impurity of strength lambda on the bond closing the ring; lambda = 0 is
// the translation-invariant ring, lambda = 1 the open chain.
Matrix build_majorana(const model::ModelParams& p, double lambda);

// Closed-form ladder dispersion
//   E_K = rho/4 sqrt((2J)^2 cos^2 K + (da+db)^2 sin^2 K)
//         + i sigma (da-db)/4 cos K,  K = m pi / N.
Complex ladder_mode_energy(const model::ModelParams& p, double K,
                           spectral::BandIndex b);

// All 4N closed-form values at lambda = 0, ordered by ascending K with the
// four branches in kBands order.
std::vector<Complex> ladder_spectrum(const model::ModelParams& p);

// Ground energy of the ladder: elliptic closed form
// -(N/pi) max(2J, da+db) E(e), e^2 = 1 - (min/max)^2, versus the sum of the
// negative-real-part closed-form mode values.
struct LadderEnergy {
    double closed_form = 0.0;
    double numeric_sum = 0.0;
};

LadderEnergy ladder_ground_energy(const model::ModelParams& p);

// Decay rate gamma, mixing coefficient beta, and the two impurity strengths
// lambda_-+ = 1 -+ gamma^{+-N} hosting exact zero modes.
struct ResonanceData {
    double gamma = 0.0;
    double beta = 0.0;
    double lambda_minus = 0.0;  // 1 - gamma^N
    double lambda_plus = 0.0;   // 1 - gamma^{-N}
};

ResonanceData resonance(const model::ModelParams& p);

enum class Branch { lambda_minus, lambda_plus };

// Closed-form left/right zero modes of build_majorana(p, lambda(branch)).
// Amplitudes decay as powers of gamma from opposite edges.
struct ZeroModePair {
    Branch branch = Branch::lambda_minus;
    double lambda = 0.0;
    Vector psi_left;
    Vector psi_right;
};

ZeroModePair zero_modes(const model::ModelParams& p, Branch branch);

// psi_E = psi_R / (sqrt(2) |psi_R|) + psi_L / (sqrt(2) |psi_L|).
Vector edge_state(const ZeroModePair& pair);

// Per-slot profile of a ladder vector for export and plotting.
struct SiteAmplitude {
    int site = 0;  // 1-based
    Sublattice sublattice = Sublattice::A;
    Complex value;
};

std::vector<SiteAmplitude> site_profile(const Vector& ladder_vector);

}  // namespace nhkit::majorana

#endif
