#ifndef NHKIT_SPIN_HPP
#define NHKIT_SPIN_HPP

#include "nhkit/common.hpp"
#include "nhkit/model.hpp"

#include <string>
#include <vector>

namespace nhkit::spin {

// Basis convention: bit l-1 of the basis index is site l, bit value 0 means
// sigma^z eigenvalue +1.
Matrix pauli(char axis);  // 'x', 'y' or 'z'
Matrix site_operator(char axis, int site, int nsites);

// prod_{i=2}^{nsites-1} sigma^z_i.
Matrix boundary_string(int nsites);

// Open transverse-free Ising chain with a string-dressed closing bond:
// -sum_{l<2N} sx_l sx_{l+1} - (string) sy_1 sy_2N.
Matrix ising_chain(int nsites);

// Staggered imbalance coupling: intra-dimer xy + yx terms minus inter-dimer
// yx + xy terms plus the string-dressed boundary pair.
Matrix imbalance_coupling(int nsites);

// J * ising_chain + i (da-db)/4 * imbalance_coupling. Valid on the line
// da + db = 2J with mu = 0; capped at 12 sites.
Matrix spin_hamiltonian(const model::ModelParams& p);

// (prod |up_x> +- prod |down_x>)/sqrt(2) in the sigma^x product basis.
Vector ghz_state(int nsites, int sign);

struct IdentityCheck {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Exact identities of the spin picture on GHZ states: Ising eigenvalues,
// annihilation of GHZ- by the coupling, interior-bond cancellation, and
// ground-state invariance across pairing imbalances.
std::vector<IdentityCheck> ghz_report(int nsites, double j_coupling,
                                      const std::vector<double>& imbalances);

// Isotropic exchange ring with the staggered imbalance term: both x-polarized
// product states stay eigenstates with unchanged eigenvalue 2N.
std::vector<IdentityCheck> heisenberg_report(int nsites);

}  // namespace nhkit::spin

#endif
