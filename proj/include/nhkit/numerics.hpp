#ifndef NHKIT_NUMERICS_HPP
#define NHKIT_NUMERICS_HPP

#include "nhkit/common.hpp"

#include <vector>

namespace nhkit::num {

// Two-sided eigendecomposition of a general complex matrix.
// Eigenvalues sorted by (Re, Im) ascending. Columns of `right` are right
// eigenvectors; columns of `left` are left eigenvectors normalized so that
// left.adjoint() * right == I (biorthogonal, overlap 1 per pair).
struct EigenDecomposition {
    Vector values;
    Matrix right;
    Matrix left;
    bool defective = false;
};

EigenDecomposition eig_complex(const Matrix& m);

// Lexicographic (Re, Im) order with both parts rounded at 1e-9 first, so
// that conjugate partners of numerically degenerate real parts sort the
// same way in independently computed collections.
bool lex_less(Complex a, Complex b);

// Eigenvalues only, sorted by lex_less.
std::vector<Complex> eigenvalues(const Matrix& m);

// Matrix exponential e^M. Diagonalization route when the eigenvector basis is
// well conditioned, scaling-and-squaring otherwise. Accurate to ~1e-12
// relative for ||M|| <= 50.
Matrix expm(const Matrix& m);

// Complete elliptic integral of the second kind,
// E(k) = \int_0^{pi/2} sqrt(1 - k^2 sin^2 t) dt, modulus k in [0, 1].
double elliptic_e(double modulus);

// Largest pairwise gap after sorting both collections by (Re, Im); the
// natural distance between eigenvalue multisets.
double multiset_distance(std::vector<Complex> a, std::vector<Complex> b);

}  // namespace nhkit::num

#endif
