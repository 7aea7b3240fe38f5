#include "nhkit/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace nhkit::num {

namespace {

void require_square_finite(const Matrix& m, const char* who) {
    if (m.rows() != m.cols())
        throw std::invalid_argument(std::string(who) + ": matrix must be square");
    if (m.rows() == 0 || m.rows() > 4096)
        throw std::invalid_argument(std::string(who) + ": dimension out of range");
    if (!m.allFinite())
        throw std::invalid_argument(std::string(who) + ": non-finite entries");
}

}  // namespace

EigenDecomposition eig_complex(const Matrix& m) {
    require_square_finite(m, "eig_complex");
    const Eigen::Index n = m.rows();

    Eigen::ComplexEigenSolver<Matrix> solver(m, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eig_complex: solver failed to converge");

    Vector vals = solver.eigenvalues();
    Matrix right = solver.eigenvectors();

    std::vector<Eigen::Index> order(static_cast<size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        if (vals(a).real() != vals(b).real()) return vals(a).real() < vals(b).real();
        return vals(a).imag() < vals(b).imag();
    });

    EigenDecomposition out;
    out.values.resize(n);
    out.right.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out.values(i) = vals(order[static_cast<size_t>(i)]);
        out.right.col(i) = right.col(order[static_cast<size_t>(i)]);
    }

    // Left eigenvectors from the inverse of the right basis: rows of R^{-1}
    // satisfy row_i * M = lambda_i * row_i and row_i * col_j = delta_ij, so
    // storing them as adjoint columns gives left.adjoint() * right = I.
    Eigen::FullPivLU<Matrix> lu(out.right);
    const double cond_floor = 1e-8;
    Eigen::JacobiSVD<Matrix> svd(out.right);
    const auto& sv = svd.singularValues();
    out.defective = sv(sv.size() - 1) < cond_floor * sv(0);
    if (lu.isInvertible()) {
        Matrix rinv = lu.inverse();
        out.left = rinv.adjoint();
    } else {
        out.defective = true;
        out.left = out.right;  // placeholder; flagged defective
    }
    return out;
}

bool lex_less(Complex a, Complex b) {
    const double ar = std::round(a.real() * 1e9);
    const double br = std::round(b.real() * 1e9);
    if (ar != br) return ar < br;
    return std::round(a.imag() * 1e9) < std::round(b.imag() * 1e9);
}

std::vector<Complex> eigenvalues(const Matrix& m) {
    require_square_finite(m, "eigenvalues");
    Eigen::ComplexEigenSolver<Matrix> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalues: solver failed to converge");
    std::vector<Complex> vals(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + m.rows());
    std::sort(vals.begin(), vals.end(), lex_less);
    return vals;
}

Matrix expm(const Matrix& m) {
    require_square_finite(m, "expm");
    const double scale = m.cwiseAbs().maxCoeff();
    if (scale > 1e3)
        throw std::overflow_error("expm: norm exceeds supported bound");

    Eigen::ComplexEigenSolver<Matrix> solver(m, true);
    if (solver.info() == Eigen::Success) {
        const Matrix& v = solver.eigenvectors();
        Eigen::JacobiSVD<Matrix> svd(v);
        const auto& sv = svd.singularValues();
        if (sv(sv.size() - 1) > 1e-6 * sv(0)) {
            Eigen::PartialPivLU<Matrix> lu(v);
            Matrix expd = solver.eigenvalues().array().exp().matrix().asDiagonal();
            return v * expd * lu.inverse();
        }
    }
    // Near-defective input: scaling-and-squaring Pade.
    return m.exp();
}

double elliptic_e(double modulus) {
    if (!(modulus >= 0.0 && modulus <= 1.0))
        throw std::domain_error("elliptic_e: modulus must lie in [0, 1]");
    if (modulus == 0.0) return std::numbers::pi / 2.0;
    if (modulus == 1.0) return 1.0;

    // Arithmetic-geometric mean: E = K * (1 - sum 2^{n-1} c_n^2), c_0 = k.
    double a = 1.0;
    double b = std::sqrt(1.0 - modulus * modulus);
    double c = modulus;
    double csum = 0.5 * c * c;
    double pow2 = 0.5;
    for (int n = 0; n < 64 && c > 1e-17; ++n) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        c = 0.5 * (a - b);
        a = an;
        b = bn;
        pow2 *= 2.0;
        csum += pow2 * c * c;
    }
    const double big_k = std::numbers::pi / (2.0 * a);
    return big_k * (1.0 - csum);
}

double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("multiset_distance: size mismatch");
    }
    std::sort(a.begin(), a.end(), lex_less);
    std::sort(b.begin(), b.end(), lex_less);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace nhkit::num
