#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nhkit/numerics.hpp"
#include "oracles.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using namespace nhkit;

TEST_CASE("eig_complex: identity and diagonal input") {
    const auto id = num::eig_complex(Matrix::Identity(4, 4));
    CHECK_FALSE(id.defective);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(id.values(i) - 1.0) <= 1e-14);

    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = Complex(-1.0, 3.0);
    const auto vals = num::eigenvalues(d);
    CHECK(std::abs(vals[0] - Complex(-1.0, 3.0)) <= 1e-14);
    CHECK(std::abs(vals[1] - 2.0) <= 1e-14);
}

TEST_CASE("eig_complex: residuals, reconstruction, biorthogonality") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix m = oracles::random_matrix(6, rng);
        const auto ed = num::eig_complex(m);
        REQUIRE_FALSE(ed.defective);
        for (int i = 0; i < 6; ++i) {
            const Vector v = ed.right.col(i);
            CHECK((m * v - ed.values(i) * v).norm() / v.norm() <= 1e-10);
        }
        const Matrix rebuilt =
            ed.right * ed.values.asDiagonal() * ed.left.adjoint();
        CHECK((rebuilt - m).norm() / m.norm() <= 1e-9);
        CHECK((ed.left.adjoint() * ed.right - Matrix::Identity(6, 6)).norm() <=
              1e-9);
        for (int i = 0; i < 6; ++i) {
            const Vector l = ed.left.col(i);
            CHECK((m.adjoint() * l - std::conj(ed.values(i)) * l).norm() /
                      l.norm() <=
                  1e-9);
        }
    }
}

TEST_CASE("eig_complex: matches characteristic-polynomial roots at 3x3") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix m = oracles::random_matrix(3, rng);
        CHECK(num::multiset_distance(num::eigenvalues(m),
                                     oracles::cubic_eigenvalues(m)) <= 1e-10);
    }
}

TEST_CASE("eig_complex: rejects malformed input") {
    CHECK_THROWS_AS(num::eig_complex(Matrix::Zero(2, 3)),
                    std::invalid_argument);
    Matrix bad = Matrix::Zero(2, 2);
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(num::eig_complex(bad), std::invalid_argument);
    CHECK_THROWS_AS(num::eigenvalues(Matrix::Zero(3, 2)),
                    std::invalid_argument);
}

TEST_CASE("eigenvalues: sorted by (Re, Im) with conjugate pairs kept stable") {
    Matrix d = Matrix::Zero(4, 4);
    d(0, 0) = Complex(1.0, -2.0);
    d(1, 1) = Complex(1.0 + 3e-15, 2.0);
    d(2, 2) = Complex(-1.0, 0.0);
    d(3, 3) = Complex(1.0, -5.0);
    const auto vals = num::eigenvalues(d);
    CHECK(std::abs(vals[0].real() + 1.0) <= 1e-14);
    // degenerate real parts order by imaginary part despite rounding noise
    CHECK(vals[1].imag() <= vals[2].imag());
    CHECK(vals[2].imag() <= vals[3].imag());
}

TEST_CASE("expm: zero and diagonal input") {
    CHECK((num::expm(Matrix::Zero(3, 3)) - Matrix::Identity(3, 3)).norm() <=
          1e-14);
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = Complex(0.3, 1.1);
    d(1, 1) = Complex(-0.7, -0.2);
    const Matrix e = num::expm(d);
    CHECK(std::abs(e(0, 0) - std::exp(Complex(0.3, 1.1))) <= 1e-13);
    CHECK(std::abs(e(1, 1) - std::exp(Complex(-0.7, -0.2))) <= 1e-13);
    CHECK(std::abs(e(0, 1)) <= 1e-15);
}

TEST_CASE("expm: anti-Hermitian input exponentiates to a unitary") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 4; ++trial) {
        const Matrix a = oracles::random_matrix(4, rng);
        const Matrix anti = 0.5 * (a - a.adjoint());
        const Matrix u = num::expm(anti);
        CHECK((u.adjoint() * u - Matrix::Identity(4, 4)).norm() <= 1e-12);
        CHECK((u - oracles::taylor_expm(anti)).norm() <= 1e-12);
    }
}

TEST_CASE("expm: group property and Taylor-series oracle") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 4; ++trial) {
        Matrix m = oracles::random_matrix(5, rng);
        m *= 5.0 / m.norm();
        CHECK((num::expm(m) * num::expm(-m) - Matrix::Identity(5, 5)).norm() <=
              1e-10);
        CHECK((num::expm(m) - oracles::taylor_expm(m)).norm() /
                  oracles::taylor_expm(m).norm() <=
              1e-11);
    }
}

TEST_CASE("expm: rejects norms beyond the supported bound") {
    CHECK_THROWS_AS(num::expm(Matrix::Identity(2, 2) * 1e4),
                    std::overflow_error);
}

TEST_CASE("elliptic_e: endpoint values and quadrature oracle") {
    CHECK(num::elliptic_e(0.0) == doctest::Approx(std::numbers::pi / 2.0)
                                      .epsilon(1e-14));
    CHECK(num::elliptic_e(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    for (double k : {0.1, 0.5, std::sqrt(3.0) / 2.0, 0.99}) {
        CHECK(std::abs(num::elliptic_e(k) - oracles::quadrature_elliptic_e(k)) <=
              1e-12);
    }
}

TEST_CASE("elliptic_e: monotonically decreasing, domain enforced") {
    double prev = num::elliptic_e(0.0);
    for (int i = 1; i <= 20; ++i) {
        const double cur = num::elliptic_e(i / 20.0);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK_THROWS_AS(num::elliptic_e(-0.1), std::domain_error);
    CHECK_THROWS_AS(num::elliptic_e(1.1), std::domain_error);
}

TEST_CASE("multiset_distance: permutation-invariant, conjugate-pair safe") {
    std::vector<Complex> a = {Complex(1.0, 2.0), Complex(1.0, -2.0),
                              Complex(-3.0, 0.0)};
    std::vector<Complex> b = {Complex(-3.0, 0.0), Complex(1.0 + 4e-15, -2.0),
                              Complex(1.0 - 4e-15, 2.0)};
    CHECK(num::multiset_distance(a, b) <= 1e-12);
    b[0] += Complex(0.0, 5e-4);
    CHECK(num::multiset_distance(a, b) == doctest::Approx(5e-4).epsilon(1e-9));
    CHECK_THROWS_AS(num::multiset_distance(a, {Complex(0.0)}),
                    std::invalid_argument);
}
