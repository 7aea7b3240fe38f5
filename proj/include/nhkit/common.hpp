#ifndef NHKIT_COMMON_HPP
#define NHKIT_COMMON_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace nhkit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

constexpr Complex I{0.0, 1.0};

// Parameter point where an analytic construction degenerates (coalescing
// modes, vanishing normalization, non-unique vacuum).
class ExceptionalPointError : public std::runtime_error {
public:
    explicit ExceptionalPointError(const std::string& msg)
        : std::runtime_error(msg) {}
};

}  // namespace nhkit

#endif
