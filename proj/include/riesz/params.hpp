#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace riesz {

inline constexpr double kPi = std::numbers::pi;

using Complex = std::complex<double>;

/// Thrown by closed forms that contain sec(pi/p) and therefore degenerate
/// at p = 2 (equality-locus ratio, extremal coefficient, mixing weight).
class degenerate_p2_error : public std::domain_error {
  public:
    explicit degenerate_p2_error(const std::string& what) : std::domain_error(what) {}
};

/// Exponent/weight pair (p, b), 1 <= p <= 2 and b > 0.
struct Params {
    double p;
    double b;

    Params(double p_, double b_) : p(p_), b(b_) {
        if (!(p >= 1.0 && p <= 2.0))
            throw std::invalid_argument("Params: p must lie in [1, 2]");
        if (!(b > 0.0) || !std::isfinite(b))
            throw std::invalid_argument("Params: b must be positive and finite");
    }
};

/// arg with the branch arg(x) in (-pi, pi] and arg(0) := 0.
inline double arg_principal(Complex z) {
    if (z.real() == 0.0 && z.imag() == 0.0) return 0.0;
    double a = std::arg(z);
    if (a <= -kPi) a = kPi;  // std::arg can yield -pi when imag is a negative zero
    return a;
}

} // namespace riesz
