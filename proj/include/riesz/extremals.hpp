#pragma once

#include "riesz/constants.hpp"

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace riesz {

/// Which member of the extremal family.
enum class ExtremalVariant {
    rbar_weighted,  ///< ((1+z)/(1-z))^c - r_bar ((1+conj z)/(1-conj z))^c, p < 2
    beta_mixture,   ///< beta (...)^c + (beta-1) conj(...)^c, p < 2
    p2_degenerate,  ///< pure (co-)analytic power, p = 2 (side picked by b)
};

namespace detail {

/// Principal power of the Mobius image w = (1+z)/(1-z) of the open disk.
/// The image is the right half plane, so |arg w| < pi/2 and no branch cut
/// is crossed; Re w > 0 is asserted.
inline Complex halfplane_power(Complex z, double c) {
    const Complex w = (1.0 + z) / (1.0 - z);
    if (!(w.real() > 0.0))
        throw std::domain_error("halfplane_power: Mobius image left the right half plane");
    return std::pow(w, c);
}

} // namespace detail

/// Parameters of one extremal: exponent c with 0 < c p < 1, the variant,
/// and the mixture weight (defaulted from the sharpness formula).
struct ExtremalSpec {
    Params params;
    double c;
    ExtremalVariant variant;
    double beta;

    ExtremalSpec(Params pr, double c_, ExtremalVariant v)
        : ExtremalSpec(pr, c_, v, default_beta(pr, v)) {}

    ExtremalSpec(Params pr, double c_, ExtremalVariant v, double beta_)
        : params(pr), c(c_), variant(v), beta(beta_) {
        if (!(c > 0.0) || !(c * params.p < 1.0))
            throw std::invalid_argument("ExtremalSpec: need 0 < c and c*p < 1");
        const bool degenerate = detail::is_degenerate_p2(params.p);
        if ((variant == ExtremalVariant::p2_degenerate) != degenerate)
            throw std::invalid_argument(
                "ExtremalSpec: p2_degenerate variant is for p = 2 only, others for p < 2");
        if (variant == ExtremalVariant::beta_mixture && !(beta >= 0.0 && beta <= 1.0))
            throw std::invalid_argument("ExtremalSpec: beta must lie in [0, 1]");
    }

  private:
    static double default_beta(const Params& pr, ExtremalVariant v) {
        if (v == ExtremalVariant::beta_mixture) return sharpness_beta(pr);
        if (v == ExtremalVariant::p2_degenerate) return pr.b > 1.0 ? 1.0 : 0.0;
        return std::numeric_limits<double>::quiet_NaN();  // unused by rbar_weighted
    }
};

/// The two summands (g(z), conj(h(z))) of f = g + conj(h) at a point of the
/// open disk.
inline std::pair<Complex, Complex> eval_extremal(const ExtremalSpec& spec, Complex z) {
    if (!(std::abs(z) < 1.0))
        throw std::invalid_argument("eval_extremal: |z| < 1 required (use the boundary form)");
    const Complex base = detail::halfplane_power(z, spec.c);
    switch (spec.variant) {
        case ExtremalVariant::rbar_weighted: {
            const double r = extremal_rbar(spec.params);
            return {base, -r * std::conj(base)};
        }
        case ExtremalVariant::beta_mixture:
            return {spec.beta * base, (spec.beta - 1.0) * std::conj(base)};
        case ExtremalVariant::p2_degenerate:
        default:
            return spec.params.b > 1.0 ? std::pair<Complex, Complex>{base, Complex{}}
                                       : std::pair<Complex, Complex>{Complex{}, std::conj(base)};
    }
}

/// Nontangential boundary value at e^{it}, t in (-pi, pi] \ {0}.  On the
/// boundary (1+e^{it})/(1-e^{it}) = i cot(t/2), so the base power has
/// modulus |cot(t/2)|^c and argument sign(t) c pi/2.
inline Complex eval_extremal_boundary(const ExtremalSpec& spec, double t) {
    if (!(t > -kPi && t <= kPi) || t == 0.0)
        throw std::invalid_argument("eval_extremal_boundary: t in (-pi, pi] \\ {0} required");
    const double m = std::pow(std::abs(1.0 / std::tan(0.5 * t)), spec.c);
    const Complex base = std::polar(m, (t > 0.0 ? 1.0 : -1.0) * spec.c * kPi / 2.0);
    switch (spec.variant) {
        case ExtremalVariant::rbar_weighted:
            return base - extremal_rbar(spec.params) * std::conj(base);
        case ExtremalVariant::beta_mixture:
            return spec.beta * base + (spec.beta - 1.0) * std::conj(base);
        case ExtremalVariant::p2_degenerate:
        default:
            return spec.params.b > 1.0 ? base : std::conj(base);
    }
}

namespace detail {
inline void require_cp_below_1(const Params& pr, double c) {
    if (!(c * pr.p < 1.0)) throw std::invalid_argument("c*p < 1 required");
    if (!(c >= 0.0)) throw std::invalid_argument("c >= 0 required");
}
} // namespace detail

/// Closed form of int_0^{2pi} |g + conj h|^p dt for the beta mixture
/// (un-normalized, carries the 2 pi factor):
///   Z(beta) = 2 pi (1 + 2(beta-1)beta (1 + cos(c pi)))^{p/2} sec(c p pi / 2).
inline double Z_of_beta(const Params& pr, double c, double beta) {
    detail::require_cp_below_1(pr, c);
    if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta in [0,1] required");
    const double m2 = std::max(1.0 + 2.0 * (beta - 1.0) * beta * (1.0 + std::cos(c * kPi)), 0.0);
    return 2.0 * kPi * std::pow(m2, 0.5 * pr.p) / std::cos(0.5 * c * pr.p * kPi);
}

/// Closed form of int_0^{2pi} (|g|^2 + b |h|^2)^{p/2} dt for the beta
/// mixture.  On the boundary |g|^2 + b|h|^2 = (beta^2 + b(1-beta)^2)
/// |cot(t/2)|^{2c}, hence
///   X(beta) = 2 pi (beta^2 + b (1-beta)^2)^{p/2} sec(c p pi / 2).
inline double X_of_beta(const Params& pr, double c, double beta) {
    detail::require_cp_below_1(pr, c);
    if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta in [0,1] required");
    const double base = beta * beta + pr.b * (1.0 - beta) * (1.0 - beta);
    return 2.0 * kPi * std::pow(base, 0.5 * pr.p) / std::cos(0.5 * c * pr.p * kPi);
}

/// Taylor coefficients of ((1+z)/(1-z))^c through the given degree, via the
/// recurrence (k+1) a_{k+1} = 2c a_k + (k-1) a_{k-1} from
/// (1-z^2) w' = 2c w.  Coefficients are real for real c.
inline std::vector<double> halfplane_power_taylor(double c, int degree) {
    std::vector<double> a(static_cast<std::size_t>(degree) + 1, 0.0);
    a[0] = 1.0;
    if (degree >= 1) a[1] = 2.0 * c;
    for (int k = 1; k < degree; ++k)
        a[static_cast<std::size_t>(k) + 1] =
            (2.0 * c * a[static_cast<std::size_t>(k)] +
             (k - 1) * a[static_cast<std::size_t>(k) - 1]) /
            (k + 1);
    return a;
}

} // namespace riesz
