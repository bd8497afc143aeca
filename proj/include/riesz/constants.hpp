#pragma once

#include "riesz/params.hpp"

#include <algorithm>
#include <limits>
#include <tuple>
#include <utility>

namespace riesz {

/// S_b = 1 + b^2 + 2 b cos(2 pi / p).
///
/// Nonnegative on the whole parameter domain: S_b = (1-b)^2 + 2b(1 + cos(2pi/p)),
/// strictly positive for p < 2.  Round-off can push it a hair below zero near
/// p = 2, b = 1; square roots clamp at zero.
inline double s_b(const Params& pr) {
    return 1.0 + pr.b * pr.b + 2.0 * pr.b * std::cos(2.0 * kPi / pr.p);
}

namespace detail {

inline double sqrt_s_b(const Params& pr) { return std::sqrt(std::max(s_b(pr), 0.0)); }

inline double cos_pi_over_p(double p) { return std::cos(kPi / p); }

/// True only at the p = 2 endpoint, where pi/p reaches pi/2 and sec(pi/p)
/// blows up.  cos(pi/2) evaluates to +6.1e-17 in doubles, so ">= 0" catches
/// exactly the degenerate endpoint.
inline bool is_degenerate_p2(double p) { return cos_pi_over_p(p) >= 0.0; }

inline double sec_pi_over_p(const Params& pr) {
    const double c = cos_pi_over_p(pr.p);
    if (c >= 0.0)
        throw degenerate_p2_error("sec(pi/p) is singular at p = 2");
    return 1.0 / c;  // always <= -1 on [1, 2)
}

} // namespace detail

/// Norm-level sharp constant A = ((1 + b + sqrt(S_b)) / (2b))^(1/2).
/// Defined on all of [1, 2]; at p = 2 it reduces to max(1, b^(-1/2)).
inline double sharp_constant_A(const Params& pr) {
    return std::sqrt((1.0 + pr.b + detail::sqrt_s_b(pr)) / (2.0 * pr.b));
}

/// (D, E) of the pointwise inequality
///   |w + conj(z)|^p <= D (|w|^2 + b|z|^2)^(p/2) - E * G_p(z, w):
///   D = ((1 + b + sqrt(S_b)) / (2b))^(p/2)  (= A^p),
///   E = 2^(2-p/2) (-(S_b + (1+b) sqrt(S_b)) sec(pi/p) / b)^((p-2)/2) sin(pi/p).
/// At p = 2 the base of E's power is singular; the continuous limit E = 2 is
/// returned, flagged through ConstantSet::degenerate_p2.
inline std::pair<double, double> minorant_constants_DE(const Params& pr) {
    const double sq = detail::sqrt_s_b(pr);
    const double d = std::pow((1.0 + pr.b + sq) / (2.0 * pr.b), 0.5 * pr.p);
    if (detail::is_degenerate_p2(pr.p)) return {d, 2.0};
    const double sec = detail::sec_pi_over_p(pr);
    const double base = -(s_b(pr) + (1.0 + pr.b) * sq) * sec / pr.b;  // > 0 for p < 2
    const double e = std::pow(2.0, 2.0 - 0.5 * pr.p) * std::pow(base, 0.5 * (pr.p - 2.0)) *
                     std::sin(kPi / pr.p);
    return {d, e};
}

/// Equality-locus modulus ratio |w|/|z| = R, p < 2 only:
///   R = -(1/2)(-1 + b + sqrt(S_b)) sec(pi/p)  > 0.
inline double equality_locus_R(const Params& pr) {
    const double sec = detail::sec_pi_over_p(pr);
    return -0.5 * (-1.0 + pr.b + detail::sqrt_s_b(pr)) * sec;
}

/// Coefficient of the conjugate term of the extremal family, p < 2 only:
///   r_bar = (-1 + b - sqrt(S_b)) sec(pi/p) / (2b)  > 0.
/// For b = 1 this simplifies to exactly 1.
inline double extremal_rbar(const Params& pr) {
    const double sec = detail::sec_pi_over_p(pr);
    if (pr.b == 1.0) return 1.0;
    return (-1.0 + pr.b - detail::sqrt_s_b(pr)) * sec / (2.0 * pr.b);
}

/// Mixing weight beta in [0, 1] of the two-power extremal family, p < 2:
///   beta = (-1 + b + 2b cos(pi/p) + sqrt(S_b)) sec^2(pi/(2p)) / (4(b - 1)).
/// b = 1 gives 1/2.  At p = 1 the displayed formula is 0 * inf (the numerator
/// cancels exactly while sec^2(pi/2) stays finite in doubles); the continuous
/// limit b/(1+b) is used there, consistent with beta = 1/(1 + r_bar).
inline double sharpness_beta(const Params& pr) {
    if (detail::is_degenerate_p2(pr.p))
        throw degenerate_p2_error("sharpness_beta: p = 2 is degenerate");
    if (pr.b == 1.0) return 0.5;
    if (pr.p == 1.0) return pr.b / (1.0 + pr.b);
    const double c2 = std::cos(kPi / (2.0 * pr.p));
    const double num = -1.0 + pr.b + 2.0 * pr.b * detail::cos_pi_over_p(pr.p) +
                       detail::sqrt_s_b(pr);
    return num / (c2 * c2) / (4.0 * (pr.b - 1.0));
}

/// All named constants for one (p, b).  R, r_bar, beta are NaN at p = 2.
struct ConstantSet {
    double p = 0.0;
    double b = 0.0;
    double S_b = 0.0;
    double A = 0.0;
    double D = 0.0;
    double E = 0.0;
    double R = 0.0;
    double r_bar = 0.0;
    double beta = 0.0;
    bool degenerate_p2 = false;
};

inline ConstantSet compute_constants(const Params& pr) {
    ConstantSet cs;
    cs.p = pr.p;
    cs.b = pr.b;
    cs.S_b = s_b(pr);
    cs.A = sharp_constant_A(pr);
    std::tie(cs.D, cs.E) = minorant_constants_DE(pr);
    cs.degenerate_p2 = detail::is_degenerate_p2(pr.p);
    if (cs.degenerate_p2) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        cs.R = cs.r_bar = cs.beta = nan;
    } else {
        cs.R = equality_locus_R(pr);
        cs.r_bar = extremal_rbar(pr);
        cs.beta = sharpness_beta(pr);
    }
    return cs;
}

} // namespace riesz
