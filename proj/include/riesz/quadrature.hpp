#pragma once

#include "riesz/params.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace riesz {

namespace detail {

/// One tanh-sinh abscissa at parameter u: offset delta from the nearer
/// panel endpoint and the quadrature weight (without the level step h).
struct TsNode {
    double delta;
    double weight;
};

inline TsNode ts_node(double u_abs, double length) {
    const double v = 0.5 * kPi * std::sinh(u_abs);
    const double e = std::exp(-2.0 * v);  // underflows to 0 deep in the tail
    const double delta = length * e / (1.0 + e);
    const double sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
    const double weight = 0.5 * length * 0.5 * kPi * std::cosh(u_abs) * sech2;
    return {delta, weight};
}

} // namespace detail

/// Integral of f over [a, b] by tanh-sinh (double-exponential) quadrature.
///
/// Both endpoints may carry integrable algebraic singularities |t - end|^(-q),
/// q < 1.  Abscissae are formed as `endpoint +/- delta`, so a singular
/// endpoint at a finely representable coordinate (0, or any small magnitude)
/// is approached down to subnormal offsets; nodes whose offset rounds onto
/// the endpoint itself are skipped.
template <class F>
double integrate_tanh_sinh(F&& f, double a, double b, double rel_tol = 1e-11,
                           int max_level = 10) {
    const double length = b - a;
    const double u_max = 6.6;

    auto eval_at = [&](double u) -> double {
        const auto node = detail::ts_node(std::abs(u), length);
        if (node.delta == 0.0 || node.weight == 0.0) return 0.0;
        const double t = u >= 0.0 ? b - node.delta : a + node.delta;
        if (t == a || t == b) return 0.0;  // offset lost to rounding
        const double fv = f(t);
        if (!std::isfinite(fv)) return 0.0;  // evaluator hit the representability floor
        return node.weight * fv;
    };

    double h = 1.0;
    double sum = eval_at(0.0);
    for (double u = h; u <= u_max; u += h) sum += eval_at(u) + eval_at(-u);
    double integral = h * sum;

    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double add = 0.0;                       // new nodes sit at odd multiples of h
        for (double u = h; u <= u_max; u += 2.0 * h) add += eval_at(u) + eval_at(-u);
        sum += add;
        const double next = h * sum;
        const double change = std::abs(next - integral);
        integral = next;
        if (level >= 3 && change <= rel_tol * std::abs(integral) + 1e-300) break;
    }
    return integral;
}

/// L^p norm (against normalized arc measure dt/(2 pi)) of a circle function
/// given pointwise, when |f|^p has algebraic singularities of order
/// `exponent_bound` < 1 at the listed angles.
///
/// The circle is split at the singular angles and each panel is integrated
/// by tanh-sinh.  The wrap-around panel is shifted by -2 pi so the first
/// singular point keeps its own (finely representable) coordinate; the
/// evaluator must therefore accept angles in (-2 pi, 2 pi).  List zeros of f
/// as well: |f|^p has a derivative singularity there for non-even p.
template <class F>
double lp_norm_singular(F&& evaluator, double p, std::vector<double> singular_points,
                        double exponent_bound) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm_singular: p must be >= 1");
    if (!(exponent_bound < 1.0))
        throw std::invalid_argument("lp_norm_singular: non-integrable singularity order");

    auto abs_p = [&](double t) {
        // |z| first (hypot), not |z|^2: keeps steep singular values finite longer
        return std::pow(std::abs(evaluator(t)), p);
    };

    for (double& s : singular_points) {
        s = std::fmod(s, 2.0 * kPi);
        if (s < 0.0) s += 2.0 * kPi;
    }
    std::sort(singular_points.begin(), singular_points.end());
    singular_points.erase(std::unique(singular_points.begin(), singular_points.end(),
                                      [](double x, double y) { return std::abs(x - y) < 1e-12; }),
                          singular_points.end());

    double total = 0.0;
    if (singular_points.empty()) {
        total = integrate_tanh_sinh(abs_p, 0.0, 2.0 * kPi);
    } else {
        const std::size_t m = singular_points.size();
        for (std::size_t i = 0; i + 1 < m; ++i)
            total += integrate_tanh_sinh(abs_p, singular_points[i], singular_points[i + 1]);
        total += integrate_tanh_sinh(abs_p, singular_points[m - 1] - 2.0 * kPi,
                                     singular_points[0]);
    }
    return std::pow(total / (2.0 * kPi), 1.0 / p);
}

} // namespace riesz
