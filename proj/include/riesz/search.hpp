#pragma once

#include "riesz/circle.hpp"
#include "riesz/constants.hpp"
#include "riesz/extremals.hpp"
#include "riesz/parallel.hpp"
#include "riesz/report.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace riesz {

struct RatioResult {
    double value = 0.0;
    bool admissible = false;  // Re(g(0) h(0)) <= 0
};

namespace detail {

inline std::vector<Complex> synthesize(const std::vector<Complex>& coeffs, std::size_t n) {
    if (coeffs.size() > n / 2)
        throw std::invalid_argument("synthesize: degree must be < N/2");
    std::vector<Complex> bins(n, Complex{});
    std::copy(coeffs.begin(), coeffs.end(), bins.begin());
    fft_radix2(bins, true);
    return bins;
}

} // namespace detail

/// ||g + conj h||_p / ||(|g|^2 + b|h|^2)^(1/2)||_p by circle quadrature at
/// resolution n.  The value is returned even for inadmissible pairs; the
/// flag records whether Re(g(0) h(0)) <= 0 holds.
inline RatioResult ratio(const HarmonicPair& gh, const Params& pr, std::size_t n = 4096) {
    const std::vector<Complex> gs = detail::synthesize(gh.g, n);
    const std::vector<Complex> hs = detail::synthesize(gh.h, n);
    std::vector<Complex> fs(n), ds(n);
    for (std::size_t j = 0; j < n; ++j) {
        fs[j] = gs[j] + std::conj(hs[j]);
        ds[j] = Complex{std::sqrt(std::norm(gs[j]) + pr.b * std::norm(hs[j])), 0.0};
    }
    const double den = detail::lp_norm_samples(ds, pr.p);
    if (den == 0.0) throw std::domain_error("ratio: zero denominator");
    RatioResult rr;
    rr.value = detail::lp_norm_samples(fs, pr.p) / den;
    const Complex g0 = detail::pair_coeff(gh.g, 0);
    const Complex h0 = detail::pair_coeff(gh.h, 0);
    rr.admissible = (g0 * h0).real() <= 0.0;
    return rr;
}

namespace detail {

inline double u01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

} // namespace detail

/// Random coefficient pair of the given degree under the geometric envelope
/// |coef_k| <= decay^k, with the phase of h_0 resampled until
/// Re(g_0 h_0) <= 0.  Deterministic for a given seed.
inline HarmonicPair random_harmonic_pair(std::uint64_t seed, int degree, double decay = 0.7) {
    std::mt19937_64 rng(seed);
    HarmonicPair gh;
    gh.g.resize(static_cast<std::size_t>(degree) + 1);
    gh.h.resize(static_cast<std::size_t>(degree) + 1);
    for (auto* vec : {&gh.g, &gh.h}) {
        double env = 1.0;
        for (auto& c : *vec) {
            c = std::polar(env * std::sqrt(detail::u01(rng)),
                           2.0 * kPi * detail::u01(rng) - kPi);
            env *= decay;
        }
    }
    for (int tries = 0; (gh.g[0] * gh.h[0]).real() > 0.0 && tries < 1000; ++tries)
        gh.h[0] = std::polar(std::abs(gh.h[0]), 2.0 * kPi * detail::u01(rng) - kPi);
    return gh;
}

struct SearchOutcome {
    VerificationReport report;
    HarmonicPair best;
    double best_ratio = 0.0;
};

/// Draws `trials` admissible random pairs and checks that no ratio exceeds
/// A (1 + 1e-6).  Trials run in parallel but are independently seeded, so
/// the outcome is a pure function of (seed, trials, degree, n).
inline SearchOutcome random_never_exceeds(const Params& pr, int trials, int degree,
                                          std::uint64_t seed, std::size_t n = 4096) {
    if (trials < 1) throw std::invalid_argument("random_never_exceeds: trials >= 1");
    const double bound = sharp_constant_A(pr) * (1.0 + 1e-6);
    auto trial_seed = [seed](std::size_t i) {
        return seed + 0x9E3779B97F4A7C15ull * (i + 1);
    };

    struct Local {
        double best = -1.0;
        std::size_t idx = 0;
    };
    std::vector<Local> locals(static_cast<std::size_t>(max_threads()) + 1);
    parallel_chunks(static_cast<std::size_t>(trials), [&](std::size_t lo, std::size_t hi,
                                                          int chunk) {
        Local& L = locals[static_cast<std::size_t>(chunk)];
        for (std::size_t i = lo; i < hi; ++i) {
            const HarmonicPair gh = random_harmonic_pair(trial_seed(i), degree);
            const double r = ratio(gh, pr, n).value;
            if (r > L.best) L = {r, i};
        }
    });
    Local top;
    for (const Local& L : locals)
        if (L.best > top.best || (L.best == top.best && L.idx < top.idx)) top = L;

    SearchOutcome out;
    out.best = random_harmonic_pair(trial_seed(top.idx), degree);
    out.best_ratio = top.best;
    out.report.name = "random_ratio_never_exceeds";
    out.report.domain_description =
        "max ratio over random admissible pairs; upper bound A(1+1e-6), degree " +
        std::to_string(degree);
    out.report.num_points = trials;
    out.report.worst_value = top.best;
    out.report.worst_point = {static_cast<double>(top.idx)};
    out.report.tolerance = bound;
    out.report.passed = top.best <= bound;
    return out;
}

/// Derivative-free coordinate ascent on the ratio, seeded with truncated
/// extremals (three values of c) and two random pairs.  Moves that break
/// admissibility are rejected; the step shrinks on sweeps with no
/// improvement.  Returns the best pair and its ratio.
inline std::pair<HarmonicPair, double> ascend_ratio(const Params& pr, int degree,
                                                    int iterations, std::uint64_t seed,
                                                    std::size_t n = 4096) {
    if (degree < 1) throw std::invalid_argument("ascend_ratio: degree >= 1");
    const bool deg2 = detail::is_degenerate_p2(pr.p);
    std::vector<HarmonicPair> starts;
    for (const double frac : {0.8, 0.9, 0.95}) {
        const auto a = halfplane_power_taylor(frac / pr.p, degree);
        HarmonicPair gh;
        gh.g.assign(a.size(), Complex{});
        gh.h.assign(a.size(), Complex{});
        if (deg2) {
            auto& side = pr.b > 1.0 ? gh.g : gh.h;
            for (std::size_t k = 0; k < a.size(); ++k) side[k] = a[k];
        } else {
            const double beta = sharpness_beta(pr);
            for (std::size_t k = 0; k < a.size(); ++k) {
                gh.g[k] = beta * a[k];
                gh.h[k] = (beta - 1.0) * a[k];
            }
        }
        starts.push_back(std::move(gh));
    }
    starts.push_back(random_harmonic_pair(seed, degree));
    starts.push_back(random_harmonic_pair(seed + 1, degree));

    HarmonicPair best_pair = starts.front();
    double best = -1.0;
    for (HarmonicPair gh : starts) {
        double cur = ratio(gh, pr, n).value;
        double step = 0.25;
        for (int it = 0; it < iterations && step > 1e-4; ++it) {
            bool improved = false;
            for (auto* vec : {&gh.g, &gh.h}) {
                double env = 1.0;
                for (std::size_t k = 0; k < vec->size(); ++k) {
                    for (const Complex dir :
                         {Complex{1, 0}, Complex{-1, 0}, Complex{0, 1}, Complex{0, -1}}) {
                        const Complex delta = dir * (step * env);
                        (*vec)[k] += delta;
                        bool keep = false;
                        if ((gh.g[0] * gh.h[0]).real() <= 0.0) {
                            const double r = ratio(gh, pr, n).value;
                            if (r > cur) {
                                cur = r;
                                keep = improved = true;
                            }
                        }
                        if (!keep) (*vec)[k] -= delta;
                    }
                    env *= 0.7;
                }
            }
            if (!improved) step *= 0.5;
        }
        if (cur > best) {
            best = cur;
            best_pair = gh;
        }
    }
    return {best_pair, best};
}

/// Closed-form family ratio (Z(beta*)/X(beta*))^(1/p) for each c, with
/// beta* the sharpness weight (the analytic/co-analytic side at p = 2).
/// Approaches A as c p -> 1.
inline std::vector<std::pair<double, double>> extremal_ratio_curve(
    const Params& pr, const std::vector<double>& c_values) {
    const double beta_star =
        detail::is_degenerate_p2(pr.p) ? (pr.b > 1.0 ? 1.0 : 0.0) : sharpness_beta(pr);
    std::vector<std::pair<double, double>> out;
    out.reserve(c_values.size());
    for (const double c : c_values) {
        const double z = Z_of_beta(pr, c, beta_star);
        const double x = X_of_beta(pr, c, beta_star);
        out.emplace_back(c, std::pow(z / x, 1.0 / pr.p));
    }
    return out;
}

} // namespace riesz
