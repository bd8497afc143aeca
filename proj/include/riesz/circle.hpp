#pragma once

#include "riesz/params.hpp"

#include <bit>
#include <cstddef>
#include <cstdio>
#include <ostream>
#include <unordered_map>
#include <utility>
#include <vector>

namespace riesz {

namespace detail {

/// Twiddle factors e^{-2 pi i j / n}, j < n/2, cached per transform size.
inline const std::vector<Complex>& twiddle_table(std::size_t n) {
    thread_local std::unordered_map<std::size_t, std::vector<Complex>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Complex> tw(n / 2);
    for (std::size_t j = 0; j < n / 2; ++j)
        tw[j] = std::polar(1.0, -2.0 * kPi * static_cast<double>(j) / static_cast<double>(n));
    return cache.emplace(n, std::move(tw)).first->second;
}

/// In-place radix-2 FFT.  Forward: X_k = sum_j x_j e^{-2 pi i jk/N} (no 1/N).
inline void fft_radix2(std::vector<Complex>& a, bool inverse) {
    const std::size_t n = a.size();
    const auto& tw = twiddle_table(n);
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                const Complex w = inverse ? std::conj(tw[j * stride]) : tw[j * stride];
                const Complex u = a[i + j];
                const Complex v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }
}

inline void require_valid_samples(const std::vector<Complex>& s) {
    if (s.size() < 8 || !std::has_single_bit(s.size()))
        throw std::invalid_argument("CircleFunction: N must be a power of two, N >= 8");
    for (const Complex& z : s)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("CircleFunction: non-finite sample");
}

} // namespace detail

/// A function on the unit circle held as N uniform samples f(e^{i t_j}),
/// t_j = 2 pi j / N, together with its Fourier coefficients.  Coefficient
/// c_k is stored at DFT bin k mod N, k in [-N/2, N/2).  Immutable.
class CircleFunction {
  public:
    static CircleFunction from_samples(std::vector<Complex> samples) {
        detail::require_valid_samples(samples);
        std::vector<Complex> bins = samples;
        detail::fft_radix2(bins, false);
        const double inv_n = 1.0 / static_cast<double>(bins.size());
        for (Complex& c : bins) c *= inv_n;
        return CircleFunction(std::move(samples), std::move(bins));
    }

    /// bins[j] holds c_k for k = j (j < N/2) or k = j - N (j >= N/2).
    static CircleFunction from_coeffs(std::vector<Complex> bins) {
        detail::require_valid_samples(bins);
        std::vector<Complex> samples = bins;
        detail::fft_radix2(samples, true);
        return CircleFunction(std::move(samples), std::move(bins));
    }

    std::size_t size() const { return samples_.size(); }
    double node(std::size_t j) const {
        return 2.0 * kPi * static_cast<double>(j) / static_cast<double>(size());
    }
    const std::vector<Complex>& samples() const { return samples_; }
    const std::vector<Complex>& coeffs() const { return bins_; }

    /// c_k for k in [-N/2, N/2).
    Complex coeff(long k) const {
        const long n = static_cast<long>(size());
        if (k < -n / 2 || k >= n / 2)
            throw std::out_of_range("CircleFunction::coeff: k outside [-N/2, N/2)");
        return bins_[static_cast<std::size_t>((k % n + n) % n)];
    }

  private:
    CircleFunction(std::vector<Complex> s, std::vector<Complex> b)
        : samples_(std::move(s)), bins_(std::move(b)) {}

    std::vector<Complex> samples_;
    std::vector<Complex> bins_;
};

/// DFT-normalized Fourier coefficients, bin layout as in CircleFunction.
/// Exact (to round-off) for trigonometric polynomials of degree < N/2.
inline std::vector<Complex> fourier_coeffs(const CircleFunction& f) { return f.coeffs(); }

/// Keeps frequencies k >= 0 (the constant term belongs to the plus part).
inline CircleFunction project_plus(const CircleFunction& f) {
    std::vector<Complex> bins = f.coeffs();
    for (std::size_t j = bins.size() / 2; j < bins.size(); ++j) bins[j] = Complex{};
    return CircleFunction::from_coeffs(std::move(bins));
}

/// Keeps strictly negative frequencies.
inline CircleFunction project_minus(const CircleFunction& f) {
    std::vector<Complex> bins = f.coeffs();
    for (std::size_t j = 0; j < bins.size() / 2; ++j) bins[j] = Complex{};
    return CircleFunction::from_coeffs(std::move(bins));
}

namespace detail {
/// (mean of |s_j|^p)^(1/p) over a raw sample vector (periodic trapezoid).
inline double lp_norm_samples(const std::vector<Complex>& s, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
    double acc = 0.0;
    if (p == 2.0) {
        for (const Complex& z : s) acc += std::norm(z);
    } else if (p == 1.0) {
        for (const Complex& z : s) acc += std::abs(z);
    } else {
        for (const Complex& z : s) acc += std::pow(std::norm(z), 0.5 * p);
    }
    acc /= static_cast<double>(s.size());
    return p == 2.0 ? std::sqrt(acc) : (p == 1.0 ? acc : std::pow(acc, 1.0 / p));
}
} // namespace detail

/// (mean of |f|^p over the circle)^(1/p), periodic trapezoid rule on the
/// uniform samples.  Spectrally accurate for smooth |f|^p.
inline double lp_norm(const CircleFunction& f, double p) {
    return detail::lp_norm_samples(f.samples(), p);
}

/// Rows "t,re_f,im_f", one per sample.
inline void write_samples_csv(std::ostream& os, const CircleFunction& f) {
    os << "t,re_f,im_f\n";
    char line[128];
    for (std::size_t j = 0; j < f.size(); ++j) {
        const Complex z = f.samples()[j];
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", f.node(j), z.real(), z.imag());
        os << line;
    }
}

/// Holomorphic pair (g, h) as Taylor coefficient vectors (frequencies >= 0),
/// representing the harmonic map f = g + conj(h).
struct HarmonicPair {
    std::vector<Complex> g;
    std::vector<Complex> h;
};

namespace detail {
inline Complex pair_coeff(const std::vector<Complex>& v, std::size_t k) {
    return k < v.size() ? v[k] : Complex{};
}
} // namespace detail

/// Boundary trace of g + conj(h) sampled at N points.  The Fourier side is
/// c_k = g_k for k >= 1, c_{-k} = conj(h_k) for k >= 1, c_0 = g_0 + conj(h_0).
inline CircleFunction boundary_trace(const HarmonicPair& gh, std::size_t n) {
    const std::size_t deg = std::max(gh.g.size(), gh.h.size());
    if (deg > n / 2)
        throw std::invalid_argument("boundary_trace: degree must be < N/2");
    std::vector<Complex> bins(n, Complex{});
    for (std::size_t k = 0; k < gh.g.size(); ++k) bins[k] += gh.g[k];
    bins[0] += std::conj(detail::pair_coeff(gh.h, 0));
    for (std::size_t k = 1; k < gh.h.size(); ++k) bins[n - k] += std::conj(gh.h[k]);
    return CircleFunction::from_coeffs(std::move(bins));
}

/// Inverse of boundary_trace up to the constant-term convention: g absorbs
/// conj(h_0), so the returned pair has h_0 = 0.
inline HarmonicPair split_projections(const CircleFunction& f) {
    const std::size_t n = f.size();
    HarmonicPair gh;
    gh.g.assign(f.coeffs().begin(), f.coeffs().begin() + static_cast<long>(n / 2));
    gh.h.resize(n / 2, Complex{});
    for (std::size_t k = 1; k < n / 2; ++k) gh.h[k] = std::conj(f.coeffs()[n - k]);
    while (gh.g.size() > 1 && gh.g.back() == Complex{}) gh.g.pop_back();
    while (gh.h.size() > 1 && gh.h.back() == Complex{}) gh.h.pop_back();
    return gh;
}

} // namespace riesz
