#pragma once

// Test-side numerical oracles, kept independent of the library's quadrature
// and transform code paths: plain composite Simpson and direct O(N^2)
// Fourier sums.

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Composite Simpson on [a, b] with n panels (n made even).
template <class F>
double simpson(F&& f, double a, double b, int n) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

/// c_k by the direct Riemann sum over m uniform nodes (no FFT).
inline std::complex<double> fourier_coeff_direct(
    const std::vector<std::complex<double>>& samples, long k) {
    const std::size_t m = samples.size();
    std::complex<double> acc{};
    for (std::size_t j = 0; j < m; ++j) {
        const double t = 2.0 * kPi * double(j) / double(m);
        acc += samples[j] * std::polar(1.0, -double(k) * t);
    }
    return acc / double(m);
}

/// Mean of g over the circle by Simpson with panels split at the listed
/// interior kinks (sorted, within (0, 2 pi)).
template <class F>
double circle_mean(F&& g, const std::vector<double>& kinks = {}, int n_per_panel = 1 << 14) {
    std::vector<double> cuts{0.0};
    cuts.insert(cuts.end(), kinks.begin(), kinks.end());
    cuts.push_back(2.0 * kPi);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        acc += simpson(g, cuts[i], cuts[i + 1], n_per_panel);
    return acc / (2.0 * kPi);
}

} // namespace oracle
