#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace riesz {

/// Outcome of one grid/optimization verification run.  Checks are stated in
/// slack form unless the description says otherwise: worst_value is the
/// minimum slack seen and the run passes iff worst_value >= -tolerance.
struct VerificationReport {
    std::string name;
    std::string domain_description;
    long num_points = 0;
    double worst_value = 0.0;
    std::vector<double> worst_point;
    double tolerance = 0.0;
    bool passed = false;
};

namespace detail {

struct GridMin {
    double value;
    std::vector<double> point;
};

/// One local refinement pass: re-grids `factor`x finer inside +-1 grid cell
/// around x0 (clamped to bounds), returning the new minimum.
template <class F>
GridMin refine_min_once(F&& f, const std::vector<double>& x0, const std::vector<double>& cell,
                        const std::vector<std::pair<double, double>>& bounds, int factor = 10) {
    const std::size_t d = x0.size();
    GridMin best{f(x0), x0};
    const int side = 2 * factor + 1;
    std::vector<int> idx(d, 0);
    std::vector<double> x(d);
    const long total = [&] {
        long t = 1;
        for (std::size_t i = 0; i < d; ++i) t *= side;
        return t;
    }();
    for (long flat = 0; flat < total; ++flat) {
        long r = flat;
        for (std::size_t i = 0; i < d; ++i) {
            idx[i] = static_cast<int>(r % side);
            r /= side;
            double xi = x0[i] + (idx[i] - factor) * cell[i] / static_cast<double>(factor);
            xi = std::max(bounds[i].first, std::min(bounds[i].second, xi));
            x[i] = xi;
        }
        const double v = f(x);
        if (v < best.value) best = {v, x};
    }
    return best;
}

/// Iterated zoom toward a local minimum.  Cell widths shrink by `factor`
/// each pass.
template <class F>
GridMin refine_min(F&& f, std::vector<double> x0, std::vector<double> cell,
                   const std::vector<std::pair<double, double>>& bounds, int passes = 4,
                   int factor = 10) {
    GridMin best{f(x0), x0};
    for (int pass = 0; pass < passes; ++pass) {
        const GridMin got = refine_min_once(f, best.point, cell, bounds, factor);
        if (got.value < best.value) best = got;
        for (double& c : cell) c /= factor;
    }
    return best;
}

} // namespace detail

} // namespace riesz
