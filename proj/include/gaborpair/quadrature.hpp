#pragma once

#include <array>
#include <cmath>
#include <utility>

#include "gaborpair/signal.hpp"

namespace gaborpair::quad {

// 16-point Gauss-Legendre rule on [-1,1], positive half; mirror for the rest.
inline constexpr std::array<double, 8> kGL16Nodes = {
    0.095012509837637454, 0.28160355077925892, 0.45801677765722737,
    0.61787624440264377,  0.755404408355003,   0.86563120238783176,
    0.9445750230732326,   0.98940093499164994};
inline constexpr std::array<double, 8> kGL16Weights = {
    0.18945061045506859,  0.18260341504492361,  0.16915651939500262,
    0.14959598881657676,  0.12462897125553403,  0.095158511682492591,
    0.062253523938647706, 0.027152459411754037};

/// Composite 16-point Gauss-Legendre over [a,b] split into n_panels panels.
template <class F>
cdouble gl_panels(F&& f, double a, double b, int n_panels) {
    if (n_panels < 1) n_panels = 1;
    const double w = (b - a) / n_panels;
    cdouble total = 0.0;
    for (int p = 0; p < n_panels; ++p) {
        const double mid = a + (p + 0.5) * w;
        const double half = 0.5 * w;
        cdouble acc = 0.0;
        for (int q = 0; q < 8; ++q) {
            const double d = half * kGL16Nodes[q];
            acc += kGL16Weights[q] * (f(mid + d) + f(mid - d));
        }
        total += half * acc;
    }
    return total;
}

/// Panel count for an integrand with combined oscillation/decay rate
/// |d phase/dt| + |d log|f|/dt| <= rate over an interval of given length.
/// Keeps the per-panel exponent small enough for GL16 to resolve.
inline int oscillation_panels(double rate, double length) {
    const int p = static_cast<int>(std::ceil(rate * length / 12.0)) + 2;
    return p < 4 ? 4 : p;
}

/// Composite midpoint sum of f over [a,b) with n uniform cells.
template <class F>
cdouble midpoint(F&& f, double a, double b, int n) {
    const double h = (b - a) / n;
    cdouble acc = 0.0;
    for (int j = 0; j < n; ++j) acc += f(a + (j + 0.5) * h);
    return acc * h;
}

} // namespace gaborpair::quad
