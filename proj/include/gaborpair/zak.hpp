#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gaborpair/report.hpp"
#include "gaborpair/signal.hpp"
#include "gaborpair/windows.hpp"

namespace gaborpair {

/// Samples of Z_a f on the fundamental domain Q_a = [0,a) x [0,1/a).
/// Nodes sit at x_i = (i + x_offset) a / n_x, w_j = (j + omega_offset) /
/// (a n_w); zero offsets put (0,0) and, for even counts, (a/2, 1/(2a)) on
/// the grid, half offsets keep nodes away from singular lines of fields
/// like Z gamma_a. Row-major storage, x index outer.
struct ZakField {
    double a = 1.0;
    int n_x = 512;
    int n_omega = 512;
    double x_offset = 0.0;     // in units of the x spacing
    double omega_offset = 0.0; // in units of the omega spacing
    std::vector<cdouble> values;

    ZakField(double a_, int nx, int nw, double x_off = 0.0, double w_off = 0.0);

    double x(int i) const { return (i + x_offset) * a / n_x; }
    double omega(int j) const { return (j + omega_offset) / (a * n_omega); }
    cdouble& at(int i, int j) { return values[static_cast<size_t>(i) * n_omega + j]; }
    cdouble at(int i, int j) const { return values[static_cast<size_t>(i) * n_omega + j]; }

    /// Quadrature weight of one node for integrals over Q_a.
    double cell_measure() const { return 1.0 / (static_cast<double>(n_x) * n_omega); }
    /// Quadrature L2(Q_a) norm.
    double l2_norm() const;
};

/// Single-point evaluation of the defining sum (or the closed form where the
/// window carries one). K < 0 picks the truncation from the window's tail
/// bound at target eps.
cdouble zak_point(const WindowSpec& f, double a, double x, double omega,
                  int K = -1, double eps = 1e-14);

ZakField zak_forward(const WindowSpec& f, double a, int n_x, int n_omega,
                     int K = -1, double x_offset = 0.0, double omega_offset = 0.0,
                     double eps = 1e-14);

/// Tabulated input: the x grid must coincide with sample points of f
/// (a / n_x == grid spacing up to rounding). Throws if the tabulated range
/// cannot cover [x - aK, x + aK] at the requested truncation.
ZakField zak_forward(const SampledSignal& f, double a, int n_omega, int K,
                     double omega_offset = 0.0);

/// f(x + a k) = a int_0^{1/a} Z(x,w) e^{2 pi i a k w} dw for each cell copy
/// k in [cell_min, cell_max); samples land on the field's x nodes.
SampledSignal zak_inverse(const ZakField& Z, int cell_min, int cell_max);

/// Residuals of Z f(x+a, w) = e^{2 pi i a w} Z f(x, w) and of periodicity in
/// omega, maximised over random nodes (seeded).
Report check_quasiperiodicity(const ZakField& Z, const WindowSpec& f,
                              int n_nodes = 64, uint64_t seed = 1234);

/// Tabulates int_{Q_a \ B_r(z*)} |Z|^{-2} for shrinking radii. A simple zero
/// gives per-halving increments that are approximately constant (log
/// divergence); an integrable inverse square stays bounded.
struct BlowupScan {
    std::vector<double> radii;
    std::vector<double> integrals;  // excluding the ball of each radius
    std::vector<double> increments; // consecutive differences
};
BlowupScan blowup_scan(const ZakField& Z, double zx, double zw,
                       const std::vector<double>& radii);
Report blowup_report(const ZakField& Z, double zx, double zw,
                     const std::vector<double>& radii, bool expect_divergent);

/// Grid zero of |Z|: node below 1e-6 * max|Z| with larger four-neighbours,
/// refined by a local quadratic fit. Empty if no such node exists.
std::optional<std::pair<double, double>> find_zero(const ZakField& Z);

} // namespace gaborpair
