#include "gaborpair/zak.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gaborpair {

namespace {

constexpr double kPi = std::numbers::pi;

// splitmix64, enough randomness for sampling check nodes deterministically
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

cdouble zak_sum(const WindowSpec& f, double a, double x, double omega, int K) {
    cdouble acc = 0.0;
    for (int k = -K; k <= K; ++k)
        acc += f.eval(x - a * k) * std::polar(1.0, 2.0 * kPi * a * omega * k);
    return acc;
}

} // namespace

ZakField::ZakField(double a_, int nx, int nw, double x_off, double w_off)
    : a(a_), n_x(nx), n_omega(nw), x_offset(x_off), omega_offset(w_off),
      values(static_cast<size_t>(nx) * static_cast<size_t>(nw)) {
    if (a_ <= 0.0) throw std::invalid_argument("ZakField: a must be positive");
    if (nx < 8 || nw < 8) throw std::invalid_argument("ZakField: need at least 8x8 nodes");
}

double ZakField::l2_norm() const {
    double acc = 0.0;
    for (const cdouble& v : values) acc += std::norm(v);
    return std::sqrt(acc * cell_measure());
}

cdouble zak_point(const WindowSpec& f, double a, double x, double omega, int K,
                  double eps) {
    if (f.has_closed_form_zak(a)) return f.closed_form_zak(x, omega, a);
    if (K < 0) K = f.zak_truncation(a, x, eps);
    return zak_sum(f, a, x, omega, K);
}

ZakField zak_forward(const WindowSpec& f, double a, int n_x, int n_omega, int K,
                     double x_offset, double omega_offset, double eps) {
    ZakField Z(a, n_x, n_omega, x_offset, omega_offset);
    if (f.has_closed_form_zak(a)) {
        for (int i = 0; i < n_x; ++i)
            for (int j = 0; j < n_omega; ++j)
                Z.at(i, j) = f.closed_form_zak(Z.x(i), Z.omega(j), a);
        return Z;
    }
    // Row-wise: the window values f(x_i - a k) are shared by every omega in
    // the row, so compute them once and sweep the phases.
    for (int i = 0; i < n_x; ++i) {
        const double x = Z.x(i);
        const int Ki = (K >= 0) ? K : f.zak_truncation(a, x, eps);
        std::vector<cdouble> coeff(static_cast<size_t>(2 * Ki + 1));
        for (int k = -Ki; k <= Ki; ++k)
            coeff[static_cast<size_t>(k + Ki)] = f.eval(x - a * k);
        for (int j = 0; j < n_omega; ++j) {
            const double w = Z.omega(j);
            cdouble acc = 0.0;
            for (int k = -Ki; k <= Ki; ++k)
                acc += coeff[static_cast<size_t>(k + Ki)] *
                       std::polar(1.0, 2.0 * kPi * a * w * k);
            Z.at(i, j) = acc;
        }
    }
    return Z;
}

ZakField zak_forward(const SampledSignal& f, double a, int n_omega, int K,
                     double omega_offset) {
    const Grid& g = f.grid();
    const double h = g.spacing();
    const double nx_real = a / h;
    const int n_x = static_cast<int>(std::lround(nx_real));
    if (std::abs(nx_real - n_x) > 1e-9 || n_x < 8)
        throw std::invalid_argument(
            "zak_forward(tabulated): a must be an integer multiple (>= 8) of the grid spacing");
    // Sample points are t_j = t_min + (j + 1/2) h; fold them into [0, a).
    // x_i = (i + offset) h with offset chosen so nodes coincide with samples.
    const double offset = std::fmod((g.point(0) / h), 1.0);
    ZakField Z(a, n_x, n_omega, offset < 0 ? offset + 1.0 : offset, omega_offset);

    for (int i = 0; i < n_x; ++i) {
        const double x = Z.x(i);
        // index of the sample at x - a k: j = (x - ak - t_min)/h - 1/2
        std::vector<cdouble> coeff;
        coeff.reserve(static_cast<size_t>(2 * K + 1));
        for (int k = -K; k <= K; ++k) {
            const double pos = (x - a * k - g.t_min) / h - 0.5;
            const int j = static_cast<int>(std::lround(pos));
            if (j < 0 || j >= g.n_samples)
                throw std::runtime_error(
                    "zak_forward(tabulated): samples do not cover [x-aK, x+aK]; "
                    "attainable truncation is smaller than requested");
            if (std::abs(pos - j) > 1e-6)
                throw std::runtime_error("zak_forward(tabulated): grid misalignment");
            coeff.push_back(f[j]);
        }
        for (int jw = 0; jw < n_omega; ++jw) {
            const double w = Z.omega(jw);
            cdouble acc = 0.0;
            for (int k = -K; k <= K; ++k)
                acc += coeff[static_cast<size_t>(k + K)] *
                       std::polar(1.0, 2.0 * kPi * a * w * k);
            Z.at(i, jw) = acc;
        }
    }
    return Z;
}

SampledSignal zak_inverse(const ZakField& Z, int cell_min, int cell_max) {
    if (cell_max <= cell_min)
        throw std::invalid_argument("zak_inverse: empty cell range");
    for (const cdouble& v : Z.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::runtime_error("zak_inverse: non-finite field entry");

    const double hx = Z.a / Z.n_x;
    // Grid whose midpoints are x_i + a k, k in [cell_min, cell_max).
    const Grid grid(cell_min * Z.a + (Z.x_offset - 0.5) * hx,
                    cell_max * Z.a + (Z.x_offset - 0.5) * hx,
                    (cell_max - cell_min) * Z.n_x);
    std::vector<cdouble> out(static_cast<size_t>(grid.n_samples));

    const double hw = 1.0 / (Z.a * Z.n_omega);
    for (int i = 0; i < Z.n_x; ++i) {
        for (int cell = cell_min; cell < cell_max; ++cell) {
            // f(x_i + a k) = a h_w sum_j Z(x_i, w_j) e^{2 pi i a k w_j}
            cdouble acc = 0.0;
            for (int j = 0; j < Z.n_omega; ++j)
                acc += Z.at(i, j) * std::polar(1.0, 2.0 * kPi * Z.a * cell * Z.omega(j));
            const int idx = (cell - cell_min) * Z.n_x + i;
            out[static_cast<size_t>(idx)] = Z.a * hw * acc;
        }
    }
    return SampledSignal(grid, std::move(out));
}

Report check_quasiperiodicity(const ZakField& Z, const WindowSpec& f, int n_nodes,
                              uint64_t seed) {
    Report rep;
    rep.title = "zak quasiperiodicity";
    Rng rng(seed);
    double max_x_residual = 0.0;
    double max_w_residual = 0.0;
    const int K = -1; // per-point truncation from the window's tail bound
    for (int s = 0; s < n_nodes; ++s) {
        // sampled away from half-integers, where the Bastiaans series is
        // only conditionally summable
        double u = 0.02 + 0.96 * rng.uniform();
        if (std::abs(u - 0.5) < 0.01) u += 0.02;
        const double x = u * Z.a;
        const double w = rng.uniform() / Z.a;
        const cdouble base = zak_point(f, Z.a, x, w, K);
        const cdouble shifted_x = zak_point(f, Z.a, x + Z.a, w, K);
        const cdouble phase = std::polar(1.0, 2.0 * kPi * Z.a * w);
        max_x_residual = std::max(max_x_residual, std::abs(shifted_x - phase * base));
        const cdouble shifted_w = zak_point(f, Z.a, x, w + 1.0 / Z.a, K);
        max_w_residual = std::max(max_w_residual, std::abs(shifted_w - base));
    }
    json meta{{"window", f.name()}, {"nodes", n_nodes}, {"seed", seed}};
    rep.add_abs("x_quasiperiodicity_residual", max_x_residual, 1e-8, meta);
    rep.add_abs("omega_periodicity_residual", max_w_residual, 1e-8, meta);
    return rep;
}

BlowupScan blowup_scan(const ZakField& Z, double zx, double zw,
                       const std::vector<double>& radii) {
    BlowupScan scan;
    scan.radii = radii;
    const double cell = Z.cell_measure();
    for (double r : radii) {
        double acc = 0.0;
        for (int i = 0; i < Z.n_x; ++i) {
            // distance on the torus
            double dx = std::abs(Z.x(i) - zx);
            dx = std::min(dx, Z.a - dx);
            for (int j = 0; j < Z.n_omega; ++j) {
                double dw = std::abs(Z.omega(j) - zw);
                dw = std::min(dw, 1.0 / Z.a - dw);
                if (dx * dx + dw * dw <= r * r) continue;
                acc += cell / std::norm(Z.at(i, j));
            }
        }
        scan.integrals.push_back(acc);
    }
    for (size_t i = 1; i < scan.integrals.size(); ++i)
        scan.increments.push_back(scan.integrals[i] - scan.integrals[i - 1]);
    return scan;
}

Report blowup_report(const ZakField& Z, double zx, double zw,
                     const std::vector<double>& radii, bool expect_divergent) {
    const BlowupScan scan = blowup_scan(Z, zx, zw, radii);
    Report rep;
    rep.title = "blowup scan";
    // warn when the claimed zero is not resolved by the grid
    double max_abs = 0.0;
    for (const cdouble& v : Z.values) max_abs = std::max(max_abs, std::abs(v));
    const int iz = static_cast<int>(std::lround(zx / Z.a * Z.n_x - Z.x_offset)) % Z.n_x;
    const int jz =
        static_cast<int>(std::lround(zw * Z.a * Z.n_omega - Z.omega_offset)) % Z.n_omega;
    const bool resolved =
        std::abs(Z.at((iz + Z.n_x) % Z.n_x, (jz + Z.n_omega) % Z.n_omega)) <
        1e-3 * max_abs;
    json meta{{"radii", radii},
              {"integrals", scan.integrals},
              {"increments", scan.increments},
              {"n_x", Z.n_x},
              {"n_omega", Z.n_omega}};
    if (expect_divergent && !resolved)
        meta["warning"] = "claimed zero is not grid-resolved near the given point";
    if (expect_divergent) {
        // log divergence: per-halving increments approximately constant
        double lo = 1e300, hi = -1e300, mean = 0.0;
        for (double d : scan.increments) {
            lo = std::min(lo, d);
            hi = std::max(hi, d);
            mean += d;
        }
        mean /= static_cast<double>(scan.increments.size());
        const double spread = (hi - lo) / mean;
        rep.add("increment_spread_rel", spread, 0.2, spread <= 0.2 && mean > 0.0, meta);
    } else {
        const double last = scan.increments.empty() ? 0.0 : scan.increments.back();
        const double first = scan.increments.empty() ? 1.0 : scan.increments.front();
        rep.add("increments_decay", last, first,
                scan.increments.size() < 2 || last < first, meta);
    }
    return rep;
}

std::optional<std::pair<double, double>> find_zero(const ZakField& Z) {
    double max_abs = 0.0;
    for (const cdouble& v : Z.values) max_abs = std::max(max_abs, std::abs(v));
    int best_i = -1, best_j = -1;
    double best = max_abs;
    for (int i = 0; i < Z.n_x; ++i) {
        for (int j = 0; j < Z.n_omega; ++j) {
            const double m = std::abs(Z.at(i, j));
            if (m >= 1e-6 * max_abs || m >= best) continue;
            const auto nb = [&](int di, int dj) {
                const int ii = (i + di + Z.n_x) % Z.n_x;
                const int jj = (j + dj + Z.n_omega) % Z.n_omega;
                return std::abs(Z.at(ii, jj));
            };
            if (nb(1, 0) > m && nb(-1, 0) > m && nb(0, 1) > m && nb(0, -1) > m) {
                best = m;
                best_i = i;
                best_j = j;
            }
        }
    }
    if (best_i < 0) return std::nullopt;
    // Local quadratic fit of |Z|^2 along each axis; vertex of the parabola.
    const auto refine = [&](double fm, double f0, double fp, double h) {
        const double denom = fm - 2.0 * f0 + fp;
        if (denom <= 0.0) return 0.0;
        return std::max(-h, std::min(h, 0.5 * h * (fm - fp) / denom));
    };
    const int i = best_i, j = best_j;
    const double hx = Z.a / Z.n_x, hw = 1.0 / (Z.a * Z.n_omega);
    const double dx = refine(std::norm(Z.at((i - 1 + Z.n_x) % Z.n_x, j)),
                             std::norm(Z.at(i, j)),
                             std::norm(Z.at((i + 1) % Z.n_x, j)), hx);
    const double dw = refine(std::norm(Z.at(i, (j - 1 + Z.n_omega) % Z.n_omega)),
                             std::norm(Z.at(i, j)),
                             std::norm(Z.at(i, (j + 1) % Z.n_omega)), hw);
    return std::make_pair(Z.x(i) + dx, Z.omega(j) + dw);
}

} // namespace gaborpair
