#include "gaborpair/gabor.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gaborpair {

namespace {
constexpr double kPi = std::numbers::pi;
}

bool LatticeParams::critical() const { return std::abs(a * b - 1.0) <= 1e-12; }

void LatticeParams::require_critical(const char* where) const {
    if (a <= 0.0 || b <= 0.0)
        throw std::invalid_argument(std::string(where) + ": lattice parameters must be positive");
    if (!critical())
        throw std::invalid_argument(std::string(where) + ": requires critical density a*b = 1");
}

LatticeSeq::LatticeSeq(int R) : radius(R) {
    if (R < 1) throw std::invalid_argument("LatticeSeq: radius must be >= 1");
    values.assign(static_cast<size_t>(2 * R + 1) * static_cast<size_t>(2 * R + 1), 0.0);
}

cdouble& LatticeSeq::at(int k, int l) {
    return values[static_cast<size_t>(k + radius) * (2 * radius + 1) +
                  static_cast<size_t>(l + radius)];
}

cdouble LatticeSeq::get(int k, int l) const {
    if (std::abs(k) <= radius && std::abs(l) <= radius)
        return values[static_cast<size_t>(k + radius) * (2 * radius + 1) +
                      static_cast<size_t>(l + radius)];
    if (fill) return fill(k, l);
    return 0.0;
}

cdouble stft_sample(const SampledSignal& f, const WindowSpec& g, double x, double omega) {
    const SampledSignal shifted = tf_shift(sample(g, f.grid()), x, omega);
    return inner_product(f, shifted);
}

SampledSignal gabor_synthesis(const LatticeSeq& xi, const WindowSpec& g,
                              const LatticeParams& lattice, const Grid& target) {
    std::vector<cdouble> out(static_cast<size_t>(target.n_samples), 0.0);
    for (int n = -xi.radius; n <= xi.radius; ++n) {
        for (int m = -xi.radius; m <= xi.radius; ++m) {
            const cdouble w = xi.get(n, m);
            if (w == cdouble(0.0, 0.0)) continue;
            const double x = lattice.a * n;
            const double om = lattice.b * m;
            for (int j = 0; j < target.n_samples; ++j) {
                const double t = target.point(j);
                out[static_cast<size_t>(j)] +=
                    w * std::polar(1.0, 2.0 * kPi * om * (t - x)) * g.eval(t - x);
            }
        }
    }
    return SampledSignal(target, std::move(out));
}

SampledSignal frame_operator_zak(const WindowSpec& g, const WindowSpec& gamma,
                                 const LatticeParams& lattice, const SampledSignal& f,
                                 int n_omega, int K) {
    lattice.require_critical("frame_operator_zak");
    const double a = lattice.a;
    // Half omega offset keeps removable singularities of the symbol (the
    // example-pair gamma field blows up on omega = 0) off the grid.
    ZakField Zf = zak_forward(f, a, n_omega, K, 0.5);
    for (int i = 0; i < Zf.n_x; ++i) {
        const double x = Zf.x(i);
        for (int j = 0; j < Zf.n_omega; ++j) {
            const double w = Zf.omega(j);
            const cdouble zg = zak_point(g, a, x, w);
            const cdouble zgam = zak_point(gamma, a, x, w);
            Zf.at(i, j) *= a * std::conj(zg) * zgam;
        }
    }
    // reconstruct onto the unit-cell copies that tile f's grid exactly
    const double h = f.grid().spacing();
    const int cell_min = static_cast<int>(
        std::lround(f.grid().t_min / a - (Zf.x_offset - 0.5) * h / a));
    const int cell_max = cell_min + f.grid().n_samples / Zf.n_x;
    return zak_inverse(Zf, cell_min, cell_max);
}

SampledSignal frame_operator_direct(const WindowSpec& g, const WindowSpec& gamma,
                                    const LatticeParams& lattice, const SampledSignal& f,
                                    int R) {
    lattice.require_critical("frame_operator_direct");
    LatticeSeq coeffs(R);
    for (int n = -R; n <= R; ++n)
        for (int m = -R; m <= R; ++m)
            coeffs.at(n, m) = stft_sample(f, g, lattice.a * n, lattice.b * m);
    return gabor_synthesis(coeffs, gamma, lattice, f.grid());
}

ReppairBounds reppair_zak_bounds(const WindowSpec& g, const WindowSpec& gamma,
                                 double a, int resolution, double exclude_cx,
                                 double exclude_cw, double exclude_r, double x_offset,
                                 double omega_offset) {
    const ZakField Zg = zak_forward(g, a, resolution, resolution, -1, x_offset,
                                    omega_offset);
    const ZakField Zgam = zak_forward(gamma, a, resolution, resolution, -1, x_offset,
                                      omega_offset);
    ReppairBounds out;
    out.resolution = resolution;
    out.m_hat = 1e300;
    out.M_hat = 0.0;
    for (int i = 0; i < resolution; ++i) {
        double dx = std::abs(Zg.x(i) - exclude_cx);
        dx = std::min(dx, a - dx);
        for (int j = 0; j < resolution; ++j) {
            double dw = std::abs(Zg.omega(j) - exclude_cw);
            dw = std::min(dw, 1.0 / a - dw);
            if (exclude_r > 0.0 && dx * dx + dw * dw < exclude_r * exclude_r) continue;
            const cdouble prod = Zg.at(i, j) * Zgam.at(i, j);
            const double mag = std::abs(prod);
            out.m_hat = std::min(out.m_hat, mag);
            out.M_hat = std::max(out.M_hat, mag);
            const cdouble s_eye = std::conj(Zg.at(i, j)) * Zgam.at(i, j) - 1.0 / a;
            out.s_eye_dev = std::max(out.s_eye_dev, std::abs(s_eye));
        }
    }
    return out;
}

double schauder_ratio(const ZakField& Zg, double i_lo, double i_hi, double j_lo,
                      double j_hi) {
    if (!(i_lo < i_hi) || !(j_lo < j_hi))
        throw std::invalid_argument("schauder_ratio: empty rectangle");
    // Discrete form: node means replace the area-normalized integrals, so
    // the ratio is mean(|Z|^2) mean(|Z|^{-2}) over nodes inside I x J. This
    // keeps the Cauchy-Schwarz lower bound of one exact at any resolution
    // and converges to the rectangle functional as the grid refines.
    double sum_sq = 0.0, sum_inv = 0.0;
    long count = 0;
    // Periodize node coordinates into the rectangle's frame.
    for (int i = 0; i < Zg.n_x; ++i) {
        double x = Zg.x(i);
        while (x < i_lo) x += Zg.a;
        while (x >= i_lo + Zg.a) x -= Zg.a;
        if (x >= i_hi) continue;
        for (int j = 0; j < Zg.n_omega; ++j) {
            double w = Zg.omega(j);
            const double period = 1.0 / Zg.a;
            while (w < j_lo) w += period;
            while (w >= j_lo + period) w -= period;
            if (w >= j_hi) continue;
            const double m2 = std::norm(Zg.at(i, j));
            if (m2 == 0.0)
                throw std::runtime_error("schauder_ratio: |Zg| vanishes at a node");
            sum_sq += m2;
            sum_inv += 1.0 / m2;
            ++count;
        }
    }
    if (count == 0) throw std::invalid_argument("schauder_ratio: no nodes in rectangle");
    return sum_sq * sum_inv / (static_cast<double>(count) * count);
}

Report semiframe_duality_check(
    const WindowSpec& g,
    const std::function<cdouble(const SampledSignal&, int, int)>& partner_coeff,
    const std::vector<SampledSignal>& test_set, int R, double tolerance) {
    Report rep;
    rep.title = "semiframe duality";
    double bessel_hat = 0.0;
    double lower_ratio = 1e300;
    for (const SampledSignal& f : test_set) {
        const double nrm = l2_norm(f);
        const double norm2 = nrm * nrm;
        double upper = 0.0, lower = 0.0;
        for (int n = -R; n <= R; ++n) {
            for (int m = -R; m <= R; ++m) {
                upper += std::norm(stft_sample(f, g, static_cast<double>(n),
                                               static_cast<double>(m)));
                lower += std::norm(partner_coeff(f, n, m));
            }
        }
        bessel_hat = std::max(bessel_hat, upper / norm2);
        lower_ratio = std::min(lower_ratio, lower / norm2);
    }
    json meta{{"bessel_hat", bessel_hat},
              {"lower_ratio", lower_ratio},
              {"radius", R},
              {"signals", test_set.size()}};
    const double required = 1.0 / bessel_hat - tolerance;
    rep.add("lower_ratio_vs_inverse_bessel", lower_ratio, required,
            lower_ratio >= required, meta);
    return rep;
}

} // namespace gaborpair
