#include "gaborpair/numeric.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gaborpair/quadrature.hpp"

namespace gaborpair {

namespace {
constexpr double kPi = std::numbers::pi;
}

cdouble inner_product(const SampledSignal& f, const SampledSignal& g) {
    if (!(f.grid() == g.grid()))
        throw std::invalid_argument("inner_product: grids differ");
    cdouble acc = 0.0;
    const auto& fv = f.values();
    const auto& gv = g.values();
    for (size_t j = 0; j < fv.size(); ++j) acc += fv[j] * std::conj(gv[j]);
    return acc * f.grid().spacing();
}

double l2_norm(const SampledSignal& f) {
    double acc = 0.0;
    for (const cdouble& v : f.values()) acc += std::norm(v);
    return std::sqrt(acc * f.grid().spacing());
}

SampledSignal tf_shift(const SampledSignal& f, double x, double omega) {
    const Grid& grid = f.grid();
    std::vector<cdouble> out(static_cast<size_t>(grid.n_samples));
    const auto& src = f.source();
    bool zero_extended = false;

    if (src && src->analytic()) {
        for (int j = 0; j < grid.n_samples; ++j) {
            const double t = grid.point(j);
            out[static_cast<size_t>(j)] =
                std::polar(1.0, 2.0 * kPi * omega * (t - x)) * src->eval(t - x);
        }
    } else {
        const double h = grid.spacing();
        const double steps = x / h;
        const long shift = std::lround(steps);
        if (std::abs(steps - shift) > 1e-9)
            throw std::invalid_argument(
                "tf_shift: tabulated signal shifts must be multiples of the grid spacing");
        for (int j = 0; j < grid.n_samples; ++j) {
            const long jj = j - shift;
            cdouble v = 0.0;
            if (jj >= 0 && jj < grid.n_samples) {
                v = f[static_cast<int>(jj)];
            } else {
                zero_extended = true;
            }
            const double t = grid.point(j);
            out[static_cast<size_t>(j)] = std::polar(1.0, 2.0 * kPi * omega * (t - x)) * v;
        }
    }
    SampledSignal result(grid, std::move(out));
    if (zero_extended) result.mark_zero_extended();
    return result;
}

cdouble fourier_coeff(const std::function<cdouble(double)>& f, int k,
                      const BoxQuadrature& q) {
    const auto integrand = [&](double w) -> cdouble {
        const cdouble v = f(w) * std::polar(1.0, -2.0 * kPi * k * w);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::runtime_error("fourier_coeff: non-finite integrand at w = " +
                                     std::to_string(w));
        return v;
    };
    if (q.rule == BoxQuadrature::Rule::midpoint)
        return quad::midpoint(integrand, -0.5, 0.5, q.resolution);
    return quad::gl_panels(integrand, -0.5, 0.5, q.resolution);
}

cdouble dtft(const FourierSeq& c, double omega) {
    cdouble acc = 0.0;
    for (int k = -c.order; k <= c.order; ++k)
        acc += c.at(k) * std::polar(1.0, -2.0 * kPi * k * omega);
    return acc;
}

cdouble dtft2(const std::function<cdouble(int, int)>& c, int K, double w1, double w2) {
    cdouble acc = 0.0;
    for (int k = -K; k <= K; ++k)
        for (int l = -K; l <= K; ++l)
            acc += c(k, l) * std::polar(1.0, -2.0 * kPi * (k * w1 + l * w2));
    return acc;
}

} // namespace gaborpair
