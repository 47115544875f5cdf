#include "gaborpair/theta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gaborpair {

namespace {
constexpr double kPi = std::numbers::pi;
}

double vartheta(int n, int m) {
    const double sign = ((static_cast<long>(n) * m) % 2 == 0) ? 1.0 : -1.0;
    return sign * std::exp(-kPi * (static_cast<double>(n) * n + static_cast<double>(m) * m) / 2.0);
}

GramSeq GramSeq::make(int radius) {
    GramSeq seq;
    seq.radius = radius;
    seq.values.resize(static_cast<size_t>(2 * radius + 1) * (2 * radius + 1));
    for (int n = -radius; n <= radius; ++n)
        for (int m = -radius; m <= radius; ++m)
            seq.values[static_cast<size_t>(n + radius) * (2 * radius + 1) +
                       static_cast<size_t>(m + radius)] = vartheta(n, m);
    return seq;
}

double theta_eval(double w1, double w2, int R) {
    double re = 0.0, im = 0.0;
    for (int n = -R; n <= R; ++n) {
        for (int m = -R; m <= R; ++m) {
            const double v = vartheta(n, m);
            const double phase = -2.0 * kPi * (n * w1 + m * w2);
            re += v * std::cos(phase);
            im += v * std::sin(phase);
        }
    }
    if (std::abs(im) > 1e-13)
        throw std::runtime_error("theta_eval: imaginary part failed to cancel");
    return re;
}

double jacobi_theta2(double z, double q, int terms) {
    double acc = 0.0;
    for (int n = 0; n < terms; ++n)
        acc += std::pow(q, (n + 0.5) * (n + 0.5)) * std::cos((2 * n + 1) * z);
    return 2.0 * acc;
}

double jacobi_theta3(double z, double q, int terms) {
    double acc = 0.0;
    for (int n = 1; n <= terms; ++n)
        acc += std::pow(q, static_cast<double>(n) * n) * std::cos(2 * n * z);
    return 1.0 + 2.0 * acc;
}

double jacobi_theta4(double z, double q, int terms) {
    double acc = 0.0;
    double sign = -1.0;
    for (int n = 1; n <= terms; ++n) {
        acc += sign * std::pow(q, static_cast<double>(n) * n) * std::cos(2 * n * z);
        sign = -sign;
    }
    return 1.0 + 2.0 * acc;
}

double theta_eval_product(double w1, double w2) {
    const double q1 = std::exp(-kPi / 2.0);
    const double q2 = std::exp(-2.0 * kPi);
    return jacobi_theta3(kPi * w1, q1) * jacobi_theta3(2.0 * kPi * w2, q2) +
           jacobi_theta4(kPi * w1, q1) * jacobi_theta2(2.0 * kPi * w2, q2);
}

std::vector<double> theta_grid(int n, int R) {
    // Separable split over the parity of the first index:
    //   Theta = E(w1) A(w2) + O(w1) B(w2)
    // with E/O the even/odd partial sums in n and A/B the theta3/theta4 type
    // sums in m. Same truncated double sum, evaluated in O(n^2 + n R) work.
    std::vector<double> E(static_cast<size_t>(n)), O(static_cast<size_t>(n));
    std::vector<double> A(static_cast<size_t>(n)), B(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double w = static_cast<double>(i) / n;
        double e = 0.0, o = 0.0, a3 = 0.0, b4 = 0.0;
        for (int k = -R; k <= R; ++k) {
            const double g = std::exp(-kPi * k * k / 2.0);
            const double c = std::cos(2.0 * kPi * k * w);
            if (k % 2 == 0) e += g * c; else o += g * c;
            a3 += g * c;
            b4 += (k % 2 == 0 ? g : -g) * c;
        }
        E[static_cast<size_t>(i)] = e;
        O[static_cast<size_t>(i)] = o;
        A[static_cast<size_t>(i)] = a3;
        B[static_cast<size_t>(i)] = b4;
    }
    std::vector<double> grid(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            grid[static_cast<size_t>(i) * n + j] =
                E[static_cast<size_t>(i)] * A[static_cast<size_t>(j)] +
                O[static_cast<size_t>(i)] * B[static_cast<size_t>(j)];
    return grid;
}

Report theta_hessian_check(int R, double h) {
    if (h < 1e-4 || h > 1e-2)
        throw std::invalid_argument("theta_hessian_check: step must lie in [1e-4, 1e-2]");
    Report rep;
    rep.title = "theta hessian at (1/2,1/2)";
    const double w0 = 0.5;
    const double f0 = theta_eval(w0, w0, R);
    const double d20 =
        (theta_eval(w0 + h, w0, R) - 2.0 * f0 + theta_eval(w0 - h, w0, R)) / (h * h);
    const double d02 =
        (theta_eval(w0, w0 + h, R) - 2.0 * f0 + theta_eval(w0, w0 - h, R)) / (h * h);
    const double d11 = (theta_eval(w0 + h, w0 + h, R) - theta_eval(w0 + h, w0 - h, R) -
                        theta_eval(w0 - h, w0 + h, R) + theta_eval(w0 - h, w0 - h, R)) /
                       (4.0 * h * h);
    const double d10 = (theta_eval(w0 + h, w0, R) - theta_eval(w0 - h, w0, R)) / (2.0 * h);
    const double d01 = (theta_eval(w0, w0 + h, R) - theta_eval(w0, w0 - h, R)) / (2.0 * h);

    json meta{{"fd_step", h}, {"truncation", R}, {"d20", d20}, {"d02", d02}};
    rep.add("d20_positive", d20, 0.0, d20 > 0.0, meta);
    rep.add("d02_positive", d02, 0.0, d02 > 0.0, meta);
    const double rel = std::abs(d20 - d02) / std::max(std::abs(d20), std::abs(d02));
    rep.add_abs("d20_d02_relative_difference", rel, 1e-6, meta);
    rep.add_abs("mixed_partial", d11, 1e-8, meta);
    rep.add_abs("d10", d10, 1e-10, meta);
    rep.add_abs("d01", d01, 1e-10, meta);
    rep.add("positive_off_zero", theta_eval(w0 + 1e-3, w0, R), 0.0,
            theta_eval(w0 + 1e-3, w0, R) > 0.0, meta);
    return rep;
}

double kernel_poly_eval(const KernelPoly& p, int n, int m) {
    double poly = 0.0;
    for (const auto& [alpha, c] : p.coeffs) {
        if (alpha.first + alpha.second > p.degree) continue;
        poly += c * std::pow(static_cast<double>(n), alpha.first) *
                std::pow(static_cast<double>(m), alpha.second);
    }
    const double sign = ((n + m) % 2 == 0) ? 1.0 : -1.0;
    return sign * poly;
}

cdouble kernel_convolution(const std::function<double(int, int)>& p, int n, int m, int R) {
    cdouble acc = 0.0;
    for (int k = -R; k <= R; ++k)
        for (int l = -R; l <= R; ++l)
            acc += p(k, l) * vartheta(n - k, m - l);
    return acc;
}

cdouble kernel_convolution(const KernelPoly& p, int n, int m, int R) {
    return kernel_convolution(
        [&](int k, int l) { return kernel_poly_eval(p, k, l); }, n, m, R);
}

} // namespace gaborpair
