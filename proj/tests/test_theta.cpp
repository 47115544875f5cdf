#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gaborpair/numeric.hpp"
#include "gaborpair/theta.hpp"
#include "gaborpair/windows.hpp"

using namespace gaborpair;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("gram sequence values and symmetries") {
    CHECK(vartheta(0, 0) == doctest::Approx(1.0));
    CHECK(vartheta(1, 0) == doctest::Approx(std::exp(-kPi / 2.0)).epsilon(1e-15));
    CHECK(vartheta(1, 1) == doctest::Approx(-std::exp(-kPi)).epsilon(1e-15));
    for (int n = -3; n <= 3; ++n) {
        for (int m = -3; m <= 3; ++m) {
            CHECK(vartheta(n, m) == vartheta(m, n));
            CHECK(vartheta(n, m) == vartheta(-n, -m));
        }
    }

    // quadrature cross-check of the closed form at (1,1)
    const SampledSignal phi = sample(WindowSpec::gaussian(), Grid::desk());
    const SampledSignal shifted = tf_shift(phi, -1.0, -1.0);
    CHECK(std::abs(inner_product(shifted, phi) - cdouble(vartheta(1, 1), 0.0)) < 1e-10);
}

TEST_CASE("theta symbol: value, zero, positivity") {
    // frozen high-precision value of the truncated double sum
    CHECK(theta_eval(0.0, 0.0, 8) == doctest::Approx(1.6692536833481464).epsilon(1e-14));
    CHECK(std::abs(theta_eval(0.5, 0.5, 8)) < 1e-12);

    struct Rng {
        uint64_t s = 42;
        double uniform() {
            s += 0x9e3779b97f4a7c15ULL;
            uint64_t z = s;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            return static_cast<double>((z ^ (z >> 31)) >> 11) * 0x1.0p-53;
        }
    } rng;
    for (int s = 0; s < 50; ++s) {
        const double w1 = rng.uniform(), w2 = rng.uniform();
        const double v = theta_eval(w1, w2, 8);
        CHECK(v >= -1e-12);
        CHECK(std::abs(v - theta_eval_product(w1, w2)) < 1e-12);
    }
}

TEST_CASE("jacobi product form matches the double sum on a line") {
    for (double w : {0.0, 0.1, 0.33, 0.5, 0.77}) {
        CHECK(std::abs(theta_eval(w, 0.25, 8) - theta_eval_product(w, 0.25)) < 1e-12);
    }
}

TEST_CASE("separable grid evaluation agrees with pointwise sums") {
    const int n = 64;
    const std::vector<double> grid = theta_grid(n, 8);
    for (int i : {0, 7, 31, 32, 63}) {
        for (int j : {0, 5, 32, 50}) {
            const double direct =
                theta_eval(static_cast<double>(i) / n, static_cast<double>(j) / n, 8);
            CHECK(std::abs(grid[static_cast<size_t>(i) * n + j] - direct) < 1e-12);
        }
    }
}

TEST_CASE("hessian structure at the zero") {
    const Report rep = theta_hessian_check(8, 1e-3);
    CHECK(rep.all_pass());
    double d20 = 0.0;
    for (const auto& c : rep.checks)
        if (c.check == "d20_positive") d20 = c.value;
    // analytic second partial frozen from the series: 22.952858500866892
    CHECK(std::abs(d20 - 22.952858500866892) < 1e-2);
    CHECK_THROWS_AS((void)theta_hessian_check(8, 0.5), std::invalid_argument);
}

TEST_CASE("kernel polynomials") {
    KernelPoly constant;
    constant.degree = 0;
    constant.coeffs[{0, 0}] = 1.0;
    CHECK(kernel_poly_eval(constant, 0, 0) == doctest::Approx(1.0));
    CHECK(kernel_poly_eval(constant, 1, 0) == doctest::Approx(-1.0));

    KernelPoly linear;
    linear.degree = 1;
    linear.coeffs[{1, 0}] = 1.0;
    CHECK(kernel_poly_eval(linear, 2, 3) == doctest::Approx(-2.0));
}

TEST_CASE("kernel convolution vanishes for kernel elements only") {
    KernelPoly constant;
    constant.degree = 0;
    constant.coeffs[{0, 0}] = 1.0;
    KernelPoly linear;
    linear.degree = 1;
    linear.coeffs[{1, 0}] = 1.0;

    for (int n = -4; n <= 4; ++n) {
        for (int m = -4; m <= 4; ++m) {
            CHECK(std::abs(kernel_convolution(constant, n, m, 10)) < 1e-10);
            CHECK(std::abs(kernel_convolution(linear, n, m, 10)) < 1e-10);
        }
    }

    const cdouble ones = kernel_convolution([](int, int) { return 1.0; }, 0, 0, 10);
    CHECK(std::abs(ones - theta_eval(0.0, 0.0, 8)) < 1e-10);
    CHECK(std::abs(ones) > 1.0); // definitely not a kernel element
}

TEST_CASE("materialized gram sequence") {
    const GramSeq seq = GramSeq::make(4);
    CHECK(seq.at(0, 0) == 1.0);
    for (int n = -4; n <= 4; ++n) {
        for (int m = -4; m <= 4; ++m) {
            CHECK(seq.at(n, m) == seq.at(m, n));
            CHECK(seq.at(n, m) == seq.at(-n, -m));
            CHECK(seq.at(n, m) == vartheta(n, m));
        }
    }
}

TEST_CASE("gram sequence is summable with negligible far tail") {
    double tail = 0.0;
    for (int n = -10; n <= 10; ++n)
        for (int m = -10; m <= 10; ++m)
            if (std::max(std::abs(n), std::abs(m)) > 5) tail += std::abs(vartheta(n, m));
    CHECK(tail < 1e-12);
}
