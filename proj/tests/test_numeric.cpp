#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gaborpair/numeric.hpp"
#include "gaborpair/theta.hpp"
#include "gaborpair/windows.hpp"

using namespace gaborpair;

namespace {
constexpr double kPi = std::numbers::pi;

struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed) {}
    double uniform() {
        s += 0x9e3779b97f4a7c15ULL;
        uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return static_cast<double>((z ^ (z >> 31)) >> 11) * 0x1.0p-53;
    }
};
} // namespace

TEST_CASE("inner product basics") {
    const SampledSignal box = sample(WindowSpec::box(), Grid::desk_box());
    CHECK(inner_product(box, box).real() == doctest::Approx(1.0).epsilon(1e-14));

    const SampledSignal phi = sample(WindowSpec::gaussian(), Grid::desk());
    CHECK(std::abs(inner_product(phi, phi) - 1.0) < 1e-8);

    // <phi, T_1 M_1 phi> = -e^{-pi}; closed-form Gram value as oracle
    const SampledSignal shifted = tf_shift(phi, 1.0, 1.0);
    const cdouble ip = inner_product(phi, shifted);
    CHECK(std::abs(ip - cdouble(-std::exp(-kPi), 0.0)) < 1e-10);
}

TEST_CASE("inner product contract") {
    const SampledSignal a = sample(WindowSpec::gaussian(), Grid::desk());
    const SampledSignal b = sample(WindowSpec::gaussian(2.0), Grid::desk());
    CHECK(std::abs(inner_product(a, b) - std::conj(inner_product(b, a))) < 1e-14);

    const SampledSignal c = sample(WindowSpec::box(), Grid::desk_box());
    CHECK_THROWS_AS((void)inner_product(a, c), std::invalid_argument);
}

TEST_CASE("inner product linearity and symmetry on random signals") {
    Rng rng(77);
    const Grid g(-2.0, 2.0, 512);
    std::vector<cdouble> u(512), v(512), w(512);
    for (int j = 0; j < 512; ++j) {
        u[j] = cdouble(rng.uniform() - 0.5, rng.uniform() - 0.5);
        v[j] = cdouble(rng.uniform() - 0.5, rng.uniform() - 0.5);
        w[j] = u[j] + 2.5 * v[j];
    }
    const SampledSignal su(g, u), sv(g, v), sw(g, w);
    const SampledSignal stest(g, std::vector<cdouble>(512, cdouble(0.3, -0.8)));
    const cdouble lhs = inner_product(sw, stest);
    const cdouble rhs = inner_product(su, stest) + 2.5 * inner_product(sv, stest);
    CHECK(std::abs(lhs - rhs) < 1e-14);
    CHECK(std::abs(inner_product(su, sv) - std::conj(inner_product(sv, su))) < 1e-14);
}

TEST_CASE("tf_shift conventions") {
    const SampledSignal phi = sample(WindowSpec::gaussian(), Grid::desk());

    SUBCASE("identity shift") {
        const SampledSignal same = tf_shift(phi, 0.0, 0.0);
        double dev = 0.0;
        for (int j = 0; j < phi.size(); ++j) dev = std::max(dev, std::abs(same[j] - phi[j]));
        CHECK(dev < 1e-15);
    }

    SUBCASE("Gram sequence through shifts") {
        // <T_{-n} M_{-m} phi, phi> = (-1)^{nm} e^{-pi (n^2+m^2)/2} at (1,1)
        const SampledSignal s = tf_shift(phi, -1.0, -1.0);
        CHECK(std::abs(inner_product(s, phi) - cdouble(-std::exp(-kPi), 0.0)) < 1e-10);
    }

    SUBCASE("modulate then translate equals the combined shift") {
        // T_x M_w applies the modulation first; x lands on a grid cell so
        // the tabulated outer shift is an exact re-indexing
        const double x = 240.0 * phi.grid().spacing(); // 0.703125
        const SampledSignal two_step = tf_shift(tf_shift(phi, 0.0, 1.3), x, 0.0);
        const SampledSignal one_step = tf_shift(phi, x, 1.3);
        double dev = 0.0;
        for (int j = 0; j < phi.size(); ++j)
            dev = std::max(dev, std::abs(two_step[j] - one_step[j]));
        CHECK(dev < 1e-12);
    }

    SUBCASE("phase law for the opposite order") {
        // translating first picks up the commutator phase e^{2 pi i w x}
        const double x = 240.0 * phi.grid().spacing();
        const SampledSignal other = tf_shift(tf_shift(phi, x, 0.0), 0.0, 1.3);
        const SampledSignal combined = tf_shift(phi, x, 1.3);
        const cdouble phase = std::polar(1.0, 2.0 * kPi * 1.3 * x);
        double dev = 0.0;
        for (int j = 0; j < phi.size(); ++j)
            dev = std::max(dev, std::abs(other[j] - phase * combined[j]));
        CHECK(dev < 1e-12);
    }

    SUBCASE("norm preservation inside the grid") {
        const SampledSignal s = tf_shift(phi, 1.5, 2.0);
        CHECK(std::abs(l2_norm(s) - l2_norm(phi)) < 1e-10);
    }

    SUBCASE("tabulated shifts must align with the grid") {
        const Grid g(-2.0, 2.0, 400);
        std::vector<cdouble> vals(400, 1.0);
        const SampledSignal tab(g, vals);
        CHECK_THROWS_AS((void)tf_shift(tab, 0.00123, 0.0), std::invalid_argument);
        const SampledSignal ok = tf_shift(tab, 10.0 * g.spacing(), 0.0);
        CHECK(ok.zero_extended());
    }
}

TEST_CASE("fourier_coeff orthogonality") {
    const auto one = [](double) -> cdouble { return 1.0; };
    CHECK(std::abs(fourier_coeff(one, 0) - 1.0) < 1e-14);
    CHECK(std::abs(fourier_coeff(one, 3)) < 1e-14);

    const auto mode = [](double w) { return std::polar(1.0, 2.0 * kPi * w); };
    CHECK(std::abs(fourier_coeff(mode, 1) - 1.0) < 1e-14);

    const auto bad = [](double w) -> cdouble { return (w > 0.2) ? 1.0 / 0.0 : 1.0; };
    CHECK_THROWS_AS((void)fourier_coeff(bad, 0), std::runtime_error);
}

TEST_CASE("dtft of delta and of the Gram sequence") {
    FourierSeq delta(4);
    delta.at(0) = 1.0;
    CHECK(std::abs(dtft(delta, 0.37) - 1.0) < 1e-15);

    const auto gram = [](int n, int m) -> cdouble { return vartheta(n, m); };
    const cdouble at_zero = dtft2(gram, 5, 0.0, 0.0);
    CHECK(at_zero.real() == doctest::Approx(theta_eval(0.0, 0.0, 5)).epsilon(1e-13));
    CHECK(std::abs(dtft2(gram, 8, 0.5, 0.5)) < 1e-12);
}

TEST_CASE("trig polynomial recovery round trip") {
    Rng rng(99);
    const int K = 6;
    FourierSeq c(K);
    for (int k = -K; k <= K; ++k)
        c.at(k) = cdouble(rng.uniform() - 0.5, rng.uniform() - 0.5);
    // midpoint rule with N nodes recovers each coefficient exactly; both
    // transforms carry e^{-2 pi i k w}, so the composition reverses the index
    const int N = 64;
    const auto f = [&](double w) { return dtft(c, w); };
    for (int k = -K; k <= K; ++k)
        CHECK(std::abs(fourier_coeff(f, k, {BoxQuadrature::Rule::midpoint, N}) -
                       c.at(-k)) < 1e-10);
}
