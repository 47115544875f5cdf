#pragma once

#include <functional>
#include <vector>

#include "gaborpair/signal.hpp"
#include "gaborpair/windows.hpp"

namespace gaborpair {

/// Quadrature choice for integrals over [-1/2, 1/2).
struct BoxQuadrature {
    enum class Rule { midpoint, gauss_panels };
    Rule rule = Rule::midpoint;
    int resolution = 2048; // cells for midpoint, panels for gauss
};

/// Composite-midpoint inner product sum f conj(g) h. Conjugate-symmetric
/// and linear to machine precision. Throws on grid mismatch.
cdouble inner_product(const SampledSignal& f, const SampledSignal& g);
double l2_norm(const SampledSignal& f);

/// t -> e^{2 pi i omega (t - x)} f(t - x), re-sampled on f's grid.
/// Analytic sources are re-evaluated exactly; tabulated signals require x
/// to be a multiple of the grid spacing and are zero-extended outside the
/// original support (flagged on the result).
SampledSignal tf_shift(const SampledSignal& f, double x, double omega);

/// int_{-1/2}^{1/2} f(w) e^{-2 pi i k w} dw. Throws on a non-finite
/// integrand sample, reporting the offending node.
cdouble fourier_coeff(const std::function<cdouble(double)>& f, int k,
                      const BoxQuadrature& q = {});

/// Finite two-sided coefficient sequence, indices -order..order.
struct FourierSeq {
    int order = 0;
    std::vector<cdouble> coeffs; // length 2*order+1, index k at coeffs[k+order]

    explicit FourierSeq(int K) : order(K), coeffs(2 * static_cast<size_t>(K) + 1) {}
    cdouble& at(int k) { return coeffs[static_cast<size_t>(k + order)]; }
    cdouble at(int k) const { return coeffs[static_cast<size_t>(k + order)]; }
};

/// Partial sum sum_{|k|<=K} c[k] e^{-2 pi i k w}.
cdouble dtft(const FourierSeq& c, double omega);

/// Two-dimensional variant over the box |k|,|l| <= K for a sequence given
/// as a callback.
cdouble dtft2(const std::function<cdouble(int, int)>& c, int K, double w1, double w2);

} // namespace gaborpair
