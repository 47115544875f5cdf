#pragma once

#include <functional>

#include "gaborpair/numeric.hpp"
#include "gaborpair/report.hpp"
#include "gaborpair/zak.hpp"

namespace gaborpair {

/// Rectangular lattice a Z x b Z. Critical-density operations require
/// a b = 1 and throw otherwise.
struct LatticeParams {
    double a = 1.0;
    double b = 1.0;
    bool critical() const;
    void require_critical(const char* where) const;
};

/// Complex sequence on the box |k|,|l| <= radius, with an optional generator
/// for entries requested outside the stored box (used by index shifts).
struct LatticeSeq {
    int radius = 1;
    std::vector<cdouble> values; // (2R+1)^2 row-major, k outer
    std::function<cdouble(int, int)> fill;

    explicit LatticeSeq(int R);
    cdouble& at(int k, int l);
    cdouble get(int k, int l) const; // consults fill outside the box
};

/// V_g f(x, omega) = <f, T_x M_omega g>.
cdouble stft_sample(const SampledSignal& f, const WindowSpec& g, double x, double omega);

/// sum_{|n|,|m|<=R} xi[n,m] T_{an} M_{bm} g on the target grid. Convergence
/// of the untruncated series may be weak only; the truncation is explicit.
SampledSignal gabor_synthesis(const LatticeSeq& xi, const WindowSpec& g,
                              const LatticeParams& lattice, const Grid& target);

/// S_{g,gamma} f through the Zak symbol a conj(Z_a g) Z_a gamma. The f field
/// is built from samples, so a / spacing must be an integer.
SampledSignal frame_operator_zak(const WindowSpec& g, const WindowSpec& gamma,
                                 const LatticeParams& lattice, const SampledSignal& f,
                                 int n_omega = 64, int K = 8);

/// Direct truncated sum sum_{|n|,|m|<=R} <f, g_{nm}> gamma_{nm}.
SampledSignal frame_operator_direct(const WindowSpec& g, const WindowSpec& gamma,
                                    const LatticeParams& lattice, const SampledSignal& f,
                                    int R);

/// Grid extrema of |Z_a g Z_a gamma| plus sup |conj(Z_a g) Z_a gamma - 1/a|
/// (the S = I indicator), optionally excluding a disc where both factors are
/// ill-conditioned. Grid resolution is recorded in the report; the extrema
/// are proxies for the essential range at that resolution.
struct ReppairBounds {
    double m_hat = 0.0;
    double M_hat = 0.0;
    double s_eye_dev = 0.0;
    int resolution = 0;
};
ReppairBounds reppair_zak_bounds(const WindowSpec& g, const WindowSpec& gamma,
                                 double a, int resolution = 512,
                                 double exclude_cx = 0.0, double exclude_cw = 0.0,
                                 double exclude_r = 0.0, double x_offset = 0.0,
                                 double omega_offset = 0.0);

/// Heil-Powell rectangle functional
///   (1/(|I|^2 |J|^2)) int_{IxJ} |Zg|^2 int_{IxJ} |Zg|^{-2}
/// discretized as mean(|Zg|^2) mean(|Zg|^{-2}) over the field nodes inside
/// I x J (indices periodized). >= 1 by Cauchy-Schwarz, == 1 iff |Zg| is
/// constant there; unbounded under grid refinement when |Zg| has a linear
/// zero in the rectangle. Throws when the rectangle contains no node or
/// |Zg| vanishes at one.
double schauder_ratio(const ZakField& Zg, double i_lo, double i_hi,
                      double j_lo, double j_hi);

/// Empirical check of upper/lower semi-frame duality: Bessel estimate for
/// G(g,1,1) on the test set vs. the lower-frame ratio of the partner
/// coefficients, which must reach 1/B up to the tolerance.
Report semiframe_duality_check(
    const WindowSpec& g,
    const std::function<cdouble(const SampledSignal&, int, int)>& partner_coeff,
    const std::vector<SampledSignal>& test_set, int R, double tolerance = 1e-3);

} // namespace gaborpair
