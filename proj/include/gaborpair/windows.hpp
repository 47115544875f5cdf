#pragma once

#include <memory>
#include <optional>
#include <string>

#include "gaborpair/signal.hpp"

namespace gaborpair {

/// Symbolic window descriptor. Analytic kinds carry pointwise evaluators,
/// tail bounds for Zak truncation, and (where the transform is only
/// defined through its Zak image) a closed-form Zak evaluator.
class WindowSpec {
public:
    enum class Kind { gaussian, box, bastiaans, example4_g, example4_gamma, tabulated };

    static WindowSpec gaussian(double sigma = 1.0);
    static WindowSpec box();
    /// Bastiaans window with explicit constant. calibrate_bastiaans_constant()
    /// supplies the canonical value.
    static WindowSpec bastiaans(double c_psi);
    static WindowSpec example4_g(double a);
    static WindowSpec example4_gamma(double a);
    static WindowSpec tabulated(SampledSignal samples);

    Kind kind() const { return kind_; }
    double sigma() const { return sigma_; }
    double lattice_a() const { return a_; }
    double c_psi() const { return c_psi_; }
    double amplitude() const { return amplitude_; }
    const SampledSignal* samples() const { return samples_.get(); }

    cdouble eval(double t) const;
    bool analytic() const { return kind_ != Kind::tabulated; }
    std::string name() const;

    /// Scalar multiple of this window (scales eval and the Zak image).
    WindowSpec scaled(double factor) const;

    /// Grid on which this window is well represented at desk scale.
    Grid preferred_grid() const;

    /// Truncation K with sum_{|k|>K} |w(x-ak)| < eps for every x in [0,a).
    /// Bastiaans depends on x: its envelope decays like exp(-2 pi d k) where
    /// d is the distance from x to the nearest half-integer.
    int zak_truncation(double a, double x, double eps) const;

    /// Example-pair windows are defined through their Zak transform; the
    /// direct series over samples converges too slowly to be usable
    /// (gamma_a is not even absolutely summable over the integer shifts).
    bool has_closed_form_zak(double a) const;
    cdouble closed_form_zak(double x, double omega, double a) const;

private:
    Kind kind_ = Kind::gaussian;
    double sigma_ = 1.0;
    double a_ = 1.0;
    double c_psi_ = 1.0;
    double amplitude_ = 1.0;
    std::shared_ptr<const SampledSignal> samples_;
};

/// (2/sigma)^{1/4} exp(-pi t^2 / sigma); unit L2 norm for every sigma > 0.
double gaussian_eval(double sigma, double t);

/// Bastiaans dual window without its constant:
///   e^{pi t^2} * sum_{n > |t|-1/2} (-1)^n e^{-pi (n+1/2)^2},
/// summed with combined exponents so no factor overflows.
double bastiaans_eval_unit(double t, int n_terms = 40);
double bastiaans_eval(double c_psi, double t, int n_terms = 40);

/// Edge profile t^{1/4} (1-t)^{1/4} on [0,1].
double example4_profile(double t);

/// g_a(t) = int_0^{1/a} profile(a w) e^{2 pi i w t} dw, graded quadrature.
cdouble example4_g_eval(double a, double t);
/// gamma_a(t) = int_0^{1/a} e^{2 pi i w t} / profile(a w) dw; the integrable
/// w^{-1/4}-type endpoints are removed by the substitution w = u^4.
cdouble example4_gamma_eval(double a, double t);

/// Frequency-side squared norms (Plancherel): ||g_a||^2 and ||gamma_a||^2.
double example4_g_norm2(double a);
double example4_gamma_norm2(double a);

/// C_psi making Z_1 psi * conj(Z_1 phi) = 1 at the node (0.25, 0).
double calibrate_bastiaans_constant();

SampledSignal sample(const WindowSpec& w, const Grid& grid);

/// Plot table for the example pair: t in [-8, 8] with 1601 samples. Shared
/// by the CLI figure bundle and the acceptance checks.
struct Example4Figure {
    std::vector<double> t;
    std::vector<cdouble> g;
    std::vector<cdouble> gamma;
};
Example4Figure example4_figure(double a);

} // namespace gaborpair
