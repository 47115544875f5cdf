#pragma once

#include <complex>
#include <vector>

#include "gaborpair/gabor.hpp"
#include "gaborpair/report.hpp"
#include "gaborpair/signal.hpp"

namespace gaborpair {

struct PartnerConfig {
    int lattice_radius = 64;  // default truncation for (k,l) sums
    int series_terms = 8;     // G_k partial-sum length, tail < 1e-15
    double c_psi = 1.0;       // Bastiaans constant entering xi0 and c
    double tail_eps = 1e-9;   // target for adaptive truncations

    /// Config with the calibrated Bastiaans constant.
    static PartnerConfig calibrated();
};

/// G_k = sum_{n>=0} (-1)^n e^{-pi (n^2 + 2|k|n + n + 1/4)}; approaches
/// e^{-pi/4} from below in the even-term envelope.
double g_series(int k, int terms = 8);

/// H_k = sgn(k) (1 - e^{-2 pi |k|}) G_k, odd in k; throws for k = 0.
double h_factor(int k);

/// F(mu_k)[l]: G_0 delta_0[l] for k = 0, else (-1)^{k+l} H_k / (2 pi (k+il)).
cdouble mu_fourier(int k, int l);

/// xi0[k,l] = <box, T_k M_l psi> = F(g mu_k)[l] with g = C_psi e^{pi t^2}.
/// Evaluated through the stable form e^{-pi|k|} I_k[l] so no factor
/// overflows; panel counts follow the oscillation/decay rate.
cdouble xi0_eval(int k, int l, const PartnerConfig& cfg);

/// Independent route: direct quadrature of the Bastiaans series against the
/// box, int_{-1/2}^{1/2} psi(t-k) e^{-2 pi i l t} dt times the phase.
cdouble xi0_bastiaans_oracle(int k, int l, const PartnerConfig& cfg);

/// Envelope constant for the decay bound |xi0[k,l]| <= C / (2 pi (1+|k|)),
/// computed from the series estimate, not assumed.
double xi0_envelope_constant(const PartnerConfig& cfg);

/// Closed form of sum_l (-1)^{k+l} (k+il)^{-1} e^{2 pi i l t} on (-1/2,1/2):
/// the geometric resummation (-1)^k 2 pi sgn(k) e^{-pi|k|} e^{-2 pi k t}
/// / (1 - e^{-2 pi |k|}). Partial sums of the series converge only like
/// 1/L, so this is the production path; its coefficients are re-checked by
/// quadrature in beta_roundtrip.
cdouble h_inverse_closed_form(int k, double t);

/// Correction coefficients: c[0,l] = 0 and, for k != 0,
///   c[k,l] = -(2 pi)^{-1} sgn(k) e^{-pi/4} F(F^{-1}(h_k) g)[l].
/// The leading sign makes the corrected columns square-summable; with the
/// opposite sign the c-term doubles the slowly decaying part instead of
/// cancelling it and every corrected column diverges.
cdouble c_coeff(int k, int l, const PartnerConfig& cfg);

/// beta[k,l] = 2 pi (-1)^{k+l} F(F^{-1}(c[k,.])/g)[l] (k+il), reconstructed
/// by quadrature round trips; equals -sgn(k) e^{-pi/4} for the shipped c.
cdouble beta_roundtrip(int k, int l, const PartnerConfig& cfg);

/// xi_{k,l}[n,m] = xi0[n-k, m-l] + (corrected ? (-1)^{n+m} c[k,l] : 0).
cdouble xi_entry(int k, int l, int n, int m, bool corrected, const PartnerConfig& cfg);

/// Read-only quadrant cache of xi0 and c over |k|,|l| <= radius, built once.
/// Uses the symmetries xi0[-k,-l] = xi0[k,l], xi0[k,-l] = conj(xi0[k,l]).
class XiTable {
public:
    XiTable(int k_max, int l_max, const PartnerConfig& cfg);
    cdouble xi0(int k, int l) const;
    cdouble c(int k, int l) const;
    cdouble xi_entry(int k, int l, int n, int m, bool corrected) const;
    int k_max() const { return k_max_; }
    int l_max() const { return l_max_; }

private:
    int k_max_, l_max_;
    double c_psi_;
    std::vector<cdouble> q_;      // Q(k,l) on the quadrant k,l >= 0
    std::vector<double> g_;       // G_k
    cdouble q_at(int k, int l) const;
};

/// Materialized column: the entries xi_{k,l}[n,m] over |k|,|l| <= radius
/// for one target index (n,m).
struct XiColumn {
    int n = 0, m = 0;
    int radius = 0;
    bool corrected = false;
    std::vector<cdouble> entries; // (2R+1)^2 row-major, k outer

    cdouble at(int k, int l) const {
        return entries[static_cast<size_t>(k + radius) * (2 * radius + 1) +
                       static_cast<size_t>(l + radius)];
    }
    double sum_squares() const;
};
XiColumn build_xi_column(int n, int m, int radius, bool corrected, const XiTable& table);

/// T_R(n,m) = sum_{|k|,|l|<=R} |xi_{k,l}[n,m]|^2.
double column_sum(int n, int m, int R, bool corrected, const XiTable& table);

struct ColumnSumProfile {
    int n = 0, m = 0;
    bool corrected = false;
    std::vector<int> radii;
    std::vector<double> sums;
    double log_slope = 0.0;     // beta of T ~ alpha + beta ln R
    double fit_residual = 0.0;  // relative to centred data
};
ColumnSumProfile column_sum_profile(int n, int m, const std::vector<int>& radii,
                                    bool corrected, const XiTable& table);

/// Index shift S_{k,l} c[n,m] = c[n-k, m-l]; entries leaving the stored box
/// come from the sequence's generator, never zero fill.
LatticeSeq index_shift(const LatticeSeq& seq, int k, int l);

/// <f, psi_{n,m}> = sum_{|k|,|l|<=R} xi_{k,l}[n,m] <f, gamma_{k,l}>, the
/// partner analysis coefficient through the box orthonormal basis.
cdouble partner_coeff(const SampledSignal& f, int n, int m, int R,
                      const PartnerConfig& cfg, const XiTable& table);

/// Finite combination sum a_i gamma_{k_i, l_i} from the dense class M.
struct BoxCombo {
    struct Term { int k, l; cdouble amp; };
    std::vector<Term> terms;
    cdouble ip(const BoxCombo& other) const; // exact, by orthonormality
};

/// Partial sums of sum_{|n|,|m|<=R} <f, psi_{n,m}> <phi_{n,m}, h> against
/// <f,h> for radii R; the errors must decrease and end below the stated
/// tolerance.
Report weak_identity_check(const BoxCombo& f, const BoxCombo& h,
                           const std::vector<int>& radii, const PartnerConfig& cfg,
                           const XiTable& table, double final_tolerance = 0.02);

/// The corrected/uncorrected contrast: uncorrected column sums fit a
/// positive log slope, corrected ones have vanishing tails, and |xi0|
/// decays along rings. Radii default to {32,64,128,256}.
Report shift_invariance_demo(const PartnerConfig& cfg,
                             const std::vector<int>& radii = {32, 64, 128, 256});

/// <phi_{n,m}, gamma_{k,l}> by panel quadrature over the box cell.
cdouble gaussian_box_overlap(int n, int m, int k, int l);

} // namespace gaborpair
