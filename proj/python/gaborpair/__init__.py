"""Zak-transform analysis of Gabor systems at critical density.

Thin python surface over the C++ core: window evaluators, the theta
symbol, Zak fields as numpy arrays, and the reproducing-partner
coefficient machinery.
"""

try:
    from . import _gaborpair as _core  # wheel layout
except ImportError:
    import _gaborpair as _core  # in-tree build directory on PYTHONPATH

__all__ = [
    "bastiaans_eval",
    "c_coeff",
    "calibrate_bastiaans_constant",
    "column_sums",
    "example4_g_eval",
    "example4_g_norm2",
    "example4_gamma_eval",
    "example4_gamma_norm2",
    "g_series",
    "gaussian_eval",
    "h_factor",
    "mu_fourier",
    "theta_eval",
    "theta_eval_product",
    "vartheta",
    "verify",
    "xi0_eval",
    "zak_field",
    "zak_point",
]

for _name in __all__:
    globals()[_name] = getattr(_core, _name)
del _name, _core
