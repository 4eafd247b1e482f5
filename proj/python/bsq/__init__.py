"""Forward and inverse spectral maps for the third-order periodic operator
of the good Boussinesq equation."""

try:
    # Installed layout: the extension lives inside the package (bsq/_bsq.so).
    from ._bsq import (
        CoefficientPair,
        EigenvalueRecord,
        InversionReport,
        NumericError,
        SpectralData,
        SpectralEntry,
        TrigSeries,
        UsageError,
        eigenvalue,
        f_apply,
        f_inverse,
        forward,
        h_cn,
        h_sn,
        invert,
        random_in_ball,
    )
except ImportError:
    # Build-tree layout: the extension sits next to the package on sys.path.
    from _bsq import (
        CoefficientPair,
        EigenvalueRecord,
        InversionReport,
        NumericError,
        SpectralData,
        SpectralEntry,
        TrigSeries,
        UsageError,
        eigenvalue,
        f_apply,
        f_inverse,
        forward,
        h_cn,
        h_sn,
        invert,
        random_in_ball,
    )

__all__ = [
    "CoefficientPair",
    "EigenvalueRecord",
    "InversionReport",
    "NumericError",
    "SpectralData",
    "SpectralEntry",
    "TrigSeries",
    "UsageError",
    "eigenvalue",
    "f_apply",
    "f_inverse",
    "forward",
    "h_cn",
    "h_sn",
    "invert",
    "random_in_ball",
]
