"""Multi-dimensional DCT/IDCT and sine-cosine composites over a real-input FFT.

All transforms follow the unnormalized cosine-sum conventions of the C++
library: ``idct_1d(dct_1d(x)) == N/2 * x``, ``idct_2d(dct_2d(x)) == N1*N2/4 * x``
and ``idct_3d(dct_3d(x)) == N1*N2*N3/8 * x``.
"""

from ._sdct import (
    ShapeError,
    FormatError,
    amdahl_speedup,
    dct_1d,
    dct_2d,
    dct_2d_rowcol,
    dct_3d,
    dct_4d,
    dct_oracle_1d,
    dct_oracle_2d,
    force_demo_fields,
    idct_1d,
    idct_2d,
    idct_3d,
    idct_idxst_2d,
    idxst_1d,
    idxst_idct_2d,
)

__all__ = [
    "ShapeError",
    "FormatError",
    "amdahl_speedup",
    "dct_1d",
    "dct_2d",
    "dct_2d_rowcol",
    "dct_3d",
    "dct_4d",
    "dct_oracle_1d",
    "dct_oracle_2d",
    "force_demo_fields",
    "idct_1d",
    "idct_2d",
    "idct_3d",
    "idct_idxst_2d",
    "idxst_1d",
    "idxst_idct_2d",
]

__version__ = "1.0.0"
