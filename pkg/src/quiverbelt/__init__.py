"""quiverbelt: exact mutation of rank-2/3 quivers with cosine weights.

Subpackages cover exact real-cyclotomic arithmetic (cycfield, intpoly),
exchange matrices and their classification (exmatrix), the rank-2 sector
model (rank2), geometric seeds in the plane and on the sphere (seedgeom),
exchange-graph enumeration and lattice reports (exgraph), and a CLI (cli).
"""

from quiverbelt.cycfield import FieldElem, GaloisMap, cos_multiple, sin_ratio
from quiverbelt.intpoly import IntPoly

__version__ = "0.1.0"

__all__ = [
    "FieldElem",
    "GaloisMap",
    "IntPoly",
    "cos_multiple",
    "sin_ratio",
    "__version__",
]
