"""Exact-arithmetic verification of the type-D4 Kleinian GIT construction.

The package implements, over the Gaussian rationals with quadratic extension
towers, the 13-dimensional variety cut out by the three defining equations,
the group action of (C*)^3 x GL2, both stability analyses, the attached
framed-quiver representations, the chart isomorphism with the quiver moduli,
the quaternion stabilizer of the base point, and the small cyclic-group and
S3 companion examples.  Everything is exact: no floating point anywhere.
"""

from .scalars import QI, Field, Scalar, adjoin_sqrt
from .gitcore import (
    Character, Cocharacter, GroupElement, PointHV, act, pair, weight_table,
)
from .equations import in_Zo, j_pairing, omega, residuals, wedge
from .quiver import build_rep, king_stable, preprojective_residual
from .stability import semistable_minus_theta, semistable_theta
from .charts import chart_closure_check, from_quiver_chart, normalize, to_quiver_chart
from .mckay import base_point, connect, stabilizer
from .suites import run_suite

__version__ = "0.1.0"

__all__ = [
    "QI", "Field", "Scalar", "adjoin_sqrt",
    "Character", "Cocharacter", "GroupElement", "PointHV", "act", "pair",
    "weight_table",
    "in_Zo", "j_pairing", "omega", "residuals", "wedge",
    "build_rep", "king_stable", "preprojective_residual",
    "semistable_minus_theta", "semistable_theta",
    "chart_closure_check", "from_quiver_chart", "normalize", "to_quiver_chart",
    "base_point", "connect", "stabilizer",
    "run_suite",
]
