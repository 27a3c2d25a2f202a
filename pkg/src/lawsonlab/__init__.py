"""Numerical differential geometry on the 2-sphere, the radius-2 3-sphere
and SO(3): doubly periodic minimal immersions, the quadratic double cover,
and unit vector fields with linear winding angle.

The package certifies, at desk scale, the geometric identities relating
these objects: local isometry of the double cover, minimality and rigidity
certificates of the immersions, the elliptic-perimeter lower bound for the
area of unit fields, and the correspondence between the two families.
"""

__version__ = "0.1.0"

from .numerics import FiniteDiffSpec, QuadratureSpec, integrate_1d, integrate_2d
from .spheres import Quaternion, SpherePoint2, latlon_to_point, point_from_vector
from .unit_tangent import BundleCurveSample, TangentElement, poincare_index
from .vfields import AngleField, ellipse_length, volume_of_field
from .lawson import LawsonParams, immerse

__all__ = [
    "AngleField",
    "BundleCurveSample",
    "FiniteDiffSpec",
    "LawsonParams",
    "Quaternion",
    "QuadratureSpec",
    "SpherePoint2",
    "TangentElement",
    "ellipse_length",
    "immerse",
    "integrate_1d",
    "integrate_2d",
    "latlon_to_point",
    "poincare_index",
    "point_from_vector",
    "volume_of_field",
]
