"""Exact numerical range of 2x2 complex matrices.

W(A) = {<Ax, x> : |x| = 1} is an elliptical disk (possibly a point, a
segment or a round disk) with the eigenvalues of A as foci. This package
computes it in closed form, cross-checks it through a unitary canonical
form, and verifies it against a seeded Monte-Carlo oracle.
"""
from .core import (
    E1,
    E2,
    IDENTITY,
    ZERO,
    Matrix2C,
    SphereVector,
    UnitVector2,
    adjoint,
    apply_plane_transform,
    det,
    diag,
    eigenvalues2,
    frobenius_norm,
    hopf_map,
    mat_mul,
    rayleigh,
    scalar_matrix,
    trace,
)
from .kernels import BACKEND
from .numrange import (
    CanonicalForm,
    FactorDecomposition,
    Kind,
    PlaneTransform,
    RangeShape,
    boundary_point,
    boundary_points,
    canonicalize,
    center,
    contains,
    degeneracy_threshold,
    ellipse_support,
    factor_decomposition,
    numerical_range,
    semi_axes,
    support_value,
)
from .sampling import (
    SampleReport,
    convex_hull_2d,
    polygon_area,
    sample_range,
    sample_unit_array,
    sample_unit_vectors,
    verify_inclusion,
)

__version__ = "0.1.0"
