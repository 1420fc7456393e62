"""Arithmetic in K = Q(w) and cube classes over Q and K."""
from .cubeclass import (Place, PrecisionError, SUnitCubeBasis, k_class, k_places, local_cube_class,
                        norm_kernel_subspace, q_class, q_place, sunit_cube_basis)
from .eisenstein import (OMEGA, PI3, SQRT_M3, UNITS, EisensteinInt, KNumber, eis_factor, is_primary,
                         primary_associate, split_prime)
from .f3 import in_span, nullspace3, rank3
from .padic import nonsquare_classes, padic_sqrt, val

__all__ = [
    "Place", "PrecisionError", "SUnitCubeBasis", "k_class", "k_places", "local_cube_class",
    "norm_kernel_subspace", "q_class", "q_place", "sunit_cube_basis",
    "OMEGA", "PI3", "SQRT_M3", "UNITS", "EisensteinInt", "KNumber", "eis_factor", "is_primary",
    "primary_associate", "split_prime", "in_span", "nullspace3", "rank3",
    "nonsquare_classes", "padic_sqrt", "val",
]
