"""Exact wall enumeration and ample-cone tests for K3^[2]-type lattices."""

from ._core import (
    AMBIENT_RANK,
    PreconditionError,
    ValidationError,
    __version__,
    admissible_square_div,
    ambient_gram,
    basis_labels,
    bb_pair,
    brute_force_walls,
    c2_pair,
    classify_square_div,
    classify_wall,
    detect_isotropic_boundary,
    divisibility,
    dual_class,
    enumerate_walls,
    fujiki_check,
    is_ample,
    lagrangian_solver,
    line_class_of_plane,
    middle_pair,
    nef_threshold,
    picard_gram,
    quad_product,
    report,
    rerun,
    signature_of,
    slice_solutions,
)


def basis_vector(label):
    """Ambient basis vector for a label such as "e1", "E8a_3" or "delta"."""
    v = [0] * AMBIENT_RANK
    v[basis_labels().index(label)] = 1
    return v


__all__ = [name for name in dir() if not name.startswith("_")]
