"""Exact spectral-symmetry tests for signed graphs."""

from ._core import (
    InputError,
    ResourceLimitError,
    SignedGraph,
    __version__,
    automorphisms,
    base_bicyclic,
    bicyclic_family_membership,
    census,
    char_poly,
    classify,
    construct,
    constructions,
    cycle_sign_vector,
    eigenvalues,
    is_sign_symmetric,
    is_spectrally_symmetric,
    is_weak_automorphism,
    matching_poly,
    numeric_symmetry_check,
    odd_part,
    sachs_coefficients,
    spanning_cycle_criterion,
    suite_names,
    switching_classes,
    two_regular_expansion,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
