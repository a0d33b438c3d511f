"""Exact arithmetic for even positive-definite rank-2 lattices.

Reduction and equivalence of binary quadratic forms, class groups of
imaginary quadratic orders via grid multiplication, genus tests, and
conjugation certificates for the built-in catalog of lattice pairs.
"""

from ._core import (  # noqa: F401
    BQForm,
    __version__,
    act,
    class_group,
    compose,
    conductor,
    conjugation_certificate,
    content,
    discriminant,
    equivalent,
    find_candidate_pairs,
    galois_act,
    genus_classes,
    genus_report,
    genus_size,
    grid_from_form,
    inverse,
    is_reduced,
    j_invariant,
    norm_form,
    parse_form,
    primitive_part,
    principal_form,
    properly_equivalent,
    reduce,
    reduced_forms,
    represent_coprime,
    same_genus,
    scale,
    split_discriminant,
    verify_row,
    verify_table,
    zariski_table,
    zariski_table_csv,
)
