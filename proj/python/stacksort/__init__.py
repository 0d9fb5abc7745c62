"""Stack-sorting preimages, pattern classes and their generating functions."""

from ._core import (
    boolean_catalan_gf,
    catalan_product,
    catalan_series,
    class_fertility,
    contains,
    count_subdiagrams,
    count_t_sortable,
    d_of,
    d_of_oracle,
    descent_refined_closed_form,
    descent_refined_gf,
    descents,
    enumerate_class,
    fertility,
    fertility_by_decomposition,
    hooks_from,
    is_t_stack_sortable,
    kernel_root_av132_231,
    kernel_root_av231_321,
    av231_321_preimage_gf,
    normalize,
    preimages,
    psi,
    run_suite,
    sort_iterate,
    sort_once,
    split_by_hook,
    tail_bound_descents,
    tail_length,
    verify_class_equality,
    verify_composition_identity,
    zeil,
)

__all__ = [name for name in dir() if not name.startswith("_")]
