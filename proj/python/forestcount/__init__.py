"""Exact rooted spanning forest counts for simple graphs."""

from ._core import (
    ConsistencyError,
    DomainError,
    FormatError,
    Graph,
    InputError,
    LimitError,
    census_evaluate,
    count_rooted_forests,
    count_signed_forests,
    det,
    eigenvalues,
    enumerate_forests,
    forest_polynomial,
    from_spec,
    laplacian,
    parse_edge_list,
    poincare_scan,
    product_formula,
    pseudo_determinant,
    serialize_edge_list,
    spanning_tree_count,
    verify_cauchy_binet,
)

__all__ = [name for name in dir() if not name.startswith("_")]
