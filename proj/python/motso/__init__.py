"""Mod-2 cohomology of BO_n and BSO_n: weight filtrations, Milnor operations,
and the kernel of the realization map, computed degree by degree."""

from ._core import (
    __version__,
    dims,
    kernel_basis,
    kernel_closed_form,
    kernel_table,
    qop,
    qop_so,
    rank,
    solve,
    verify_milnor_laws,
    verify_theorem,
    verify_wilson,
    weight,
    wilson_basis,
)

__all__ = [
    "__version__",
    "dims",
    "kernel_basis",
    "kernel_closed_form",
    "kernel_table",
    "qop",
    "qop_so",
    "rank",
    "solve",
    "verify_milnor_laws",
    "verify_theorem",
    "verify_wilson",
    "weight",
    "wilson_basis",
]
