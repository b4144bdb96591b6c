"""Left braces of order p, p^2 and p^3: catalog, verification, isomorphism
classes, enumeration and Yang-Baxter solutions."""

from ._core import (
    AbelianGroup,
    Brace,
    BraceError,
    CatalogError,
    DocumentError,
    EnumerationError,
    ShapeError,
    are_isomorphic,
    catalog,
    classify_catalog,
    entry,
    entry_info,
    enumerate_braces,
    epsilon,
    extension_from_brace_rebuild,
    from_json,
    selftest,
    to_json,
    verify_brace,
    verify_yang_baxter,
    ybe_solution,
)

__all__ = [
    "AbelianGroup",
    "Brace",
    "BraceError",
    "CatalogError",
    "DocumentError",
    "EnumerationError",
    "ShapeError",
    "are_isomorphic",
    "catalog",
    "classify_catalog",
    "entry",
    "entry_info",
    "enumerate_braces",
    "epsilon",
    "extension_from_brace_rebuild",
    "from_json",
    "selftest",
    "to_json",
    "verify_brace",
    "verify_yang_baxter",
    "ybe_solution",
]
