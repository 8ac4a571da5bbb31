"""Ordered enumeration of bounded-size solutions with FPT delay.

Thin wrapper around the compiled _enumfpt extension. Every function returns
solutions in non-decreasing size order; mode="min" restricts the output to
the inclusion-minimal family.
"""

try:
    from ._enumfpt import (  # noqa: F401
        EnumError,
        chordal_completion,
        closest_string,
        cluster_editing,
        min_ones,
        strong_backdoors,
        triangle_deletion,
        weak_backdoors,
    )
except ImportError:  # build-tree layout: extension next to the package
    from _enumfpt import (  # noqa: F401
        EnumError,
        chordal_completion,
        closest_string,
        cluster_editing,
        min_ones,
        strong_backdoors,
        triangle_deletion,
        weak_backdoors,
    )

__all__ = [
    "EnumError",
    "chordal_completion",
    "closest_string",
    "cluster_editing",
    "min_ones",
    "strong_backdoors",
    "triangle_deletion",
    "weak_backdoors",
]
