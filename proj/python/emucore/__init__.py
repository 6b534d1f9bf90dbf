"""Additive graph emulators: construction and exact certification."""

try:
    from ._emucore import (
        Graph,
        bfs_distances,
        build,
        cluster,
        exponent_schedule,
        generate,
        greedy_spanner,
        verify,
    )
except ImportError:  # running against a flat build tree
    from _emucore import (
        Graph,
        bfs_distances,
        build,
        cluster,
        exponent_schedule,
        generate,
        greedy_spanner,
        verify,
    )

__all__ = [
    "Graph",
    "bfs_distances",
    "build",
    "cluster",
    "exponent_schedule",
    "generate",
    "greedy_spanner",
    "verify",
]
