"""Exact computations in rings of genus-zero stable maps.

Thin Python face of the C++ workbench: named ring presentations, exact
graded dimension tables, blow-down schedules, and the verification suites.
"""

try:
    from ._stablemaps import (  # installed layout: extension inside the package
        ConventionError,
        WorkbenchError,
        hilbert,
        invariant_hilbert,
        ring_json,
        schedule_json,
        suites,
        verify,
    )
except ImportError:  # in-tree layout: extension next to the build directory
    from _stablemaps import (
        ConventionError,
        WorkbenchError,
        hilbert,
        invariant_hilbert,
        ring_json,
        schedule_json,
        suites,
        verify,
    )

__all__ = [
    "ConventionError",
    "WorkbenchError",
    "hilbert",
    "invariant_hilbert",
    "ring_json",
    "schedule_json",
    "suites",
    "verify",
]
