"""ncpforge: exact verification toolkit for noncrossing-partition
combinatorics of well-generated complex reflection groups.

Everything is computed in exact arithmetic (rationals and cyclotomic
numbers); closed-form counts are cross-checked by independent brute-force
enumeration.
"""

from .catalog import GroupSpec, catalog_specs, parse_spec
from .errors import NcpForgeError
from .factorizations import fact_counts, red_count_formula
from .group import ReflectionGroup, build_group
from .hurwitz import hurwitz_orbit, orbit_decomposition
from .ncp import NcpLattice, build_ncp, fuss_catalan
from .parabolic import length2_strata, parabolic_of, table_a1_verify

__version__ = "0.1.0"

__all__ = [
    "GroupSpec",
    "NcpForgeError",
    "NcpLattice",
    "ReflectionGroup",
    "build_group",
    "build_ncp",
    "catalog_specs",
    "fact_counts",
    "fuss_catalan",
    "hurwitz_orbit",
    "length2_strata",
    "orbit_decomposition",
    "parabolic_of",
    "parse_spec",
    "red_count_formula",
    "table_a1_verify",
    "__version__",
]
