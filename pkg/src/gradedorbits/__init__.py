"""Orbits of a graded classical group on the degree-2 piece of its Lie algebra.

Exact arithmetic throughout; no third-party dependencies.
"""
from .grading import Box, Family, GradingError, GradingSpec, enumerate_boxes, tau, tau_orbits
from .tableaux import (
    CoefficientFunction,
    DimensionVector,
    RankTableau,
    SymmetricTableau,
    TableauError,
    enumerate_coefficients,
    from_tableau,
    parse_tableau_json,
    theta,
    theta_inv,
    to_tableau,
)
from .orbits import (
    HasseDiagram,
    Orbit,
    OrbitError,
    Partition,
    SplitTag,
    closure_leq,
    dim_g2,
    enumerate_orbits,
    g_conjugate,
    hasse_edges,
    orbit_name_map,
    parity,
)
from .jmrealize import JMTriple, build_jm, verify_jm
from .levi import LeviFactor, Symbol, lambda_profile, levi_blocks, local_system_count, symbols_for_orbit

__version__ = "0.1.0"
