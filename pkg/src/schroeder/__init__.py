"""Weighted small and large Schroeder numbers, Catalan and Narayana
triangles, the trees and lattice paths they count, and the bijections
between them.  All sequence values are exact rationals.
"""
from .numeric import binomial, format_rational, parse_rational
from .triangles import (
    catalan,
    large_schroeder_entry,
    narayana_entry,
    small_schroeder_entry,
)
from .sequences import (
    parity_split,
    s_minus_half,
    sbar_d,
    sd_definition,
    sd_recurrence,
    sd_reflection,
)
from .series import narayana_series, sd_series
from .objects import (
    LatticePath,
    PathClass,
    PlaneTree,
    colored_dyck_count,
    enumerate_dyck_paths,
    enumerate_large_schroeder_paths,
    enumerate_schroeder_trees,
    enumerate_small_schroeder_paths,
    path_statistics,
    peak_parity_counts,
    weighted_catalan_K,
    weighted_catalan_V,
)
from .bijections import alpha, beta, beta_inverse, gamma, psi, psi_inverse, psi_prime, psi_prime_inverse

__version__ = "0.1.0"
