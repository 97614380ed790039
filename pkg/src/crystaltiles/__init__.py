"""Combinatorics of canonical-basis parametrizations in type A.

Reduced words of the longest permutation, rhombic tilings of the 2n-gon,
Lusztig data with piecewise-linear transition maps, crystal operators via
crossings, string data and string cones, BZ data (MV polytopes), and the
cluster/potential layer, with built-in cross-verification of each formula
against independent oracles at small rank.
"""

__version__ = "0.1.0"
