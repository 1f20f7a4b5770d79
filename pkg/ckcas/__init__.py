"""
ckcas - Casimir invariants of the Cayley-Klein orthogonal algebras

Exact symbolic engine for the enveloping algebra of so_{ω1..ωN}(N+1):
W-symbols, the complete Casimir set, contractions and the Gel'fand
cross-checks.
"""

__version__ = "1.0.0"
__author__ = "ckcas Development Team"
