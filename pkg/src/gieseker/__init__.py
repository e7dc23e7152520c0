"""Exact verification toolkit for moduli of framed sheaves on surfaces.

Generating functions of Hilbert schemes and rank-two moduli, the oscillator
algebra acting on their cohomology, Schubert calculus for the excess
intersections behind its constants, and linear algebra of commuting
nilpotent pairs.  All arithmetic is exact.
"""

__version__ = "0.1.0"
