"""
frobeval Application Package

Polynomial evaluation over finite fields with exact operation accounting:
- GF(p^m) arithmetic, Frobenius maps and the quadratic subfield split
- Horner baseline and the Frobenius-based (automorphic) evaluation
- Closed-form cost model for picking the decomposition depth
- Reed-Solomon [255,223,33] syndrome pipeline over GF(2^8)
- Command-line harness (eval, cost, bench, syndromes)
"""

__version__ = "1.0.0"
__author__ = "frobeval contributors"
