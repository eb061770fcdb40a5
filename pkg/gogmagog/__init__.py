"""
Gog, Magog and GOGAm triangles.

Gelfand-Tsetlin triangles and their Gog, Magog and GOGAm subfamilies:
enumeration of triangles, trapezoids and pentagons, the Schützenberger
involution, bijections between Gog and GOGAm trapezoids and pentagons,
inversion statistics and the Z(n, x, y) generating polynomial, plus a
verification harness driven from the command line.
"""

__version__ = "0.1.0"
