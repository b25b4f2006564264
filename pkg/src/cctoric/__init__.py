"""Exact coherent-constructible computations for toric fans.

Subpackages: exact polyhedral geometry, the character poset and its formal
complexes, Cech presentations of equivariant bundles, microlocal analysis
(singular support, devissage), Euler-convolution calculus, and a cellular
sheaf oracle used for cross-validation.
"""

__version__ = "0.1.0"
