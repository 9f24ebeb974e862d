"""Exact lozenge tiling counts for hexagons with triangular holes.

Modules: ``lattice`` and ``regions`` (cells and region families),
``dualgraph`` (matching graphs, forced lozenges), ``matcher`` (exact
matching generating functions), ``symmetry`` (symmetric tilings, orbit
graphs, factorization), ``formulas`` (product formulas), ``verify``
(identity checks and sweeps), ``render`` (SVG) and ``cli``.
"""
