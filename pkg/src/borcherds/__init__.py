"""
Borcherds: the chamber method for even hyperbolic lattices, in exact arithmetic.

I have an even hyperbolic lattice ``S`` with a primitive embedding into the
even unimodular lattice ``L26``::

    from borcherds.conway import induced_chamber
    from borcherds.hessian import HessianK3

    k3 = HessianK3.load()
    dx = induced_chamber(k3.embedding)

    len(dx.walls)  # 84

The induced chamber comes with its walls, a rational interior point, and a
witness root of ``L26`` for every wall. From there the ``chambers`` module
enumerates faces by exact linear programming, and ``enriques`` carries the
whole computation through for the Enriques surface covered by the general
quartic Hessian K3 surface: rational curves, elliptic fibrations, RDP
configurations, defining relations and the Vinberg-chamber count. The
``groups`` module handles reduction mod 2, group orders, Reidemeister–Schreier
kernels and Salem numbers.

Every number is an exact integer or rational. The ``borcherds`` command runs
any stage, or all of them, and checks the results against a manifest of
expected values.
"""

__version__ = "26.1"
