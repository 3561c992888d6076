"""
ADE types of configurations of ``(-2)``-vectors.
"""

import math
import re
from collections import Counter

from borcherds import matrices as mx
from borcherds.exceptions import InvariantError, LatticeError

_ORDER = {"E": 0, "D": 1, "A": 2}
_E_ARMS = {(1, 2, 2): 6, (1, 2, 3): 7, (1, 2, 4): 8}
_E_WEYL_ORDERS = {6: 51840, 7: 2903040, 8: 696729600}


def simple_roots(lattice, roots, h):
    """
    The indecomposable elements of a set of positive roots of a negative-definite
    root system, ``h`` pairing positively with all of them.

    Roots are taken by increasing ``⟨r, h⟩``; ``r`` is kept when it pairs
    nonnegatively with every root kept so far.
    """
    ordered = sorted(roots, key=lambda r: (lattice.inner(r, h), r))
    kept = []
    for r in ordered:
        if lattice.inner(r, h) <= 0:
            raise LatticeError(f"{r} is not positive with respect to {h}.")
        if all(lattice.inner(r, s) >= 0 for s in kept):
            kept.append(r)
    return kept


def _components(n, edges):
    neighbours = {i: set() for i in range(n)}
    for i, j in edges:
        neighbours[i].add(j)
        neighbours[j].add(i)
    seen = set()
    for start in range(n):
        if start in seen:
            continue
        stack, component = [start], []
        seen.add(start)
        while stack:
            i = stack.pop()
            component.append(i)
            for j in neighbours[i] - seen:
                seen.add(j)
                stack.append(j)
        yield component, neighbours


def _arm_lengths(center, neighbours):
    arms = []
    for start in neighbours[center]:
        length, previous, current = 1, center, start
        while True:
            following = neighbours[current] - {previous}
            if not following:
                break
            (current, previous) = (next(iter(following)), current)
            length += 1
        arms.append(length)
    return tuple(sorted(arms))


def component_type(component, neighbours):
    n = len(component)
    edges = sum(len(neighbours[i]) for i in component) // 2
    if edges != n - 1:
        raise LatticeError("The configuration is not a forest.")
    branch = [i for i in component if len(neighbours[i]) > 2]
    if not branch:
        return ("A", n)
    if len(branch) > 1 or len(neighbours[branch[0]]) > 3:
        raise LatticeError("The configuration is not of ADE type.")
    arms = _arm_lengths(branch[0], neighbours)
    if arms[:2] == (1, 1):
        return ("D", n)
    if arms in _E_ARMS:
        return ("E", _E_ARMS[arms])
    raise LatticeError(f"The configuration with arms {arms} is not of ADE type.")


def format_type(components):
    counts = Counter(components)
    parts = []
    def order(item):
        (letter, rank), _ = item
        return _ORDER[letter], -rank

    for (letter, rank), k in sorted(counts.items(), key=order):
        parts.append(f"{k if k > 1 else ''}{letter}{rank}")
    return "+".join(parts)


def parse_type(text):
    """``"A3+2A1"`` → ``Counter({("A", 3): 1, ("A", 1): 2})``."""
    counts = Counter()
    if not text:
        return counts
    for part in text.split("+"):
        match = re.fullmatch(r"(\d*)([ADE])(\d+)", part.strip())
        if match is None:
            raise ValueError(f"{part!r} is not an ADE component.")
        counts[(match[2], int(match[3]))] += int(match[1] or 1)
    return counts


def rank_of(text):
    return sum(rank * k for (_, rank), k in parse_type(text).items())


def ade_type(lattice, roots):
    """
    The ADE type of a set of ``(-2)``-vectors with pairwise products 0 or 1,
    as a string such as ``"A3+2A1"``; the empty set has type ``""``.
    """
    return format_type(ade_components(lattice, roots))


def ade_components(lattice, roots):
    roots = list(roots)
    edges = []
    for i, r in enumerate(roots):
        if lattice.norm(r) != -2:
            raise LatticeError(f"{r} is not a (-2)-vector.")
        for j in range(i):
            value = lattice.inner(r, roots[j])
            if value == 1:
                edges.append((i, j))
            elif value != 0:
                raise LatticeError(f"Pairing {value} is not 0 or 1.")
    return [
        component_type(component, neighbours)
        for component, neighbours in _components(len(roots), edges)
    ]


def weyl_group_order(text):
    """``|W(R)|`` for a root system given by its type string."""
    order = 1
    for (letter, rank), k in parse_type(text).items():
        match letter:
            case "A":
                factor = math.factorial(rank + 1)
            case "D":
                factor = 2 ** (rank - 1) * math.factorial(rank)
            case "E":
                factor = _E_WEYL_ORDERS[rank]
        order *= factor**k
    return order


def connected_components(lattice, roots):
    """Split ``roots`` by the graph joining two roots with nonzero product."""
    roots = list(roots)
    edges = [
        (i, j)
        for i in range(len(roots))
        for j in range(i)
        if lattice.inner(roots[i], roots[j])
    ]
    return [
        [roots[i] for i in sorted(component)]
        for component, _ in _components(len(roots), edges)
    ]


def extended_type(lattice, roots):
    """
    The type of a connected extended Dynkin diagram and the multiplicities
    of its nodes in the null vector.

    Returns ``(component, multiplicities)`` with ``component`` a pair such
    as ``("E", 6)`` and ``multiplicities[i]`` the coefficient of
    ``roots[i]``.
    """
    roots = list(roots)
    gram = [[lattice.inner(r, s) for s in roots] for r in roots]
    kernel = mx.integer_left_kernel(gram)
    if len(kernel) != 1:
        raise InvariantError(
            f"{len(roots)} roots span a Gram matrix with a kernel of rank "
            f"{len(kernel)}, not an extended Dynkin diagram."
        )
    null = kernel[0]
    if all(m <= 0 for m in null):
        null = mx.neg(null)
    if any(m <= 0 for m in null):
        raise InvariantError(f"The null vector {null} is not positive.")
    removed = null.index(1)
    components = ade_components(lattice, roots[:removed] + roots[removed + 1:])
    if len(components) != 1:
        raise InvariantError("Removing a simple node leaves a disconnected diagram.")
    return components[0], null
