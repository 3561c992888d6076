"""
Entropies of elements of the kernel of ``ρ``.

A random search over words in kernel generators, keeping for every Salem
degree the element with the smallest spectral radius found. Runs are
reproducible from the seed; with several jobs, worker ``i`` uses the seed
``seed + i`` and an equal share of the budget.
"""

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from borcherds import conway
from borcherds.conf import settings
from borcherds.groups.salem import salem_analyze
from borcherds.lattice import Isometry

logger = logging.getLogger(__name__)


def coxeter_element():
    """``c = s_{e1}⋯s_{e10}``, the product of the reflections of the Vinberg chamber."""
    lattice = conway.l10()
    result = lattice.identity()
    for r in conway.vinberg_roots():
        result = result @ lattice.reflection(r)
    return result


@dataclass(frozen=True)
class Found:
    word: tuple
    report: object

    @property
    def key(self):
        return self.report.spectral_radius[0], self.word


def random_word(rng, letters, max_length):
    """A word of geometrically distributed length ``>= 1``, at most ``max_length``."""
    length = 1
    while length < max_length and rng.random() < 0.9:
        length += 1
    return tuple(rng.choice(letters) for _ in range(length))


def _search(task):
    matrices, budget, seed, max_length, degrees = task
    lattice = conway.l10()
    generators = {
        label: Isometry(lattice, m, check=False) for label, m in matrices.items()
    }
    letters = sorted(generators)
    rng = random.Random(seed)
    best = {}
    for _ in range(budget):
        word = random_word(rng, letters, max_length)
        g = lattice.identity()
        for letter in word:
            g = g @ generators[letter]
        report = salem_analyze(g)
        if not report.degree or (degrees and report.degree not in degrees):
            continue
        found = Found(word, report)
        current = best.get(report.degree)
        if current is None or found.key < current.key:
            best[report.degree] = found
    return best


def entropy_search(
    generators, budget, seed=None, max_length=None, degrees=None, jobs=None
):
    """
    ``{Salem degree: Found}`` with the smallest ``λ`` among ``budget``
    random words in ``generators``, a dict ``{label: Isometry}``.
    """
    seed = settings.SEED if seed is None else seed
    max_length = settings.ENTROPY_MAX_WORD_LENGTH if max_length is None else max_length
    jobs = settings.JOBS if jobs is None else jobs
    degrees = frozenset(degrees or ())
    matrices = {label: g.matrix for label, g in generators.items()}
    jobs = max(1, min(jobs, budget))
    shares = [budget // jobs + (1 if i < budget % jobs else 0) for i in range(jobs)]
    tasks = [
        (matrices, share, seed + i, max_length, degrees)
        for i, share in enumerate(shares)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_search, tasks))
    else:
        results = [_search(task) for task in tasks]
    best = {}
    for result in results:
        for degree, found in result.items():
            if degree not in best or found.key < best[degree].key:
                best[degree] = found
    for degree, found in sorted(best.items()):
        logger.info("Salem degree %d: λ = %s", degree, found.report.truncated(4))
    return dict(sorted(best.items()))
