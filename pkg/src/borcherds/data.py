"""
Loading of the constant data files.

Each file is a versioned JSON document in ``settings.DATA_DIR``. The loaders
check shapes and integrality here; the lattice-theoretic invariants are
checked by the modules that build lattices from the data.
"""

import json
import logging
from functools import lru_cache
from pathlib import Path

from borcherds.conf import settings
from borcherds.exceptions import DataError

logger = logging.getLogger(__name__)

VERSION = 1


@lru_cache(maxsize=None)
def _read(path):
    path = Path(path)
    try:
        document = json.loads(path.read_text())
    except FileNotFoundError:
        raise DataError(f"Data file {path} does not exist.")
    except json.JSONDecodeError as e:
        raise DataError(f"Data file {path} is not valid JSON: {e}.")
    if document.get("version") != VERSION:
        raise DataError(
            f"Data file {path} has version {document.get('version')!r}, "
            f"expected {VERSION}."
        )
    logger.debug("Loaded %s", path)
    return document


def read(name):
    return _read(str(Path(settings.DATA_DIR) / f"{name}.json"))


def _require(document, key, name):
    try:
        return document[key]
    except KeyError:
        raise DataError(f"Data file {name}.json has no {key!r} entry.")


def _integers(values, length, what):
    if len(values) != length or not all(isinstance(x, int) for x in values):
        raise DataError(f"{what} must be a list of {length} integers.")
    return tuple(values)


def _integer_matrix(rows, shape, what):
    if len(rows) != shape[0]:
        raise DataError(f"{what} must have {shape[0]} rows, not {len(rows)}.")
    return tuple(_integers(row, shape[1], f"Each row of {what}") for row in rows)


def l10():
    document = read("l10")
    return {
        "basis": tuple(_require(document, "basis", "l10")),
        "gram": _integer_matrix(
            _require(document, "gram", "l10"), (10, 10), "The L10 Gram matrix"
        ),
        "e9": _integers(_require(document, "e9", "l10"), 10, "e9"),
        "e10": _integers(_require(document, "e10", "l10"), 10, "e10"),
        "w10": _integers(_require(document, "w10", "l10"), 10, "w10"),
    }


def leech():
    document = read("leech")
    denominator = _require(document, "denominator", "leech")
    if not isinstance(denominator, int) or denominator == 0:
        raise DataError("The Leech denominator must be a nonzero integer.")
    return {
        "denominator": denominator,
        "basis": _integer_matrix(
            _require(document, "basis", "leech"), (24, 24), "The Leech basis"
        ),
    }


def hessian():
    document = read("hessian")
    basis = tuple(_require(document, "basis", "hessian"))
    if len(basis) != 16:
        raise DataError("The S_X basis must have 16 labels.")
    return {
        "basis": basis,
        "h_Q": _integers(_require(document, "h_Q", "hessian"), 16, "h_Q"),
        "h_X": _integers(_require(document, "h_X", "hessian"), 16, "h_X"),
        "embedding": _integer_matrix(
            _require(document, "embedding", "hessian"), (16, 26), "The embedding matrix"
        ),
        "enriques_involution": _integer_matrix(
            _require(document, "enriques_involution", "hessian"),
            (16, 16),
            "The involution matrix",
        ),
        "plus_basis": _integer_matrix(
            _require(document, "plus_basis", "hessian"), (10, 16), "The S_X+ basis"
        ),
    }


def _walls(document, key):
    walls = _require(document, key, "enriques")
    if len(walls) != 10:
        raise DataError(f"{key} must have 10 entries.")
    return {label: _integers(v, 10, f"{key}[{label}]") for label, v in walls.items()}


def enriques():
    document = read("enriques")
    return {
        "h_Y": _integers(_require(document, "h_Y", "enriques"), 10, "h_Y"),
        "outer_walls": _walls(document, "outer_walls"),
        "inner_walls": _walls(document, "inner_walls"),
        "curve_c0": _integers(
            _require(document, "curve_c0", "enriques"), 10, "curve_c0"
        ),
        "fibration_f": _integers(
            _require(document, "fibration_f", "enriques"), 10, "fibration_f"
        ),
    }


def expected():
    """The manifest of expected values, read from ``settings.EXPECTED_FILE``."""
    return _read(str(settings.EXPECTED_FILE))


def load_matrices(path):
    """A JSON file holding a list of integer matrices, or ``{"label": matrix}``."""
    try:
        document = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise DataError(f"Cannot read matrices from {path}: {e}.")
    if isinstance(document, list):
        document = {str(i): m for i, m in enumerate(document)}
    if not isinstance(document, dict):
        raise DataError(f"{path} must hold a list or an object of matrices.")
    result = {}
    for label, rows in document.items():
        n = len(rows)
        result[label] = _integer_matrix(rows, (n, n), f"Matrix {label} in {path}")
    return result
