"""
The stages of the full computation, each returning its checks against the
expected-value manifest together with a JSON-ready record.
"""

import logging
import time
from dataclasses import dataclass, field
from functools import cached_property

from borcherds import conway, data
from borcherds.checks import Check
from borcherds.enriques import (
    EnriquesSurface,
    FaceClassification,
    elliptic_fibrations,
    rational_curves,
    rdp_configurations,
    vinberg_count,
    witnesses,
)
from borcherds.enriques import curves as curve_tools
from borcherds.enriques.fibrations import required_degree, table
from borcherds.groups import (
    coxeter_element,
    go10_generators,
    group_order,
    mod2,
    salem_analyze,
)
from borcherds.groups.f2 import go10_order, l10_form
from borcherds.hessian import HessianK3

logger = logging.getLogger(__name__)


@dataclass
class StageResult:
    name: str
    checks: list = field(default_factory=list)
    record: dict = field(default_factory=dict)
    error: str = ""

    @property
    def passed(self):
        return not self.error and all(check.passed for check in self.checks)


class Pipeline:
    """Shared, lazily computed objects of one run."""

    def __init__(self, max_degree=None, method=None, go10=True):
        self.max_degree = max_degree
        self.method = method
        self.go10 = go10

    @cached_property
    def expected(self):
        return data.expected()

    @cached_property
    def k3(self):
        return HessianK3.load()

    @cached_property
    def surface(self):
        return EnriquesSurface(self.k3, data.enriques())

    @cached_property
    def classification(self):
        return FaceClassification(self.surface)

    @cached_property
    def curves(self):
        return rational_curves(self.surface, self.max_degree, self.method)

    def curves_to(self, degree):
        """``R_d`` for ``d <= degree``, reusing curves already computed far enough."""
        if "curves" in self.__dict__ and max(self.curves, default=0) >= degree:
            return {d: rs for d, rs in self.curves.items() if d <= degree}
        return rational_curves(self.surface, degree)

    def run(self, name):
        function = STAGES[name]
        start = time.perf_counter()
        result = function(self)
        elapsed = time.perf_counter() - start
        logger.info("Stage %s finished in %.1f s", name, elapsed)
        return result


def data_stage(pipeline):
    checks = list(conway.checks())
    expected = pipeline.expected["data"]
    det = pipeline.k3.lattice.det
    checks.append(Check("S_X determinant", expected["sx_determinant"], det))
    singular = l10_form().singular_count()
    checks.append(Check("singular vectors of q on L10/2L10", 2**9 + 2**4, singular))
    return StageResult("data", checks, {"w10": list(conway.w10())})


def hessian_stage(pipeline):
    return StageResult("hessian", list(pipeline.k3.checks()), pipeline.k3.as_dict())


def dy_walls_stage(pipeline):
    surface = pipeline.surface
    return StageResult("dy-walls", list(surface.checks()), surface.as_dict())


def curves_stage(pipeline):
    curves = pipeline.curves
    expected = pipeline.expected["curves"]
    counts = curve_tools.counts(curves)
    checks = [
        Check(f"|R_{d}|", expected.get(str(d), 0), len(rs))
        for d, rs in sorted(curves.items())
    ]
    invariant = curve_tools.is_invariant(curves, pipeline.surface.aut_DY)
    checks.append(Check("R_d is aut(D_Y)-invariant", True, invariant))
    record = {"counts": {str(d): n for d, n in counts.items()}}
    return StageResult("curves", checks, record)


def faces_stage(pipeline):
    classification = pipeline.classification
    rows = classification.table()
    expected = pipeline.expected["faces"]
    checks = [
        Check(f"faces: {key}", expected[key], [rows[dim][key] for dim in sorted(rows)])
        for key in ("outer", "inner", "outer_classes", "inner_classes")
    ]
    ideal = len(classification.ideal_faces())
    checks.append(Check("ideal faces", expected["ideal"], ideal))
    classification.verify_witnesses()
    record = {"table": {str(dim): row for dim, row in rows.items()}}
    return StageResult("faces", checks, record)


def fibrations_stage(pipeline):
    surface, classification = pipeline.surface, pipeline.classification
    curves = pipeline.curves_to(required_degree(surface, classification))
    fibrations = elliptic_fibrations(surface, classification, curves)
    expected = pipeline.expected["fibrations"]
    rows = table(fibrations)
    checks = [
        Check(
            "ideal faces",
            expected["ideal_faces"],
            sum(f.class_size for f in fibrations),
        ),
        Check("classes of fibrations", expected["classes"], len(fibrations)),
        Check(
            "fibration types",
            [(row["full"], row["half"], row["count"]) for row in expected["table"]],
            rows,
        ),
    ]
    record = {
        "table": [
            {"full": full, "half": half, "count": count}
            for full, half, count in rows
        ],
        "fibrations": [
            {
                "f": list(f.f),
                "degree": f.degree,
                "full": f.full,
                "half": f.half,
                "faces": f.class_size,
            }
            for f in fibrations
        ],
    }
    return StageResult("fibrations", checks, record)


def rdp_stage(pipeline):
    counts = rdp_configurations(pipeline.classification)
    expected = pipeline.expected["rdp"]
    checks = [
        Check("RDP-configurations", expected["total"], sum(counts.values())),
        Check("RDP types", expected["table"], counts),
    ]
    return StageResult("rdp", checks, {"table": counts})


def relations_stage(pipeline):
    relations = pipeline.classification.relations()
    surface = pipeline.surface
    kinds = [relation.kind for relation in relations]
    expected = pipeline.expected["relations"]
    checks = [
        Check("squares ḡ(α)²", expected["squares"], kinds.count("square")),
        Check("hexagon relations", expected["hexagons"], kinds.count("hexagon")),
        Check("commuting relations", expected["commuting"], kinds.count("commuting")),
        Check(
            "relators evaluate to 1",
            True,
            all(surface.element(relation.word).is_identity() for relation in relations),
        ),
    ]
    record = {"relations": [{"kind": r.kind, "word": list(r.word)} for r in relations]}
    return StageResult("relations", checks, record)


def vinberg_stage(pipeline):
    result = vinberg_count(pipeline.surface)
    checks = [
        Check(
            "Vinberg chambers in D_Y",
            pipeline.expected["vinberg_count"],
            result.total,
        ),
        Check("2^14·3·5·7·17·31", 2**14 * 3 * 5 * 7 * 17 * 31, result.total),
    ]
    record = {
        "total": result.total,
        "centers": result.centers,
        "interior": result.interior,
        "boundary": dict(result.boundary),
    }
    return StageResult("vinberg-count", checks, record)


def witnesses_stage(pipeline):
    surface = pipeline.surface
    checks = list(witnesses.checks(surface, pipeline.curves_to(5)))
    return StageResult("witnesses", checks, {"curves": list(witnesses.CURVES)})


def groups_stage(pipeline):
    expected = pipeline.expected["groups"]
    surface = pipeline.surface
    images = [mod2(g) for g in surface.aut_generators().values()]
    c = coxeter_element()
    lehmer = salem_analyze(c)
    entropy = pipeline.expected["entropy"]
    checks = [
        Check("|ρ(aut(Y)·W)|", expected["aut_image_order"], group_order(images)),
        Check("order of ρ(c)", expected["coxeter_image_order"], mod2(c).order()),
        Check("λ(c)", entropy["lehmer"], lehmer.truncated(6)),
        Check("λ(c³¹)", entropy["lehmer_31"], salem_analyze(c.power(31)).truncated(4)),
    ]
    if pipeline.go10:
        go10 = expected["go10_order"]
        checks.append(Check("|GO⁺₁₀(2)|", go10, group_order(go10_generators())))
        checks.append(Check("|GO⁺₁₀(2)| formula", go10, go10_order()))
    return StageResult("groups", checks, {"lehmer": lehmer.as_dict()})


STAGES = {
    "data": data_stage,
    "hessian": hessian_stage,
    "dy-walls": dy_walls_stage,
    "curves": curves_stage,
    "faces": faces_stage,
    "fibrations": fibrations_stage,
    "rdp": rdp_stage,
    "relations": relations_stage,
    "vinberg-count": vinberg_stage,
    "witnesses": witnesses_stage,
    "groups": groups_stage,
}
