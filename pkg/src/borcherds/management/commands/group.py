import json
from pathlib import Path

from django.core.management.base import CommandError

from borcherds.checks import Check
from borcherds.data import expected
from borcherds.enriques import EnriquesSurface
from borcherds.groups import (
    CosetTable,
    coxeter_element,
    go10_generators,
    group_order,
    mod2,
    salem_analyze,
)
from borcherds.management.base import BorcherdsCommand


class Command(BorcherdsCommand):
    help = "Orders of groups over F_2 and kernel generators of the reduction modulo 2."

    def add_arguments(self, parser):
        parser.add_argument(
            "action", choices=["order-51840", "order-go10", "coxeter", "kernel-gens"]
        )
        parser.add_argument(
            "--out",
            metavar="FILE",
            help="Where kernel-gens writes the generators, as {word: matrix} JSON.",
        )
        parser.add_argument(
            "--limit",
            type=int,
            help="Stop kernel-gens after this many generators.",
        )

    def handle(self, *args, **options):
        manifest = expected()
        groups = manifest["groups"]
        order = groups["aut_image_order"]
        match options["action"]:
            case "order-51840":
                generators = EnriquesSurface.load().aut_generators().values()
                images = [mod2(g) for g in generators]
                checks = [Check("|ρ(aut(Y)·W)|", order, group_order(images))]
                record = {"order": checks[0].computed}
            case "order-go10":
                computed = group_order(go10_generators())
                checks = [Check("|GO⁺₁₀(2)|", groups["go10_order"], computed)]
                record = {"order": checks[0].computed}
            case "coxeter":
                c = coxeter_element()
                c31 = c.power(31)
                report = salem_analyze(c)
                entropy = manifest["entropy"]
                checks = [
                    Check(
                        "order of ρ(c)", groups["coxeter_image_order"], mod2(c).order()
                    ),
                    Check("λ(c)", entropy["lehmer"], report.truncated(6)),
                    Check(
                        "λ(c³¹)", entropy["lehmer_31"], salem_analyze(c31).truncated(4)
                    ),
                    Check("ρ(c³¹) = 1", True, mod2(c31).is_identity()),
                ]
                record = report.as_dict()
            case "kernel-gens":
                if not options.get("out"):
                    raise CommandError("kernel-gens needs --out FILE.")
                surface = EnriquesSurface.load()
                table = CosetTable(surface.aut_generators(), expected_order=order)
                kernel = table.kernel_generators(options.get("limit"))
                document = {
                    "·".join(k.word): [list(row) for row in k.element.matrix]
                    for k in kernel
                }
                Path(options["out"]).write_text(json.dumps(document, indent=1) + "\n")
                trivial = all(mod2(k.element).is_identity() for k in kernel)
                checks = [
                    Check("coset table rows", order, len(table)),
                    Check("generators map to 1", True, trivial),
                ]
                record = {"generators": len(kernel), "out": options["out"]}
        self.write_checks(checks, options["verbosity"])
        self.write_json(options, f"group-{options['action']}", record)
