import json

from borcherds.data import load_matrices
from borcherds.management.base import BorcherdsCommand
from borcherds.pipeline import Pipeline


class Command(BorcherdsCommand):
    help = (
        "Check or export the lattice S_X, the chamber D_X and the involutions of "
        "the Hessian K3 surface."
    )

    def add_arguments(self, parser):
        parser.add_argument("action", choices=["verify", "export"])
        parser.add_argument(
            "--extra-isometries",
            metavar="FILE",
            help="A JSON file of isometries of S_X to test against the walls of D_X.",
        )

    def handle(self, *args, **options):
        pipeline = Pipeline()
        k3 = pipeline.k3
        match options["action"]:
            case "verify":
                result = pipeline.run("hessian")
                self.write_checks(result.checks, options["verbosity"])
                if options.get("extra_isometries"):
                    extra = load_matrices(options["extra_isometries"])
                    for label, kinds in k3.verify_extra(extra).items():
                        types = ", ".join(kind.value for kind in kinds) or "none"
                        self.stdout.write(
                            f"{label}: adjacent across walls of type {types}"
                        )
                self.write_json(options, "hessian", result.record)
            case "export":
                record = k3.as_dict()
                self.stdout.write(json.dumps(record, indent=2, sort_keys=True))
                self.write_json(options, "hessian", record)
