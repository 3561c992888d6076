from borcherds.enriques import Method
from borcherds.management.base import BorcherdsCommand
from borcherds.pipeline import Pipeline

STAGES = {
    "walls": "dy-walls",
    "faces": "faces",
    "curves": "curves",
    "fibrations": "fibrations",
    "rdp": "rdp",
    "relations": "relations",
    "vinberg-count": "vinberg-count",
    "witnesses": "witnesses",
}


class Command(BorcherdsCommand):
    help = "Computations on the Enriques surface Y and its chamber D_Y."

    def add_arguments(self, parser):
        parser.add_argument("action", choices=list(STAGES))
        parser.add_argument(
            "--max-degree",
            type=int,
            help=(
                "Largest degree ⟨r, h_Y⟩ of rational curves "
                "(default: settings.MAX_CURVE_DEGREE)."
            ),
        )
        parser.add_argument(
            "--method",
            choices=[method.value for method in Method],
            help="How to find rational curves; by default the sieve for small degrees.",
        )

    def handle(self, *args, **options):
        pipeline = Pipeline(options.get("max_degree"), options.get("method"))
        stage = STAGES[options["action"]]
        result = pipeline.run(stage)
        self.write_checks(result.checks, options["verbosity"])
        if options["verbosity"] > 1:
            self.write_record(result.record)
        self.write_json(options, stage, result.record)

    def write_record(self, record):
        for key, value in record.items():
            if isinstance(value, dict):
                self.stdout.write(f"{key}:")
                for k, v in value.items():
                    self.stdout.write(f"    {k}: {v}")
            elif isinstance(value, list):
                self.stdout.write(f"{key}: {len(value)} entries")
            else:
                self.stdout.write(f"{key}: {value}")
