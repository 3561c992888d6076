from django.core.management.base import CommandError

from borcherds.checks import format_table
from borcherds.exceptions import BorcherdsError
from borcherds.management.base import BorcherdsCommand
from borcherds.pipeline import STAGES, Pipeline, StageResult


class Command(BorcherdsCommand):
    help = "Run every stage in order and compare with the expected values."

    def add_arguments(self, parser):
        parser.add_argument(
            "--stage", choices=list(STAGES), help="Stop after this stage."
        )
        parser.add_argument(
            "--only",
            choices=list(STAGES),
            action="append",
            help="Run only this stage; may be repeated.",
        )
        parser.add_argument(
            "--skip-go10",
            action="store_true",
            help="Leave out the Schreier–Sims run on GO⁺₁₀(2).",
        )

    def handle(self, *args, **options):
        names = list(STAGES)
        if options.get("stage"):
            names = names[: names.index(options["stage"]) + 1]
        if options.get("only"):
            names = [name for name in names if name in options["only"]]
        verbosity = options["verbosity"]
        pipeline = Pipeline(go10=not options.get("skip_go10"))
        results = []
        for name in names:
            try:
                result = pipeline.run(name)
            except BorcherdsError as e:
                result = StageResult(name, error=str(e))
            results.append(result)
            status = "ok" if result.passed else "FAILED"
            self.stdout.write(f"[{status}] {name}")
            if result.error:
                self.stdout.write(f"    {result.error}")
            elif verbosity > 1:
                self.stdout.write(format_table(result.checks))
            elif not result.passed:
                failing = [c for c in result.checks if not c.passed]
                self.stdout.write(format_table(failing))
            rows = [[str(x) for x in check.as_row()] for check in result.checks]
            self.write_json(
                options,
                name,
                {
                    "passed": result.passed,
                    "error": result.error,
                    "checks": rows,
                    "record": result.record,
                },
            )
        failed = [result.name for result in results if not result.passed]
        if failed:
            raise CommandError(f"Stages failed: {', '.join(failed)}.")
