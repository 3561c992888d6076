from borcherds.conf import settings
from borcherds.data import load_matrices
from borcherds.enriques import EnriquesSurface
from borcherds.groups import CosetTable, entropy_search
from borcherds.lattice import Isometry
from borcherds.management.base import BorcherdsCommand


class Command(BorcherdsCommand):
    help = "Search random words in kernel generators of ρ for small Salem numbers."

    def add_arguments(self, parser):
        parser.add_argument(
            "--generators",
            metavar="FILE",
            help=(
                "Kernel generators written by 'group kernel-gens'; computed when "
                "omitted."
            ),
        )
        parser.add_argument(
            "--kernel-size",
            type=int,
            default=60,
            help="How many kernel generators to compute when --generators is omitted.",
        )
        parser.add_argument(
            "--degree",
            type=int,
            action="append",
            help="Only report this Salem degree; may be repeated.",
        )
        parser.add_argument(
            "--budget", type=int, default=10_000, help="Number of random words."
        )
        parser.add_argument(
            "--max-length",
            type=int,
            help="Longest word (default: settings.ENTROPY_MAX_WORD_LENGTH).",
        )

    def handle(self, *args, **options):
        surface = EnriquesSurface.load()
        if options.get("generators"):
            generators = {
                label: Isometry(surface.lattice, m)
                for label, m in load_matrices(options["generators"]).items()
            }
        else:
            table = CosetTable(surface.aut_generators())
            kernel = table.kernel_generators(options["kernel_size"])
            generators = {"·".join(k.word): k.element for k in kernel}
        labels = {label: f"k{i}" for i, label in enumerate(sorted(generators))}
        best = entropy_search(
            {labels[label]: g for label, g in generators.items()},
            options["budget"],
            seed=settings.SEED,
            max_length=options.get("max_length"),
            degrees=options.get("degree"),
        )
        words = {short: label for label, short in labels.items()}
        record = {}
        for degree, found in best.items():
            report = found.report
            self.stdout.write(
                f"degree {degree}: λ = {report.truncated(4)}  "
                f"s(t) = {list(report.salem)}"
            )
            record[str(degree)] = {
                "lambda": report.truncated(6),
                "salem": list(report.salem),
                "word": [words[letter] for letter in found.word],
            }
        self.write_json(options, "entropy", record)
