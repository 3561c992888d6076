"""
Named comparisons of computed values against the expected-value manifest.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    computed: object

    @property
    def passed(self):
        return self.expected == self.computed

    def as_row(self):
        status = "ok" if self.passed else "FAILED"
        return (self.name, status, self.expected, self.computed)


def format_table(checks):
    rows = [("check", "status", "expected", "computed")] + [
        tuple(str(x) for x in check.as_row()) for check in checks
    ]
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    return "\n".join(
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
        for row in rows
    )
