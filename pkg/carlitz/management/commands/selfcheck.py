# carlitz/management/commands/selfcheck.py
import json

from django.conf import settings
from django.core.management.base import CommandError

from ...selfcheck import DEFAULT_SEED, CheckLevel, SelfCheck
from ._base import EXIT_SELFCHECK, LabCommand


class Command(LabCommand):
    help = "Run the golden values and cross-route sweeps"

    def add_arguments(self, parser):
        parser.add_argument(
            "--level",
            choices=[str(level) for level in CheckLevel],
            default=str(CheckLevel.FAST),
            help="fast: worked examples and small sweeps; full: the complete sweeps",
        )
        parser.add_argument(
            "--check",
            action="append",
            dest="checks",
            help="Run only this check (repeatable)",
        )
        parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Random seed")
        parser.add_argument(
            "--format",
            dest="output_format",
            choices=["text", "json"],
            default="text",
            help="Report format",
        )
        parser.add_argument("--output", help="Write the report to this file")
        parser.add_argument(
            "--progress", action="store_true", help="Show a progress bar on stderr"
        )

    def handle(self, *args, **options):
        super().handle(*args, **options)
        if not self.report.passed:
            names = ", ".join(result.name for result in self.report.failed)
            raise CommandError(f"selfcheck failed: {names}", returncode=EXIT_SELFCHECK)

    def run(self, **options) -> str:
        check = SelfCheck(
            CheckLevel(options["level"]),
            seed=options["seed"],
            quotient_max_n=settings.CARLITZ_LAB_QUOTIENT_MAX_N,
        )
        self.report = check.run(options.get("checks"), progress=options.get("progress", False))
        if options["output_format"] == "json":
            return json.dumps(self.report.to_dict(), indent=2) + "\n"
        return self.report.to_text()
