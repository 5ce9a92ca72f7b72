# carlitz/management/commands/_base.py
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError, CommandParser

from core.exceptions import CarlitzLabError, ConfigurationError
from core.logging import get_logger
from core.logging.logger import ROOT_LOGGER

from ...config import (
    IntRange,
    OutputFormat,
    RunConfig,
    RunFamily,
    parse_flavor,
    parse_methods,
)
from ...serialization import Record, render_records

logger = get_logger("carlitz_lab.carlitz.commands")

EXIT_USAGE = 1
EXIT_COMPUTATION = 2
EXIT_SELFCHECK = 3

METHOD_CHOICES = ["series", "composition", "binomial", "stirling", "quotient", "all"]
FLAVOR_CHOICES = ["complete", "assoc", "associated", "restricted"]


class LabCommandParser(CommandParser):
    """Parser whose usage errors exit with status 1"""

    def error(self, message):
        if self.called_from_command_line:
            self.print_usage(sys.stderr)
            self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")
        raise CommandError(f"Error: {message}", returncode=EXIT_USAGE)


def parse_modulus(text: Optional[str]) -> tuple:
    if not text:
        return ()
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        message = f"--modulus expects comma-separated integers, got {text!r}"
        raise ConfigurationError(message) from None


class LabCommand(BaseCommand):
    """Shared options, error translation and output for the lab commands"""

    requires_system_checks = []

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.__class__ = LabCommandParser
        return parser

    def add_field_arguments(self, parser):
        parser.add_argument("--r", type=int, required=True, help="Field order r = p^e")
        parser.add_argument("--p", type=int, help="Characteristic (checked against r)")
        parser.add_argument("--e", type=int, help="Extension degree (checked against r)")
        parser.add_argument(
            "--modulus",
            help="Irreducible modulus for e > 1, coefficients low to high, e.g. 2,2,1",
        )

    def add_output_arguments(self, parser):
        parser.add_argument(
            "--format",
            dest="output_format",
            choices=[str(f) for f in OutputFormat],
            default=str(OutputFormat.TEXT),
            help="Output format",
        )
        parser.add_argument("--output", help="Write to this file instead of stdout")

    def add_stirling_arguments(self, parser):
        parser.add_argument(
            "--flavor", choices=FLAVOR_CHOICES, default="complete", help="Stirling flavor"
        )
        parser.add_argument("--m", type=int, help="Flavor parameter m")

    def handle(self, *args, **options):
        if options.get("verbosity", 1) >= 2:
            logging.getLogger(ROOT_LOGGER).setLevel(logging.DEBUG)
        try:
            text = self.run(**options)
        except ConfigurationError as e:
            raise CommandError(str(e), returncode=EXIT_USAGE) from e
        except CarlitzLabError as e:
            logger.error(f"{type(e).__name__}: {e}")
            raise CommandError(f"{type(e).__name__}: {e}", returncode=EXIT_COMPUTATION) from e
        self.emit(text, options.get("output"))

    def run(self, **options) -> str:
        raise NotImplementedError

    def emit(self, text: str, output: Optional[str]):
        if output:
            Path(output).write_text(text, encoding="utf-8")
            logger.info(f"Wrote {len(text)} characters to {output}")
        else:
            self.stdout.write(text, ending="")

    def build_config(
        self,
        options: dict,
        N_range: IntRange,
        n_range: IntRange,
        k_range: IntRange,
        workers: Optional[int] = None,
    ) -> RunConfig:
        family = RunFamily(options["family"])
        method = options.get("method")
        flavor_name = options.get("flavor") or "complete"
        return RunConfig(
            family=family,
            r=options["r"],
            p=options.get("p"),
            e=options.get("e"),
            modulus=parse_modulus(options.get("modulus")),
            N_range=N_range,
            n_range=n_range,
            k_range=k_range,
            flavor=parse_flavor(flavor_name, options.get("m")),
            methods=parse_methods(method),
            method_given=method is not None,
            output_format=OutputFormat(options["output_format"]),
            output_path=Path(options["output"]) if options.get("output") else None,
            workers=workers if workers is not None else settings.CARLITZ_LAB_THREADS,
            allow_large=options.get("allow_large", False),
            max_table_n=settings.CARLITZ_LAB_MAX_TABLE_N,
            quotient_max_n=settings.CARLITZ_LAB_QUOTIENT_MAX_N,
        )

    def render(self, config: RunConfig, records: Sequence[Record], single: bool) -> str:
        return render_records(
            records, config.output_format, stirling=config.family.is_stirling, single=single
        )
