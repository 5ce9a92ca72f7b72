# carlitz/management/commands/table.py
from ...config import IntRange, RunFamily
from ...services import TableService
from ._base import METHOD_CHOICES, LabCommand, logger


class Command(LabCommand):
    help = "Tabulate special numbers or Stirling-Carlitz numbers over index ranges"

    def add_arguments(self, parser):
        parser.add_argument("family", choices=[str(f) for f in RunFamily])
        self.add_field_arguments(parser)
        parser.add_argument("--N", default="0", help="Truncation index or range a..b (bc, cc)")
        parser.add_argument("--n", required=True, help="Index range a..b (inclusive)")
        parser.add_argument("--k", default="0", help="Column range a..b (stirling1, stirling2)")
        parser.add_argument("--step", type=int, default=1, help="Step of the n range")
        parser.add_argument(
            "--method", choices=METHOD_CHOICES, help="Computation route, or all (bc, cc)"
        )
        self.add_stirling_arguments(parser)
        parser.add_argument(
            "--workers",
            type=int,
            help="Worker processes (default: CARLITZ_LAB_THREADS)",
        )
        parser.add_argument(
            "--allow-large",
            action="store_true",
            help="Allow n ranges beyond CARLITZ_LAB_MAX_TABLE_N",
        )
        parser.add_argument(
            "--progress", action="store_true", help="Show a progress bar on stderr"
        )
        self.add_output_arguments(parser)

    def run(self, **options) -> str:
        config = self.build_config(
            options,
            N_range=IntRange.parse(options["N"]),
            n_range=IntRange.parse(options["n"], step=options["step"]),
            k_range=IntRange.parse(options["k"]),
            workers=options.get("workers"),
        )
        config.validate()
        service = TableService(config)
        records = service.run(progress=options.get("progress", False))
        logger.info(f"Tabulated {len(records)} {config.family} values over {service.spec}")
        return self.render(config, records, single=False)
