# carlitz/management/commands/compute.py
from ...config import IntRange, RunFamily
from ...services import TableService
from ._base import METHOD_CHOICES, LabCommand, logger


class Command(LabCommand):
    help = "Compute one truncated Bernoulli-/Cauchy-Carlitz or Stirling-Carlitz number"

    def add_arguments(self, parser):
        parser.add_argument("family", choices=[str(f) for f in RunFamily])
        self.add_field_arguments(parser)
        parser.add_argument("--N", type=int, default=0, help="Truncation index N (bc, cc)")
        parser.add_argument("--n", type=int, required=True, help="Index n")
        parser.add_argument("--k", type=int, default=0, help="Column k (stirling1, stirling2)")
        parser.add_argument(
            "--method", choices=METHOD_CHOICES, help="Computation route, or all (bc, cc)"
        )
        self.add_stirling_arguments(parser)
        self.add_output_arguments(parser)

    def run(self, **options) -> str:
        config = self.build_config(
            options,
            N_range=IntRange.single(options["N"]),
            n_range=IntRange.single(options["n"]),
            k_range=IntRange.single(options["k"]),
            workers=1,
        )
        config.validate(single=True)
        records = TableService(config).run()
        logger.debug(f"Computed {len(records)} values for {config.family}")
        return self.render(config, records, single=len(config.methods) == 1)

