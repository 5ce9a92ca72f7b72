# carlitz/services.py
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Tuple

from tqdm import tqdm

from core.algebra import FieldSpec
from core.logging import get_logger

from .config import RunConfig, RunFamily
from .context import CarlitzContext
from .serialization import Record, SpecialNumberRecord, StirlingRecord, sort_records
from .special import Method, SpecialNumberCalculator, SpecialNumberQuery
from .stirling import Flavor, StirlingCarlitzValue, stirling_c

logger = get_logger("carlitz_lab.carlitz.services")

# Cells handed to a worker at a time
CHUNK_SIZE = 4

# Fields whose contexts a process keeps alive
CONTEXT_CACHE_SIZE = 8


@dataclass(frozen=True)
class Cell:
    """One table entry to evaluate; N is 0 and method None for Stirling cells"""

    N: int
    n: int
    k: int = 0
    method: Optional[Method] = None

    @property
    def sort_key(self) -> Tuple[int, int, int, int]:
        order = -1 if self.method is None else list(Method).index(self.method)
        return (self.N, self.n, self.k, order)


@dataclass(frozen=True)
class CellJob:
    """Everything a worker process needs, all picklable"""

    family: RunFamily
    spec: FieldSpec
    flavor: Flavor
    quotient_max_n: int
    cell: Cell


@lru_cache(maxsize=CONTEXT_CACHE_SIZE)
def context_for(spec: FieldSpec) -> CarlitzContext:
    """One memo context per field and process"""
    return CarlitzContext(spec)


@lru_cache(maxsize=CONTEXT_CACHE_SIZE)
def calculator_for(quotient_max_n: int) -> SpecialNumberCalculator:
    return SpecialNumberCalculator(quotient_max_n)


def evaluate_cell(job: CellJob) -> Record:
    ctx = context_for(job.spec)
    cell = job.cell
    kind = job.family.stirling_kind
    if kind is not None:
        value = stirling_c(ctx, kind, cell.n, cell.k, job.flavor)
        return StirlingRecord.from_value(
            job.spec, StirlingCarlitzValue(cell.n, cell.k, kind, job.flavor, value)
        )
    query = SpecialNumberQuery(job.family.special_family, ctx, cell.N, cell.n, cell.method)
    return SpecialNumberRecord.from_result(calculator_for(job.quotient_max_n).compute(query))


class TableService:
    """Evaluates the cells of a compute or table run"""

    def __init__(self, config: RunConfig):
        self.config = config
        self.spec = config.field_spec()
        self.calculator = calculator_for(config.quotient_max_n)

    def cells(self) -> List[Cell]:
        config = self.config
        if config.family.is_stirling:
            cells = [Cell(0, n, k) for n in config.n_range.values for k in config.k_range.values]
        else:
            cells = [
                Cell(N, n, 0, method)
                for N in config.N_range.values
                for n in config.n_range.values
                for method in self._methods_for(N, n)
            ]
        return sorted(cells, key=lambda cell: cell.sort_key)

    def _methods_for(self, N: int, n: int) -> List[Method]:
        # explicit methods are always attempted; "all" keeps the applicable ones
        if len(self.config.methods) == 1:
            return list(self.config.methods)
        family = self.config.family.special_family
        ctx = context_for(self.spec)
        applicable = set(self.calculator.applicable_methods(ctx, family, N, n))
        return [method for method in self.config.methods if method in applicable]

    def jobs(self, cells: Iterable[Cell]) -> List[CellJob]:
        config = self.config
        return [
            CellJob(config.family, self.spec, config.flavor, config.quotient_max_n, cell)
            for cell in cells
        ]

    def run(self, progress: bool = False) -> List[Record]:
        """Evaluate every cell, sorted by (N, n, k, method) whatever the worker count"""
        cells = self.cells()
        jobs = self.jobs(cells)
        workers = min(self.config.workers, max(len(jobs), 1))
        with logger.workflow_context(
            "table",
            family=str(self.config.family),
            field=str(self.spec),
            cells=len(jobs),
            workers=workers,
        ):
            bar = tqdm(
                total=len(jobs),
                desc=f"{self.config.family} over {self.spec}",
                file=sys.stderr,
                disable=not progress,
            )
            try:
                records = list(self._evaluate(jobs, workers, bar))
            finally:
                bar.close()
                # derived data is kept for one run only
                context_for(self.spec).clear_memo()
        return sort_records(records)

    def _evaluate(self, jobs: List[CellJob], workers: int, bar: tqdm) -> Iterable[Record]:
        if workers <= 1:
            for job in jobs:
                yield evaluate_cell(job)
                bar.update(1)
            return
        logger.info(f"Fanning {len(jobs)} cells out to {workers} worker processes")
        with ProcessPoolExecutor(max_workers=workers) as executor:
            for record in executor.map(evaluate_cell, jobs, chunksize=CHUNK_SIZE):
                yield record
                bar.update(1)
