# carlitz/serialization.py
"""Result records and their text, JSON and CSV renderings.

Records never carry timings, so the same inputs always render to the same
bytes whatever the worker count.
"""

import csv
import io
import json
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple, Union

import pandas as pd

from core.algebra import FieldSpec, RatFunc, format_poly, parse_poly
from core.exceptions import InvalidFieldError, ParseError

from .config import OutputFormat
from .special import Family, Method, SpecialNumberResult
from .stirling import Flavor, FlavorType, StirlingCarlitzValue, StirlingKind

SPECIAL_COLUMNS = [
    "r",
    "p",
    "e",
    "modulus",
    "family",
    "N",
    "n",
    "method",
    "num",
    "den",
    "normalized_num",
    "normalized_den",
]

STIRLING_COLUMNS = [
    "r",
    "p",
    "e",
    "modulus",
    "family",
    "kind",
    "flavor",
    "m",
    "n",
    "k",
    "num",
    "den",
]


def _field_fields(spec: FieldSpec) -> Dict[str, Any]:
    data: Dict[str, Any] = {"r": spec.r, "p": spec.p, "e": spec.e}
    if spec.e > 1:
        data["modulus"] = list(spec.modulus)
    return data


def _modulus_from(value: Any) -> Tuple[int, ...]:
    """Modulus from a JSON list or the comma-joined CSV cell"""
    if value is None or value == "":
        return ()
    if isinstance(value, str):
        value = value.split(",")
    return tuple(int(c) for c in value)


def _spec_from(data: Dict[str, Any]) -> FieldSpec:
    try:
        p, e = int(data["p"]), int(data["e"])
        modulus = _modulus_from(data.get("modulus"))
    except KeyError as exc:
        raise ParseError(f"record is missing {exc.args[0]!r}") from exc
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad field in record: {exc}") from exc
    if e > 1 and not modulus:
        raise ParseError(f"record over F_{p}^{e} is missing its modulus")
    try:
        spec = FieldSpec(p, e, modulus)
    except InvalidFieldError as exc:
        raise ParseError(f"bad field in record: {exc}") from exc
    if "r" in data and int(data["r"]) != spec.r:
        raise ParseError(f"r = {data['r']} does not match p^e = {spec.r}")
    return spec


def _ratfunc_from(spec: FieldSpec, num: str, den: str) -> RatFunc:
    return RatFunc(parse_poly(spec, str(num)), parse_poly(spec, str(den)))


@dataclass(frozen=True)
class SpecialNumberRecord:
    """One BC/CC value as it appears in the output"""

    spec: FieldSpec
    family: Family
    N: int
    n: int
    method: Method
    value: RatFunc
    normalized: RatFunc

    @classmethod
    def from_result(cls, result: SpecialNumberResult) -> "SpecialNumberRecord":
        return cls(
            spec=result.query.ctx.spec,
            family=result.family,
            N=result.N,
            n=result.n,
            method=result.method,
            value=result.value,
            normalized=result.normalized,
        )

    @property
    def sort_key(self) -> Tuple[int, int, int, int]:
        return (self.N, self.n, 0, list(Method).index(self.method))

    def to_dict(self) -> Dict[str, Any]:
        return {
            **_field_fields(self.spec),
            "family": str(self.family),
            "N": self.N,
            "n": self.n,
            "method": str(self.method),
            "num": format_poly(self.value.num),
            "den": format_poly(self.value.den),
            "normalized_num": format_poly(self.normalized.num),
            "normalized_den": format_poly(self.normalized.den),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SpecialNumberRecord":
        spec = _spec_from(data)
        try:
            return cls(
                spec=spec,
                family=Family(data["family"]),
                N=int(data["N"]),
                n=int(data["n"]),
                method=Method(data["method"]),
                value=_ratfunc_from(spec, data["num"], data["den"]),
                normalized=_ratfunc_from(spec, data["normalized_num"], data["normalized_den"]),
            )
        except (KeyError, ValueError) as e:
            raise ParseError(f"bad special-number record: {e}") from e

    def to_text(self) -> str:
        label = f"{self.family.label}_{{{self.N},{self.n}}}"
        return (
            f"{label} over {self.spec} [{self.method}]\n"
            f"  value:      {self.value}\n"
            f"  normalized: {self.normalized}\n"
        )

    def text_row(self) -> List[Any]:
        return [self.N, self.n, self.method, self.value, self.normalized]


@dataclass(frozen=True)
class StirlingRecord:
    """One Stirling-Carlitz number as it appears in the output"""

    spec: FieldSpec
    kind: StirlingKind
    flavor: Flavor
    n: int
    k: int
    value: RatFunc

    @classmethod
    def from_value(cls, spec: FieldSpec, entry: StirlingCarlitzValue) -> "StirlingRecord":
        return cls(spec, entry.kind, entry.flavor, entry.n, entry.k, entry.value)

    @property
    def family(self) -> str:
        return "stirling1" if self.kind is StirlingKind.FIRST else "stirling2"

    @property
    def sort_key(self) -> Tuple[int, int, int, int]:
        return (0, self.n, self.k, 0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            **_field_fields(self.spec),
            "family": self.family,
            "kind": str(self.kind),
            "flavor": str(self.flavor.name),
            "m": self.flavor.m,
            "n": self.n,
            "k": self.k,
            "num": format_poly(self.value.num),
            "den": format_poly(self.value.den),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "StirlingRecord":
        spec = _spec_from(data)
        try:
            m = data.get("m")
            flavor = Flavor(FlavorType(data["flavor"]), None if m in (None, "") else int(m))
            return cls(
                spec=spec,
                kind=StirlingKind(data["kind"]),
                flavor=flavor,
                n=int(data["n"]),
                k=int(data["k"]),
                value=_ratfunc_from(spec, data["num"], data["den"]),
            )
        except (KeyError, ValueError) as e:
            raise ParseError(f"bad Stirling-Carlitz record: {e}") from e

    def to_text(self) -> str:
        bracket = ("[", "]") if self.kind is StirlingKind.FIRST else ("{", "}")
        return (
            f"{bracket[0]}{self.n}, {self.k}{bracket[1]}_C {self.flavor} over {self.spec}\n"
            f"  value: {self.value}\n"
        )

    def text_row(self) -> List[Any]:
        return [self.n, self.k, self.flavor, self.value]


Record = Union[SpecialNumberRecord, StirlingRecord]

_TEXT_HEADERS = {
    SpecialNumberRecord: ["N", "n", "method", "value", "normalized"],
    StirlingRecord: ["n", "k", "flavor", "value"],
}


def columns_for(stirling: bool) -> List[str]:
    return STIRLING_COLUMNS if stirling else SPECIAL_COLUMNS


def render_records(
    records: Sequence[Record],
    output_format: OutputFormat,
    stirling: bool = False,
    single: bool = False,
) -> str:
    """Render records; single=True renders one record on its own"""
    if single and len(records) == 1:
        return _render_single(records[0], output_format)
    if output_format is OutputFormat.JSON:
        return json.dumps([record.to_dict() for record in records], indent=2) + "\n"
    if output_format is OutputFormat.CSV:
        return _render_csv(records, columns_for(stirling))
    header = _TEXT_HEADERS[StirlingRecord if stirling else SpecialNumberRecord]
    lines = ["\t".join(header)]
    lines.extend("\t".join(str(cell) for cell in record.text_row()) for record in records)
    return "\n".join(lines) + "\n"


def _render_single(record: Record, output_format: OutputFormat) -> str:
    if output_format is OutputFormat.JSON:
        return json.dumps(record.to_dict(), indent=2) + "\n"
    if output_format is OutputFormat.CSV:
        return _render_csv([record], columns_for(isinstance(record, StirlingRecord)))
    return record.to_text()


def _csv_row(record: Record, columns: List[str]) -> Dict[str, Any]:
    data = record.to_dict()
    if "modulus" in data:
        data["modulus"] = ",".join(str(c) for c in data["modulus"])
    # CSV has no null; keep the column textual rather than float NaN
    return {column: "" if data.get(column) is None else data[column] for column in columns}


def _render_csv(records: Sequence[Record], columns: List[str]) -> str:
    frame = pd.DataFrame([_csv_row(record, columns) for record in records], columns=columns)
    return frame.to_csv(index=False, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")


def parse_records(text: str, stirling: bool = False) -> List[Record]:
    """Read back JSON output, a single object or a list"""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from e
    items = data if isinstance(data, list) else [data]
    record_type = StirlingRecord if stirling else SpecialNumberRecord
    return [record_type.from_dict(item) for item in items]


def parse_csv_records(text: str, stirling: bool = False) -> List[Record]:
    """Read back CSV output"""
    frame = pd.read_csv(io.StringIO(text), dtype=str, keep_default_na=False)
    record_type = StirlingRecord if stirling else SpecialNumberRecord
    return [record_type.from_dict(row) for row in frame.to_dict(orient="records")]


def sort_records(records: Sequence[Record]) -> List[Record]:
    return sorted(records, key=lambda record: record.sort_key)
