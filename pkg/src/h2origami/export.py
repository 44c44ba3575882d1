"""Machine-readable census output (JSON and CSV) with a fixed field order."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, fields

from .orbits import CensusRecord, OrbitRecord

SCHEMA_NAME = "census.schema.json"


@dataclass(frozen=True)
class CensusRow:
    n: int
    orbit_label: str
    size: int
    invariant: int
    num_cusps: int
    cusp_widths: tuple[int, ...]
    e2: int
    e3: int
    genus: int
    has_one_cylinder: bool

    @classmethod
    def from_orbit(cls, r: OrbitRecord) -> "CensusRow":
        return cls(r.n, r.label, r.size, r.invariant, r.e_infinity, tuple(r.cusp_widths),
                   r.e2, r.e3, r.genus, r.has_one_cylinder)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["cusp_widths"] = list(self.cusp_widths)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CensusRow":
        d = dict(d)
        d["cusp_widths"] = tuple(d["cusp_widths"])
        return cls(**d)


FIELDS = [f.name for f in fields(CensusRow)]


def census_rows(census: CensusRecord) -> list[CensusRow]:
    return [CensusRow.from_orbit(r) for r in census.orbits]


def _jsonable(x):
    if isinstance(x, tuple):
        return list(x)
    return x


def census_to_json(census: CensusRecord) -> str:
    doc = {
        "n": census.n,
        "rows": [row.to_dict() for row in census_rows(census)],
        "totals": census.totals,
        "checks": [
            {"name": c.name, "status": c.status, "expected": _jsonable(c.expected),
             "observed": _jsonable(c.observed), "passed": c.passed}
            for c in census.formula_checks
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def rows_from_json(text: str) -> list[CensusRow]:
    return [CensusRow.from_dict(d) for d in json.loads(text)["rows"]]


def _csv_cell(name: str, value) -> str:
    if name == "cusp_widths":
        return '"' + " ".join(map(str, value)) + '"'
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def rows_to_csv(rows: list[CensusRow]) -> str:
    lines = [",".join(FIELDS)]
    for row in rows:
        lines.append(",".join(_csv_cell(name, getattr(row, name)) for name in FIELDS))
    return "\n".join(lines) + "\n"


def rows_from_csv(text: str) -> list[CensusRow]:
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != FIELDS:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    rows = []
    for rec in reader:
        rows.append(CensusRow(
            n=int(rec["n"]),
            orbit_label=rec["orbit_label"],
            size=int(rec["size"]),
            invariant=int(rec["invariant"]),
            num_cusps=int(rec["num_cusps"]),
            cusp_widths=tuple(int(x) for x in rec["cusp_widths"].split()),
            e2=int(rec["e2"]),
            e3=int(rec["e3"]),
            genus=int(rec["genus"]),
            has_one_cylinder=rec["has_one_cylinder"] == "true",
        ))
    return rows
