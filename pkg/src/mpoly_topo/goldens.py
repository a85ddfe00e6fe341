"""Bundled reference values for the chemical-family index tables.

The CSV fixture stores, per family, the tabulated index values along the
diagonal parameter sweep [1,1]..[10,10] (two-parameter families) or
n = 1..10 (one-parameter families), exactly as printed in the reference
tables these families are usually reported with.  Each cell carries a
verification status:

  verified  the printed value equals the closed form at four decimals
  erratum   the printed value is a known misprint; tests pin the mismatch

The erratum cells are the nanotube row from [2,2] on (the printed row
duplicates the benzenoid row) and the whole zinc-porphyrin row.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from decimal import Decimal
from importlib import resources

from .families import Family, FamilySpec, get_info

VERIFIED = "verified"
ERRATUM = "erratum"


@dataclass(frozen=True)
class ReferenceCell:
    family: Family
    params: tuple[int, ...]
    value: Decimal
    status: str


def _load() -> dict[tuple[Family, tuple[int, ...]], ReferenceCell]:
    table: dict[tuple[Family, tuple[int, ...]], ReferenceCell] = {}
    data = resources.files("mpoly_topo").joinpath("data/reference_values.csv").read_text()
    for row in csv.DictReader(data.splitlines()):
        family = Family(row["family"])
        params = (int(row["p1"]),) if not row["p2"] else (int(row["p1"]), int(row["p2"]))
        cell = ReferenceCell(family, params, Decimal(row["value"]), row["status"])
        table[(family, params)] = cell
    return table


_CELLS = _load()


def all_cells() -> tuple[ReferenceCell, ...]:
    return tuple(_CELLS.values())


def reference_cell(spec: FamilySpec) -> ReferenceCell | None:
    """The tabulated cell for this spec, if the tables cover it."""
    info = get_info(spec.family)
    params = tuple(spec.params[p] for p in info.params)
    return _CELLS.get((spec.family, params))
