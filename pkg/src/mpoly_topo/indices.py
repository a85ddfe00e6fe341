"""The operator-pipeline index route and the multi-route report.

hso_via_pipeline composes the termwise operators in the fixed order
s_x, p_x, p_y, j_diag, d_half_x and evaluates at 1.  On a degree-pair
counting polynomial this equals the definitional edge sum exactly, so a
report can cross-validate up to three independent routes:

  direct    edge sum over an explicit graph
  pipeline  operator composition applied to the counting polynomial
  closed    the family's closed-form expression

Route values are exact RadScalars; agreement means exact algebraic
equality, not float closeness.  Floats appear only in rendered output,
rounded half-even to four decimals to match the reference tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from typing import Mapping, Optional, Union

from . import goldens
from .families import (
    FamilySpec,
    builder_matches_catalog,
    catalog_mpoly,
    closed_hso,
    construct,
    get_info,
    structural_ok,
)
from .graphs import EdgePartition, SimpleGraph, edge_partition, hso_direct, m_polynomial
from .polyring import BiPoly, RadScalar, d_half_x, eval_x1, j_diag, p_x, p_y, s_x


def hso_via_pipeline(m: BiPoly) -> RadScalar:
    """Hyperbolic Sombor index from a degree-pair counting polynomial."""
    return eval_x1(d_half_x(j_diag(p_y(p_x(s_x(m))))))


def fixed_decimal(value: RadScalar, places: int = 4) -> Decimal:
    """Exact-value decimal rendering, rounded half-even at `places` decimals.

    Working precision follows the value's magnitude (dendrimer values grow
    like 2^n), so the fractional digits stay exact however large the value.
    """
    raw = value.to_decimal(precision=50)
    needed = raw.adjusted() + places + 12
    if needed > 50:
        raw = value.to_decimal(precision=needed)
    with localcontext() as ctx:
        ctx.prec = max(50, needed)
        return raw.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN)


def format_fixed(value: RadScalar, places: int = 4) -> str:
    return f"{fixed_decimal(value, places):.{places}f}"


@dataclass(frozen=True)
class HsoReport:
    """Outcome of computing the index by every applicable route."""

    source: str
    routes: Mapping[str, RadScalar]  # keys among {"direct", "pipeline", "closed"}
    agreement: bool
    float_value: float  # four-decimal rendering of the pipeline value
    exact: str
    m_poly: BiPoly
    partition: Optional[EdgePartition] = None
    structural: Optional[bool] = None
    table_expected: Optional[float] = None
    table_match: Optional[bool] = None
    notes: tuple[str, ...] = ()

    def to_json_obj(self) -> dict:
        obj: dict = {
            "input": self.source,
            "routes": {
                name: float(fixed_decimal(value)) for name, value in self.routes.items()
            },
            "exact": self.exact,
            "agreement": self.agreement,
            "m_polynomial": self.m_poly.to_json_obj(),
        }
        if self.partition is not None:
            obj["partition"] = self.partition.to_json_obj()
        if self.structural is not None:
            obj["structural"] = self.structural
        if self.table_expected is not None:
            obj["table_expected"] = self.table_expected
            obj["table_match"] = self.table_match
        if self.notes:
            obj["notes"] = list(self.notes)
        return obj


def _routes_agree(routes: Mapping[str, RadScalar]) -> bool:
    values = list(routes.values())
    return all(v == values[0] for v in values[1:])


def compute_report(
    source: Union[FamilySpec, SimpleGraph],
    *,
    label: Optional[str] = None,
) -> HsoReport:
    """Run every applicable route and cross-validate.

    Family specs always get the pipeline and closed routes; the direct route
    is added when an explicit constructor exists, the parameters are in the
    structural range, and the built graph's degree pairs match the catalog.
    Plain graphs get the direct and pipeline routes.
    """
    if isinstance(source, SimpleGraph):
        return _graph_report(source, label or "graph")
    return _family_report(source, label)


def _graph_report(g: SimpleGraph, label: str) -> HsoReport:
    part = edge_partition(g)
    mp = part.to_bipoly()
    routes = {"direct": hso_direct(g), "pipeline": hso_via_pipeline(mp)}
    pipeline = routes["pipeline"]
    return HsoReport(
        source=label,
        routes=routes,
        agreement=_routes_agree(routes),
        float_value=float(fixed_decimal(pipeline)),
        exact=str(pipeline),
        m_poly=mp,
        partition=part,
    )


def _family_report(spec: FamilySpec, label: Optional[str]) -> HsoReport:
    info = get_info(spec.family)
    structural = structural_ok(spec)
    notes: list[str] = []

    mp = catalog_mpoly(spec, formal=True)
    routes: dict[str, RadScalar] = {
        "pipeline": hso_via_pipeline(mp),
        "closed": closed_hso(spec),
    }
    partition = None
    if structural:
        partition = EdgePartition({(i, j): int(c.rational_value()) for (i, j), c in mp.terms() if c})
    else:
        notes.append("parameters are outside the structural range; values are formula evaluations")

    if info.builder is not None and structural:
        if builder_matches_catalog(spec):
            routes["direct"] = hso_direct(construct(spec))
        else:
            notes.append(
                "direct route omitted: the catalog does not describe the built graph here"
            )
    if info.note:
        notes.append(info.note)

    pipeline = routes["pipeline"]
    cell = goldens.reference_cell(spec)
    table_expected = table_match = None
    if cell is not None:
        table_expected = float(cell.value)
        table_match = fixed_decimal(pipeline) == cell.value

    return HsoReport(
        source=label or spec.label(),
        routes=routes,
        agreement=_routes_agree(routes),
        float_value=float(fixed_decimal(pipeline)),
        exact=str(pipeline),
        m_poly=mp,
        partition=partition,
        structural=structural,
        table_expected=table_expected,
        table_match=table_match,
        notes=tuple(notes),
    )
