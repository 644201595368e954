"""
JSON documents written by the command line tool.

Field order is fixed by the models and dumps carry no timestamps, so the same
inputs give byte-identical output. Infinite radii are written as "inf".
"""
import json
from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict

from core import __version__
from core.degeneracy.types import ClassificationReport
from core.energies.energy import EnergyEstimate
from core.euclid_embed.types import FourPointVerdict
from core.menger.types import ExtendedRadius
from core.normspace.space import NormSpec

Radius = Union[float, Literal["inf"]]


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), indent=2) + "\n"


class WitnessDocument(_Document):
    points: list[list[float]]
    sides: list[float]
    circumradius: Radius


class DefectDocument(_Document):
    u: list[float]
    v: list[float]
    defect: float


class BudgetDocument(_Document):
    grid: int
    top_k: int
    sections: int
    refine_iterations: int
    workers: int


class DiagnosticsDocument(_Document):
    sections: int
    starts: int
    evaluations: int
    iterations: int
    best_per_start: list[float]
    short_circuited: bool


class ReportDocument(_Document):
    tool_version: str
    norm: str
    dim: int
    verdict: Literal["INNER_PRODUCT", "NOT_INNER_PRODUCT", "INCONCLUSIVE"]
    s_estimate: Radius
    r: float
    x0: list[float]
    witness: Optional[WitnessDocument]
    defect: Optional[DefectDocument]
    max_abs_defect: float
    margin: float
    seed: int
    budget: BudgetDocument
    diagnostics: DiagnosticsDocument


class EmbeddingDocument(_Document):
    tool_version: str
    embeddable: bool
    squared_height: float
    coordinates: Optional[list[list[float]]]
    obstruction: Optional[str]
    base: Optional[list[int]]
    apex: Optional[int]


class EnergyDocument(_Document):
    tool_version: str
    energy: Literal["thickness", "menger"]
    p: Optional[float]
    points: int
    value: Radius
    standard_error: float
    exact: bool


def _vec(x) -> list[float]:
    return [float(c) for c in x]


def report_document(report: ClassificationReport, spec: NormSpec) -> ReportDocument:
    opts = report.options
    witness = defect = None
    if report.witness is not None:
        w = report.witness
        witness = WitnessDocument(
            points=[_vec(w.u), _vec(w.v), _vec(w.w)],
            sides=[w.sides.a, w.sides.b, w.sides.c],
            circumradius=w.circumradius.encode(),
        )
    if report.defect is not None:
        defect = DefectDocument(u=_vec(report.defect.u), v=_vec(report.defect.v), defect=report.defect.defect)
    diag = report.diagnostics
    return ReportDocument(
        tool_version=__version__,
        norm=spec.label,
        dim=spec.dim,
        verdict=report.verdict.value,
        s_estimate=report.s_estimate.encode(),
        r=report.r,
        x0=_vec(report.x0),
        witness=witness,
        defect=defect,
        max_abs_defect=report.max_abs_defect,
        margin=opts.margin,
        seed=opts.budget.seed,
        budget=BudgetDocument(
            grid=opts.budget.grid,
            top_k=opts.budget.top_k,
            sections=opts.budget.sections,
            refine_iterations=opts.budget.refine_iterations,
            workers=opts.budget.workers,
        ),
        diagnostics=DiagnosticsDocument(
            sections=diag.sections,
            starts=diag.starts,
            evaluations=diag.evaluations,
            iterations=diag.iterations,
            best_per_start=list(diag.best_per_start),
            short_circuited=diag.short_circuited,
        ),
    )


def embedding_document(verdict: FourPointVerdict) -> EmbeddingDocument:
    ob = verdict.obstruction
    return EmbeddingDocument(
        tool_version=__version__,
        embeddable=verdict.embeddable,
        squared_height=verdict.squared_height,
        coordinates=None if verdict.embedding is None else [_vec(p) for p in verdict.embedding.points],
        obstruction=None if ob is None else ob.kind.value,
        base=None if ob is None else list(ob.base),
        apex=None if ob is None else ob.apex,
    )


def energy_document(
    energy: Literal["thickness", "menger"],
    points: int,
    value: Union[ExtendedRadius, EnergyEstimate],
    p: Optional[float] = None,
) -> EnergyDocument:
    if isinstance(value, ExtendedRadius):
        return EnergyDocument(tool_version=__version__, energy=energy, p=p, points=points,
                              value=value.encode(), standard_error=0.0, exact=True)
    return EnergyDocument(tool_version=__version__, energy=energy, p=p, points=points,
                          value=value.value, standard_error=value.standard_error, exact=value.exact)
