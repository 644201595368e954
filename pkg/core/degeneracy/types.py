from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from core.menger.types import ExtendedRadius, TriangleSides


class Verdict(str, Enum):
    INNER_PRODUCT = "INNER_PRODUCT"
    NOT_INNER_PRODUCT = "NOT_INNER_PRODUCT"
    INCONCLUSIVE = "INCONCLUSIVE"

    @property
    def exit_code(self) -> int:
        return {"INNER_PRODUCT": 0, "NOT_INNER_PRODUCT": 1, "INCONCLUSIVE": 2}[self.value]


@dataclass(frozen=True)
class SearchBudget:
    grid: int = 64  # grid x grid cells over the two section angles
    top_k: int = 8  # refinement starts per section
    sections: int = 16  # 2-D sections searched when dim >= 3
    refine_iterations: int = 200  # Nelder-Mead iterations per start, 0 disables refinement
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        if self.grid < 2 or self.top_k < 0 or self.sections < 1 or self.refine_iterations < 0 or self.workers < 1:
            raise ValueError(f"invalid search budget {self}")


@dataclass(frozen=True)
class DefectRecord:
    """Parallelogram-law defect of u, v (vectors about the origin)."""

    u: np.ndarray
    v: np.ndarray
    defect: float


@dataclass(frozen=True)
class WitnessTriple:
    u: np.ndarray
    v: np.ndarray
    w: np.ndarray
    sides: TriangleSides
    circumradius: ExtendedRadius


@dataclass(frozen=True)
class SectionOutcome:
    index: int
    best: float  # circumradius, np.inf if a degenerate triple was probed
    angles: tuple[float, float]
    best_per_start: tuple[float, ...]
    evaluations: int
    iterations: int

    @property
    def degenerate(self) -> bool:
        return bool(np.isinf(self.best))


@dataclass(frozen=True)
class SearchDiagnostics:
    sections: int
    starts: int
    evaluations: int
    iterations: int
    best_per_start: tuple[float, ...]
    short_circuited: bool


@dataclass(frozen=True)
class SphereSearchResult:
    s_estimate: ExtendedRadius
    witness: WitnessTriple
    diagnostics: SearchDiagnostics


@dataclass(frozen=True)
class DefectSearchResult:
    best: DefectRecord
    evaluations: int


@dataclass(frozen=True)
class ClassifierOptions:
    budget: SearchBudget = field(default_factory=SearchBudget)
    margin: float = 1e-6  # relative decision margin on S
    defect_tol: float = 1e-9  # |defect| threshold relative to r^2
    min_conclusive_grid: int = 16  # smaller grids can not support INNER_PRODUCT


@dataclass(frozen=True)
class ClassificationReport:
    verdict: Verdict
    s_estimate: ExtendedRadius
    r: float
    x0: np.ndarray
    witness: Optional[WitnessTriple]
    defect: Optional[DefectRecord]
    max_abs_defect: float
    diagnostics: SearchDiagnostics
    options: ClassifierOptions
