from typing import Callable

from core.normspace.gauges.base import Gauge
from core.normspace.gauges.pnorm import PNormGauge, WeightedPNormGauge
from core.normspace.gauges.polyhedral import PolyhedralGauge
from core.normspace.gauges.quadratic import QuadraticGauge
from core.normspace.types import NormKind

_REGISTRY: dict[NormKind, Callable[..., Gauge]] = {
    NormKind.PNORM: lambda dim, p, **_: PNormGauge(dim, p),
    NormKind.WEIGHTED_PNORM: lambda dim, p, weights, **_: WeightedPNormGauge(dim, p, weights),
    NormKind.QUADRATIC: lambda matrix, **_: QuadraticGauge(matrix),
    NormKind.POLYHEDRAL: lambda vertices, **_: PolyhedralGauge(vertices),
}


def create_gauge(kind: NormKind | str, **params) -> Gauge:
    try:
        kind = NormKind(kind)
    except ValueError:
        raise ValueError(f"Unknown norm kind '{kind}'. Available: {[k.value for k in _REGISTRY]}") from None
    return _REGISTRY[kind](**params)
