from enum import Enum
from typing import Literal, Union

import numpy as np

# p = ∞ is its own value, never approximated by a large float
P_INF: Literal["inf"] = "inf"

PExponent = Union[float, Literal["inf"]]

# coordinates of a point of R^n, float64, shape (n,)
Point = np.ndarray


class NormKind(str, Enum):
    PNORM = "pnorm"
    WEIGHTED_PNORM = "weighted-pnorm"
    QUADRATIC = "quadratic"
    POLYHEDRAL = "polyhedral"


def is_inf(p: PExponent) -> bool:
    return isinstance(p, str) and p == P_INF
