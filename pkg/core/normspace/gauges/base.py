from abc import ABC, abstractmethod

import numpy as np


class Gauge(ABC):
    """Evaluates a fixed norm on R^dim."""

    dim: int

    @abstractmethod
    def __call__(self, x: np.ndarray) -> np.ndarray:
        """
        x: array of shape (..., dim)

        Returns:
            array of shape (...) holding the norm of every vector
        """
        pass

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dim={self.dim})"
