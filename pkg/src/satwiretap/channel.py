"""BPSK BI-AWGN wiretap channel pair: Bob's and Eve's conditional laws.

Bob observes Y = E0*x + sqrt(N0)*G; Eve observes Z = gamma_g*E0*x +
sqrt(gamma_n*N0)*G'. Both channels are real scalar Gaussians with the BPSK
symbol x in {+1, -1} (bit 0 maps to +1, bit 1 to -1, fixed project-wide).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtr

__all__ = [
    "WiretapChannelParams",
    "density_bob",
    "density_eve",
    "mixture_density_bob",
    "mixture_density_eve",
    "sample_bob",
    "sample_eve",
    "eve_hard_decision_crossover",
]

_BPSK = (1, -1)


@dataclass(frozen=True)
class WiretapChannelParams:
    """Four scalars that fully determine the degraded-Gaussian wiretap pair.

    Attributes
    ----------
    gamma_g : float
        Eve's amplitude degradation coefficient, >= 0.
    gamma_n : float
        Eve-to-Bob noise power ratio, > 0.
    n0 : float
        Bob's noise variance per real dimension, > 0.
    e0 : float
        Symbol amplitude scale, > 0 (kept symbolic so conditions involving
        sqrt(n0)/e0 remain testable away from the unit-scale case).
    """

    gamma_g: float
    gamma_n: float
    n0: float = 1.0
    e0: float = 1.0

    def __post_init__(self) -> None:
        if self.gamma_g < 0:
            raise ValueError(f"gamma_g must be >= 0, got {self.gamma_g}")
        if self.gamma_n <= 0:
            raise ValueError(f"gamma_n must be > 0, got {self.gamma_n}")
        if self.n0 <= 0:
            raise ValueError(f"n0 must be > 0, got {self.n0}")
        if self.e0 <= 0:
            raise ValueError(f"e0 must be > 0, got {self.e0}")

    @property
    def bob_amplitude(self) -> float:
        return self.e0

    @property
    def bob_noise_var(self) -> float:
        return self.n0

    @property
    def eve_amplitude(self) -> float:
        return self.gamma_g * self.e0

    @property
    def eve_noise_var(self) -> float:
        return self.gamma_n * self.n0

    def rescaled_eve(self) -> tuple[float, float]:
        """Amplitude and noise variance of Z' = Z/sqrt(gamma_n).

        Dividing Eve's observation by sqrt(gamma_n) gives an equivalent
        BI-AWGN channel with amplitude gamma_g*e0/sqrt(gamma_n) and Bob's
        noise level n0, which is how the degradation argument is usually run.
        """
        return self.eve_amplitude / math.sqrt(self.gamma_n), self.n0


def _check_symbol(x: int) -> None:
    if x not in _BPSK:
        raise ValueError(f"BPSK symbol must be +1 or -1, got {x}")


def _gauss_pdf(u, mean: float, var: float):
    u = np.asarray(u, dtype=float)
    return np.exp(-((u - mean) ** 2) / (2.0 * var)) / math.sqrt(2.0 * math.pi * var)


def density_bob(y, x: int, params: WiretapChannelParams):
    """Conditional density of Bob's observation given the BPSK symbol x."""
    _check_symbol(x)
    return _gauss_pdf(y, x * params.bob_amplitude, params.bob_noise_var)


def density_eve(z, x: int, params: WiretapChannelParams):
    """Conditional density of Eve's observation given the BPSK symbol x."""
    _check_symbol(x)
    return _gauss_pdf(z, x * params.eve_amplitude, params.eve_noise_var)


def mixture_density_bob(y, params: WiretapChannelParams):
    """Density of Y under the uniform input: half-half Gaussian mixture."""
    return 0.5 * (density_bob(y, 1, params) + density_bob(y, -1, params))


def mixture_density_eve(z, params: WiretapChannelParams):
    """Density of Z under the uniform input: half-half Gaussian mixture."""
    return 0.5 * (density_eve(z, 1, params) + density_eve(z, -1, params))


def sample_bob(x, params: WiretapChannelParams, rng: np.random.Generator, size=None):
    """Draw Y = e0*x + sqrt(n0)*G with standard normal G from `rng`.

    `x` may be a scalar symbol or an ndarray of symbols; with an array input
    and size=None one sample per symbol is returned.
    """
    x = np.asarray(x, dtype=float)
    if size is None:
        size = x.shape
    noise = rng.standard_normal(size)
    return params.bob_amplitude * x + math.sqrt(params.bob_noise_var) * noise


def sample_eve(x, params: WiretapChannelParams, rng: np.random.Generator, size=None):
    """Draw Z = gamma_g*e0*x + sqrt(gamma_n*n0)*G' from `rng`."""
    x = np.asarray(x, dtype=float)
    if size is None:
        size = x.shape
    noise = rng.standard_normal(size)
    return params.eve_amplitude * x + math.sqrt(params.eve_noise_var) * noise


def eve_hard_decision_crossover(params: WiretapChannelParams) -> float:
    """Crossover probability of Eve's hard-decision BSC surrogate.

    Thresholding Z at zero turns Eve's channel into a BSC with crossover
    Q(gamma_g*e0 / sqrt(gamma_n*n0)); gamma_g=0 gives the pure-noise value
    one half.
    """
    ratio = params.eve_amplitude / math.sqrt(params.eve_noise_var)
    return float(ndtr(-ratio))
