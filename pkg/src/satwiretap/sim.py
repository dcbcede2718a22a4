"""Monte-Carlo reliability simulation and exact small-instance leakage oracles.

run_reliability estimates Bob-side bit and frame error rates for the full
encode/transmit/decode chain. exact_leakage brute-forces I(M; Z^n) on tiny
instances against a quantized Eve channel, giving an independent witness that
the analytic leakage bounds hold (quantization only discards information, so
the exact quantized leakage must sit below any valid bound on the continuous
channel). mc_mutual_info is a sampling cross-check for the BI-AWGN quadrature.

Determinism: every stochastic routine is driven by a master seed; trial blocks
use substreams keyed by (master_seed, block_index), so results are identical
for any worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

import numpy as np
from scipy.special import ndtr

from .channel import WiretapChannelParams
from .code import (
    DecodeFailure,
    EccScheme,
    bits_from_ints,
    bits_to_bpsk,
    bits_to_hex,
    toeplitz_apply_batch,
)
from .leakage import CodeParams, min_leakage_bound

__all__ = [
    "ReliabilityReport",
    "run_reliability",
    "EveQuantizer",
    "make_eve_quantizer",
    "LeakageOracleReport",
    "exact_leakage",
    "MiEstimate",
    "mc_mutual_info",
]

_Z95 = 1.959963984540054  # two-sided 95% normal quantile

# exhaustive-oracle feasibility caps
_MAX_HASH_INPUT_BITS = 10
_MAX_ORACLE_BLOCK = 12
_MAX_ORACLE_CELLS = 1 << 22


@dataclass(frozen=True)
class ReliabilityReport:
    """Error-rate tallies for a reliability run.

    ci95 fields are binomial 95% half-widths by the normal approximation
    z * sqrt(p(1-p)/N) with N the number of Bernoulli observations (trials*k
    for ber, trials for fer); no continuity correction is applied, so the
    width is optimistic for very small error counts.
    """

    trials: int
    message_bits: int
    bit_errors: int
    frame_errors: int
    decode_failures: int
    ber: float
    fer: float
    ber_ci95: float
    fer_ci95: float

    def as_dict(self) -> dict:
        return {
            "trials": self.trials,
            "message_bits": self.message_bits,
            "bit_errors": self.bit_errors,
            "frame_errors": self.frame_errors,
            "decode_failures": self.decode_failures,
            "ber": self.ber,
            "fer": self.fer,
            "ber_ci95": self.ber_ci95,
            "fer_ci95": self.fer_ci95,
        }


def _half_width(p: float, n: int) -> float:
    return _Z95 * math.sqrt(max(p * (1.0 - p), 0.0) / n)


def _reliability_block(
    block_index: int,
    count: int,
    code: CodeParams,
    ecc: EccScheme,
    params: WiretapChannelParams,
    master_seed: int,
    hash_seed: Optional[np.ndarray],
) -> Tuple[int, int, int]:
    rng = np.random.default_rng(np.random.SeedSequence(master_seed, spawn_key=(block_index,)))
    k, kp, n = code.k, code.k_prime, code.n
    seed_len = k + kp - 1

    m = rng.integers(0, 2, size=(count, k), dtype=np.uint8)
    l = rng.integers(0, 2, size=(count, kp), dtype=np.uint8)
    if hash_seed is None:
        seeds = rng.integers(0, 2, size=(count, seed_len), dtype=np.uint8)
    else:
        seeds = np.broadcast_to(hash_seed, (count, seed_len))

    mixed = m ^ toeplitz_apply_batch(seeds, l, k, kp)
    x = bits_to_bpsk(ecc.encode(np.concatenate([mixed, l], axis=1)))
    noise_scale = math.sqrt(params.bob_noise_var)
    y = params.bob_amplitude * x + noise_scale * rng.standard_normal((count, n))

    try:
        v_hat = ecc.decode(y)
    except DecodeFailure:
        # scheme cannot decode whole batches it rejects; fall back per trial
        bit_errors = frame_errors = failures = 0
        for t in range(count):
            try:
                v_t = ecc.decode(y[t])
            except DecodeFailure:
                failures += 1
                frame_errors += 1
                bit_errors += k
                continue
            m_t = v_t[:k] ^ toeplitz_apply_batch(seeds[t : t + 1], v_t[None, k:], k, kp)[0]
            diff = int(np.count_nonzero(m_t ^ m[t]))
            bit_errors += diff
            frame_errors += int(diff > 0)
        return bit_errors, frame_errors, failures

    m_hat = v_hat[:, :k] ^ toeplitz_apply_batch(seeds, v_hat[:, k:], k, kp)
    diff = m_hat ^ m
    return int(diff.sum()), int(diff.any(axis=1).sum()), 0


def run_reliability(
    code: CodeParams,
    ecc: EccScheme,
    params: WiretapChannelParams,
    trials: int,
    master_seed: int,
    *,
    workers: int = 1,
    block_size: int = 8192,
    hash_seed=None,
) -> ReliabilityReport:
    """Estimate Bob-side error rates over `trials` independent frames.

    Each trial draws a uniform message, sacrifice word, and (by default) a
    fresh uniform hash seed, encodes, transmits over Bob's channel, and
    decodes. Pass `hash_seed` (k+k'-1 bits) to pin the hash for debugging.
    The trial stream is partitioned into fixed blocks whose RNG substreams
    depend only on (master_seed, block_index), so the report is identical for
    every `workers` value.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if ecc.message_length != code.k + code.k_prime:
        raise ValueError(
            f"ECC message length {ecc.message_length} != k+k' = {code.k + code.k_prime}"
        )
    if ecc.block_length != code.n:
        raise ValueError(f"ECC block length {ecc.block_length} != n = {code.n}")
    if hash_seed is not None:
        hash_seed = bits_from_ints(hash_seed)
        if hash_seed.size != code.k + code.k_prime - 1:
            raise ValueError("hash_seed must have k+k'-1 bits")

    blocks = []
    start = 0
    index = 0
    while start < trials:
        count = min(block_size, trials - start)
        blocks.append((index, count))
        start += count
        index += 1

    def job(block):
        b, count = block
        return _reliability_block(b, count, code, ecc, params, master_seed, hash_seed)

    if workers == 1 or len(blocks) == 1:
        results = [job(block) for block in blocks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(job, blocks))

    bit_errors = sum(r[0] for r in results)
    frame_errors = sum(r[1] for r in results)
    failures = sum(r[2] for r in results)
    n_bits = trials * code.k
    ber = bit_errors / n_bits
    fer = frame_errors / trials
    return ReliabilityReport(
        trials=trials,
        message_bits=code.k,
        bit_errors=bit_errors,
        frame_errors=frame_errors,
        decode_failures=failures,
        ber=ber,
        fer=fer,
        ber_ci95=_half_width(ber, n_bits),
        fer_ci95=_half_width(fer, trials),
    )


@dataclass(frozen=True)
class EveQuantizer:
    """Scalar quantizer applied to each of Eve's channel outputs.

    interior_edges are the finite bin boundaries; the outermost bins absorb
    the tails, so the quantizer is a proper channel (rows sum to one) and by
    data processing the quantized leakage lower-bounds the continuous one.
    """

    interior_edges: Tuple[float, ...]

    def __post_init__(self):
        edges = tuple(float(e) for e in self.interior_edges)
        if len(edges) < 1:
            raise ValueError("need at least one edge (two levels)")
        if any(b <= a for a, b in zip(edges, edges[1:])):
            raise ValueError("edges must be strictly increasing")
        object.__setattr__(self, "interior_edges", edges)

    @property
    def levels(self) -> int:
        return len(self.interior_edges) + 1

    def level_probs(self, symbol: float, params: WiretapChannelParams) -> np.ndarray:
        """P(level | transmitted symbol) for Eve's Gaussian observation."""
        mean = params.eve_amplitude * symbol
        sigma = math.sqrt(params.eve_noise_var)
        cum = ndtr((np.asarray(self.interior_edges) - mean) / sigma)
        full = np.concatenate([[0.0], cum, [1.0]])
        return np.diff(full)


def make_eve_quantizer(params: WiretapChannelParams, levels: int = 8) -> EveQuantizer:
    """Uniform `levels`-bin quantizer over +-(eve_amplitude + 4 eve sigma)."""
    if levels < 2:
        raise ValueError("levels must be >= 2")
    span = params.eve_amplitude + 4.0 * math.sqrt(params.eve_noise_var)
    edges = np.linspace(-span, span, levels + 1)[1:-1]
    return EveQuantizer(tuple(edges))


@dataclass(frozen=True)
class LeakageOracleReport:
    """Exact quantized leakage next to the analytic bound for one instance.

    exact_leak_bits is I(M; Z_quantized^n) in bits averaged uniformly over
    every hash seed; per_seed lists (seed_hex, leak_bits) pairs in seed order.
    bound_log2 is the minimized leakage-bound exponent (base-2 log of bits)
    and bound_bits its linear-scale value, so exact_leak_bits <= bound_bits is
    the bound-validity check whenever bound_bits <= k.
    """

    n: int
    k: int
    k_prime: int
    levels: int
    exact_leak_bits: float
    per_seed: Tuple[Tuple[str, float], ...]
    bound_log2: float
    bound_bits: float


def _discrete_mi_bits(cond: np.ndarray) -> float:
    """I(M; Z) in bits for rows cond[m] = P(z | m), M uniform."""
    marginal = cond.mean(axis=0)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(cond > 0.0, np.log2(cond) - np.log2(marginal), 0.0)
    return float(np.sum(cond * ratio) / cond.shape[0])


def exact_leakage(
    code: CodeParams,
    ecc: EccScheme,
    quantizer: Optional[EveQuantizer],
    params: WiretapChannelParams,
) -> LeakageOracleReport:
    """Exhaustively compute Eve's exact quantized leakage on a tiny instance.

    Enumerates every message, sacrifice word, hash seed, and quantized output
    n-tuple; returns the seed-averaged I(M; Z^n) together with the analytic
    minimized bound for the same (n, k, k') and channel. Pass quantizer=None
    for the default 8-level uniform quantizer.
    """
    k, kp, n = code.k, code.k_prime, code.n
    if k + kp > _MAX_HASH_INPUT_BITS:
        raise ValueError(f"instance too large: k+k' = {k + kp} > {_MAX_HASH_INPUT_BITS}")
    if n > _MAX_ORACLE_BLOCK:
        raise ValueError(f"instance too large: n = {n} > {_MAX_ORACLE_BLOCK}")
    if ecc.message_length != k + kp:
        raise ValueError(f"ECC message length {ecc.message_length} != k+k' = {k + kp}")
    if ecc.block_length != n:
        raise ValueError(f"ECC block length {ecc.block_length} != n = {n}")
    if quantizer is None:
        quantizer = make_eve_quantizer(params)
    levels = quantizer.levels
    if (1 << (k + kp)) * levels**n > _MAX_ORACLE_CELLS:
        raise ValueError("instance too large: output table exceeds the enumeration cap")

    rows = (quantizer.level_probs(+1.0, params), quantizer.level_probs(-1.0, params))

    # joint quantized-output distribution for every raw hash input, ECC applied
    n_inputs = 1 << (k + kp)
    table = np.empty((n_inputs, levels**n))
    for w in range(n_inputs):
        v = _int_to_bits(w, k + kp)
        cw = bits_from_ints(ecc.encode(v))
        q = np.ones(1)
        for bit in cw:
            q = np.multiply.outer(q, rows[bit]).ravel()
        table[w] = q

    pow_k = 1 << np.arange(k - 1, -1, -1, dtype=np.int64)
    all_m = _enumerate_bits(k)
    all_l = _enumerate_bits(kp)
    l_count = 1 << kp

    seed_len = k + kp - 1
    per_seed = []
    total = 0.0
    for s_val in range(1 << seed_len):
        seed = _int_to_bits(s_val, seed_len)
        t_l = toeplitz_apply_batch(np.broadcast_to(seed, (l_count, seed_len)), all_l, k, kp)
        mixed = all_m[:, None, :] ^ t_l[None, :, :]
        idx = (mixed.astype(np.int64) @ pow_k) * l_count + np.arange(l_count)[None, :]
        cond = table[idx].mean(axis=1)
        leak = _discrete_mi_bits(cond)
        per_seed.append((bits_to_hex(seed), leak))
        total += leak

    bound = min_leakage_bound(code, params)
    bound_bits = math.inf if bound.log2_bound > 1023 else 2.0**bound.log2_bound
    return LeakageOracleReport(
        n=n,
        k=k,
        k_prime=kp,
        levels=levels,
        exact_leak_bits=total / (1 << seed_len),
        per_seed=tuple(per_seed),
        bound_log2=bound.log2_bound,
        bound_bits=bound_bits,
    )


def _int_to_bits(value: int, length: int) -> np.ndarray:
    if length == 0:
        return np.zeros(0, dtype=np.uint8)
    text = format(value, f"0{length}b").encode()
    return (np.frombuffer(text, dtype=np.uint8) - ord("0")).astype(np.uint8)


def _enumerate_bits(length: int) -> np.ndarray:
    """All 2^length bit rows in numeric order, row i = binary of i (MSB first)."""
    if length == 0:
        return np.zeros((1, 0), dtype=np.uint8)
    values = np.arange(1 << length, dtype=np.int64)
    shifts = np.arange(length - 1, -1, -1, dtype=np.int64)
    return ((values[:, None] >> shifts[None, :]) & 1).astype(np.uint8)


class MiEstimate(NamedTuple):
    bits: float
    stderr: float
    samples: int


def mc_mutual_info(
    amplitude: float, noise_var: float, samples: int, master_seed: int
) -> MiEstimate:
    """Monte-Carlo BI-AWGN mutual information in bits with its standard error.

    Sample average of log2(W(y|x)/Wbar(y)) over uniform inputs; an independent
    cross-check for the quadrature-based capacity routine.
    """
    if samples < 10_000:
        raise ValueError("samples must be >= 10000")
    if noise_var <= 0.0:
        raise ValueError("noise_var must be positive")
    if amplitude < 0.0:
        raise ValueError("amplitude must be >= 0")
    rng = np.random.default_rng(master_seed)
    chunk = 1 << 20
    total = 0.0
    total_sq = 0.0
    done = 0
    ln2 = math.log(2.0)
    while done < samples:
        count = min(chunk, samples - done)
        x = 1.0 - 2.0 * rng.integers(0, 2, size=count)
        y = amplitude * x + math.sqrt(noise_var) * rng.standard_normal(count)
        u = 2.0 * amplitude * y * x / noise_var
        terms = 1.0 - np.logaddexp(0.0, -u) / ln2
        total += float(terms.sum())
        total_sq += float(np.square(terms).sum())
        done += count
    mean = total / samples
    var = max(total_sq / samples - mean * mean, 0.0)
    return MiEstimate(bits=mean, stderr=math.sqrt(var / samples), samples=samples)
