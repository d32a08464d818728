"""Seed-stable Erdos-Renyi G(n, p) sampling and density schedules.

The generator pipeline is pinned so that a graph is a pure function of
``(n, p, seed)`` across runs, platforms, and worker layouts:

* A 64-bit seed is expanded into 256 bits of state with splitmix64
  (increment ``0x9E3779B97F4A7C15``, mix constants ``0xBF58476D1CE4E5B9``
  and ``0x94D049BB133111EB``, shifts 30/27/31).
* Uniform 64-bit words come from xoshiro256** (scrambler
  ``rotl(s1 * 5, 7) * 9``, shift 17, rotation 45).
* Unordered pairs ``(u, v)`` with ``u < v`` are visited in lexicographic
  order; one word ``U`` is drawn per pair and the edge is included iff
  ``U / 2**64 < p``.

Trial seeds for Monte Carlo work derive from a master seed as
``master XOR (trial_index + 1) * 0x9E3779B97F4A7C15`` (mod 2**64).

A compiled kernel (numba) and a pure-Python fallback implement the same
pipeline bit for bit; tests hold them equal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParameter
from .graph import Graph

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15

# Below this many pairs the pure-Python path is cheaper than kernel dispatch.
_KERNEL_MIN_PAIRS = 2048


def splitmix64_stream(seed: int, count: int) -> list[int]:
    """First ``count`` outputs of splitmix64 started at ``seed`` (mod 2**64)."""
    state = seed & MASK64
    out = []
    for _ in range(count):
        state = (state + GOLDEN) & MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        out.append(z ^ (z >> 31))
    return out


class Xoshiro256StarStar:
    """xoshiro256** with splitmix64 state expansion from a 64-bit seed."""

    __slots__ = ("s0", "s1", "s2", "s3")

    def __init__(self, seed: int):
        self.s0, self.s1, self.s2, self.s3 = splitmix64_stream(seed, 4)

    def next_u64(self) -> int:
        s0, s1, s2, s3 = self.s0, self.s1, self.s2, self.s3
        x = (s1 * 5) & MASK64
        result = ((((x << 7) | (x >> 57)) & MASK64) * 9) & MASK64
        t = (s1 << 17) & MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = ((s3 << 45) | (s3 >> 19)) & MASK64
        self.s0, self.s1, self.s2, self.s3 = s0, s1, s2, s3
        return result


def trial_seed(master_seed: int, trial_index: int) -> int:
    """Sampler seed for one trial of a sweep keyed by a master seed."""
    if trial_index < 0:
        raise InvalidParameter(f"trial_index must be >= 0, got {trial_index}")
    return (master_seed ^ ((trial_index + 1) * GOLDEN)) & MASK64


@dataclass(frozen=True)
class DensityPoint:
    """An edge density ``p`` for ``n`` vertices, optionally tied to a coefficient ``c``."""

    n: int
    c: float | None
    p: float


def density_from_coefficient(c: float, n: int) -> DensityPoint:
    """Density ``p = min(1, c * sqrt(ln n / n))`` (natural logarithm).

    Degenerate small-``n`` grid points clamp to 1 rather than failing.
    """
    if n < 2:
        raise InvalidParameter(f"need n >= 2 for a density schedule, got n={n}")
    if not c >= 0:
        raise InvalidParameter(f"coefficient must be >= 0, got {c}")
    p = min(1.0, c * math.sqrt(math.log(n) / n))
    return DensityPoint(n=n, c=float(c), p=p)


def density_from_probability(p: float, n: int) -> DensityPoint:
    """Wrap an explicit edge probability as a density point (no coefficient)."""
    if not 0.0 <= p <= 1.0:
        raise InvalidParameter(f"edge probability must be in [0, 1], got {p}")
    return DensityPoint(n=n, c=None, p=float(p))


def _threshold_u64(p: float) -> int:
    # U / 2**64 < p  <=>  U < ceil(p * 2**64); p * 2**64 is an exact float
    # (scaling by a power of two), so the ceiling is exact as well.
    return math.ceil(p * 2.0**64)


def _sample_rows_python(n: int, threshold: int, seed: int) -> list[int]:
    gen = Xoshiro256StarStar(seed)
    s0, s1, s2, s3 = gen.s0, gen.s1, gen.s2, gen.s3
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            x = (s1 * 5) & MASK64
            r = ((((x << 7) | (x >> 57)) & MASK64) * 9) & MASK64
            t = (s1 << 17) & MASK64
            s2 ^= s0
            s3 ^= s1
            s1 ^= s2
            s0 ^= s3
            s2 ^= t
            s3 = ((s3 << 45) | (s3 >> 19)) & MASK64
            if r < threshold:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return rows


_kernel = None


def _get_kernel():
    """Compile (once) the numba twin of the pure-Python sampling loop."""
    global _kernel
    if _kernel is None:
        try:
            import numba
            import numpy as np

            @numba.njit(
                "void(int64, uint64, uint64[::1], uint64[:, ::1])",
                cache=True,
                boundscheck=False,
            )
            def fill(n, threshold, state, out):  # pragma: no cover - compiled
                s0, s1, s2, s3 = state[0], state[1], state[2], state[3]
                one = np.uint64(1)
                for u in range(n):
                    for v in range(u + 1, n):
                        x = s1 * np.uint64(5)
                        r = ((x << np.uint64(7)) | (x >> np.uint64(57))) * np.uint64(9)
                        t = s1 << np.uint64(17)
                        s2 ^= s0
                        s3 ^= s1
                        s1 ^= s2
                        s0 ^= s3
                        s2 ^= t
                        s3 = (s3 << np.uint64(45)) | (s3 >> np.uint64(19))
                        if r < threshold:
                            out[u, v >> 6] |= one << np.uint64(v & 63)
                            out[v, u >> 6] |= one << np.uint64(u & 63)

            _kernel = fill
        except Exception:  # numba unavailable or failed to compile
            _kernel = False
    return _kernel or None


def _sample_rows_kernel(n: int, threshold: int, seed: int) -> list[int] | None:
    kernel = _get_kernel()
    if kernel is None:
        return None
    import numpy as np

    words = (n + 63) // 64
    out = np.zeros((n, max(words, 1)), dtype=np.uint64)
    state = np.array(splitmix64_stream(seed, 4), dtype=np.uint64)
    kernel(n, np.uint64(threshold), state, out)
    buf = out.tobytes()
    stride = out.shape[1] * 8
    return [
        int.from_bytes(buf[v * stride : (v + 1) * stride], "little") for v in range(n)
    ]


def sample_gnp(n: int, p: float, seed: int) -> Graph:
    """Sample one G(n, p) graph, deterministically in ``(n, p, seed)``.

    Identical inputs produce bit-identical graphs regardless of backend,
    process, or call history.
    """
    if n < 0:
        raise InvalidParameter(f"vertex count must be >= 0, got {n}")
    if not 0.0 <= p <= 1.0:
        raise InvalidParameter(f"edge probability must be in [0, 1], got {p}")
    if n <= 1 or p == 0.0:
        return Graph(n, (0,) * n, 0)
    if p == 1.0:
        full = (1 << n) - 1
        rows = tuple(full ^ (1 << v) for v in range(n))
        return Graph(n, rows, n * (n - 1) // 2)
    threshold = _threshold_u64(p)
    rows = None
    if n * (n - 1) // 2 >= _KERNEL_MIN_PAIRS:
        rows = _sample_rows_kernel(n, threshold, seed)
    if rows is None:
        rows = _sample_rows_python(n, threshold, seed)
    m = sum(row.bit_count() for row in rows) // 2
    return Graph(n, tuple(rows), m)
