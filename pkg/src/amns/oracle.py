"""Independent ground truth: plain big-integer modular arithmetic, exhaustive
small-field representation tables, and wall-clock ratio benchmarks."""

from __future__ import annotations

import random
import statistics
import time
from dataclasses import dataclass
from typing import Callable

from . import arith
from .system import AmnsSystem, PrecompTables


def ref_modmul(a: int, b: int, p: int) -> int:
    """a*b mod p the boring way: full-width product, Euclidean reduction."""
    if not (0 <= a < p and 0 <= b < p):
        raise ValueError("operands must be reduced mod p")
    return a * b % p


def ref_modexp(a: int, e: int, p: int) -> int:
    """Left-to-right square and multiply; independent of the pow builtin."""
    if e < 0:
        raise ValueError("negative exponent")
    acc = 1
    a %= p
    for bit in bin(e)[2:] if e else "":
        acc = acc * acc % p
        if bit == "1":
            acc = acc * a % p
    return acc


@dataclass(frozen=True)
class MnsTable:
    """Every bounded-coefficient representative of every residue."""

    p: int
    n: int
    gamma: int
    rho: int
    reps: dict[int, list[tuple[int, ...]]]

    @property
    def covered(self) -> bool:
        return not self.missing

    @property
    def missing(self) -> list[int]:
        return [x for x in range(self.p) if not self.reps.get(x)]


def exhaustive_mns_table(p: int, n: int, gamma: int, rho: int) -> MnsTable:
    """Enumerate all vectors with |coeff| < rho and bucket them by value.

    A representation system is valid exactly when every residue ends up
    with at least one representative.
    """
    if p >= 1 << 12:
        raise ValueError("exhaustive table limited to p < 2^12")
    width = 2 * rho - 1
    if width**n > 1 << 21:
        raise ValueError("coefficient space too large to enumerate")
    gpow = [pow(gamma, i, p) for i in range(n)]
    reps: dict[int, list[tuple[int, ...]]] = {x: [] for x in range(p)}
    vec = [-(rho - 1)] * n
    while True:
        val = sum(c * g for c, g in zip(vec, gpow)) % p
        reps[val].append(tuple(vec))
        i = 0
        while i < n:
            vec[i] += 1
            if vec[i] < rho:
                break
            vec[i] = -(rho - 1)
            i += 1
        if i == n:
            break
    return MnsTable(p, n, gamma, rho, reps)


# ---------------------------------------------------------------------------
# Benchmark ratios (reporting only; no pass/fail thresholds).
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BenchReport:
    system_id: str
    op: str
    trials: int
    median_ns: float
    baseline_ns: float
    ratio: float
    baseline: str


def _montgomery_baseline(p: int) -> Callable[[int, int], int]:
    """Classic word-aligned Montgomery multiplication on residues."""
    bits = ((p.bit_length() + 63) // 64) * 64
    r = 1 << bits
    mask = r - 1
    np_ = (-pow(p, -1, r)) % r

    def mul(x: int, y: int) -> int:
        t = x * y
        m = (t & mask) * np_ & mask
        u = (t + m * p) >> bits
        return u - p if u >= p else u

    return mul


def _time_batch(fn: Callable[[], None], trials: int) -> float:
    t0 = time.perf_counter_ns()
    for _ in range(trials):
        fn()
    return (time.perf_counter_ns() - t0) / trials


def _time_pair(fn_a: Callable[[], None], fn_b: Callable[[], None],
               trials: int, repeats: int = 9) -> tuple[float, float]:
    """Median per-call nanoseconds for two operations, batches interleaved
    so clock drift and cache warm-up affect both sides alike."""
    fn_a()
    fn_b()
    samples_a, samples_b = [], []
    for _ in range(repeats):
        samples_a.append(_time_batch(fn_a, trials))
        samples_b.append(_time_batch(fn_b, trials))
    return statistics.median(samples_a), statistics.median(samples_b)


def bench_ratio(
    sys: AmnsSystem,
    tables: PrecompTables,
    trials: int,
    baseline: str = "montgomery",
    system_id: str = "amns",
    seed: int = 0,
) -> BenchReport:
    """Median wall-clock ratio AMNS/baseline for modular multiplication.

    Both sides consume the same random residue pairs; "self" times the AMNS
    path twice and should report a ratio near 1.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if baseline not in ("naive", "montgomery", "self"):
        raise ValueError(f"unknown baseline {baseline!r}")
    rng = random.Random(seed)
    pairs = [(rng.randrange(sys.p), rng.randrange(sys.p)) for _ in range(64)]
    elems = [(arith.to_amns_m1(a, sys, tables), arith.to_amns_m1(b, sys, tables))
             for a, b in pairs]

    idx = 0

    def amns_op() -> None:
        nonlocal idx
        ea, eb = elems[idx & 63]
        arith.amns_mul(ea, eb, sys)
        idx += 1

    if baseline == "self":
        base_op = amns_op
    elif baseline == "naive":
        def base_op() -> None:
            nonlocal idx
            a, b = pairs[idx & 63]
            ref_modmul(a, b, sys.p)
            idx += 1
    else:
        mont = _montgomery_baseline(sys.p)

        def base_op() -> None:
            nonlocal idx
            a, b = pairs[idx & 63]
            mont(a, b)
            idx += 1

    amns_ns, base_ns = _time_pair(amns_op, base_op, trials)
    return BenchReport(
        system_id=system_id,
        op="mul",
        trials=trials,
        median_ns=amns_ns,
        baseline_ns=base_ns,
        ratio=amns_ns / base_ns,
        baseline=baseline,
    )
