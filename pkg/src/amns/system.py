"""The AMNS parameter set, precomputed tables, and the invariant checker."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .modmath import PrimeField
from .polyring import ReductionPoly, eval_poly_mod, invertible_mod_e_phi, poly_mul_mod_e


@dataclass(frozen=True)
class AmnsSystem:
    """Complete parameter set: residues mod p are degree-(n-1) polynomials,
    evaluated at gamma, with coefficients below rho = 2^rho_exp.

    Arithmetic is Montgomery-style with phi = 2^k: the stored representative
    of a residue a evaluates to a*phi mod p. delta bounds how many additions
    may precede a multiplication.
    """

    p: int
    n: int
    gamma: int
    lam: int
    k: int
    rho_exp: int
    delta: int
    M: tuple[int, ...]
    Mprime: tuple[int, ...]
    sigma: int

    @classmethod
    def create(cls, p, n, gamma, lam, k, rho_exp, delta, M, Mprime) -> "AmnsSystem":
        M = _padded(M, n)
        Mprime = _padded(Mprime, n)
        return cls(p, n, gamma, lam, k, rho_exp, delta, M, Mprime,
                   sigma=max(abs(c) for c in M))

    @property
    def e(self) -> ReductionPoly:
        return ReductionPoly(self.n, self.lam)

    @property
    def phi(self) -> int:
        return 1 << self.k

    @property
    def phi_mask(self) -> int:
        return (1 << self.k) - 1

    @property
    def rho(self) -> int:
        return 1 << self.rho_exp

    @cached_property
    def m_nonzeros(self) -> tuple[tuple[int, int], ...]:
        # Public per-system structure; lets the reduction skip zero terms of M
        # without ever branching on runtime data.
        return tuple((i, c) for i, c in enumerate(self.M) if c)

    @cached_property
    def mprime_nonzeros(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, c) for i, c in enumerate(self.Mprime) if c)


def _padded(coeffs, n: int) -> tuple[int, ...]:
    coeffs = tuple(coeffs)
    if len(coeffs) > n:
        raise ValueError(f"expected at most {n} coefficients, got {len(coeffs)}")
    return coeffs + (0,) * (n - len(coeffs))


@dataclass(frozen=True)
class PrecompTables:
    """Conversion tables: P[i-1] represents rho^i plainly (P_i(gamma) = rho^i
    mod p) for i = 1..n-1; T = phi^n mod p; g[i] = gamma^i mod p."""

    P: tuple[tuple[int, ...], ...]
    T: int
    g: tuple[int, ...]


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class VerifyReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.ok]


def verify_system(sys: AmnsSystem, tables: PrecompTables | None = None) -> VerifyReport:
    """Check every structural invariant; failures are report entries, not errors."""
    checks: list[CheckResult] = []

    def add(name: str, ok: bool, detail: str = "") -> None:
        checks.append(CheckResult(name, bool(ok), "" if ok else detail))

    p, n, lam = sys.p, sys.n, sys.lam
    phi, rho = sys.phi, sys.rho
    try:
        PrimeField(p)
        add("p-prime", True)
    except ValueError as exc:
        add("p-prime", False, str(exc))
    add("n-range", n >= 2, f"n = {n} < 2")
    add("lambda-range", lam != 0 and abs(lam) < p, f"lambda = {lam}")
    add("gamma-range", 0 < sys.gamma < p, f"gamma out of (0, p)")
    add("gamma-root", pow(sys.gamma, n, p) == lam % p,
        "gamma^n != lambda mod p")
    add("m-shape", len(sys.M) == n and any(sys.M)
        and sys.sigma == max(abs(c) for c in sys.M),
        "M length/sigma mismatch")
    add("m-vanishes", eval_poly_mod(sys.M, sys.gamma, p) == 0,
        "M(gamma) != 0 mod p")
    add("m-invertible", invertible_mod_e_phi(sys.M, sys.e),
        "M not invertible mod (E, phi)")
    add("mprime-range", len(sys.Mprime) == n and all(0 <= c < phi for c in sys.Mprime),
        "M' coefficient outside [0, phi)")
    prod = poly_mul_mod_e(sys.M, sys.Mprime, sys.e)
    minus_one = [(-c) % phi for c in prod]
    add("mprime-inverse", minus_one == [1] + [0] * (n - 1),
        "M*M' != -1 mod (E, phi)")
    add("rho-vs-sigma", rho >= 2 * abs(lam) * n * sys.sigma,
        f"rho < 2|lambda|n*sigma = {2 * abs(lam) * n * sys.sigma}")
    add("rho-digits", rho**n > p, "rho^n <= p")
    add("rho-min", p <= (2 * rho) ** n, "p > (2 rho)^n")
    need_phi = 2 * (sys.delta + 1) ** 2 * abs(lam) * n * rho
    add("phi-bound", phi >= need_phi, f"phi < {need_phi:#x}")
    guard = n * abs(lam) * (sys.delta + 1) ** 2 * rho * rho
    add("accumulator-guard", guard < 1 << (2 * sys.k - 1),
        "n|lambda|(delta+1)^2 rho^2 >= 2^(2k-1)")

    if tables is not None:
        add("t-value", tables.T == pow(phi, n, p), "T != phi^n mod p")
        add("g-powers", len(tables.g) == n
            and all(tables.g[i] == pow(sys.gamma, i, p) for i in range(n)),
            "g_i != gamma^i mod p")
        ok_p = len(tables.P) == n - 1
        if ok_p:
            for i, rep in enumerate(tables.P, start=1):
                if len(rep) != n or max(abs(c) for c in rep) >= rho:
                    ok_p = False
                    break
                if eval_poly_mod(rep, sys.gamma, p) != pow(rho, i, p):
                    ok_p = False
                    break
        add("p-tables", ok_p, "P_i invalid (shape, norm or value)")

    return VerifyReport(tuple(checks))
