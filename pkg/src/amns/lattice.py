"""The lattice of polynomials vanishing at gamma mod p, and selection of M.

Rows are coefficient vectors (index i = coefficient of X^i). Both starting
bases put p in the corner and gamma-power data in column 0; the odd-lambda
variant forces even entries below row 0 so the mod-2 image of the basis is
the identity, which the 2^n combination scan relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .errors import InternalInvariantError, SearchBoundError
from .polyring import ReductionPoly, eval_poly_mod, f2_from_poly, f2_gcd, invertible_mod_e_phi

ParityMode = Literal["even", "odd"]

_ODD_SCAN_MAX_N = 24


@dataclass(frozen=True)
class LatticeBasis:
    p: int
    gamma: int
    rows: tuple[tuple[int, ...], ...]
    parity_mode: ParityMode

    @property
    def n(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class MCandidate:
    poly: tuple[int, ...]
    norm_inf: int


def _neg_gamma_powers(p: int, gamma: int, n: int) -> list[int]:
    # t_i = -(gamma^i) mod p, so that t_i + X^i vanishes at gamma.
    return [(p - pow(gamma, i, p)) % p for i in range(n)]


def build_basis_even(p: int, gamma: int, n: int) -> LatticeBasis:
    if not 0 < gamma < p:
        raise ValueError("gamma must lie in (0, p)")
    t = _neg_gamma_powers(p, gamma, n)
    rows = [tuple([p] + [0] * (n - 1))]
    for i in range(1, n):
        row = [0] * n
        row[0] = t[i]
        row[i] = 1
        rows.append(tuple(row))
    return LatticeBasis(p, gamma, tuple(rows), "even")


def build_basis_odd(p: int, gamma: int, n: int) -> LatticeBasis:
    if not 0 < gamma < p:
        raise ValueError("gamma must lie in (0, p)")
    t = _neg_gamma_powers(p, gamma, n)
    rows = [tuple([p] + [0] * (n - 1))]
    for i in range(1, n):
        row = [0] * n
        row[0] = t[i] + p * (t[i] % 2)  # always even since p is odd
        row[i] = 1
        rows.append(tuple(row))
    return LatticeBasis(p, gamma, tuple(rows), "odd")


def lll_reduce(basis: LatticeBasis) -> LatticeBasis:
    """LLL with delta = 3/4, exact arithmetic throughout.

    Gram-Schmidt data is carried as integer subdeterminants (d[i], lam[i][j])
    so every division below is exact; the output is deterministic.
    """
    b = [list(row) for row in basis.rows]
    n = len(b)
    gram = [[_dot(b[i], b[j]) for j in range(n)] for i in range(n)]

    d = [1] + [0] * n  # d[i+1] = Gram determinant of b[0..i]
    lam = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            u = gram[i][j]
            for t in range(j):
                u = (d[t + 1] * u - lam[i][t] * lam[j][t]) // d[t]
            if j < i:
                lam[i][j] = u
            else:
                d[i + 1] = u
                if u == 0:
                    raise ValueError("rows are linearly dependent")

    def size_reduce(k: int, l: int) -> None:
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            for t in range(n):
                b[k][t] -= q * b[l][t]
            for j in range(l):
                lam[k][j] -= q * lam[l][j]
            lam[k][l] -= q * d[l + 1]

    k = 1
    while k < n:
        size_reduce(k, k - 1)
        # Lovasz test with delta = 3/4, cleared of denominators.
        if 4 * (d[k + 1] * d[k - 1] + lam[k][k - 1] ** 2) < 3 * d[k] ** 2:
            b[k], b[k - 1] = b[k - 1], b[k]
            for j in range(k - 1):
                lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
            mu = lam[k][k - 1]
            dk_new = (d[k - 1] * d[k + 1] + mu * mu) // d[k]
            for i in range(k + 1, n):
                t = lam[i][k]
                lam[i][k] = (d[k + 1] * lam[i][k - 1] - mu * t) // d[k]
                lam[i][k - 1] = (dk_new * t + mu * lam[i][k]) // d[k + 1]
            d[k] = dk_new
            k = max(k - 1, 1)
        else:
            for l in range(k - 2, -1, -1):
                size_reduce(k, l)
            k += 1
    return LatticeBasis(basis.p, basis.gamma, tuple(tuple(r) for r in b), basis.parity_mode)


def _dot(x: list[int], y: list[int]) -> int:
    return sum(a * b for a, b in zip(x, y))


def _norm_inf(poly) -> int:
    return max(abs(c) for c in poly)


def enumerate_m_even(reduced: LatticeBasis) -> list[MCandidate]:
    """All rows with odd constant term, shortest first (ties: lowest row)."""
    if reduced.parity_mode != "even":
        raise ValueError("basis was not built for even lambda")
    cands = [
        (_norm_inf(row), idx, row)
        for idx, row in enumerate(reduced.rows)
        if row[0] & 1
    ]
    cands.sort(key=lambda t: (t[0], t[1]))
    return [MCandidate(poly=row, norm_inf=norm) for norm, _, row in cands]


def select_m_even(reduced: LatticeBasis) -> MCandidate:
    cands = enumerate_m_even(reduced)
    if not cands:
        # A reduced basis always contains a row with odd constant term:
        # otherwise (p, 0, ..., 0) could not be an integer combination.
        raise InternalInvariantError("no basis row has an odd constant term")
    return cands[0]


def enumerate_m_odd(reduced: LatticeBasis) -> list[MCandidate]:
    """All 0/1 row combinations that are invertible mod (E, 2^k).

    Combinations with an even number of odd coefficients are discarded
    upfront (their mod-2 image has 1 as a root, so the gcd with X^n + 1
    is divisible by X + 1). Ordered by norm, then by combination index.
    """
    if reduced.parity_mode != "odd":
        raise ValueError("basis was not built for odd lambda")
    n = reduced.n
    if n > _ODD_SCAN_MAX_N:
        raise SearchBoundError(f"n = {n} exceeds the 2^n scan bound ({_ODD_SCAN_MAX_N})")
    xn_plus_1 = (1 << n) | 1
    cands = []
    for beta in range(1, 1 << n):
        poly = [0] * n
        mask = beta
        idx = 0
        while mask:
            if mask & 1:
                row = reduced.rows[idx]
                for t in range(n):
                    poly[t] += row[t]
            mask >>= 1
            idx += 1
        mbar = f2_from_poly(poly)
        if bin(mbar).count("1") % 2 == 0:
            continue
        if mbar and f2_gcd(mbar, xn_plus_1) == 1:
            cands.append((_norm_inf(poly), beta, tuple(poly)))
    cands.sort(key=lambda t: (t[0], t[1]))
    return [MCandidate(poly=poly, norm_inf=norm) for norm, _, poly in cands]


def select_m_odd(reduced: LatticeBasis) -> MCandidate:
    cands = enumerate_m_odd(reduced)
    if not cands:
        raise InternalInvariantError("no 0/1 combination is invertible mod (E, 2)")
    return cands[0]


def enumerate_m_candidates(reduced: LatticeBasis, e: ReductionPoly) -> list[MCandidate]:
    """Parity-appropriate candidate list, sanity-checked against E."""
    cands = enumerate_m_even(reduced) if e.lam % 2 == 0 else enumerate_m_odd(reduced)
    for cand in cands:
        if eval_poly_mod(cand.poly, reduced.gamma, reduced.p) != 0:
            raise InternalInvariantError("candidate does not vanish at gamma")
        if not invertible_mod_e_phi(cand.poly, e):
            raise InternalInvariantError("candidate is not invertible mod (E, 2^k)")
    return cands
