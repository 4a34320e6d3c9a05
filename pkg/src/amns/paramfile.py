"""Canonical on-disk parameter format.

One `key = value` pair per line, lowercase 0x-prefixed hex for big values,
signed hex for M's coefficients, comma-separated coefficient lists with
index 0 first. Loading then saving reproduces the bytes exactly.
"""

from __future__ import annotations

import os
from typing import Iterable

from .errors import ParamFileError
from .system import AmnsSystem, PrecompTables

FORMAT_VERSION = 1

_REQUIRED = ("format_version", "p", "n", "lambda", "k", "rho_exp", "delta",
             "gamma", "M", "Mprime")


def _hex(v: int) -> str:
    return f"-{-v:#x}" if v < 0 else f"{v:#x}"


def _coeffs(values: Iterable[int]) -> str:
    return ",".join(_hex(v) for v in values)


def _parse_int(text: str, key: str) -> int:
    try:
        return int(text, 0)
    except ValueError as exc:
        raise ParamFileError(f"bad integer for {key!r}: {text!r}") from exc


def _parse_coeffs(text: str, key: str) -> tuple[int, ...]:
    parts = text.split(",")
    if parts == [""]:
        raise ParamFileError(f"empty coefficient list for {key!r}")
    return tuple(_parse_int(part, key) for part in parts)


def dumps(sys: AmnsSystem, tables: PrecompTables | None = None) -> str:
    lines = [
        f"format_version = {FORMAT_VERSION}",
        f"p = {sys.p:#x}",
        f"n = {sys.n}",
        f"lambda = {sys.lam}",
        f"k = {sys.k}",
        f"rho_exp = {sys.rho_exp}",
        f"delta = {sys.delta}",
        f"gamma = {sys.gamma:#x}",
        f"M = {_coeffs(sys.M)}",
        f"Mprime = {_coeffs(sys.Mprime)}",
    ]
    if tables is not None:
        lines.append(f"T = {tables.T:#x}")
        for i, rep in enumerate(tables.P, start=1):
            lines.append(f"P_{i} = {_coeffs(rep)}")
        lines.append(f"g = {_coeffs(tables.g)}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> tuple[AmnsSystem, PrecompTables | None]:
    fields: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        key, sep, value = line.partition(" = ")
        if not sep or " " in key:
            raise ParamFileError(f"line {lineno}: expected 'key = value'")
        if key in fields:
            raise ParamFileError(f"line {lineno}: duplicate key {key!r}")
        fields[key] = value

    for key in _REQUIRED:
        if key not in fields:
            raise ParamFileError(f"missing required key {key!r}")
    version = _parse_int(fields.pop("format_version"), "format_version")
    if version != FORMAT_VERSION:
        raise ParamFileError(f"unsupported format_version {version}")

    n = _parse_int(fields.pop("n"), "n")
    if n < 1:
        raise ParamFileError("n must be positive")
    try:
        sys = AmnsSystem.create(
            p=_parse_int(fields.pop("p"), "p"),
            n=n,
            gamma=_parse_int(fields.pop("gamma"), "gamma"),
            lam=_parse_int(fields.pop("lambda"), "lambda"),
            k=_parse_int(fields.pop("k"), "k"),
            rho_exp=_parse_int(fields.pop("rho_exp"), "rho_exp"),
            delta=_parse_int(fields.pop("delta"), "delta"),
            M=_parse_coeffs(fields.pop("M"), "M"),
            Mprime=_parse_coeffs(fields.pop("Mprime"), "Mprime"),
        )
    except ValueError as exc:
        raise ParamFileError(str(exc)) from exc

    tables = None
    table_keys = [key for key in fields if key == "T" or key == "g" or key.startswith("P_")]
    if table_keys:
        missing = [key for key in ("T", "g") if key not in fields]
        expected_p = [f"P_{i}" for i in range(1, n)]
        missing += [key for key in expected_p if key not in fields]
        if missing:
            raise ParamFileError(f"incomplete tables: missing {', '.join(missing)}")
        reps = tuple(_parse_coeffs(fields.pop(key), key) for key in expected_p)
        tables = PrecompTables(
            P=reps,
            T=_parse_int(fields.pop("T"), "T"),
            g=_parse_coeffs(fields.pop("g"), "g"),
        )
    if fields:
        raise ParamFileError(f"unknown keys: {', '.join(sorted(fields))}")
    return sys, tables


def save(path: str | os.PathLike, sys: AmnsSystem, tables: PrecompTables | None = None) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(dumps(sys, tables))


def load(path: str | os.PathLike) -> tuple[AmnsSystem, PrecompTables | None]:
    with open(path, "r", encoding="ascii", newline="") as fh:
        return loads(fh.read())
