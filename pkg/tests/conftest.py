"""Shared fixtures: the shipped parameter files and a few toy systems."""

from pathlib import Path

import pytest

from amns import generate, paramfile, precompute_tables

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"

FIXTURE_FILES = {
    "nist521_sparse": FIXTURE_DIR / "nist521_sparse.params",
    "p192_n4": FIXTURE_DIR / "p192_n4.params",
    "p224_n4": FIXTURE_DIR / "p224_n4.params",
    "p256_n5": FIXTURE_DIR / "p256_n5.params",
    "p384_n7": FIXTURE_DIR / "p384_n7.params",
    "p521_n10": FIXTURE_DIR / "p521_n10.params",
    "p255x95_n5_l2": FIXTURE_DIR / "p255x95_n5_l2.params",
    "p255x95_n5_lm3": FIXTURE_DIR / "p255x95_n5_lm3.params",
    "p255x95_n6_l2": FIXTURE_DIR / "p255x95_n6_l2.params",
}

# Shared constant exercised by the cross-system representative checks.
T_RESIDUE = 0x4D9B499C5B883B0F11752FBEED0684B6972F588DB67810835002A07C2F2AC804


@pytest.fixture(scope="session")
def fixture_systems():
    return {name: paramfile.load(path)[0] for name, path in FIXTURE_FILES.items()}


@pytest.fixture(scope="session")
def fixture_tables(fixture_systems):
    return {name: precompute_tables(sys) for name, sys in fixture_systems.items()}


@pytest.fixture(scope="session")
def toy():
    """p = 17, n = 3, lambda = 2, k = 16: small enough for exhaustion."""
    result = generate(17, 3, 2, k=16, seed=0, max_systems=1)[0]
    return result.system, result.tables
