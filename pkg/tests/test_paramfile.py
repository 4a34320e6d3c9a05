import pytest

from amns import generate, paramfile
from amns.errors import ParamFileError
from tests.conftest import FIXTURE_FILES


def test_fixture_files_roundtrip_byte_identical():
    for path in FIXTURE_FILES.values():
        text = path.read_text(encoding="ascii")
        sys, tables = paramfile.loads(text)
        assert paramfile.dumps(sys, tables) == text


def test_roundtrip_with_tables(tmp_path, toy):
    sys, tables = toy
    path = tmp_path / "toy.params"
    paramfile.save(path, sys, tables)
    text = path.read_text(encoding="ascii")
    back_sys, back_tables = paramfile.load(path)
    assert back_sys == sys
    assert back_tables == tables
    assert paramfile.dumps(back_sys, back_tables) == text


def test_negative_coefficients_signed_hex(toy):
    sys, tables = toy
    text = paramfile.dumps(sys, tables)
    sys2, _ = paramfile.loads(text)
    assert sys2.M == sys.M
    if any(c < 0 for c in sys.M):
        assert "-0x" in text.split("M = ")[1].splitlines()[0]


def _toy_text():
    result = generate(17, 3, 2, k=16, seed=0, max_systems=1)[0]
    return paramfile.dumps(result.system)


def test_parse_errors():
    good = _toy_text()
    with pytest.raises(ParamFileError):
        paramfile.loads(good.replace("gamma = ", "gamma ="))
    with pytest.raises(ParamFileError):
        paramfile.loads(good.replace("lambda", "lambada"))
    with pytest.raises(ParamFileError):
        paramfile.loads(good + "p = 0x11\n")  # duplicate
    with pytest.raises(ParamFileError):
        paramfile.loads(good + "mystery = 3\n")  # unknown key
    with pytest.raises(ParamFileError):
        paramfile.loads(good.replace("format_version = 1", "format_version = 99"))
    with pytest.raises(ParamFileError):
        paramfile.loads(good.replace("0x8", "0xZ8", 1))
    with pytest.raises(ParamFileError):
        paramfile.loads("\n".join(l for l in good.splitlines() if not l.startswith("p ")))


def test_incomplete_tables_rejected(toy):
    sys, tables = toy
    text = paramfile.dumps(sys, tables)
    without_t = "\n".join(l for l in text.splitlines() if not l.startswith("T ")) + "\n"
    with pytest.raises(ParamFileError):
        paramfile.loads(without_t)


def test_oversized_coefficient_list_rejected():
    good = _toy_text()
    mline = next(l for l in good.splitlines() if l.startswith("M = "))
    bad = good.replace(mline, mline + ",0x1")
    with pytest.raises(ParamFileError):
        paramfile.loads(bad)
