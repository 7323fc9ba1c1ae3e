from fractions import Fraction

import pytest

from catalan_halves import oeis_catalog as oc
from catalan_halves.errors import DomainError, ParseError


@pytest.fixture(scope="module")
def fixture_catalog():
    return oc.load_default()


def test_parse_line():
    cat = oc.parse("A000108 ,1,1,2,5,14,42,\n")
    assert cat.entries == {"A000108": (1, 1, 2, 5, 14, 42)}


def test_empty_file(tmp_path):
    p = tmp_path / "empty.txt"
    p.write_text("")
    assert len(oc.load(p)) == 0


def test_comments_skipped():
    assert len(oc.parse("# header\n\nA000012 ,1,1,1,1,1,\n")) == 1


def test_malformed_line_number():
    with pytest.raises(ParseError, match="line 3"):
        oc.parse("# c\nA000001 ,1,2,\nnot a line\n")


def test_non_integer_term():
    with pytest.raises(ParseError, match="line 1"):
        oc.parse("A000001 ,1,x,\n")


def test_duplicate():
    with pytest.raises(ParseError, match="duplicate"):
        oc.parse("A000001 ,1,\nA000001 ,2,\n")


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        oc.load(tmp_path / "absent.txt")


def test_catalan_found(fixture_catalog):
    hits = oc.lookup(fixture_catalog, [1, 1, 2, 5, 14, 42, 132])
    assert ("A000108", 0) in hits


def test_gould(fixture_catalog):
    assert ("A001316", 0) in oc.lookup(fixture_catalog, [1, 2, 2, 4, 2, 4, 4, 8])


def test_shifted_match(fixture_catalog):
    hits = oc.lookup(fixture_catalog, [2, 5, 14, 42, 132], max_shift=3)
    assert ("A000108", 2) in hits
    assert ("A000108", 2) not in oc.lookup(fixture_catalog, [2, 5, 14, 42, 132], max_shift=1)


def test_all_zero_rejected(fixture_catalog):
    with pytest.raises(DomainError, match="nonzero"):
        oc.lookup(fixture_catalog, [0] * 8)


def test_short_rejected(fixture_catalog):
    with pytest.raises(DomainError, match="at least 5"):
        oc.lookup(fixture_catalog, [1, 2, 3])


def test_non_integral_rejected(fixture_catalog):
    with pytest.raises(DomainError):
        oc.lookup(fixture_catalog, [1, Fraction(1, 2), 1, 1, 1])


def test_ordering():
    cat = oc.parse("A000003 ,9,1,2,3,4,5,\nA000002 ,1,2,3,4,5,\nA000001 ,1,2,3,4,5,6,\n")
    assert oc.lookup(cat, [1, 2, 3, 4, 5]) == [("A000001", 0), ("A000002", 0), ("A000003", 1)]


def test_round_trip(fixture_catalog):
    for anum, terms in fixture_catalog.entries.items():
        assert (anum, 0) in oc.lookup(fixture_catalog, terms[:8])


def test_fixture_covers_cited_numbers(fixture_catalog):
    for anum in ("A000108", "A001316", "A106566", "A007318", "A039598", "A001519", "A001906"):
        assert anum in fixture_catalog


def test_environment_variable(tmp_path, monkeypatch):
    p = tmp_path / "mini.txt"
    p.write_text("A999999 ,7,7,7,7,7,\n")
    monkeypatch.setenv(oc.ENV_VAR, str(p))
    assert list(oc.load_default().entries) == ["A999999"]
