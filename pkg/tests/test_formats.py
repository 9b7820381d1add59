from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given

from illusionfree.formats import (
    FormatError,
    emit_formula,
    emit_hitting_set,
    emit_instance,
    emit_solution,
    parse_formula,
    parse_fraction,
    parse_hitting_set,
    parse_id_list,
    parse_instance,
    parse_solution,
    read_instance,
    write_instance,
)
from illusionfree.graph import Recoloring

from conftest import instances

DATA = Path(__file__).parent / "data"
CORPUS = sorted(DATA.glob("*.dif")) + sorted((DATA / "instances").glob("*.dif"))


@pytest.mark.parametrize("path", CORPUS, ids=lambda p: p.stem)
def test_corpus_is_canonical(path):
    text = path.read_text()
    assert emit_instance(parse_instance(text)) == text


def test_square_file(square):
    assert square.n == 4 and len(square.edges) == 4
    assert len((DATA / "square.dif").read_text().splitlines()) == 9


@given(instances(max_n=9))
def test_round_trip(instance):
    assert parse_instance(emit_instance(instance)) == instance


def test_file_helpers(tmp_path, cascade):
    path = tmp_path / "a.dif"
    write_instance(cascade, path)
    assert read_instance(path) == cascade
    assert path.read_bytes() == (DATA / "cascade.dif").read_bytes()


def test_comments_and_blank_lines(square):
    text = "# four-vertex example\n\n" + emit_instance(square).replace("edges 4\n", "edges 4\n\n# arcs\n")
    assert parse_instance(text) == square


@pytest.mark.parametrize(
    "text, where",
    [
        ("difr 1\nn 2\np 3/2\ncolors BR\nedges 0\n", "line 3"),
        ("difr 2\nn 1\np 1/2\ncolors B\nedges 0\n", "line 1"),
        ("difr 1\nn 2\np 1/2\ncolors BX\nedges 0\n", "column 9"),
        ("difr 1\nn 2\np 1/2\ncolors BR\nedges 1\n0 5\n", "line 6"),
        ("difr 1\nn 2\np 1/2\ncolors BR\nedges 2\n0 1\n0 1\n", "duplicate"),
        ("difr 1\nn 2\np 1/2\ncolors BR\nedges 1\n1 1\n", "self-loop"),
        ("difr 1\nn 2\np 1/2\ncolors BR\nedges 2\n0 1\n", "expected 2 edge lines"),
        ("difr 1\nn 2\np 1/2\ncolors BR\nedges 0\ndemand 2 1\n", "demand count"),
        ("difr 1\nn 2\np 1/2\ncolors BR\nedges 0\nlayers 0\n", "layer indices"),
        ("n 2\n", "expected 'difr'"),
    ],
)
def test_malformed_instances(text, where):
    with pytest.raises(FormatError, match=where):
        parse_instance(text)


def test_fractions():
    assert parse_fraction("2/3") == Fraction(2, 3)
    assert parse_fraction("1") == 1
    for bad in ("3/2", "-1/2", "1/0", "half"):
        with pytest.raises(FormatError):
            parse_fraction(bad)


def test_solutions():
    rec = Recoloring([5, 2])
    assert emit_solution(rec) == "2\n5\n"
    assert parse_solution("2\n# note\n5\n") == rec
    assert parse_id_list("") == []
    with pytest.raises(FormatError):
        parse_solution("2\n2\n")
    with pytest.raises(FormatError):
        parse_id_list("1 2\n")


def test_hitting_set_text():
    text = (DATA / "sample.hs").read_text()
    hs = parse_hitting_set(text)
    assert hs.n == 5 and hs.k == 2 and hs.sizes == (3, 3)
    assert emit_hitting_set(hs) == text
    with pytest.raises(FormatError):
        parse_hitting_set("3 2\n0 1\n")
    with pytest.raises(FormatError):
        parse_hitting_set("3 1\n0 7\n")


@pytest.mark.parametrize("path", sorted((DATA / "formulas").glob("*.fml")), ids=lambda p: p.stem)
def test_formula_corpus(path):
    text = path.read_text()
    assert emit_formula(parse_formula(text)) == text


def test_bad_formulas():
    with pytest.raises(FormatError):
        parse_formula("+ a b c\n")
    with pytest.raises(FormatError):
        parse_formula("vars a b c\n* a b c\n")
    with pytest.raises(FormatError):
        parse_formula("vars a b c\n+ a b d\n")
