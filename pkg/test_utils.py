import logging

import pytest

from config import get_settings
from core import CGraph
from exceptions import CGraphParseError, InvalidArgs
from utils import (
    format_cgraph_text,
    format_image_list,
    format_int_grid,
    parse_cgraph_text,
    parse_image_list,
    parse_int_grid,
    read_text,
    timed,
)

SAMPLE = """# a 1-colored edge and a 2-colored edge
cgraph p=3 n=4

0 1 1
2 3 2  # trailing comment
"""


def test_parse_cgraph_text(gf3):
    g = parse_cgraph_text(SAMPLE)
    assert g == CGraph(4, gf3, {(0, 1): 1, (2, 3): 2})


def test_format_then_parse(mixed4):
    text = format_cgraph_text(mixed4, comments=["four vertices"])
    assert text.splitlines()[:2] == ["# four vertices", "cgraph p=3 n=4"]
    assert parse_cgraph_text(text) == mixed4


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("", None, "empty"),
        ("graph p=3 n=2\n", 1, "expected 'cgraph"),
        ("cgraph p=4 n=2\n", 1, "not a prime"),
        ("cgraph p=3 n=2\n0 1\n", 2, "expected '<u> <v> <color>'"),
        ("cgraph p=3 n=2\n1 0 1\n", 2, "need 0 <= u < v"),
        ("cgraph p=3 n=2\n0 1 3\n", 2, "outside 1..2"),
        ("cgraph p=3 n=2\n0 1 0\n", 2, "outside 1..2"),
        ("cgraph p=3 n=3\n0 1 1\n# note\n0 1 2\n", 4, "duplicate pair"),
        ("cgraph p=3 n=2\n0 x 1\n", 2, "expected '<u> <v> <color>'"),
    ],
)
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(CGraphParseError) as excinfo:
        parse_cgraph_text(text)
    assert excinfo.value.line == line
    assert fragment in str(excinfo.value)
    if line is not None:
        assert str(excinfo.value).startswith(f"line {line}: ")


def test_unsorted_edges_only_warn(caplog, gf3):
    with caplog.at_level(logging.WARNING, logger="utils"):
        g = parse_cgraph_text("cgraph p=3 n=3\n1 2 1\n0 1 2\n")
    assert g == CGraph(3, gf3, {(0, 1): 2, (1, 2): 1})
    assert "out of lexicographic order" in caplog.text


def test_image_lists():
    assert parse_image_list("2 0 1") == (2, 0, 1)
    assert format_image_list((2, 0, 1)) == "2 0 1"
    with pytest.raises(InvalidArgs):
        parse_image_list("0 0 1")
    with pytest.raises(InvalidArgs):
        parse_image_list("0 a")
    with pytest.raises(InvalidArgs):
        parse_image_list("1 0", size=3)


def test_int_grids():
    rows = parse_int_grid("1 2 0\n# comment\n0 2 3\n")
    assert rows == [[1, 2, 0], [0, 2, 3]]
    assert format_int_grid(rows) == "1 2 0\n0 2 3\n"
    with pytest.raises(CGraphParseError):
        parse_int_grid("1 2\n1\n")
    with pytest.raises(CGraphParseError):
        parse_int_grid("1 -2\n")


def test_read_text(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text(SAMPLE)
    assert read_text(str(path)) == SAMPLE
    with pytest.raises(InvalidArgs):
        read_text(str(tmp_path / "missing.txt"))


def test_timed_logs_elapsed_time(caplog):
    @timed
    def work(x):
        return x * 2

    with caplog.at_level(logging.INFO):
        assert work(21) == 42
    assert "work finished in" in caplog.text


def test_settings_defaults_and_overrides(monkeypatch, caplog):
    settings = get_settings()
    assert settings.search_limit == 10
    assert settings.census_budget == 10_000_000
    assert settings.database_url == "sqlite:///cgraph_census.db"
    assert settings.log_level == "WARNING"
    monkeypatch.setenv("CGRAPH_SEARCH_LIMIT", "7")
    monkeypatch.setenv("CGRAPH_LOG_LEVEL", "debug")
    assert get_settings().search_limit == 7
    assert get_settings().log_level == "DEBUG"
    monkeypatch.setenv("CGRAPH_SEARCH_LIMIT", "lots")
    with caplog.at_level(logging.ERROR, logger="config"):
        assert get_settings().search_limit == 10
    assert "not an integer" in caplog.text
