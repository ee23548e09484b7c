import json

import pytest

from src.core.data_parser import load_rmatrix, parse_rmatrix
from src.core.errors import BraidingValidationError
from src.core.rmatrix import HECKE, INVOLUTIVE, drinfeld_jimbo_operator, flip_operator

FLIP2 = {"dim": 2, "entries": [[1, 1, 1, 1, "1"], [1, 2, 2, 1, "1"],
                               [2, 1, 1, 2, "1"], [2, 2, 2, 2, "1"]]}
DJ2 = {"dim": 2, "entries": [[1, 1, 1, 1, "q"], [2, 2, 2, 2, "q"], [1, 2, 2, 1, "1"],
                             [2, 1, 1, 2, "1"], [1, 2, 1, 2, "q - q^-1"]]}


def write(tmp_path, name, document):
    path = tmp_path / name
    path.write_text(json.dumps(document), encoding="utf-8")
    return str(path)


def test_load_flip(tmp_path):
    braiding = load_rmatrix(write(tmp_path, "flip2.json", FLIP2))
    assert braiding.kind == INVOLUTIVE
    assert braiding.name == "flip2"
    assert braiding.r.equals(flip_operator(2))


def test_load_drinfeld_jimbo(tmp_path):
    braiding = load_rmatrix(write(tmp_path, "dj2.json", DJ2))
    assert braiding.kind == HECKE
    assert braiding.r.equals(drinfeld_jimbo_operator(2))


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_rmatrix(str(tmp_path / "absent.json"))


def test_invalid_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{\"dim\": 2,", encoding="utf-8")
    with pytest.raises(ValueError, match="line 1"):
        load_rmatrix(str(path))


@pytest.mark.parametrize("document,message", [
    ({"dim": 2}, "must contain fields"),
    ({"dim": 0, "entries": []}, "positive integer"),
    ({"dim": 2, "entries": [[1, 2, 3]]}, "entry 1"),
    ({"dim": 2, "entries": [[1, 2, 3, 1, "1"]]}, "outside 1..2"),
    ({"dim": 2, "entries": [[1, 1, 1, 1, "1"], [1, 1, 1, 1, "2"]]}, "given twice"),
    ({"dim": 2, "entries": [[1, 1, 1, 1, "q +* "]]}, "entry 1"),
])
def test_malformed_records(document, message):
    with pytest.raises(ValueError, match=message):
        parse_rmatrix(document)


def test_non_braiding_reports_witness(tmp_path):
    document = {"dim": 2, "entries": [[1, 1, 1, 1, "2"], [2, 2, 2, 2, "2"],
                                      [1, 2, 1, 2, "2"], [2, 1, 2, 1, "2"]]}
    with pytest.raises(BraidingValidationError) as info:
        load_rmatrix(write(tmp_path, "twice.json", document))
    assert info.value.witness
