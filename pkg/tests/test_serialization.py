import io
import json

import numpy as np
import pytest

from symslocc import LocalOperation, SpinorPoint, dicke_state, ghz_state
from symslocc import serialization as ser
from symslocc.majorana import majorana_points


def test_complex_encoding():
    assert ser.complex_to_json(1 - 2j) == [1.0, -2.0]
    assert ser.complex_from_json([0.5, 3]) == 0.5 + 3j
    assert ser.complex_from_json(2) == 2
    with pytest.raises(ser.FormatError):
        ser.complex_from_json("1+2j")


def test_state_round_trip():
    s = ghz_state(3)
    obj = json.loads(ser.dumps(ser.state_to_json(s)))
    assert obj["n"] == 3 and len(obj["dicke"]) == 4
    assert ser.state_from_json(obj) == s


def test_points_format():
    obj = {"n": 3, "points": [{"alpha": [1, 0], "beta": [0, 0], "mult": 2},
                              {"alpha": [0, 0], "beta": [1, 0], "mult": 1}]}
    assert ser.state_from_json(obj) == dicke_state(3, 1)
    d = ser.decomposition_from_json(obj)
    assert d.configuration.parts == (2, 1)
    again = ser.decomposition_from_json(json.loads(ser.dumps(ser.decomposition_to_json(d))))
    assert again == d


def test_duplicate_point_entries_merge():
    obj = {"n": 2, "points": [{"alpha": [1, 0], "beta": [0, 0]}, {"alpha": [2, 0], "beta": [0, 0]}]}
    assert ser.decomposition_from_json(obj).points == ((SpinorPoint.infinity(), 2),)


def test_malformed_records():
    with pytest.raises(ser.FormatError):
        ser.state_from_json({"dicke": []})
    with pytest.raises(ser.FormatError):
        ser.state_from_json({"n": 2})
    with pytest.raises(ser.FormatError):
        ser.ilo_from_json({"matrix": [[1, 2]]})


def test_ilo_round_trip():
    op = LocalOperation(1 + 1j, 0.5, -2j, 3)
    obj = json.loads(ser.dumps(ser.ilo_to_json(op)))
    assert np.array(obj["matrix"]).shape == (2, 2, 2)
    assert ser.ilo_from_json(obj) == op


def test_dumps_is_deterministic_and_compact():
    text = ser.dumps(ser.decomposition_to_json(majorana_points(ghz_state(4))))
    assert text == ser.dumps(ser.decomposition_to_json(majorana_points(ghz_state(4))))
    assert '"alpha": [' in text and text.endswith("\n")
    assert json.loads(text)["n"] == 4


def test_stdin_stdout(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO('{"n": 1, "dicke": [[1, 0], [0, 0]]}'))
    assert ser.read_json("-") == {"n": 1, "dicke": [[1, 0], [0, 0]]}
    ser.write_json({"a": 1}, "-")
    assert json.loads(capsys.readouterr().out) == {"a": 1}


def test_invalid_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{nope")
    with pytest.raises(ser.FormatError):
        ser.read_json(str(p))
