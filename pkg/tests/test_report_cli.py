import csv
import io
import json

import jsonschema
import pytest

from regcorr import QuadParams, certify_single_onsurface
from regcorr.cli import main
from regcorr.report import COLLECTION_SCHEMA, CSV_HEADER, REPORT_SCHEMA, dumps, to_csv, to_json


def test_dumps_seventeen_digits_roundtrip():
    doc = {"x": 0.1, "y": [1, 2.5e-12, None], "s": "a\"b", "t": True}
    text = dumps(doc)
    assert '"x": 0.10000000000000001' in text
    assert dumps(json.loads(text)) == text
    with pytest.raises(ValueError):
        dumps({"x": float("nan")})


def test_table_json_schema_and_roundtrip(table1, table2):
    for table in (table1, table2):
        text = to_json(list(table.values()))
        doc = json.loads(text)
        jsonschema.validate(doc, COLLECTION_SCHEMA)
        assert len(doc) == 6
        assert dumps(doc) == text
        for item in doc:
            assert any("gamma0" in n for n in item["notes"])


def test_single_report_schema():
    r = certify_single_onsurface(QuadParams.from_degrees(3.0, 70.0, 1.0))
    doc = json.loads(to_json(r))
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert doc["kind"] == "single_onsurface_tailonly"
    assert doc["argmax"]["lambda"] is None


def test_csv_format(table2):
    text = to_csv(list(table2.values()))
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == CSV_HEADER == ["a", "rho", "epsilon", "lambda_star", "remainder", "tail"]
    assert len(rows) == 7
    assert "\r\n" in text
    assert all(0.7 <= float(r[3]) <= 0.8 for r in rows[1:])


def test_cli_table1_csv(tmp_path):
    out = tmp_path / "t1.csv"
    assert main(["table1", "--format", "csv", "--out", str(out)]) == 0
    rows = list(csv.reader(open(out, newline="")))
    assert len(rows) == 7 and rows[0][0] == "a"
    assert all(r[3] == "" for r in rows[1:])


def test_cli_certify_json(capsys):
    assert main(["certify", "--kind", "double", "--rho", "3", "--a", "2", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert doc["params"] == {"rho": 3, "theta_deg": 70, "a": 2,
                             "gamma0": doc["params"]["gamma0"], "q0": doc["params"]["q0"]}
    assert 0.7 <= doc["argmax"]["lambda"] <= 0.8


def test_cli_certify_text_with_budget(capsys):
    assert main(["certify", "--rho", "2", "--h", "0.01"]) == 0
    assert "neglected correction" in capsys.readouterr().out


def test_cli_advise(capsys):
    assert main(["advise", "--kind", "double", "--target-eps", "1e-7", "--h", "0.01",
                 "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["params"]["rho"] == 2 and doc["params"]["a"] == 1
    assert main(["advise", "--kind", "double", "--target-eps", "1e-20", "--h", "1"]) == 1
    assert "no parameters qualify" in capsys.readouterr().err


def test_cli_errors(tmp_path, capsys):
    assert main(["certify", "--rho", "0.5"]) == 2
    assert main(["table1", "--out", str(tmp_path / "missing" / "x.json")]) == 2
    with pytest.raises(SystemExit):
        main(["advise", "--h", "0.1"])


def test_cli_selftest(capsys):
    assert main(["selftest"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 4
    assert main(["selftest", "--inject-fault"]) == 1
    out = capsys.readouterr().out
    assert "FAIL lemma1" in out
