import io
import json

import numpy as np
import pytest

from fnca import EngineConfig, RnSpec, generate_rn, run
from fnca.io import (
    FormatError,
    ResultRecord,
    labels_to_array,
    read_edge_list,
    read_labels,
    read_records,
    write_edge_list,
    write_labels,
    write_records,
)


def test_single_edge():
    g, ids = read_edge_list(io.StringIO("0 1\n"))
    assert (g.n, g.m) == (2, 1)
    assert ids.tolist() == [0, 1]


def test_comment_duplicate_and_remap():
    g, ids = read_edge_list(io.StringIO("# comment\n7 9\n9 7\n"))
    assert (g.n, g.m) == (2, 1)
    assert ids.tolist() == [7, 9]


def test_tabs_and_blank_lines():
    g, _ = read_edge_list(io.StringIO("1\t2\n\n2 3\n"))
    assert g.m == 2


def test_karate_file(karate):
    from importlib import resources

    path = resources.files("fnca.data").joinpath("karate.txt")
    g, ids = read_edge_list(str(path))
    assert (g.n, g.m) == (34, 78)


@pytest.mark.parametrize("text, line", [("0 1\n1 x\n", 2), ("0 1 2\n", 1), ("-1 3\n", 1)])
def test_malformed_line(text, line):
    with pytest.raises(FormatError, match=f"line {line}"):
        read_edge_list(io.StringIO(text))


def test_empty_file():
    with pytest.raises(FormatError, match="empty"):
        read_edge_list(io.StringIO("# nothing\n"))


def test_orientation_insensitive():
    a, _ = read_edge_list(io.StringIO("0 1\n1 2\n2 0\n"))
    b, _ = read_edge_list(io.StringIO("1 0\n2 1\n0 2\n0 2\n"))
    assert a == b


def test_labels_round_trip(karate, tmp_path):
    res = run(karate, EngineConfig(seed=3))
    ids = np.arange(100, 134)
    path = tmp_path / "labels.tsv"
    write_labels(res.labels, ids, path)
    mapping = read_labels(path)
    assert labels_to_array(mapping, ids).tolist() == res.labels.labels
    assert path.read_bytes().count(b"\n") == 34


def test_planted_labels_file(tmp_path):
    pg = generate_rn(RnSpec(4, 32, 16, 5, seed=0))
    path = tmp_path / "planted.tsv"
    write_labels(pg.planted, None, path)
    assert len(path.read_text().splitlines()) == 128


def test_empty_labeling_rejected():
    with pytest.raises(FormatError):
        write_labels([], None, io.StringIO())


def test_unknown_and_missing_ids():
    with pytest.raises(FormatError, match="unknown external id 5"):
        labels_to_array({0: 1, 5: 2}, [0, 1])
    with pytest.raises(FormatError, match="no label for external id 1"):
        labels_to_array({0: 1}, [0, 1])


def test_writers_are_byte_identical(tmp_path):
    pg = generate_rn(RnSpec(4, 32, 16, 5, seed=7))
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    write_edge_list(pg.graph, a)
    write_edge_list(generate_rn(RnSpec(4, 32, 16, 5, seed=7)).graph, b)
    assert a.read_bytes() == b.read_bytes()
    assert b"\r" not in a.read_bytes()


def test_result_record_round_trip(karate, tmp_path):
    res = run(karate, EngineConfig(seed=2))
    rec = ResultRecord.from_result("karate", karate, res)
    text = rec.dumps()
    back = ResultRecord.loads(text)
    assert back.q == float(format(res.q, ".12g"))
    assert back.dumps() == text
    assert list(json.loads(text)) == sorted(json.loads(text))
    path = tmp_path / "r.jsonl"
    write_records([rec, rec], path, {"q": {"mean": 0.1}})
    recs, summary = read_records(path)
    assert recs == [back, back] and summary == {"q": {"mean": 0.1}}


def test_result_record_rejects_unknown_keys():
    with pytest.raises(FormatError):
        ResultRecord.loads('{"bogus": 1}')
