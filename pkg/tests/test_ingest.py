import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sna.ingest import (
    DUPLICATE,
    MALFORMED,
    SELF_LOOP,
    IngestError,
    build_id_map,
    format_edge_list,
    parse_edge_list,
)


def test_smallest_input():
    edges = parse_edge_list("# c\n0\t1\n")
    assert edges.arc_set() == {(0, 1)}
    assert edges.distinct_nodes == 2
    assert edges.warnings == ()


def test_self_loop_dropped_with_warning():
    edges = parse_edge_list("5\t5\n0\t1\n")
    assert edges.arc_set() == {(0, 1)}
    assert [(w.line, w.kind) for w in edges.warnings] == [(1, SELF_LOOP)]


def test_duplicate_dropped_with_warning():
    edges = parse_edge_list("0 1\n0 1\n")
    assert len(edges) == 1
    assert [(w.line, w.kind) for w in edges.warnings] == [(2, DUPLICATE)]


def test_reverse_arc_is_not_a_duplicate():
    assert len(parse_edge_list("0 1\n1 0\n")) == 2


def test_crlf_and_mixed_whitespace():
    edges = parse_edge_list("# header\r\n1 \t 2\r\n3    4\r\n\r\n")
    assert edges.arc_set() == {(1, 2), (3, 4)}


@pytest.mark.parametrize("line", ["0 x", "0 1 2", "7", "-1 3", "1.5 2"])
def test_malformed_is_fatal_with_line_number(line):
    with pytest.raises(IngestError) as err:
        parse_edge_list(f"0 1\n{line}\n")
    assert err.value.line == 2
    assert "line 2" in str(err.value)


def test_lenient_skips_malformed():
    edges = parse_edge_list("0 1\n0 x\n2 3\n", lenient=True)
    assert edges.arc_set() == {(0, 1), (2, 3)}
    assert [(w.line, w.kind) for w in edges.warnings] == [(2, MALFORMED)]


def test_zero_arcs_is_an_error():
    with pytest.raises(IngestError, match="zero arcs"):
        parse_edge_list("# only comments\n")
    with pytest.raises(IngestError, match="zero arcs"):
        parse_edge_list("7\t7\n")


def test_missing_file():
    with pytest.raises(IngestError, match="file not found"):
        parse_edge_list("/nonexistent/wiki.txt")


def test_reads_path_and_gzip(tmp_path):
    import gzip

    plain = tmp_path / "g.txt"
    plain.write_text("# x\n1\t2\n2\t3\n")
    gz = tmp_path / "g.txt.gz"
    with gzip.open(gz, "wt") as fh:
        fh.write("1\t2\n2\t3\n")
    assert parse_edge_list(plain).arc_set() == parse_edge_list(str(gz)).arc_set()


def test_id_map_ascending_external_order():
    edges = parse_edge_list("30 3\n25 30\n")
    ids = build_id_map(edges)
    assert ids.external_to_internal == {3: 0, 25: 1, 30: 2}
    assert ids.internal_to_external.tolist() == [3, 25, 30]
    assert ids.external(2) == 30 and ids.internal(25) == 1


arc_lists = st.lists(st.tuples(st.integers(0, 40), st.integers(0, 40)), min_size=1, max_size=80)


@given(arc_lists)
def test_distinct_nodes_matches_set_oracle(arcs):
    text = "".join(f"{a}\t{b}\n" for a, b in arcs)
    kept = {(a, b) for a, b in arcs if a != b}
    if not kept:
        with pytest.raises(IngestError):
            parse_edge_list(text)
        return
    edges = parse_edge_list(text)
    assert edges.arc_set() == kept
    assert edges.distinct_nodes == len({x for arc in kept for x in arc})
    ids = build_id_map(edges)
    assert sorted(ids.external_to_internal.values()) == list(range(len(ids)))


@given(arc_lists, st.randoms(use_true_random=False))
def test_round_trip_and_order_insensitive(arcs, rnd):
    arcs = [a for a in arcs if a[0] != a[1]]
    if not arcs:
        return
    edges = parse_edge_list("".join(f"{a} {b}\n" for a, b in arcs))
    again = parse_edge_list(format_edge_list(edges.arcs, header="export"))
    assert again.arc_set() == edges.arc_set()
    shuffled = list(arcs)
    rnd.shuffle(shuffled)
    assert parse_edge_list("".join(f"{a} {b}\n" for a, b in shuffled)).arc_set() == edges.arc_set()
