import io
import json

import pytest

from soltes import (
    BadParameterError,
    EmptyStreamError,
    ScanFilter,
    complete,
    cycle,
    encode_graph6,
    fig5_60,
    from_edge_list,
    negative_soltes_check,
    path,
    scan,
    vt_diameter_prefilter,
    wiener_cycle,
    wiener_path,
    write_edgelist,
)
from soltes.census import edgelist_records, open_records
from soltes.metrics import eccentricities
from soltes.smallgraphs import connected_graphs


def g6_stream(graphs):
    return [encode_graph6(G) + "\n" for G in graphs]


def test_prefilter_examples():
    assert not vt_diameter_prefilter(14, 3)
    assert vt_diameter_prefilter(10, 3)
    assert not vt_diameter_prefilter(47, 16)
    assert vt_diameter_prefilter(45, 16)


def test_prefilter_never_rejects_large_diameter():
    for n in range(1, 9):
        for G in connected_graphs(n):
            if n < 2 or not G.is_regular:
                continue
            if vt_diameter_prefilter(G.n, G.min_degree):
                assert int(eccentricities(G).max()) <= 3


def test_scan_filter_needs_criterion():
    with pytest.raises(BadParameterError):
        ScanFilter(classify_fully=False)
    ScanFilter(min_degree_at_least=2, classify_fully=False)


def test_cycles_only_c11():
    report = scan(g6_stream(cycle(n) for n in range(3, 51)))
    assert report.total == 48
    assert [r.n for r in report.soltes_graphs] == [11]
    assert [r.index for r in report.classified] == list(range(48))
    # deleting a cycle vertex leaves a path, so z is constant everywhere
    assert all(r.z == wiener_cycle(r.n) - wiener_path(r.n - 1) for r in report.classified)


def test_complete_witnesses():
    report = scan(g6_stream(complete(n) for n in range(2, 11)))
    assert [r.z for r in report.constant_z] == list(range(1, 10))


def test_fig5_record():
    (rec,) = scan([encode_graph6(fig5_60())]).classified
    assert rec.n == 60 and rec.soltes == 40 and rec.z == "non-constant"
    assert rec.negative_soltes is False


def test_negative_soltes_check():
    assert negative_soltes_check(cycle(11))
    assert not negative_soltes_check(complete(5))
    assert wiener_path(11) == 220 and wiener_cycle(12) == 216
    assert negative_soltes_check(cycle(12))
    assert not negative_soltes_check(path(4))


def test_prefilter_reasons():
    stream = [complete(1), from_edge_list(4, [(0, 1), (2, 3)]), path(5), cycle(9), cycle(5)]
    report = scan(stream, ScanFilter(min_degree_at_least=2, require_diameter_at_least=3))
    assert report.prefiltered["trivial"] == 1
    assert report.prefiltered["disconnected"] == 1
    assert report.prefiltered["min_degree"] == 1
    assert report.prefiltered["diameter"] == 1
    assert [r.index for r in report.classified] == [3]
    assert report.total == sum(report.prefiltered.values()) + len(report.classified)


def test_vt_prefilter_in_scan():
    flt = ScanFilter(require_diameter_at_least=4, vertex_transitive=True)
    report = scan([complete(4), cycle(10)], flt)
    assert report.prefiltered["vt_diameter_bound"] == 1
    assert [r.n for r in report.classified] == [10]


def test_decode_errors_are_skipped():
    lines = ["Dhc\n", "garbage!\n", "C~\n", "D~\n"]
    report = scan(lines)
    assert report.total == 4
    assert report.decode_errors == [1, 3]
    assert [r.index for r in report.classified] == [0, 2]


def test_empty_stream():
    with pytest.raises(EmptyStreamError):
        scan([])
    with pytest.raises(EmptyStreamError):
        scan(open_records(io.StringIO("\n  \n"), "graph6"))


def test_edgelist_stream():
    text = write_edgelist(cycle(11)) + "# sep\n" + "x y\n" + write_edgelist(complete(3))
    blocks = list(edgelist_records(io.StringIO(text)))
    assert len(blocks) == 3
    report = scan(open_records(io.StringIO(text), "edgelist"), fmt="edgelist")
    assert report.decode_errors == [1]
    assert [r.n for r in report.classified] == [11, 3]


def test_workers_do_not_change_report():
    graphs = [G for n in range(3, 8) for G in connected_graphs(n)]
    ref = scan(g6_stream(graphs)).to_json()
    for w in (2, 8):
        assert scan(g6_stream(graphs), workers=w, batch_size=37).to_json() == ref
    data = json.loads(ref)
    assert data["schema"] == 1 and data["total"] == len(graphs)


def test_no_classify_records_only_shape():
    report = scan([cycle(7)], ScanFilter(min_degree_at_least=2, classify_fully=False))
    (rec,) = report.classified
    assert (rec.n, rec.m, rec.z) == (7, 7, None)
