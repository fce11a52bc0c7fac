import json

import pytest
from hypothesis import given

from domlab import graph6
from domlab.canon import is_isomorphic
from domlab.graph import complete, copies, empty, join, witness8
from domlab.verify import (VerificationReport, all_graphs, lemma_sweep, q_max, relaxed_bound,
                           revalidate_violation, sharpness_gallery, theorem1_applicable,
                           theorem1_domain, tightness_search, verify_theorem1,
                           verify_theorem1_exhaustive)
from strategies import graphs


def strip_time(rep):
    d = rep.to_dict()
    d.pop("wall_time")
    return d


def test_q_max_values():
    assert [q_max(d) for d in (2, 3, 4, 5)] == [8, 14, 26, 41]
    with pytest.raises(ValueError):
        q_max(1)


def test_q_max_law_and_monotone():
    for d in range(3, 40):
        # 3(d-1)(d+2) is even, so the floor drops a whole half
        assert (3 * (d - 1) * (d + 2)) % 2 == 0
        assert 2 * q_max(d) + 2 == 3 * (d - 1) * (d + 2)
        assert q_max(d + 1) > q_max(d)
        assert relaxed_bound(d) == q_max(d) + 1
    assert relaxed_bound(2) == 9


@given(graphs(min_n=3, max_n=10))
def test_applicable_graphs_respect_handshake_bound(g):
    if theorem1_applicable(g):
        d = g.min_degree()
        assert g.n <= 2 * q_max(d) // d


def test_exhaustive_delta2():
    rep = verify_theorem1_exhaustive(2)
    assert rep.confirmed and rep.graphs_scanned == rep.applicable == 31


def test_domain_refuses_beyond_enumeration():
    with pytest.raises(ValueError):
        theorem1_domain(4)
    assert sum(1 for _ in theorem1_domain(4, n_max=6)) > 0


def test_stream_skips_inapplicable_graphs():
    k1_2k2 = join(complete(1), copies(complete(2), 2))
    rep = verify_theorem1([k1_2k2, witness8(), complete(4), join(complete(2), empty(3))])
    assert rep.graphs_scanned == 4
    assert rep.applicable == 2          # K4 and K2+3K1
    assert rep.confirmed


def test_bad_rows_become_errors():
    rep = verify_theorem1(["C~", "C", "Bw"])
    assert rep.graphs_scanned == 2
    assert len(rep.errors) == 1 and rep.errors[0]["graph6"] == "C"
    assert not rep.confirmed


def test_serial_and_parallel_reports_agree():
    lines = [graph6.emit(g) for g in all_graphs(7, n_min=5)]
    serial = lemma_sweep(lines, "23E", threads=1, chunk=97)
    parallel = lemma_sweep(lines, "23E", threads=2, chunk=97)
    assert strip_time(serial) == strip_time(parallel)
    assert serial.confirmed


def test_merge_is_order_independent():
    lines = [graph6.emit(g) for g in all_graphs(6)]
    whole = lemma_sweep(lines, "1234DE")
    parts = [lemma_sweep(lines[i::3], "1234DE") for i in range(3)]
    a = VerificationReport("lemmas", whole.spec)
    for p in parts:
        a.merge(p)
    b = VerificationReport("lemmas", whole.spec)
    for p in reversed(parts):
        b.merge(p)
    a.finalize(), b.finalize()
    assert a.checks == b.checks == whole.checks
    assert a.graphs_scanned == whole.graphs_scanned


def test_report_lines_and_round_trip(tmp_path):
    rep = tightness_search(2, 9, 9, n_max=8)
    rows = [json.loads(line) for line in rep.lines()]
    assert rows[0]["type"] == "summary" and rows[0]["violations"] == len(rep.violations)
    assert all(r["type"] == "violation" for r in rows[1:])
    again = VerificationReport.from_dict(json.loads(json.dumps(rep.to_dict())))
    assert again.to_dict() == rep.to_dict()
    path = tmp_path / "r.ndjson"
    rep.write(str(path))
    assert path.read_text().count("\n") == len(rows)


def test_tightness_witnesses_revalidate():
    rep = tightness_search(2, 9, 9, n_max=8)
    assert any(is_isomorphic(graph6.parse(r["graph6"]), witness8()) for r in rep.violations)
    for row in rep.violations:
        assert revalidate_violation(row, require_applicable=False)
        assert not revalidate_violation(row)          # q=9 lies outside the theorem
        tampered = dict(row, longest=row["longest"] + 1)
        assert not revalidate_violation(tampered, require_applicable=False)


def test_tightness_delta3():
    at15 = tightness_search(3, 15, 15, n_max=10)
    assert [r["graph6"] for r in at15.violations] == ["G@QF~w"]
    at16 = tightness_search(3, 16, 16, n_max=10)
    k2_3k2 = join(complete(2), copies(complete(2), 3))
    assert any(is_isomorphic(graph6.parse(r["graph6"]), k2_3k2) for r in at16.violations)


def test_tightness_argument_checks():
    with pytest.raises(ValueError):
        tightness_search(1, 5, 5)
    with pytest.raises(ValueError):
        tightness_search(3, 16, 15)
    with pytest.raises(ValueError):
        tightness_search(3, 40, 40)


def test_gallery_delta2():
    entries = {e.name: e for e in sharpness_gallery(2)}
    w = entries["witness8"].analysis
    assert (w["q"], w["kappa"], w["longest"]) == (9, 2, 6)
    assert w["nondominating_longest_cycle"] and w["claim_holds"]
    c = entries["K1+2K2"].analysis
    assert (c["kappa"], c["q"]) == (1, 6) and c["nondominating_longest_cycle"]
    h = entries["K2+3K1"].analysis
    assert h["q"] == 7 and not h["hamiltonian"] and not h["nondominating_longest_cycle"]
    assert all(e.analysis["claim_holds"] for e in entries.values())


def test_gallery_delta3_flags_discrepancies():
    entries = {e.name: e.analysis for e in sharpness_gallery(3)}
    assert entries["K1+2K3"]["kappa"] == 1 and entries["K1+2K3"]["claim_holds"]
    size = entries["K2+3K2"]
    assert size["q"] == 16 and size["nondominating_longest_cycle"]
    assert not size["claim_holds"] and "relaxed bound 15" in size["discrepancy"]
    concl = entries["K3+4K1"]
    assert concl["q"] == 15 and not concl["claim_holds"] and "q_max=14" in concl["discrepancy"]
    assert not concl["nondominating_longest_cycle"] and not concl["hamiltonian"]


def test_gallery_delta4():
    entries = {e.name: e.analysis for e in sharpness_gallery(4)}
    concl = entries["K4+5K1"]
    assert concl["q"] == 26 == q_max(4)
    assert concl["longest"] == 8 and not concl["hamiltonian"]
    assert not concl["nondominating_longest_cycle"] and concl["claim_holds"]
    assert entries["K2+3K3"]["q"] == relaxed_bound(4) + 1
