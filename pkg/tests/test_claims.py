import json

import pytest

from hopfcheck.claims import CLAIMS, run_claims, select


def test_every_claim_passes(tmp_path):
    report = run_claims(outdir=tmp_path)
    failed = [r.id for r in report.records if r.status == "fail"]
    assert report.ok, failed
    assert len(report.records) == len(CLAIMS)
    for name in ("cayley_monogenic_extension.dot", "tree_window.dot", "tree_subgraph_window.dot"):
        assert (tmp_path / name).read_text().strip()


def test_ids_are_unique():
    ids = [c.id for c in CLAIMS]
    assert len(ids) == len(set(ids))


def test_select_by_prefix_and_id():
    assert {c.id for c in select("finite")} == {"finite.power-stabilizer", "finite.clifford-green"}
    assert [c.id for c in select("tree.shift")] == ["tree.shift"]
    with pytest.raises(KeyError):
        select("no-such-claim")


def test_report_json_is_deterministic():
    a = run_claims("one-relator").to_json()
    b = run_claims("one-relator").to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
