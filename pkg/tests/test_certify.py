import json

import pytest
from hypothesis import given, strategies as st

from oracles import primes_below, t_solutions
from vtcert.certify import (FAIL, INCONCLUSIVE, LITERAL_CAVEAT, PASS, Certificate, Check, NotPrime,
                            RunConfig, certify_exceptional, certify_family, certify_graph,
                            emit_report, exit_code, family_notes, render_text, solve_t)
from vtcert.graph import cycle, lexicographic, empty, named


def test_solve_t_examples():
    assert solve_t(5) == [2, 3]
    assert solve_t(7) == []
    assert solve_t(13) == [5, 8]
    assert solve_t(2) == [1]


def test_solve_t_rejects_composites():
    for n in (0, 1, 9, 15, 91):
        with pytest.raises(NotPrime):
            solve_t(n)


@given(st.sampled_from(primes_below(1000)))
def test_solve_t_members_square_to_minus_one(p):
    ts = solve_t(p)
    assert ts == t_solutions(p)
    assert all((t * t) % p == p - 1 for t in ts)


def test_run_config_validation():
    with pytest.raises(NotPrime):
        RunConfig(9)
    with pytest.raises(ValueError):
        RunConfig(5, ("sideways",))
    with pytest.raises(ValueError):
        RunConfig(5, aut_cap=0)
    with pytest.raises(ValueError):
        RunConfig(5, format="xml")
    assert RunConfig(5, ("literal", "corrected", "literal")).readings == ("corrected", "literal")


def test_check_invariants():
    with pytest.raises(ValueError):
        Check("x", "maybe")
    with pytest.raises(ValueError):
        Check("x", INCONCLUSIVE)
    assert Check("x", INCONCLUSIVE, bound=10).to_dict()["bound"] == 10


def test_family_p5_corrected_all_pass():
    certs = certify_family(RunConfig(5))
    assert [c.construction["t"] for c in certs] == [2, 3]
    for c in certs:
        assert not c.failed and not c.inconclusive
        names = [ch.name for ch in c.checks]
        assert names == ["construction", "order", "connected", "tetravalent", "vertex_transitive",
                         "bicayley_cyclic_3p", "non_cayley"]
        nc = c.check("non_cayley").detail
        assert {"cap", "f_size", "search_nodes", "aut_order"} <= set(nc)
        assert c.facts["isomorphic_to_partner"] is True


def test_family_p7_is_empty_with_note():
    assert certify_family(RunConfig(7)) == []
    assert "no t exists" in family_notes(7)[0]
    assert family_notes(5) == []


def test_family_literal_readings():
    certs = certify_family(RunConfig(5, ("literal",)))
    by_t = {c.construction["t"]: c for c in certs}
    assert by_t[3].verdict("construction") == FAIL
    assert by_t[3].check("construction").detail["error"] == "IdentityInL"
    assert len(by_t[3].checks) == 1
    assert by_t[2].verdict("construction") == PASS
    for c in certs:
        assert LITERAL_CAVEAT in c.notes
    # literal t=2 is a Cayley graph: the non-Cayley check fails with a witness attached
    assert by_t[2].verdict("non_cayley") == FAIL
    assert by_t[2].check("non_cayley").detail["witness_order"] == 30


def test_non_cayley_inconclusive_carries_bound():
    certs = certify_family(RunConfig(5, aut_cap=50))
    for c in certs:
        chk = c.check("non_cayley")
        assert chk.verdict == INCONCLUSIVE and chk.bound == 50
    assert exit_code(certs) == 0 and exit_code(certs, strict=True) == 1


def test_exceptional():
    certs = certify_exceptional()
    assert [c.graph_id for c in certs] == ["L(petersen)", "L(desargues)", "L(dodecahedron)", "L(coxeter)"]
    lp = certs[0]
    assert lp.facts["aut_order"] == 120
    assert all(ch.verdict == PASS for ch in lp.checks)
    assert {ch.name for ch in lp.checks} >= {"arc_transitive", "non_cayley", "vertex_transitive"}
    for c, order in zip(certs[1:], (30, 30, 42)):
        assert c.check("order").detail["actual"] == order
        assert c.verdict("tetravalent") == PASS and c.verdict("vertex_transitive") == PASS
        assert c.verdict("non_cayley_expected") in (PASS, FAIL)
        assert any("line graph" in n for n in c.notes)


def test_certify_graph_props():
    cert = certify_graph(named("petersen"), ["vt", "et", "arc", "connected", "regular", "cayley"])
    v = {ch.name: ch.verdict for ch in cert.checks}
    assert v == {"vertex_transitive": PASS, "edge_transitive": PASS, "arc_transitive": PASS,
                 "connected": PASS, "regular": PASS, "cayley": FAIL}
    big = certify_graph(lexicographic(cycle(33), empty(2)), ["cayley"])
    assert big.checks[0].verdict == INCONCLUSIVE
    with pytest.raises(ValueError):
        certify_graph(cycle(4), ["girth"])


def test_json_report_empty():
    data = json.loads(emit_report([], "json"))
    assert data["certificates"] == []
    assert list(data)[:1] == ["config"]


def test_json_report_roundtrip_and_determinism(tmp_path):
    cfg = RunConfig(5, ("corrected", "literal"))
    a = emit_report(certify_family(cfg), "json", tmp_path / "a.json", config=cfg.to_dict())
    b = emit_report(certify_family(cfg), "json", tmp_path / "b.json", config=cfg.to_dict())
    assert a == b == (tmp_path / "a.json").read_text()
    data = json.loads(a)
    assert json.loads(json.dumps(data, indent=2)) == data
    assert data["config"] == {"p": 5, "readings": ["corrected", "literal"], "aut_cap": 10 ** 6}
    for cert in data["certificates"]:
        assert list(cert) == ["graph_id", "construction", "reading", "caps", "checks", "facts", "notes"]
        for chk in cert["checks"]:
            assert chk["verdict"] in ("pass", "fail", "inconclusive")
            assert "seconds" not in chk
    # ordered by (t, reading)
    keys = [(c["construction"]["t"], c["reading"]) for c in data["certificates"]]
    assert keys == sorted(keys)


def test_timings_optional():
    certs = certify_family(RunConfig(5))
    data = json.loads(emit_report(certs, "json", timings=True))
    assert all("seconds" in chk for c in data["certificates"] for chk in c["checks"])


def test_text_report_one_line_per_check():
    certs = certify_family(RunConfig(5, ("corrected", "literal")))
    text = render_text(certs)
    rows = [ln for ln in text.splitlines() if ln.startswith("  ") and not ln.startswith("  fact") and not ln.startswith("  note")]
    assert len(rows) == sum(len(c.checks) for c in certs)
    for row in rows:
        assert row.split()[1] in ("PASS", "FAIL", "INCONCLUSIVE")
    # aligned verdict column within each block
    block = text.split("== ")[1].splitlines()[1:]
    cols = {ln.index(ln.split()[1]) for ln in block if ln.startswith("  ") and ln.split()[0] != "fact:"}
    assert len(cols) == 1


def test_emit_report_io_error_has_path(tmp_path):
    bad = tmp_path / "nope" / "r.json"
    with pytest.raises(OSError, match="nope"):
        emit_report([], "json", bad)
    with pytest.raises(ValueError):
        emit_report([], "yaml")


def test_exit_code():
    ok = Certificate("a", {}, {}, checks=[Check("x", PASS)])
    bad = Certificate("b", {}, {}, checks=[Check("x", FAIL)])
    assert exit_code([ok]) == 0 and exit_code([ok, bad]) == 1 and exit_code([]) == 0
