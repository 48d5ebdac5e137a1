import numpy as np
import pytest

from vmcalc import enumeration as en
from vmcalc import verify
from vmcalc.equivalence import local_orbit, locally_equivalent_cycle_length, non_essential_vertices
from vmcalc.graph import Graph, contract_vertex, is_prime
from vmcalc.theta import build_theta


def strip_time(rep):
    return rep.to_text(include_time=False)


def test_report_pass_flag():
    rep = verify.VerificationReport("thm1", 5, 5)
    assert rep.passed and "pass: true" in rep.to_text()
    rep.add(Graph.cycle(5), "note")
    assert not rep.passed
    text = rep.to_text()
    assert "counterexamples: 1" in text and "  - Dhc note" in text


def test_report_truncation():
    rep = verify.VerificationReport("thm1", 5, 5)
    for _ in range(verify.MAX_COUNTEREXAMPLES + 3):
        rep.add(Graph.cycle(5))
    assert len(rep.counterexamples) == verify.MAX_COUNTEREXAMPLES
    assert f"counterexamples: {verify.MAX_COUNTEREXAMPLES + 3}" in rep.to_text()


def test_five_vertex_primes_are_all_cycle_equivalent():
    c = verify.census(5)
    assert len(c.codes) == 132
    assert c.orbit_cycle.all()
    assert en.graph_code(Graph.cycle(5)) in set(c.codes.tolist())


def test_census_matches_scalar_code_at_six():
    c = verify.census(6)
    rng = np.random.default_rng(0)
    for i in rng.choice(len(c.codes), 40, replace=False):
        G = c.graph(int(i))
        ne = non_essential_vertices(G)
        assert sum(1 << v for v in ne) == int(c.ne_mask[i])
        k = locally_equivalent_cycle_length(G)
        assert c.orbit_cycle[c.orbit[i]] == (k is not None)
        assert len(local_orbit(G)) == int((c.orbit == c.orbit[i]).sum())


@pytest.mark.parametrize("theorem", ["thm1", "thm3", "cor-bippiv", "fan", "partition"])
def test_census_theorems_small(theorem):
    rep = verify.run_verify(theorem, 5, 6)
    assert rep.passed, rep.to_text()
    assert rep.details["orbits_with_varying_non_essential_set"] == "0"


@pytest.mark.parametrize("theorem", ["thm1", "thm3", "cor-bippiv", "fan"])
def test_dedup_mode_agrees(theorem):
    full = verify.run_verify(theorem, 5, 6)
    dedup = verify.run_verify(theorem, 5, 6, dedup=True)
    assert dedup.passed == full.passed
    assert dedup.details["orbits_n6"] == full.details["orbits_n6"]


def test_reports_are_deterministic_across_workers():
    verify._CENSUS.clear()
    a = verify.run_verify("thm3", 5, 6, workers=1)
    verify._CENSUS.clear()
    b = verify.run_verify("thm3", 5, 6, workers=2)
    assert strip_time(a) == strip_time(b)
    c = verify.build_census(6, workers=2)
    d = verify.build_census(6, workers=1)
    assert (c.codes == d.codes).all() and (c.orbit == d.orbit).all() and (c.ne_mask == d.ne_mask).all()


def test_igconn_sample():
    a = verify.run_verify("prop-igconn", 1, 5, sample=40)
    b = verify.run_verify("prop-igconn", 1, 5, sample=40)
    assert a.passed and strip_time(a) == strip_time(b)


def test_igmin_at_five():
    rep = verify.run_verify("prop-igmin", 5, 5)
    assert rep.passed and rep.instances == 1024


def test_igmin_small_n_disagreement_is_reported():
    rep = verify.run_verify("prop-igmin", 3, 3)
    assert not rep.passed
    assert all("non-essential status differs" in c for c in rep.counterexamples)
    assert rep.details["non_essential_mismatches_n3"] == "9"


def test_oddcyc():
    rep = verify.run_verify("lemma-oddcyc")
    assert rep.passed and rep.instances == 2


def test_bounds_and_names():
    with pytest.raises(en.BoundsError):
        verify.run_verify("thm1", 5, 9)
    with pytest.raises(ValueError):
        verify.run_verify("nope")


def test_helpers():
    assert verify.four_vertex_primes() == 0
    G = build_theta((2, 3, 3))
    for v in G.vertices:
        assert verify.contract_neighbor_independent(G, v)
    assert is_prime(contract_vertex(Graph.cycle(6), 0)) is False
