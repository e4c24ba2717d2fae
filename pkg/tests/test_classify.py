import json
import random
from fractions import Fraction

import pytest

from mengerian import graphs
from mengerian.classify import (
    Caps,
    CapExceeded,
    classify_mengerian,
    decide_mengerian_exact,
    is_path_with_double_stars,
    is_star_plus_edge,
    verify_report_dict,
)
from mengerian.graphs import build_path_hypergraph, make_family, parse_edge_list, relabel


PRO3_TREE = "1 2\n2 3\n3 4\n4 5\n3 6"


# --- predicates -----------------------------------------------------------------

def test_path_with_double_stars_positive():
    assert is_path_with_double_stars(make_family("path", [7]))
    assert is_path_with_double_stars(make_family("star", [5]))
    assert is_path_with_double_stars(make_family("double_star", [2, 3]))
    assert is_path_with_double_stars(make_family("path", [1]))
    assert is_path_with_double_stars(make_family("path", [2]))
    # broom: one long leg keeps only two leaf-adjacent vertices
    assert is_path_with_double_stars(make_family("spider", [3, 1, 1]))


def test_path_with_double_stars_negative():
    # three legs of length >= 1 anchored at three distinct leaf-adjacent vertices
    assert not is_path_with_double_stars(parse_edge_list(PRO3_TREE))
    assert not is_path_with_double_stars(make_family("spider", [2, 2, 2]))
    assert not is_path_with_double_stars(make_family("cycle", [5]))  # not a tree


def test_star_plus_edge_predicate():
    assert is_star_plus_edge(make_family("star_plus_edge", [4]))
    assert is_star_plus_edge(make_family("star_plus_edge", [2]))  # K3
    assert is_star_plus_edge(make_family("complete", [3]))
    assert not is_star_plus_edge(make_family("cycle", [4]))
    assert not is_star_plus_edge(make_family("complete", [4]))
    assert not is_star_plus_edge(make_family("star", [4]))


# --- classifier -------------------------------------------------------------------

def test_classify_fixtures():
    assert classify_mengerian(make_family("complete", [4])).clause == "FOUR_VERTICES"
    assert classify_mengerian(make_family("cycle", [8])).clause == "C8"
    v = classify_mengerian(make_family("cycle", [5]))
    assert v.clause == "NOT_MENGERIAN" and not v.mengerian
    assert classify_mengerian(make_family("path", [7])).clause == "PATH_WITH_DOUBLE_STARS"
    assert classify_mengerian(make_family("star_plus_edge", [5])).clause == "STAR_PLUS_EDGE"


def test_classify_clause_order():
    # P4 is also a path with double stars; the earlier clause wins
    assert classify_mengerian(make_family("path", [4])).clause == "FOUR_VERTICES"


def test_classify_small_graphs_vacuous():
    assert classify_mengerian(make_family("path", [1])).mengerian
    assert classify_mengerian(make_family("complete", [3])).mengerian


def test_classify_requires_connected():
    with pytest.raises(ValueError):
        classify_mengerian(graphs.graph(4, [(0, 1), (2, 3)]))


def test_classify_isomorphism_invariant():
    rng = random.Random(67)
    for g in (make_family("cycle", [8]), make_family("spider", [2, 2, 1]),
              make_family("star_plus_edge", [4]), make_family("cycle", [6])):
        base = classify_mengerian(g)
        for _ in range(5):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert classify_mengerian(relabel(g, perm)).clause == base.clause


# --- exact pipeline ------------------------------------------------------------------

def test_decide_c8_power_equality():
    rep = decide_mengerian_exact(make_family("cycle", [8]))
    assert rep.trace == "POWER_EQUALITY"
    assert rep.mengerian
    assert not rep.tu.totally_unimodular
    assert rep.ideal.ideal
    assert rep.ntf.normally_torsion_free
    assert rep.agreement is True


def test_decide_pro3_tree_non_ideal():
    rep = decide_mengerian_exact(parse_edge_list(PRO3_TREE))
    assert rep.trace == "NON_IDEAL" and not rep.mengerian
    cert = rep.ideal.certificate
    h = Fraction(1, 2)
    assert cert.coords == (0, h, 0, h, 0, h)
    assert rep.agreement is True


def test_decide_star_empty():
    rep = decide_mengerian_exact(make_family("star", [6]))
    assert rep.trace == "EMPTY" and rep.mengerian
    assert rep.konig.tau == 0 and rep.konig.nu == 0


def test_decide_tu_shortcut_for_trees():
    for fam, params in [("path", [6]), ("double_star", [2, 2]), ("star_plus_edge", [4]),
                        ("spider", [3, 1, 1])]:
        rep = decide_mengerian_exact(make_family(fam, params))
        assert rep.trace == "TU_SHORTCUT", (fam, params)
        assert rep.mengerian and rep.agreement is True


def test_decide_disconnected_allowed():
    g = graphs.graph(5, [(0, 1), (1, 2), (2, 3)])  # K4-path plus isolated vertex
    rep = decide_mengerian_exact(g)
    assert rep.classifier is None and rep.agreement is None
    assert rep.trace == "TU_SHORTCUT"


def test_decide_caps():
    with pytest.raises(CapExceeded):
        decide_mengerian_exact(make_family("cycle", [8]), caps=Caps(max_vertices=5))
    with pytest.raises(CapExceeded):
        decide_mengerian_exact(make_family("cycle", [8]), caps=Caps(max_edges=4))
    with pytest.raises(CapExceeded):
        decide_mengerian_exact(make_family("cycle", [8]), caps=Caps(max_power_k=2))


def test_decide_packing_flag():
    rep = decide_mengerian_exact(make_family("cycle", [5]), compute_packing=True)
    assert rep.packing is False
    rep2 = decide_mengerian_exact(make_family("path", [5]), compute_packing=True)
    assert rep2.packing is True


def test_shortcuts_agree_with_forced_power_equality():
    # TU and non-ideal traces must agree with the torsion-free decision
    # recomputed from scratch on a spread of survey instances
    from mengerian.ideals import is_normally_torsion_free
    from mengerian.survey import enumerate_connected

    rng = random.Random(71)
    pool = [g for n in (5, 6) for g in enumerate_connected(n)]
    sample = [g for g in rng.sample(pool, 40)
              if build_path_hypergraph(g).m <= 8][:20]
    assert len(sample) == 20
    for g in sample:
        rep = decide_mengerian_exact(g)
        forced = is_normally_torsion_free(rep.hypergraph)
        assert forced.normally_torsion_free == rep.mengerian, graphs.to_graph6(g)


# --- reports and certificate verification ----------------------------------------------

def test_report_json_schema():
    rep = decide_mengerian_exact(make_family("cycle", [5]))
    d = rep.to_json_dict()
    assert d["schema"] == 1
    assert d["trace"] == "NON_IDEAL"
    assert d["checks"]["ideal"]["value"] is False
    coords = d["checks"]["ideal"]["fractional_vertex"]["coords"]
    assert all(isinstance(s, str) for s in coords)
    assert d["classifier"]["clause"] == "NOT_MENGERIAN"
    assert d["agreement"] is True
    trimmed = rep.to_json_dict(certificates=False)
    assert "fractional_vertex" not in trimmed["checks"]["ideal"]


def test_report_round_trips_through_json():
    rep = decide_mengerian_exact(make_family("cycle", [6]))
    blob = json.dumps(rep.to_json_dict(), sort_keys=True)
    results = verify_report_dict(json.loads(blob))
    assert results and all(ok for _, ok, _ in results)


def test_verify_report_catches_tampering():
    rep = decide_mengerian_exact(make_family("cycle", [6]))
    d = rep.to_json_dict()
    d["checks"]["ideal"]["fractional_vertex"]["coords"][0] = "1/3"
    results = verify_report_dict(d)
    assert any(name == "fractional_vertex" and not ok for name, ok, _ in results)


def test_verify_report_ntf_certificate():
    rep = decide_mengerian_exact(make_family("cycle", [5]))
    # force the power-equality route to produce an ntf violation report
    from mengerian import ideals
    c = rep.hypergraph
    res = ideals.is_normally_torsion_free(c)
    d = rep.to_json_dict()
    d["checks"]["ntf"] = {
        "value": False,
        "mu": res.mu,
        "bound": res.bound,
        "checked_k": list(res.checked_k),
        "violation": {
            "k": res.violation.k,
            "monomial": ideals.format_monomial(res.violation.violation, c.labels),
            "exponents": list(res.violation.violation),
        },
    }
    results = verify_report_dict(d)
    assert any(name == "power_violation" and ok for name, ok, _ in results)
