"""Exhaustive small-graph enumeration and batch verification.

Connected graphs are enumerated one per isomorphism class by scanning all
adjacency bitmasks and keeping the lexicographic minimum of each orbit
under vertex permutations (the same key canonical_form uses). The survey
runs the exact pipeline on every class, compares it against the
closed-form classifier, audits the TU-or-non-ideal dichotomy, and checks
packing against the Mengerian verdict wherever packing is computed.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Optional

from . import classify, clutters, graphs
from .classify import Caps, CapExceeded, DecisionReport
from .graphs import Graph

ENUMERATION_CAP = 7
PACKING_MAX_N = 6


def enumerate_connected(n: int, cap: int = ENUMERATION_CAP) -> list[Graph]:
    """All connected graphs on n vertices, one per isomorphism class.

    Deterministic: classes appear in increasing order of their canonical
    adjacency bitmask.
    """
    if not 1 <= n <= cap:
        raise ValueError(f"enumeration supports 1 <= n <= {cap}")
    if n == 1:
        return [Graph(1, frozenset())]
    pairs = list(combinations(range(n), 2))
    nbits = len(pairs)
    pair_index = {p: i for i, p in enumerate(pairs)}
    perm_maps = []
    for perm in permutations(range(n)):
        perm_maps.append(tuple(
            pair_index[(perm[i], perm[j])] if perm[i] < perm[j] else pair_index[(perm[j], perm[i])]
            for i, j in pairs))
    seen = bytearray(1 << nbits)
    out: list[Graph] = []
    for mask in range(1 << nbits):
        if seen[mask]:
            continue
        for pmap in perm_maps:
            pm = 0
            mm = mask
            while mm:
                low = mm & -mm
                pm |= 1 << pmap[low.bit_length() - 1]
                mm ^= low
            seen[pm] = 1
        g = graphs.graph(n, (pairs[b] for b in _mask_bits(mask)))
        if graphs.is_connected(g):
            out.append(g)
    return out


def _mask_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass
class SurveyRow:
    n: int
    index: int
    report: Optional[DecisionReport]
    incomplete: Optional[str] = None

    @property
    def graph(self) -> Graph:
        assert self.report is not None
        return self.report.graph


@dataclass
class SurveyReport:
    """Aggregate outcome of a survey run; see cross_check."""

    t: int
    n_min: int
    n_max: int
    rows: list[SurveyRow] = field(default_factory=list)
    mismatches: list[dict] = field(default_factory=list)
    conjecture_violations: list[dict] = field(default_factory=list)
    dichotomy_exceptions: list[dict] = field(default_factory=list)
    incomplete: list[dict] = field(default_factory=list)

    @property
    def counters(self) -> dict:
        done = [r.report for r in self.rows if r.report is not None]
        per_n: dict[int, int] = {}
        for rep in done:
            if rep.mengerian:
                per_n[rep.graph.n] = per_n.get(rep.graph.n, 0) + 1
        return {
            "total": len(self.rows),
            "decided": len(done),
            "mengerian": sum(1 for r in done if r.mengerian),
            "non_ideal": sum(1 for r in done if r.trace == classify.TRACE_NON_IDEAL),
            "tu": sum(1 for r in done if r.tu is not None and r.tu.totally_unimodular),
            "power_equality": sum(1 for r in done if r.trace == classify.TRACE_POWER),
            "empty": sum(1 for r in done if r.trace == classify.TRACE_EMPTY),
            "mengerian_per_n": {str(n): per_n.get(n, 0) for n in range(self.n_min, self.n_max + 1)},
        }

    def to_json_dict(self, certificates: bool = False) -> dict:
        return {
            "schema": 1,
            "t": self.t,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "counters": self.counters,
            "mismatches": self.mismatches,
            "conjecture_violations": self.conjecture_violations,
            "dichotomy_exceptions": self.dichotomy_exceptions,
            "incomplete": self.incomplete,
            "instances": [
                {
                    "n": row.n,
                    "index": row.index,
                    "graph6": graphs.to_graph6(row.report.graph) if row.report else None,
                    "trace": row.report.trace if row.report else "INCOMPLETE",
                    "mengerian": row.report.mengerian if row.report else None,
                    "clause": row.report.classifier.clause
                    if row.report and row.report.classifier else None,
                    "tu": row.report.tu.totally_unimodular
                    if row.report and row.report.tu else None,
                    "ideal": None if not row.report or row.report.ideal is None
                    else row.report.ideal.ideal,
                    "packing": row.report.packing if row.report else None,
                    "konig": row.report.konig.holds
                    if row.report and row.report.konig else None,
                    "incomplete": row.incomplete,
                }
                for row in self.rows
            ],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("n,index,graph6,clause,trace,mengerian,tu,ideal,konig,packing\n")
        for row in self.rows:
            rep = row.report
            if rep is None:
                buf.write(f"{row.n},{row.index},,,INCOMPLETE,,,,,\n")
                continue
            vals = [
                row.n, row.index, graphs.to_graph6(rep.graph),
                rep.classifier.clause if rep.classifier else "",
                rep.trace, rep.mengerian,
                rep.tu.totally_unimodular if rep.tu else "",
                "" if rep.ideal is None else rep.ideal.ideal,
                rep.konig.holds if rep.konig else "",
                "" if rep.packing is None else rep.packing,
            ]
            buf.write(",".join(str(v) for v in vals) + "\n")
        return buf.getvalue()


def cross_check(
    n_max: int,
    t: int = 3,
    n_min: int = 4,
    packing_max_n: int = PACKING_MAX_N,
    caps: Optional[Caps] = None,
    enumeration_cap: int = ENUMERATION_CAP,
) -> SurveyReport:
    """Survey all connected classes with n_min <= n <= n_max.

    At t = 3 every instance is also classified by the closed form and any
    disagreement lands in mismatches (expected empty). Instances that are
    neither totally unimodular nor non-ideal are dichotomy exceptions;
    packing-versus-Mengerian disagreements are conjecture findings, never
    assertion failures. Instances over a resource cap are INCOMPLETE and
    never counted as verified.
    """
    caps = caps or Caps()
    report = SurveyReport(t=t, n_min=n_min, n_max=n_max)
    for n in range(n_min, n_max + 1):
        for idx, g in enumerate(enumerate_connected(n, cap=enumeration_cap)):
            key = {"n": n, "index": idx, "graph6": graphs.to_graph6(g)}
            try:
                rep = classify.decide_mengerian_exact(
                    g, t, caps=caps,
                    compute_packing=(n <= packing_max_n),
                    compare_classifier=(t == 3),
                )
            except CapExceeded as exc:
                report.rows.append(SurveyRow(n, idx, None, incomplete=str(exc)))
                report.incomplete.append({**key, "reason": str(exc)})
                continue
            row = SurveyRow(n, idx, rep)
            report.rows.append(row)
            if rep.classifier is not None and rep.classifier.mengerian != rep.mengerian:
                report.mismatches.append({
                    **key,
                    "classifier": rep.classifier.clause,
                    "pipeline": rep.trace,
                    "classifier_mengerian": rep.classifier.mengerian,
                    "pipeline_mengerian": rep.mengerian,
                })
            tu_ok = rep.tu is not None and rep.tu.totally_unimodular
            non_ideal = rep.ideal is not None and not rep.ideal.ideal
            if not tu_ok and not non_ideal:
                report.dichotomy_exceptions.append({
                    **key, "trace": rep.trace, "mengerian": rep.mengerian,
                })
            if rep.packing is not None and rep.packing != rep.mengerian:
                report.conjecture_violations.append({
                    **key, "packing": rep.packing, "mengerian": rep.mengerian,
                })
    return report
