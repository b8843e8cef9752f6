"""Claim-level verification suites.

Each suite checks one statement of the theory over a concrete system or
complex at desk scale and returns a :class:`ClaimReport` whose failures carry
replayable witnesses (vertex pairs, cycles, or homology data).  Bounded
homotopy searches get a third verdict, ``inconclusive``, which is never
folded into pass or fail: a budgeted search cannot certify nontriviality.
"""
from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field

from .complexes import (FlagComplex, build_complex, contractibility_report,
                        embedded_cycles, homology_h1, induced_cycles)
from .homotopy import reduce_cycle_homotopy, replay
from .systems import SurfaceSystem, kakimizu_null_homotopy


@dataclass(frozen=True)
class ReductionBounds:
    """Budgets for the bounded homotopy checks: enumerate cycles up to
    ``max_cycle_len`` edges, let searches grow cycles to ``max_len``, and
    spend at most ``max_steps`` search steps per cycle."""

    max_cycle_len: int = 8
    max_len: int = 16
    max_steps: int = 100_000


@dataclass
class ClaimReport:
    claim: str
    statement: str
    instances: int = 0
    failures: list = field(default_factory=list)
    inconclusive: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def verdict(self) -> str:
        if self.failures:
            return "fail"
        if self.inconclusive:
            return "inconclusive"
        return "pass"

    def as_dict(self, include_timings: bool = False) -> dict:
        out = {
            "claim": self.claim,
            "statement": self.statement,
            "instances": self.instances,
            "failures": self.failures,
            "inconclusive": self.inconclusive,
            "verdict": self.verdict,
        }
        if include_timings:
            out["elapsed"] = self.elapsed
        return out


@dataclass
class VerificationReport:
    claims: list

    def __post_init__(self):
        self.claims = sorted(self.claims, key=lambda c: c.claim)

    @property
    def verdict(self) -> str:
        if any(c.verdict == "fail" for c in self.claims):
            return "fail"
        if any(c.verdict == "inconclusive" for c in self.claims):
            return "inconclusive"
        return "pass"

    def to_json(self, include_timings: bool = False) -> str:
        obj = {
            "claims": [c.as_dict(include_timings) for c in self.claims],
            "verdict": self.verdict,
        }
        return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"

    def to_table(self) -> str:
        # timings are kept out of the table so identical runs print
        # identical bytes
        headers = ("claim", "instances", "failures", "inconclusive", "verdict")
        rows = [(c.claim, str(c.instances), str(len(c.failures)),
                 str(len(c.inconclusive)), c.verdict) for c in self.claims]
        widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
                  for i, h in enumerate(headers)]
        fmt = "  ".join("{:<%d}" % w for w in widths)
        lines = [fmt.format(*headers)]
        lines += [fmt.format(*r) for r in rows]
        lines.append(f"overall: {self.verdict}")
        return "\n".join(lines) + "\n"


def _timed(report: ClaimReport, started: float) -> ClaimReport:
    report.elapsed = time.perf_counter() - started
    return report


def verify_distance_theorem(system: SurfaceSystem) -> ClaimReport:
    """Distance in the disjointness complex equals covering spread plus one,
    for every pair of distinct vertices."""
    started = time.perf_counter()
    report = ClaimReport("distance_equals_spread_plus_one",
                         "d(u, v) = cs(u, v) + 1 for every pair of distinct vertices")
    X = build_complex(system, max_dim=1)
    ids = system.vertex_ids()
    for u in ids:
        dist = X.distances_from(u)
        for v in ids:
            if v <= u:
                continue
            report.instances += 1
            d = dist.get(v)
            cs = system.spread(u, v)
            if d != cs + 1:
                report.failures.append({"u": u, "v": v, "distance": d, "spread": cs})
    return _timed(report, started)


def verify_st_bound(system: SurfaceSystem) -> ClaimReport:
    """Distance is bounded above by intersection number plus one."""
    started = time.perf_counter()
    report = ClaimReport("distance_le_intersection_plus_one",
                         "d(u, v) <= i(u, v) + 1 for every pair of distinct vertices")
    X = build_complex(system, max_dim=1)
    ids = system.vertex_ids()
    for u in ids:
        dist = X.distances_from(u)
        for v in ids:
            if v <= u:
                continue
            report.instances += 1
            d = dist.get(v)
            inum = system.intersection(u, v)
            if d is None or d > inum + 1:
                report.failures.append({"u": u, "v": v, "distance": d, "intersection": inum})
    return _timed(report, started)


def verify_cs_le_i(system: SurfaceSystem) -> ClaimReport:
    """Covering spread never exceeds intersection number."""
    started = time.perf_counter()
    report = ClaimReport("spread_le_intersection",
                         "cs(u, v) <= i(u, v) for every pair of distinct vertices")
    for u, v in itertools.combinations(system.vertex_ids(), 2):
        report.instances += 1
        cs = system.spread(u, v)
        inum = system.intersection(u, v)
        if cs > inum:
            report.failures.append({"u": u, "v": v, "spread": cs, "intersection": inum})
    return _timed(report, started)


def verify_link_girth(X: FlagComplex, bounds: ReductionBounds = ReductionBounds()) -> ClaimReport:
    """Every vertex link has no short nontrivial cycles: 3-cycles bound
    triangles, and every embedded 4- or 5-cycle has a diagonal.  Diagonalled
    cycles are cross-checked by the homotopy search, and the least induced
    cycle length found in any link is recorded (girth witness)."""
    started = time.perf_counter()
    report = ClaimReport("link_girth_6",
                         "vertex links have no nontrivial cycles shorter than 6")
    girth_witness = None
    for v in X.vertices:
        lk = X.link((v,))
        if not lk.vertices:
            continue
        report.instances += 1
        for cycle in embedded_cycles(lk, 5, min_len=3):
            length = len(cycle)
            if length == 3:
                if not lk.is_simplex(cycle):
                    report.failures.append({"link_of": v, "cycle": list(cycle),
                                            "problem": "3-cycle does not bound a triangle"})
                continue
            diagonals = [(cycle[i], cycle[j])
                         for i in range(length) for j in range(i + 2, length)
                         if (i, j) != (0, length - 1) and lk.has_edge(cycle[i], cycle[j])]
            if not diagonals:
                report.failures.append({"link_of": v, "cycle": list(cycle),
                                        "problem": "diagonal-free short cycle"})
                continue
            check = reduce_cycle_homotopy(lk, cycle, bounds.max_len, bounds.max_steps)
            if not check.reduced:
                report.failures.append({"link_of": v, "cycle": list(cycle),
                                        "problem": "diagonalled cycle did not reduce"})
        if girth_witness is None:
            for length in range(4, 8):
                found = next(induced_cycles(lk, length), None)
                if found is not None:
                    girth_witness = {"link_of": v, "cycle": list(found), "length": length}
                    break
    if girth_witness is not None:
        report.statement += f" (least induced link cycle found: {girth_witness['length']})"
        report.girth_witness = girth_witness
    return _timed(report, started)


def verify_residues_sc(X: FlagComplex, bounds: ReductionBounds = ReductionBounds()) -> ClaimReport:
    """Bounded null-homotopy of every embedded cycle (up to the length cap)
    inside the residue of every simplex."""
    started = time.perf_counter()
    report = ClaimReport("residues_simply_connected",
                         "every embedded cycle up to the cap contracts inside its residue")
    for s in X.simplices():
        res = X.residue(s)
        for cycle in embedded_cycles(res, bounds.max_cycle_len):
            report.instances += 1
            result = reduce_cycle_homotopy(res, cycle, bounds.max_len, bounds.max_steps)
            if not result.reduced:
                report.inconclusive.append({"simplex": list(s), "cycle": list(cycle),
                                            "reason": result.reason})
    return _timed(report, started)


def verify_simple_connectivity(system: SurfaceSystem,
                               bounds: ReductionBounds = ReductionBounds()) -> ClaimReport:
    """H1 must vanish, and every embedded cycle up to the cap must receive a
    null-homotopy witness that replays move-by-move.  Uses the
    complexity-descent reduction when the system has a double curve sum,
    generic bounded search otherwise."""
    started = time.perf_counter()
    report = ClaimReport("simple_connectivity",
                         "H1 = 0 and all short cycles contract with replayable witnesses")
    X = build_complex(system, max_dim=3)
    h1 = homology_h1(X)
    report.instances += 1
    if not h1.is_trivial():
        report.failures.append({"problem": "H1 nontrivial", "h1": str(h1)})
    X1 = build_complex(system, max_dim=1)
    for cycle in embedded_cycles(X1, bounds.max_cycle_len):
        report.instances += 1
        if system.supports_dcs:
            result = kakimizu_null_homotopy(system, cycle, max_steps=bounds.max_steps,
                                            complex=X1)
        else:
            result = reduce_cycle_homotopy(X1, cycle, bounds.max_len, bounds.max_steps)
        if not result.reduced:
            report.inconclusive.append({"cycle": list(cycle), "reason": result.reason})
            continue
        final = replay(X1, cycle, result.moves)
        if final != result.final or len(final) > 1:
            report.failures.append({"cycle": list(cycle),
                                    "problem": "witness failed to replay"})
    return _timed(report, started)


def verify_contractible_2d(X: FlagComplex) -> ClaimReport:
    """Record the outcome of the dimension-2 contractibility criterion.  An
    unmet criterion is inconclusive, never a failure: nothing here can refute
    contractibility."""
    started = time.perf_counter()
    report = ClaimReport("contractible_if_2d",
                         "dimension <= 2 and locally 6-large imply contractible")
    rep = contractibility_report(X)
    report.instances = 1
    if rep.conclusion != "contractible":
        report.inconclusive.append(rep.as_dict())
    else:
        report.statement += " (criterion met: contractible)"
    report.criterion = rep
    return _timed(report, started)


SUITES = {
    "distance": ("distance", "st_bound", "cs_le_i"),
    "girth": ("link_girth",),
    "sc": ("residues_sc", "simple_connectivity"),
    "contractible": ("contractible",),
}
SUITES["all"] = SUITES["distance"] + SUITES["girth"] + SUITES["sc"] + SUITES["contractible"]


def run_suite(system: SurfaceSystem, suite: str = "all",
              bounds: ReductionBounds = ReductionBounds()) -> VerificationReport:
    """Run one named suite over a system, building complexes as needed."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    claims = []
    names = SUITES[suite]
    X = None
    if any(n in ("link_girth", "residues_sc", "contractible") for n in names):
        X = build_complex(system, max_dim=3)
    for name in names:
        if name == "distance":
            claims.append(verify_distance_theorem(system))
        elif name == "st_bound":
            claims.append(verify_st_bound(system))
        elif name == "cs_le_i":
            claims.append(verify_cs_le_i(system))
        elif name == "link_girth":
            claims.append(verify_link_girth(X, bounds))
        elif name == "residues_sc":
            claims.append(verify_residues_sc(X, bounds))
        elif name == "simple_connectivity":
            claims.append(verify_simple_connectivity(system, bounds))
        elif name == "contractible":
            claims.append(verify_contractible_2d(X))
    return VerificationReport(claims)
