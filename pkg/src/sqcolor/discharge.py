"""Charges ``d - 4`` on vertices and faces, and the five transfer rules.

All amounts are kept as integer numerators over 15 (the rules move 1/15,
1/5 and 1/3, i.e. 1, 3 and 5 fifteenths), so totals compare exactly.

Rules, applied once and simultaneously from the initial charges:

1. a 3-vertex takes 3 from each 5-neighbor;
2. a 4-vertex with exactly one triangular slot takes 1 from each 5-neighbor;
3. a bad 5-vertex takes 1 from each of its corners;
4. a 3-face takes 5 from each incident vertex of degree >= 4;
5. a face of degree >= 5 gives 3 to each incident vertex, once per visit
   of its boundary walk.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .embed import EmbeddedGraph
from .exceptions import NotConnected
from .metrics import corners, face_counts, is_bad5
from .reduce import ForbiddenConfig, classify_forbidden_configs

__all__ = [
    "DENOMINATOR",
    "PROOF_ANOMALY",
    "AuditReport",
    "ChargeMap",
    "audit",
    "discharged_charges",
    "format_audit",
    "initial_charges",
    "transfers",
]

DENOMINATOR = 15
PROOF_ANOMALY = "ProofAnomalyDetected"


@dataclass(frozen=True)
class ChargeMap:
    vertex: tuple
    face: tuple
    phase: str

    @property
    def total(self) -> int:
        return sum(self.vertex) + sum(self.face)

    def vertex_fraction(self, v) -> Fraction:
        return Fraction(self.vertex[v], DENOMINATOR)

    def face_fraction(self, i) -> Fraction:
        return Fraction(self.face[i], DENOMINATOR)


def initial_charges(G: EmbeddedGraph) -> ChargeMap:
    return ChargeMap(
        tuple(DENOMINATOR * (G.degree(v) - 4) for v in range(G.n)),
        tuple(DENOMINATOR * (f.degree - 4) for f in G.faces),
        "initial",
    )


def transfers(G: EmbeddedGraph):
    """Every single transfer as ``(rule, giver, receiver, amount)``.

    Givers and receivers are ``("v", id)`` or ``("f", face index)``.
    """
    deg = [G.degree(v) for v in range(G.n)]
    out = []
    for v in range(G.n):
        if deg[v] == 3:
            for u in G.rotation(v):
                if deg[u] == 5:
                    out.append((1, ("v", u), ("v", v), 3))
        elif deg[v] == 4 and face_counts(G, v)[3] == 1:
            for u in G.rotation(v):
                if deg[u] == 5:
                    out.append((2, ("v", u), ("v", v), 1))
        elif deg[v] == 5 and is_bad5(G, v):
            for u in sorted(corners(G, v)):
                out.append((3, ("v", u), ("v", v), 1))
    for i, f in enumerate(G.faces):
        if f.degree == 3:
            for x in f.walk:
                if deg[x] >= 4:
                    out.append((4, ("v", x), ("f", i), 5))
        elif f.degree >= 5:
            for x in f.walk:
                out.append((5, ("f", i), ("v", x), 3))
    return out


def discharged_charges(G: EmbeddedGraph) -> ChargeMap:
    init = initial_charges(G)
    charge = {"v": list(init.vertex), "f": list(init.face)}
    for _, (gk, gi), (rk, ri), amount in transfers(G):
        charge[gk][gi] -= amount
        charge[rk][ri] += amount
    return ChargeMap(tuple(charge["v"]), tuple(charge["f"]), "final")


@dataclass(frozen=True)
class AuditReport:
    """Outcome of running the discharging rules on one connected graph.

    ``negatives`` lists ``("v" | "f", id, numerator)`` for every element
    whose final charge is below zero.  A graph with no negative element and
    no forbidden configuration would contradict the -8 total; the verdict
    then reads ``ProofAnomalyDetected``.
    """

    initial: ChargeMap
    final: ChargeMap
    negatives: tuple
    forbidden: tuple = field(default=())

    @property
    def total_initial(self) -> int:
        return self.initial.total

    @property
    def total_final(self) -> int:
        return self.final.total

    @property
    def conserved(self) -> bool:
        return self.initial.total == self.final.total

    @property
    def anomaly(self) -> bool:
        return not self.negatives and not self.forbidden

    @property
    def verdict(self) -> str:
        return PROOF_ANOMALY if self.anomaly else "consistent"


def audit(G: EmbeddedGraph) -> AuditReport:
    if not G.is_connected():
        raise NotConnected("the discharging audit needs a connected graph")
    init = initial_charges(G)
    final = discharged_charges(G)
    negatives = tuple(
        [("v", v, c) for v, c in enumerate(final.vertex) if c < 0]
        + [("f", i, c) for i, c in enumerate(final.face) if c < 0]
    )
    forbidden: tuple[ForbiddenConfig, ...] = tuple(classify_forbidden_configs(G))
    return AuditReport(init, final, negatives, forbidden)


def format_audit(report: AuditReport, details: bool = False) -> str:
    """Charge report, one ``mu'`` line per element then the total.

    With ``details`` the forbidden configurations and the verdict follow as
    ``#`` comment lines.
    """
    final = report.final
    lines = [f"mu' v {v} {c}/{DENOMINATOR}" for v, c in enumerate(final.vertex)]
    lines += [f"mu' f {i} {c}/{DENOMINATOR}" for i, c in enumerate(final.face)]
    lines.append(f"total {final.total}/{DENOMINATOR}")
    if details:
        lines.append(f"# initial total {report.total_initial}/{DENOMINATOR} "
                     f"conserved {int(report.conserved)} negatives {len(report.negatives)}")
        lines += [f"# forbidden {cfg.format()}" for cfg in report.forbidden]
        lines.append(f"# verdict {report.verdict}")
    return "\n".join(lines) + "\n"
