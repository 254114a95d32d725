"""Contraction-perfection recognizers and per-edge diagnosis.

A graph is contraction perfect when every graph obtained from it by
contracting an edge set is perfect. Two independent recognizers decide it:

* single-edge route: the graph is perfect and stays perfect after each
  single-edge contraction (|E| + 1 perfection tests);
* forbidden-subgraph route: the graph contains no hole of size >= 5, no odd
  antihole and no expanded antihole.

The two must always agree; the test suite sweeps that exhaustively and the
CLI aborts if they ever diverge on an input.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .certificates import HOLE, Certificate, validate_certificate
from .detectors import (
    find_expanded_antihole,
    find_expanded_antihole_involving,
    find_hole_at_least,
    find_odd_antihole,
    is_perfect,
    perfection_certificate,
)
from .graph import Edge, Graph, GraphError, contract_edge, induced_subgraph

SINGLE_EDGE = "single-edge"
FORBIDDEN = "forbidden-subgraph"


class NotPerfectError(GraphError):
    """diagnose_edge requires a perfect input graph."""


class InvariantViolation(RuntimeError):
    """A produced witness failed independent validation, or the two
    recognition routes disagreed. Always a bug, never an input error."""


@dataclass(frozen=True)
class Verdict:
    """Outcome of a recognizer.

    When contraction_perfect is False, `certificate` is a witness hosted in
    the input graph, except for the single-edge route where `culprit_edge`
    is set: there the witness lives in the graph obtained by contracting
    that edge.
    """

    contraction_perfect: bool
    method: str
    certificate: Certificate | None = None
    culprit_edge: Edge | None = None

    def host_graph(self, g: Graph) -> Graph:
        """The graph the certificate is valid in."""
        if self.culprit_edge is None:
            return g
        return contract_edge(g, self.culprit_edge)


def is_contraction_perfect_single_edge(g: Graph) -> Verdict:
    """Perfection of g and of g/e for every edge e, in ascending edge order;
    stops at the first failure."""
    cert = perfection_certificate(g)
    if cert is not None:
        return Verdict(False, SINGLE_EDGE, cert)
    for e in g.edges():
        cert = perfection_certificate(contract_edge(g, e))
        if cert is not None:
            return Verdict(False, SINGLE_EDGE, cert, e)
    return Verdict(True, SINGLE_EDGE)


def is_contraction_perfect_forbidden(g: Graph) -> Verdict:
    """No hole of size >= 5, no odd antihole, no expanded antihole; the
    searches run in that order and the first witness wins."""
    cert = (
        find_hole_at_least(g, 5)
        or find_odd_antihole(g)
        or find_expanded_antihole(g)
    )
    if cert is not None:
        return Verdict(False, FORBIDDEN, cert)
    return Verdict(True, FORBIDDEN)


def is_contraction_perfect(g: Graph) -> bool:
    """Boolean shortcut via the forbidden-subgraph route."""
    return is_contraction_perfect_forbidden(g).contraction_perfect


def recognize_both(g: Graph) -> tuple[Verdict, Verdict]:
    """Run both recognizers and insist that they agree."""
    single = is_contraction_perfect_single_edge(g)
    forbidden = is_contraction_perfect_forbidden(g)
    if single.contraction_perfect != forbidden.contraction_perfect:
        raise InvariantViolation(
            "recognition routes disagree: "
            f"single-edge={single.contraction_perfect} "
            f"forbidden={forbidden.contraction_perfect}"
        )
    return single, forbidden


def diagnose_edge(g: Graph, e) -> Certificate | None:
    """Why contracting `e` in the perfect graph g would destroy perfection.

    Returns None when g/e stays perfect. Otherwise returns a witness in g
    itself: an even hole of size >= 6 through e, or an expanded antihole
    involving e — one of the two always exists. The perfection precondition
    is re-verified, not assumed.
    """
    e = Edge(*e)
    if not g.has_edge(e):
        raise GraphError(f"{e!r} is not an edge of the graph")
    if not is_perfect(g):
        raise NotPerfectError("diagnose_edge needs a perfect input graph")
    if is_perfect(contract_edge(g, e)):
        return None
    seq = kernels.find_hole(g.masks, 6, kernels.PARITY_EVEN, e.u, e.v)
    if seq is not None:
        cert = Certificate(HOLE, seq)
    else:
        cert = find_expanded_antihole_involving(g, e)
    if cert is None or not validate_certificate(g, cert):
        raise InvariantViolation(
            f"contracting {e!r} destroys perfection but no witness was found"
        )
    return cert


def is_minimally_non_cp(g: Graph) -> bool:
    """Not contraction perfect, while every one-vertex-deleted induced
    subgraph is."""
    if is_contraction_perfect(g):
        return False
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        if not is_contraction_perfect(induced_subgraph(g, rest)):
            return False
    return True
