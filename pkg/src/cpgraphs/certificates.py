"""Witness structures for negative verdicts, with an independent validator.

A Certificate pins down the exact vertices of a forbidden structure so a
verdict can be checked without trusting the search that produced it. The
validator below re-derives every adjacency requirement from the definition
of each structure; it shares no code with the searchers on purpose.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

HOLE = "hole"
ODD_ANTIHOLE = "odd-antihole"
EXPANDED_ANTIHOLE = "expanded-antihole"

KINDS = (HOLE, ODD_ANTIHOLE, EXPANDED_ANTIHOLE)


@dataclass(frozen=True)
class Certificate:
    """kind plus the witness vertices of the host graph.

    hole / odd-antihole: the cycle order (v_1, ..., v_p).
    expanded-antihole: (u, v) of the distinguished edge, then the antipath
    (w_1, ..., w_p).
    """

    kind: str
    vertices: tuple

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")
        object.__setattr__(self, "vertices", tuple(self.vertices))


def validate_certificate(g: Graph, cert: Certificate) -> bool:
    """Check every defining adjacency of the witness against `g`."""
    vs = cert.vertices
    if len(set(vs)) != len(vs):
        return False
    if any(not (0 <= v < g.n) for v in vs):
        return False
    if cert.kind == HOLE:
        return _is_cycle_sequence(g, vs, want_edges=True) and len(vs) >= 4
    if cert.kind == ODD_ANTIHOLE:
        p = len(vs)
        return p >= 5 and p % 2 == 1 and _is_cycle_sequence(g, vs, want_edges=False)
    if cert.kind == EXPANDED_ANTIHOLE:
        return _is_expanded_antihole(g, vs)
    return False


def _is_cycle_sequence(g, vs, want_edges):
    """vs induces exactly a cycle in this order (want_edges=True) or exactly
    the complement of one (False)."""
    p = len(vs)
    if p < 4:
        return False
    for i in range(p):
        for j in range(i + 1, p):
            consecutive = j - i == 1 or (i == 0 and j == p - 1)
            if g.adjacent(vs[i], vs[j]) != (consecutive == want_edges):
                return False
    return True


def _is_expanded_antihole(g, vs):
    if len(vs) < 8:
        return False
    u, v = vs[0], vs[1]
    ws = vs[2:]
    p = len(ws)
    if p < 6 or p % 2 == 1:
        return False
    if not g.adjacent(u, v):
        return False
    for i, w in enumerate(ws, start=1):
        if g.adjacent(u, w) != (2 <= i <= p - 2):
            return False
        if g.adjacent(v, w) != (3 <= i <= p - 1):
            return False
    for i in range(p):
        for j in range(i + 1, p):
            if g.adjacent(ws[i], ws[j]) != (j - i >= 2):
                return False
    return True


def certificate_to_json(g: Graph, cert: Certificate) -> dict:
    """JSON document with vertices reported as original labels (ints where a
    label is a singleton, sorted lists where vertices were merged)."""
    return {
        "kind": cert.kind,
        "vertices": [_label_out(g.labels[v]) for v in cert.vertices],
        "valid": validate_certificate(g, cert),
    }


def certificate_from_json(g: Graph, doc: dict) -> Certificate:
    """Re-anchor a serialized certificate in `g` by matching labels."""
    try:
        kind = doc["kind"]
        raw = doc["vertices"]
    except (TypeError, KeyError) as exc:
        raise ValueError(f"malformed certificate document: missing {exc}") from exc
    index = {lbl: v for v, lbl in enumerate(g.labels)}
    vertices = []
    for item in raw:
        lbl = frozenset(item) if isinstance(item, list) else frozenset((item,))
        if lbl not in index:
            raise ValueError(f"certificate names unknown vertex {item!r}")
        vertices.append(index[lbl])
    return Certificate(kind, tuple(vertices))


def _label_out(label: frozenset):
    vals = sorted(label)
    return vals[0] if len(vals) == 1 else vals
