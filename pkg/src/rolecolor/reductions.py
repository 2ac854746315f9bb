"""Hypergraphs, incidence graphs, and the hardness gadgets with their coloring
lifts and reverse extractions.

Three gadget families sit on top of the canonical incidence graph of a
3-uniform hypergraph: a two-vertex pendant path per hypergraph vertex (target
k=3), one pendant per hyperedge vertex (target k=4), and a length-(k-3) pendant
path per hyperedge vertex (targets k>=5). A fourth gadget glues a triangle onto
a bipartite graph to trade one role-graph instance for a 2-role instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .graph import Graph, GraphFormatError, _strip_comments, bipartition, is_connected
from .roles import RoleColoring, verify_k_role
from .solver import (
    BUDGET_EXCEEDED,
    COUNT,
    DECISION,
    DEFAULT_BUDGET,
    ENUMERATE,
    NO,
    WITNESS,
    YES,
    BudgetExceeded,
    SolveResult,
)


class Hypergraph:
    """Vertex set 0..n-1 plus a list of nonempty hyperedges."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = []
        for e in edges:
            fe = frozenset(e)
            if not fe:
                raise ValueError("empty hyperedge")
            if any(not (0 <= q < n) for q in fe):
                raise ValueError(f"hyperedge {sorted(fe)} out of range [0,{n})")
            norm.append(fe)
        self.n = n
        self.edges = tuple(norm)

    @property
    def m(self) -> int:
        return len(self.edges)

    def is_uniform(self, q: int) -> bool:
        return all(len(e) == q for e in self.edges)

    def is_connected(self) -> bool:
        """Connected in the incidence sense: every vertex covered, one component."""
        if self.n == 0:
            return True
        if not self.edges:
            return self.n <= 1
        covered = set().union(*self.edges)
        if len(covered) != self.n:
            return False
        comp = set(self.edges[0])
        pending = list(self.edges[1:])
        while True:
            rest = []
            grown = False
            for e in pending:
                if e & comp:
                    comp |= e
                    grown = True
                else:
                    rest.append(e)
            pending = rest
            if not pending:
                return True
            if not grown:
                return False

    def __repr__(self):
        return f"Hypergraph(n={self.n}, m={self.m})"

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        for e in self.edges:
            vs = sorted(e)
            lines.append(f"{len(vs)} " + " ".join(map(str, vs)))
        return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse "n m" then m lines "t v1 ... vt"."""
    it = _strip_comments(text)
    try:
        lineno, header = next(it)
    except StopIteration:
        raise GraphFormatError("missing header line")
    if len(header) != 2:
        raise GraphFormatError("header must be 'n m'", lineno)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError("header must contain two integers", lineno)
    edges = []
    for lineno, toks in it:
        try:
            vals = [int(t) for t in toks]
        except ValueError:
            raise GraphFormatError("hyperedge line must be integers", lineno)
        if not vals or len(vals) != vals[0] + 1:
            raise GraphFormatError("hyperedge line must be 't v1 ... vt'", lineno)
        t, vs = vals[0], vals[1:]
        if len(set(vs)) != t:
            raise GraphFormatError("repeated vertex in hyperedge", lineno)
        if any(not (0 <= v < n) for v in vs):
            raise GraphFormatError(f"vertex out of range [0,{n})", lineno)
        edges.append(frozenset(vs))
    if len(edges) != m:
        raise GraphFormatError(f"declared {m} hyperedges but found {len(edges)}")
    return Hypergraph(n, edges)


# vertex tags: ("Q", i), ("S", j), ("Bq", i), ("Aq", i), ("PendantS", j),
# ("PathS", j, pos), ("GadgetA",), ("GadgetB",), ("GadgetC",), ("Pivot",), ("Orig",)


@dataclass(frozen=True)
class GadgetGraph:
    graph: Graph
    role_of: tuple  # tag per vertex
    kind: str  # incidence / k3 / k4 / kpath / almost
    k: int | None = None
    pivot: int | None = None

    def vertices_tagged(self, name: str) -> list[int]:
        return [v for v, tag in enumerate(self.role_of) if tag[0] == name]

    def q_count(self) -> int:
        return len(self.vertices_tagged("Q"))

    def to_text(self) -> str:
        out = [self.graph.to_text().rstrip("\n")]
        for v, tag in enumerate(self.role_of):
            args = ",".join(str(a) for a in tag[1:])
            out.append(f"# tag {v} {tag[0]}" + (f"[{args}]" if args else ""))
        return "\n".join(out) + "\n"


def incidence_graph(h: Hypergraph) -> GadgetGraph:
    """Canonical incidence graph: Q keeps its ids, hyperedge j becomes vertex n+j."""
    if h.m == 0:
        raise ValueError("hypergraph has no hyperedges")
    nq = h.n
    edges = [(q, nq + j) for j, e in enumerate(h.edges) for q in e]
    tags = [("Q", i) for i in range(nq)] + [("S", j) for j in range(h.m)]
    return GadgetGraph(Graph(nq + h.m, edges), tuple(tags), "incidence")


def _require_3uniform(h: Hypergraph):
    if not h.is_uniform(3):
        raise ValueError("hypergraph must be 3-uniform")


def build_k3_instance(h: Hypergraph) -> GadgetGraph:
    """Incidence graph plus a two-vertex pendant path q - b_q - a_q per q."""
    _require_3uniform(h)
    base = incidence_graph(h)
    nq, ns = h.n, h.m
    off = nq + ns
    edges = list(base.graph.edges)
    tags = list(base.role_of)
    for q in range(nq):
        edges.append((q, off + q))  # b_q
        edges.append((off + q, off + nq + q))  # a_q
    tags += [("Bq", q) for q in range(nq)]
    tags += [("Aq", q) for q in range(nq)]
    return GadgetGraph(Graph(off + 2 * nq, edges), tuple(tags), "k3", k=3)


def build_k4_instance(h: Hypergraph) -> GadgetGraph:
    """Incidence graph plus one pendant vertex per hyperedge vertex."""
    _require_3uniform(h)
    base = incidence_graph(h)
    nq, ns = h.n, h.m
    off = nq + ns
    edges = list(base.graph.edges)
    tags = list(base.role_of)
    for j in range(ns):
        edges.append((nq + j, off + j))
    tags += [("PendantS", j) for j in range(ns)]
    return GadgetGraph(Graph(off + ns, edges), tuple(tags), "k4", k=4)


def build_kpath_instance(h: Hypergraph, k: int) -> GadgetGraph:
    """Incidence graph plus a pendant path of k-3 vertices hanging off each s."""
    if k < 5:
        raise ValueError("pendant-path gadget requires k >= 5")
    _require_3uniform(h)
    base = incidence_graph(h)
    nq, ns = h.n, h.m
    off = nq + ns
    plen = k - 3
    edges = list(base.graph.edges)
    tags = list(base.role_of)
    for j in range(ns):
        ids = [off + j * plen + (pos - 1) for pos in range(1, plen + 1)]
        for a, b in zip(ids, ids[1:]):
            edges.append((a, b))
        edges.append((ids[-1], nq + j))  # (p^s_{k-3}, s)
        tags += [("PathS", j, pos) for pos in range(1, plen + 1)]
    return GadgetGraph(Graph(off + ns * plen, edges), tuple(tags), "kpath", k=k)


def build_almost_bipartite(g: Graph, x: int) -> GadgetGraph:
    """Add vertices a, b, c and edges (a,b), (a,c), (x,a), (x,b) to bipartite g."""
    if not (0 <= x < g.n):
        raise ValueError(f"pivot {x} out of range")
    if not is_connected(g):
        raise ValueError("graph must be connected")
    if not bipartition(g):
        raise ValueError("graph must be bipartite")
    a, b, c = g.n, g.n + 1, g.n + 2
    edges = list(g.edges) + [(a, b), (a, c), (x, a), (x, b)]
    tags = [("Pivot",) if v == x else ("Orig",) for v in range(g.n)]
    tags += [("GadgetA",), ("GadgetB",), ("GadgetC",)]
    return GadgetGraph(Graph(g.n + 3, edges), tuple(tags), "almost", k=2, pivot=x)


def hypergraph_k_colorable(
    h: Hypergraph,
    k: int,
    mode: str = DECISION,
    budget: int = DEFAULT_BUDGET,
    require_surjective: bool = True,
    limit: int = 1,
) -> SolveResult:
    """Brute-force hypergraph coloring: no hyperedge monochromatic.

    By default every color must also be used at least once (the reductions rely
    on surjective colorings); pass require_surjective=False for the textbook
    definition.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    nodes = 0
    count = 0
    found = []
    for assignment in product(range(1, k + 1), repeat=h.n):
        nodes += 1
        if nodes > budget:
            return SolveResult(status=BUDGET_EXCEEDED, nodes=nodes)
        if require_surjective and len(set(assignment)) != k:
            continue
        if any(len({assignment[q] for q in e}) == 1 for e in h.edges):
            continue
        beta = RoleColoring(assignment, k)
        if mode == COUNT:
            count += 1
            continue
        found.append(beta)
        if mode != ENUMERATE or len(found) >= limit:
            break
    if mode == COUNT:
        status = YES if count else NO
        return SolveResult(status=status, count=count, nodes=nodes)
    status = YES if found else NO
    return SolveResult(
        status=status,
        certificate=found[0] if (found and mode in (WITNESS, DECISION)) else None,
        nodes=nodes,
        certificates=tuple(found) if mode == ENUMERATE else (),
    )


def lift_coloring(gg: GadgetGraph, beta: RoleColoring) -> RoleColoring:
    """Turn a hypergraph coloring into the explicit role coloring of the gadget."""
    if gg.kind == "k3":
        return _lift_k3(gg, beta)
    if gg.kind == "k4":
        return _lift_k4(gg, beta)
    if gg.kind == "kpath":
        return _lift_kpath(gg, beta)
    raise ValueError(f"no coloring lift for gadget kind {gg.kind!r}")


def _lift_k3(gg: GadgetGraph, beta: RoleColoring) -> RoleColoring:
    if beta.k != 2 or beta.n != gg.q_count():
        raise ValueError("k3 gadget needs a 2-coloring of the hypergraph vertices")
    alpha = [0] * gg.graph.n
    for v, tag in enumerate(gg.role_of):
        if tag[0] == "Q":
            alpha[v] = beta.assignment[tag[1]]
        elif tag[0] in ("S", "Bq"):
            alpha[v] = 3
        else:  # Aq: the {1,2}-color its q does not have
            alpha[v] = 3 - beta.assignment[tag[1]]
    return RoleColoring(tuple(alpha), 3)


def _lift_k4(gg: GadgetGraph, beta: RoleColoring) -> RoleColoring:
    if beta.k != 3 or beta.n != gg.q_count():
        raise ValueError("k4 gadget needs a 3-coloring of the hypergraph vertices")
    alpha = [0] * gg.graph.n
    s_seen = {}  # hyperedge index -> set of colors on its Q-neighbors
    g = gg.graph
    for v, tag in enumerate(gg.role_of):
        if tag[0] == "Q":
            alpha[v] = beta.assignment[tag[1]]
        elif tag[0] == "S":
            alpha[v] = 4
    for v, tag in enumerate(gg.role_of):
        if tag[0] == "S":
            s_seen[tag[1]] = {alpha[u] for u in g.adj[v] if gg.role_of[u][0] == "Q"}
    for v, tag in enumerate(gg.role_of):
        if tag[0] == "PendantS":
            seen = s_seen[tag[1]]
            if len(seen) == 2:
                alpha[v] = min({1, 2, 3} - seen)
            else:
                alpha[v] = 1  # free choice in the construction; pick the smallest
    return RoleColoring(tuple(alpha), 4)


def _lift_kpath(gg: GadgetGraph, beta: RoleColoring) -> RoleColoring:
    if beta.k != 2 or beta.n != gg.q_count():
        raise ValueError("pendant-path gadget needs a 2-coloring")
    k = gg.k
    alpha = [0] * gg.graph.n
    for v, tag in enumerate(gg.role_of):
        if tag[0] == "Q":
            alpha[v] = beta.assignment[tag[1]]
        elif tag[0] == "S":
            alpha[v] = 3
        elif tag[0] == "PathS":
            pos = tag[2]
            alpha[v] = 4 if pos == k - 3 else k - pos + 1
    return RoleColoring(tuple(alpha), k)


@dataclass(frozen=True)
class CannotExtract:
    """The proofs exclude this shape of coloring (e.g. a monochromatic Q)."""

    reason: str

    def __bool__(self):
        return False


def extract_beta(gg: GadgetGraph, alpha: RoleColoring):
    """Reverse direction: pull a hypergraph coloring out of a verified gadget coloring."""
    bad = verify_k_role(gg.graph, alpha)
    if bad is not None:
        raise ValueError(f"not a valid role coloring: {bad.describe()}")
    qs = gg.vertices_tagged("Q")
    q_colors = sorted({alpha.assignment[v] for v in qs})
    if gg.kind in ("k3", "kpath"):
        if len(q_colors) != 2:
            return CannotExtract(f"Q uses {len(q_colors)} colors, expected 2")
        rename = {c: i + 1 for i, c in enumerate(q_colors)}
        return RoleColoring(tuple(rename[alpha.assignment[v]] for v in qs), 2)
    if gg.kind == "k4":
        if len(q_colors) == 3:
            rename = {c: i + 1 for i, c in enumerate(q_colors)}
            return RoleColoring(tuple(rename[alpha.assignment[v]] for v in qs), 3)
        if len(q_colors) == 2:
            rename = {c: i + 1 for i, c in enumerate(q_colors)}
            beta = [rename[alpha.assignment[v]] for v in qs]
            # recolor one vertex with the third color: the smallest id whose
            # color is shared, so both original colors survive
            pick = min(i for i, c in enumerate(beta) if beta.count(c) > 1)
            beta[pick] = 3
            return RoleColoring(tuple(beta), 3)
        return CannotExtract(f"Q uses {len(q_colors)} colors, expected 2 or 3")
    raise ValueError(f"no extraction for gadget kind {gg.kind!r}")


def is_non_monochromatic(h: Hypergraph, beta: RoleColoring) -> bool:
    return all(len({beta.assignment[q] for q in e}) > 1 for e in h.edges)
