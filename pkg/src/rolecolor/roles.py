"""Role colorings and role graphs: verification and extraction.

Colors are 1-based ({1..k}); vertices are 0-based. Neighborhood color sets are
compared as sets (bitmasks), never as multisets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphFormatError, _strip_comments, is_connected


@dataclass(frozen=True)
class RoleColoring:
    """Total map vertex -> color, colors in {1..k}."""

    assignment: tuple
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        for v, c in enumerate(self.assignment):
            if not (1 <= c <= self.k):
                raise ValueError(f"vertex {v} has color {c} outside [1, {self.k}]")

    @property
    def n(self) -> int:
        return len(self.assignment)

    def color(self, v: int) -> int:
        return self.assignment[v]

    def used_colors(self) -> frozenset:
        return frozenset(self.assignment)


class RoleGraph:
    """Graph on colors 1..colors; self-loops permitted. A loop (c,c) puts c in N(c)."""

    __slots__ = ("colors", "edges", "_nbr")

    def __init__(self, colors: int, edges=()):
        if colors < 0:
            raise ValueError("color count must be non-negative")
        norm = set()
        for a, b in edges:
            if not (1 <= a <= colors and 1 <= b <= colors):
                raise ValueError(f"role edge ({a},{b}) out of range [1,{colors}]")
            norm.add((a, b) if a <= b else (b, a))
        nbr = [set() for _ in range(colors + 1)]
        for a, b in norm:
            nbr[a].add(b)
            nbr[b].add(a)
        self.colors = colors
        self.edges = frozenset(norm)
        self._nbr = tuple(frozenset(s) for s in nbr)

    def neighbors(self, c: int) -> frozenset:
        return self._nbr[c]

    def degree(self, c: int) -> int:
        return len(self._nbr[c])

    def is_connected(self) -> bool:
        # loops never connect distinct colors
        if self.colors == 0:
            return True
        seen = {1}
        stack = [1]
        while stack:
            c = stack.pop()
            for d in self._nbr[c]:
                if d != c and d not in seen:
                    seen.add(d)
                    stack.append(d)
        return len(seen) == self.colors

    def __eq__(self, other):
        return (
            isinstance(other, RoleGraph)
            and self.colors == other.colors
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.colors, self.edges))

    def __repr__(self):
        return f"RoleGraph(colors={self.colors}, edges={sorted(self.edges)})"

    def to_text(self) -> str:
        lines = [f"{self.colors} {len(self.edges)}"]
        lines.extend(f"{a} {b}" for a, b in sorted(self.edges))
        return "\n".join(lines) + "\n"


NOT_SURJECTIVE = "NotSurjective"
NEIGHBORHOOD_MISMATCH = "NeighborhoodMismatch"
LOCAL_SURJECTIVITY_FAILURE = "LocalSurjectivityFailure"


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: tuple

    def describe(self) -> str:
        if self.kind == NOT_SURJECTIVE:
            return f"colors {sorted(self.witness)} are never used"
        if self.kind == NEIGHBORHOOD_MISMATCH:
            u, v, su, sv = self.witness
            return (
                f"vertices {u} and {v} share a color but see color sets "
                f"{sorted(su)} != {sorted(sv)}"
            )
        u, su, sr = self.witness
        return (
            f"vertex {u} sees color set {sorted(su)} but its role's "
            f"neighborhood is {sorted(sr)}"
        )


def _colors_of(g: Graph, c: RoleColoring, v: int) -> frozenset:
    return frozenset(c.assignment[u] for u in g.adj[v])


def verify_k_role(g: Graph, c: RoleColoring):
    """None if c is a valid k-role coloring of g, else the first Violation.

    Witnesses are lexicographically first in vertex order, so repeated runs
    return identical violations.
    """
    if c.n != g.n:
        raise ValueError(f"coloring covers {c.n} vertices, graph has {g.n}")
    missing = frozenset(range(1, c.k + 1)) - c.used_colors()
    if missing:
        return Violation(NOT_SURJECTIVE, tuple(sorted(missing)))
    first = {}  # color -> (vertex, neighborhood color set)
    for v in range(g.n):
        col = c.assignment[v]
        sv = _colors_of(g, c, v)
        if col in first:
            u, su = first[col]
            if su != sv:
                return Violation(NEIGHBORHOOD_MISMATCH, (u, v, su, sv))
        else:
            first[col] = (v, sv)
    return None


def extract_role_graph(g: Graph, c: RoleColoring) -> RoleGraph:
    """The role graph induced by c: edges between colors joined by some edge of g."""
    if c.n != g.n:
        raise ValueError(f"coloring covers {c.n} vertices, graph has {g.n}")
    return RoleGraph(c.k, ((c.assignment[u], c.assignment[v]) for u, v in g.edges))


def verify_r_role(g: Graph, r: RoleGraph, c: RoleColoring):
    """None if c is a locally surjective homomorphism g -> r, else a Violation."""
    if c.n != g.n:
        raise ValueError(f"coloring covers {c.n} vertices, graph has {g.n}")
    if c.k != r.colors:
        raise ValueError(f"coloring uses color range [1,{c.k}], role graph has {r.colors}")
    missing = frozenset(range(1, r.colors + 1)) - c.used_colors()
    if missing:
        return Violation(NOT_SURJECTIVE, tuple(sorted(missing)))
    for v in range(g.n):
        sv = _colors_of(g, c, v)
        sr = r.neighbors(c.assignment[v])
        if sv != sr:
            return Violation(LOCAL_SURJECTIVITY_FAILURE, (v, sv, sr))
    return None


def check_degree_bound(g: Graph, c: RoleColoring, r: RoleGraph) -> bool:
    """deg_G(v) >= deg_R(color(v)) for every vertex (a loop counts once)."""
    return all(g.degree(v) >= r.degree(c.assignment[v]) for v in range(g.n))


def check_role_connectivity(g: Graph, c: RoleColoring, r: RoleGraph) -> bool:
    """True iff r is connected. Requires g connected."""
    if not is_connected(g):
        raise ValueError("check_role_connectivity requires a connected graph")
    return r.is_connected()


def parse_coloring(text: str, k: int | None = None) -> RoleColoring:
    """Parse the coloring format: one line of space-separated colors.

    When k is omitted it defaults to the largest color present.
    """
    rows = list(_strip_comments(text))
    if not rows:
        raise GraphFormatError("missing coloring line")
    if len(rows) > 1:
        raise GraphFormatError("coloring must be a single line", rows[1][0])
    lineno, toks = rows[0]
    try:
        colors = tuple(int(t) for t in toks)
    except ValueError:
        raise GraphFormatError("colors must be integers", lineno)
    if k is None:
        k = max(colors, default=1)
    return RoleColoring(colors, k)


def emit_coloring(c: RoleColoring) -> str:
    return " ".join(str(x) for x in c.assignment) + "\n"


def parse_role_graph(text: str) -> RoleGraph:
    """Parse a role graph: same format as graphs, but 1-based and loops allowed."""
    it = _strip_comments(text)
    try:
        lineno, header = next(it)
    except StopIteration:
        raise GraphFormatError("missing header line")
    if len(header) != 2:
        raise GraphFormatError("header must be 'k m'", lineno)
    try:
        k, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError("header must contain two integers", lineno)
    edges = []
    for lineno, toks in it:
        if len(toks) != 2:
            raise GraphFormatError("edge line must be 'a b'", lineno)
        try:
            a, b = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphFormatError("edge endpoints must be integers", lineno)
        if not (1 <= a <= k and 1 <= b <= k):
            raise GraphFormatError(f"color out of range [1,{k}]", lineno)
        edges.append((a, b))
    if len(edges) != m:
        raise GraphFormatError(f"declared {m} edges but found {len(edges)}")
    return RoleGraph(k, edges)
