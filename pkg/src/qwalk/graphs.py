"""Simple undirected graphs on vertices 0..n-1.

Adjacency is held as one bitmask per vertex.  Includes graph6 (short form)
and a plain edge-list text format, complement, the signless Laplacian,
brute-force canonical labelling for small orders and exhaustive enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

GRAPH6_MAX_N = 62
CANON_MAX_N = 10
ENUM_MAX_N = 7


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    """Malformed graph6 input; ``offset`` is the 0-based byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class UnsupportedSize(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("graph needs at least one vertex")
        if len(self.rows) != self.n:
            raise GraphError("row count does not match n")
        full = (1 << self.n) - 1
        for i, r in enumerate(self.rows):
            if r & ~full:
                raise GraphError(f"row {i} references vertices >= n")
            if r >> i & 1:
                raise GraphError(f"loop at vertex {i}")
            for j in _bits(r):
                if not self.rows[j] >> i & 1:
                    raise GraphError(f"asymmetric adjacency between {i} and {j}")

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, i: int) -> list[int]:
        return list(_bits(self.rows[i]))

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _bits(self.rows[i]) if i < j]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def adjacency(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph whose vertex ``k`` is vertex ``perm[k]`` of this graph."""
        inv = [0] * self.n
        for k, v in enumerate(perm):
            inv[v] = k
        rows = [0] * self.n
        for k, v in enumerate(perm):
            m = 0
            for w in _bits(self.rows[v]):
                m |= 1 << inv[w]
            rows[k] = m
        return Graph(self.n, tuple(rows))

    def __str__(self) -> str:
        return serialize_graph6(self) if self.n <= GRAPH6_MAX_N else f"<graph n={self.n} m={self.num_edges}>"


def _bits(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 1:
        raise GraphError("graph needs at least one vertex")
    rows = [0] * n
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"edge ({i}, {j}) out of range for n={n}")
        if i == j:
            raise GraphError(f"loop edge at vertex {i}")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ r ^ (1 << i) for i, r in enumerate(g.rows)))


def signless_laplacian(g: Graph) -> list[list[int]]:
    """Q(G) = D(G) + A(G) as a list of integer rows."""
    q = g.adjacency()
    for i in range(g.n):
        q[i][i] = g.degree(i)
    return q


# --- graph6 -----------------------------------------------------------------

def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 word", 0)
    data = s.encode("ascii", errors="replace")
    for off, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"invalid graph6 character {chr(b)!r}", off)
    if data[0] == 126:
        raise Graph6Error("long-form graph6 (n > 62) is not supported", 0)
    n = data[0] - 63
    if n == 0:
        raise Graph6Error("graph6 word encodes a graph with no vertices", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - 1 != need:
        off = min(len(data), 1 + need)
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(data) - 1}", off)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[1 + k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need:
        pad = 6 * need - nbits
        if (data[-1] - 63) & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", len(data) - 1)
    return Graph(n, tuple(rows))


def serialize_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise UnsupportedSize(f"graph6 short form supports n <= {GRAPH6_MAX_N}, got {g.n}")
    out = [chr(63 + g.n)]
    acc = 0
    k = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.rows[i] >> j & 1)
            k += 1
            if k == 6:
                out.append(chr(63 + acc))
                acc = k = 0
    if k:
        out.append(chr(63 + (acc << (6 - k))))
    return "".join(out)


# --- edge-list text format ---------------------------------------------------

def parse_edge_list_text(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"i j"``."""
    lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise GraphError("edge-list header must be 'n m'")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
        edges = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"bad edge-list line: {exc}") from None
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    if len({frozenset(e) for e in edges}) != m:
        raise GraphError("duplicate edge in edge list")
    return from_edge_list(n, edges)


def to_edge_list_text(g: Graph) -> str:
    es = g.edges()
    return "\n".join([f"{g.n} {len(es)}"] + [f"{i} {j}" for i, j in es]) + "\n"


# --- canonical labelling -------------------------------------------------------

def _refined_colors(g: Graph) -> list[int]:
    """Colour refinement started from degrees; colours are isomorphism-invariant ranks."""
    colors = g.degrees()
    ncls = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in _bits(g.rows[v])))) for v in range(g.n)]
        ranking = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(ranking) == ncls:
            return new
        colors, ncls = new, len(ranking)


def _canonical_perm(g: Graph) -> list[int]:
    n = g.n
    colors = _refined_colors(g)
    slot_color = sorted(colors)
    rows = g.rows
    best_cols: list[int] | None = None
    best_perm: list[int] = []
    perm: list[int] = []
    cols: list[int] = []
    placed = 0

    # Positions are filled in colour order; within a position every unplaced
    # vertex of that colour is tried, except twins of one already tried
    # (swapping twins is an automorphism fixing everything placed so far).
    def search(depth: int) -> None:
        nonlocal best_cols, best_perm, placed
        if depth == n:
            if best_cols is None or cols < best_cols:
                best_cols, best_perm = cols.copy(), perm.copy()
            return
        want = slot_color[depth]
        tried: list[int] = []
        for v in range(n):
            if placed >> v & 1 or colors[v] != want:
                continue
            rv = rows[v]
            if any((rows[u] ^ rv) & ~((1 << u) | (1 << v)) == 0 for u in tried):
                continue
            tried.append(v)
            col = 0
            for u in perm:
                col = col << 1 | (rv >> u & 1)
            cols.append(col)
            if best_cols is not None and cols > best_cols[: depth + 1]:
                cols.pop()
                continue
            perm.append(v)
            placed |= 1 << v
            search(depth + 1)
            placed &= ~(1 << v)
            perm.pop()
            cols.pop()

    search(0)
    return best_perm


def canonical_form(g: Graph) -> Graph:
    """Canonical relabelling of ``g`` (n <= 10).

    Vertices are grouped by colour-refinement class (an isomorphism
    invariant); among all permutations respecting that grouping the one with
    the lexicographically smallest graph6 bit string is chosen.
    """
    if g.n > CANON_MAX_N:
        raise UnsupportedSize(f"canonical_form supports n <= {CANON_MAX_N}, got {g.n}")
    return g.relabel(_canonical_perm(g))


@lru_cache(maxsize=1 << 16)
def canonical_graph6(g: Graph) -> str:
    return serialize_graph6(canonical_form(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    for x in (g, h):
        if x.n > CANON_MAX_N:
            raise UnsupportedSize(f"are_isomorphic supports n <= {CANON_MAX_N}, got {x.n}")
    if g.n != h.n or g.num_edges != h.num_edges or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_graph6(g) == canonical_graph6(h)


# --- enumeration -------------------------------------------------------------

@lru_cache(maxsize=None)
def _class_words(n: int) -> tuple[str, ...]:
    if n == 1:
        return (serialize_graph6(empty_graph(1)),)
    seen: set[str] = set()
    for word in _class_words(n - 1):
        base = parse_graph6(word)
        for mask in range(1 << (n - 1)):
            rows = [r | ((mask >> i & 1) << (n - 1)) for i, r in enumerate(base.rows)]
            rows.append(mask)
            seen.add(canonical_graph6(Graph(n, tuple(rows))))
    return tuple(sorted(seen))


def enumerate_graphs(n: int, allow_large: bool = False) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices, sorted by canonical graph6.

    Every graph on n vertices is a graph on n-1 vertices plus one vertex, so
    extending each class representative by every neighbourhood and
    deduplicating reaches all classes.  ``allow_large`` unlocks n = 8.
    """
    cap = ENUM_MAX_N + 1 if allow_large else ENUM_MAX_N
    if not 1 <= n <= cap:
        raise UnsupportedSize(f"enumerate_graphs supports 1 <= n <= {cap}, got {n}")
    for word in _class_words(n):
        yield parse_graph6(word)


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labelled graphs on n vertices."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for b, (i, j) in enumerate(pairs):
            if mask >> b & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield Graph(n, tuple(rows))
