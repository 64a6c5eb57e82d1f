"""Core digraph representation and combinatorial primitives.

Vertices are dense integers 0..n-1. Digraphs are simple and loopless; a pair
of oppositely directed arcs between two vertices (a digon) is allowed. All
types are immutable after construction, and every operation here is a pure
function, so values can be shared freely across threads.
"""

from __future__ import annotations

import math

INFINITE = math.inf

AUTOMORPHISM_LIMIT = 10


class DigraphFormatError(ValueError):
    """Raised when digraph text cannot be parsed."""


class Digraph:
    """Immutable simple loopless digraph on vertices 0..n-1.

    Arcs are ordered pairs (u, v) with u != v; duplicates passed to the
    constructor are silently merged. The reverse arc (v, u) may coexist
    with (u, v).
    """

    __slots__ = ("n", "arcs", "_out", "_in")

    def __init__(self, n, arcs=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        for u, v in arcs:
            if u == v:
                raise ValueError(f"loop arc ({u}, {v}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            seen.add((u, v))
        self.n = n
        self.arcs = frozenset(seen)
        out = [[] for _ in range(n)]
        inn = [[] for _ in range(n)]
        for u, v in sorted(seen):
            out[u].append(v)
            inn[v].append(u)
        self._out = tuple(tuple(ws) for ws in out)
        self._in = tuple(tuple(sorted(ws)) for ws in inn)

    @property
    def vertex_count(self):
        return self.n

    @property
    def arc_count(self):
        return len(self.arcs)

    def out_neighbors(self, v):
        return self._out[v]

    def in_neighbors(self, v):
        return self._in[v]

    def has_arc(self, u, v):
        return (u, v) in self.arcs

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={sorted(self.arcs)})"


def is_acyclic(d: Digraph) -> bool:
    """True iff d has no directed cycle, by repeated removal of sinks.

    A digraph is acyclic exactly when peeling outdegree-0 vertices
    eliminates every vertex. (An independent DFS back-arc detector lives
    in the test suite as the oracle for this implementation.)
    """
    outdeg = [len(d._out[v]) for v in range(d.n)]
    stack = [v for v in range(d.n) if outdeg[v] == 0]
    removed = 0
    while stack:
        v = stack.pop()
        removed += 1
        for u in d._in[v]:
            outdeg[u] -= 1
            if outdeg[u] == 0:
                stack.append(u)
    return removed == d.n


def girth(d: Digraph):
    """Length of a shortest directed cycle, or INFINITE if d is acyclic."""
    for u, v in d.arcs:
        if (v, u) in d.arcs:
            return 2
    best = INFINITE
    for s in range(d.n):
        seen = bytearray(d.n)
        seen[s] = 1
        frontier = [s]
        t = 0
        # vertices in `frontier` sit at distance t from s
        while frontier and t + 1 < best:
            nxt = []
            for x in frontier:
                for y in d._out[x]:
                    if y == s:
                        if t + 1 < best:
                            best = t + 1
                    elif not seen[y]:
                        seen[y] = 1
                        nxt.append(y)
            frontier = nxt
            t += 1
    return best


def canonical_cycle(vertices):
    """Rotate a cyclic vertex sequence so the minimum vertex comes first."""
    vs = tuple(vertices)
    i = vs.index(min(vs))
    return vs[i:] + vs[:i]


def find_cycle(d: Digraph):
    """Some directed cycle of d as a canonical tuple, or None if acyclic."""
    color = bytearray(d.n)  # 0 white, 1 on stack, 2 done
    for root in range(d.n):
        if color[root]:
            continue
        color[root] = 1
        path = [root]
        stack = [iter(d._out[root])]
        while stack:
            w = next(stack[-1], None)
            if w is None:
                color[path.pop()] = 2
                stack.pop()
            elif color[w] == 0:
                color[w] = 1
                path.append(w)
                stack.append(iter(d._out[w]))
            elif color[w] == 1:
                return canonical_cycle(path[path.index(w):])
    return None


def short_cycles(d: Digraph, g: int):
    """All directed cycles of length < g, as canonical tuples.

    Bounded-depth DFS anchored at the minimum vertex of each cycle, so every
    cycle is produced exactly once. Result is sorted by (length, vertices).
    """
    if g < 2:
        raise ValueError("g must be at least 2")
    res = []
    maxlen = g - 1
    if maxlen < 2 or d.n == 0:
        return res
    out = d._out
    onpath = bytearray(d.n)
    path = []

    def extend(s, v):
        for w in out[v]:
            if w == s:
                if len(path) >= 2:
                    res.append(tuple(path))
            elif w > s and not onpath[w] and len(path) < maxlen:
                path.append(w)
                onpath[w] = 1
                extend(s, w)
                path.pop()
                onpath[w] = 0

    for s in range(d.n):
        path.append(s)
        onpath[s] = 1
        extend(s, s)
        path.pop()
        onpath[s] = 0
    res.sort(key=lambda c: (len(c), c))
    return res


def induced(d: Digraph, subset):
    """Subdigraph induced on `subset`, relabelled 0..|S|-1 preserving order.

    Returns (subdigraph, vertices) where vertices[i] is the original id of
    new vertex i.
    """
    vs = sorted(set(subset))
    if vs and not (0 <= vs[0] and vs[-1] < d.n):
        raise ValueError("subset vertex out of range")
    idx = {v: i for i, v in enumerate(vs)}
    arcs = []
    for v in vs:
        iv = idx[v]
        for w in d._out[v]:
            if w in idx:
                arcs.append((iv, idx[w]))
    return Digraph(len(vs), arcs), vs


def is_acyclic_sink_set(d: Digraph, subset) -> bool:
    """True iff `subset` induces an acyclic subdigraph and no arc leaves it."""
    s = set(subset)
    for v in s:
        if not (0 <= v < d.n):
            raise ValueError("subset vertex out of range")
        for w in d._out[v]:
            if w not in s:
                return False
    sub, _ = induced(d, s)
    return is_acyclic(sub)


def automorphisms(d: Digraph, limit=AUTOMORPHISM_LIMIT):
    """All arc-preserving bijections of d, as image tuples.

    Brute-force backtracking with degree-profile pruning; refuses digraphs
    larger than `limit` vertices.
    """
    n = d.n
    if n > limit:
        raise ValueError(f"automorphism search limited to {limit} vertices (got {n})")
    profile = [(len(d._out[v]), len(d._in[v])) for v in range(n)]
    cands = [tuple(w for w in range(n) if profile[w] == profile[v]) for v in range(n)]
    arcs = d.arcs
    img = [-1] * n
    used = bytearray(n)
    res = []

    def assign(v):
        if v == n:
            res.append(tuple(img))
            return
        for w in cands[v]:
            if used[w]:
                continue
            ok = True
            for u in range(v):
                if ((u, v) in arcs) != ((img[u], w) in arcs) or \
                   ((v, u) in arcs) != ((w, img[u]) in arcs):
                    ok = False
                    break
            if ok:
                img[v] = w
                used[w] = 1
                assign(v + 1)
                used[w] = 0
        img[v] = -1

    assign(0)
    return res


def parse_digraph(text: str) -> Digraph:
    """Parse the digraph text format.

    Format: optional '#' comment lines, a header ``digraph <n> <m>``, then
    exactly m arc lines ``a <u> <v>``. Stricter than the constructor:
    duplicate arcs are an error here.
    """
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise DigraphFormatError("missing header line")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "digraph":
        raise DigraphFormatError(f"malformed header: {lines[0]!r}")
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError:
        raise DigraphFormatError(f"malformed header: {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise DigraphFormatError("negative counts in header")
    body = lines[1:]
    if len(body) != m:
        raise DigraphFormatError(f"expected {m} arc lines, found {len(body)}")
    arcs = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 3 or parts[0] != "a":
            raise DigraphFormatError(f"malformed arc line: {ln!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise DigraphFormatError(f"malformed arc line: {ln!r}") from None
        if u == v:
            raise DigraphFormatError(f"loop arc in line: {ln!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise DigraphFormatError(f"arc out of range in line: {ln!r}")
        if (u, v) in arcs:
            raise DigraphFormatError(f"duplicate arc in line: {ln!r}")
        arcs.append((u, v))
    return Digraph(n, arcs)


def write_digraph(d: Digraph) -> str:
    """Serialize to the digraph text format; arcs sorted lexicographically."""
    lines = [f"digraph {d.n} {len(d.arcs)}"]
    lines.extend(f"a {u} {v}" for u, v in sorted(d.arcs))
    return "\n".join(lines) + "\n"


def to_dot(d: Digraph) -> str:
    """DOT export for visualization; not parsed back."""
    body = "".join(f"  {u} -> {v};\n" for u, v in sorted(d.arcs))
    return "digraph {\n" + body + "}\n"
