"""Acyclic homomorphisms: checking, exhaustive solving, cores, uniqueness.

A map f: V(D) -> V(C) is an acyclic homomorphism when

  (i)  the preimage of every target vertex induces an acyclic subdigraph, and
  (ii) every arc uv of D either collapses (f(u) = f(v)) or maps to an arc
       f(u)f(v) of C.

``check_acyclic_hom`` validates a given map and produces a concrete violation
witness on failure; ``solve_hom`` searches the full map space exhaustively.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import _kernel
from .digraph import (
    Digraph,
    automorphisms,
    canonical_cycle,
    find_cycle,
    induced,
    is_acyclic,
    parse_digraph,
    write_digraph,
)


@dataclass(frozen=True)
class BadArc:
    """Condition (ii) violation: arc (u, v) maps to a non-arc of the target."""

    u: int
    v: int


@dataclass(frozen=True)
class CyclicFiber:
    """Condition (i) violation: the fiber over `vertex` contains `cycle`."""

    vertex: int
    cycle: tuple


@dataclass(frozen=True)
class HomVerdict:
    valid: bool
    violation: BadArc | CyclicFiber | None = None


@dataclass(frozen=True)
class Homomorphism:
    source: Digraph
    target: Digraph
    map: tuple


def check_acyclic_hom(d: Digraph, c: Digraph, f) -> HomVerdict:
    """Validate a vertex map under conditions (i) and (ii)."""
    f = tuple(f)
    if len(f) != d.n:
        raise ValueError(f"map length {len(f)} != vertex count {d.n}")
    for v, fv in enumerate(f):
        if not (0 <= fv < c.n):
            raise ValueError(f"f({v}) = {fv} out of target range")
    for u, v in sorted(d.arcs):
        if f[u] != f[v] and not c.has_arc(f[u], f[v]):
            return HomVerdict(False, BadArc(u, v))
    fibers = [[] for _ in range(c.n)]
    for v, fv in enumerate(f):
        fibers[fv].append(v)
    for t, fiber in enumerate(fibers):
        if len(fiber) < 2:
            continue
        sub, vs = induced(d, fiber)
        if not is_acyclic(sub):
            cyc = find_cycle(sub)
            return HomVerdict(False, CyclicFiber(t, canonical_cycle(vs[i] for i in cyc)))
    return HomVerdict(True)


def _search_args(d: Digraph, c: Digraph):
    # descending total degree fails fast on condition (ii); ties by index
    order = sorted(range(d.n),
                   key=lambda v: (-(len(d.out_neighbors(v)) + len(d.in_neighbors(v))), v))
    cadj = bytearray(c.n * c.n)
    for a, b in c.arcs:
        cadj[a * c.n + b] = 1
    return d._out, d._in, bytes(cadj), tuple(order)


def iter_hom_maps(d: Digraph, c: Digraph):
    """Lazily yield every valid map d -> c as a tuple, in search order."""
    out_adj, in_adj, cadj, order = _search_args(d, c)
    return _kernel.iter_homomorphisms(d.n, out_adj, in_adj, c.n, cadj, order)


def solve_hom(d: Digraph, c: Digraph, mode="all"):
    """Exhaustive backtracking search over acyclic homomorphisms d -> c.

    mode="first" returns at most one Homomorphism in a list, "all" returns
    every one, "count" returns the exact number as an int.
    """
    if mode == "count":
        out_adj, in_adj, cadj, order = _search_args(d, c)
        return _kernel.count_homomorphisms(d.n, out_adj, in_adj, c.n, cadj, order)
    if mode == "first":
        m = next(iter_hom_maps(d, c), None)
        return [] if m is None else [Homomorphism(d, c, m)]
    if mode == "all":
        return [Homomorphism(d, c, m) for m in iter_hom_maps(d, c)]
    raise ValueError(f"unknown mode {mode!r}")


def is_colourable(d: Digraph, c: Digraph) -> bool:
    """True iff d admits an acyclic homomorphism into c."""
    return next(iter_hom_maps(d, c), None) is not None


def core_witness(c: Digraph):
    """The first non-bijective acyclic endo-homomorphism of c found by the
    solver, or None when c is a core."""
    n = c.n
    for f in iter_hom_maps(c, c):
        if len(set(f)) != n:
            return f
    return None


def is_core(c: Digraph) -> bool:
    """True iff every acyclic homomorphism c -> c is a bijection."""
    return core_witness(c) is None


def is_uniquely_colourable(d: Digraph, c: Digraph, aut_limit=10) -> bool:
    """True iff d is surjectively c-colourable and all colourings of d lie
    in one automorphism orbit of c.

    Checks every colouring against the orbit {pi o f0} of the first one
    found. If f0 is not surjective the answer is False either way: a
    colouring outside the orbit breaks uniqueness, and a full orbit of
    non-surjective maps contains no surjective colouring at all.
    """
    auts = automorphisms(c, limit=aut_limit)
    it = iter_hom_maps(d, c)
    base = next(it, None)
    if base is None:
        return False
    if len(set(base)) != c.n:
        return False
    orbit = {tuple(pi[x] for x in base) for pi in auts}
    for f in it:
        if f not in orbit:
            return False
    return True


def hom_to_json(h: Homomorphism) -> str:
    return json.dumps({
        "source": write_digraph(h.source),
        "target": write_digraph(h.target),
        "map": list(h.map),
    })


def hom_from_json(text: str) -> Homomorphism:
    obj = json.loads(text)
    return Homomorphism(parse_digraph(obj["source"]),
                        parse_digraph(obj["target"]),
                        tuple(obj["map"]))
