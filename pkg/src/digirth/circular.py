"""The shift digraphs C(k,d), circular colourings, and the exact circular
chromatic number.

C(k,d) lives on Z_k with an arc i -> j whenever (j - i) mod k lies in
{d, ..., k-1}. An acyclic homomorphism into C(k,d) is a (k,d)-colouring;
the circular chromatic number of a digraph is the least k/d admitting one.

Positions on the circle S_q are exact rationals; tightness (clockwise
distance exactly 1) is a knife-edge predicate, so no floating point is used
anywhere here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .digraph import Digraph, find_cycle
from .hom import check_acyclic_hom, iter_hom_maps


class ChiCapError(RuntimeError):
    """No colourable candidate fraction within the configured hard cap."""


def gen_ckd(k: int, d: int) -> Digraph:
    """The digraph C(k,d) on Z_k; arc count is k*(k-d)."""
    if not 1 <= d <= k:
        raise ValueError(f"need 1 <= d <= k, got k={k} d={d}")
    arcs = [(i, (i + t) % k) for i in range(k) for t in range(d, k)]
    return Digraph(k, arcs)


def clockwise_distance(a: Fraction, b: Fraction, q: Fraction) -> Fraction:
    """Distance from a to b going clockwise around S_q (positions increase
    clockwise), i.e. (b - a) mod q."""
    return (b - a) % q


@dataclass(frozen=True)
class CircularColouring:
    """Rational positions on the circle S_q, one per vertex, each in [0, q)."""

    q: Fraction
    positions: tuple


def validate_circular(d: Digraph, col: CircularColouring) -> None:
    """Raise ValueError unless col satisfies the circular-colouring
    invariants on d: arcs between distinct positions have clockwise
    distance >= 1, and every equal-position class induces an acyclic
    subdigraph."""
    if len(col.positions) != d.n:
        raise ValueError("position count != vertex count")
    if col.q <= 0:
        raise ValueError("circle perimeter must be positive")
    for v, pos in enumerate(col.positions):
        if not 0 <= pos < col.q:
            raise ValueError(f"position of vertex {v} outside [0, q)")
    for u, v in d.arcs:
        pu, pv = col.positions[u], col.positions[v]
        if pu != pv and clockwise_distance(pu, pv, col.q) < 1:
            raise ValueError(f"arc ({u}, {v}) has clockwise distance < 1")
    fibers = {}
    for v, pos in enumerate(col.positions):
        fibers.setdefault(pos, []).append(v)
    for pos, fiber in fibers.items():
        sub = Digraph(d.n, [a for a in d.arcs if a[0] in fiber and a[1] in fiber])
        # reuse cycle finder: None means the fiber is acyclic
        if len(fiber) >= 2 and find_cycle(sub) is not None:
            raise ValueError(f"fiber at position {pos} induces a cycle")


def kd_colouring_to_circular(d: Digraph, f, k: int, dd: int) -> CircularColouring:
    """Turn a valid (k,d)-colouring into a circular k/d-colouring by placing
    the target vertices at consecutive points 1/d apart on S_{k/d}."""
    verdict = check_acyclic_hom(d, gen_ckd(k, dd), f)
    if not verdict.valid:
        raise ValueError(f"not a valid ({k},{dd})-colouring: {verdict.violation}")
    q = Fraction(k, dd)
    positions = tuple(Fraction(fv, dd) % q for fv in f)
    return CircularColouring(q, positions)


def tight_arcs(d: Digraph, col: CircularColouring):
    """Arcs whose clockwise distance is <= 1 (hence exactly 0 or 1)."""
    validate_circular(d, col)
    return [(u, v) for u, v in sorted(d.arcs)
            if clockwise_distance(col.positions[u], col.positions[v], col.q) <= 1]


def has_tight_cycle(d: Digraph, col: CircularColouring):
    """A directed cycle within the tight-arc subdigraph, or None."""
    return find_cycle(Digraph(d.n, tight_arcs(d, col)))


@dataclass(frozen=True)
class ChiCResult:
    value: Fraction
    k: int
    d: int
    colouring: tuple


def chi_c(dg: Digraph, cap: int | None = None, hard_cap: int = 64) -> ChiCResult:
    """Exact circular chromatic number with an optimal (k,d) and colouring.

    Scans reduced fractions k/d (1 <= d <= k <= cap) in increasing value and
    returns the first colourable one. Non-reduced fractions are redundant:
    C(rk,rd)-colourability is equivalent to C(k,d)-colourability via the
    quotient map and the scaling embedding i -> r*i. The default cap |V(D)|
    always suffices in practice since C(n,1) is the complete digraph, but it
    is a configuration value, not a theorem: if nothing colourable is found
    the cap doubles up to hard_cap before raising ChiCapError.
    """
    if cap is None:
        cap = dg.n
    cap = max(1, min(cap, hard_cap))
    lo = 1
    while True:
        candidates = sorted((Fraction(k, d), k, d)
                            for k in range(lo, cap + 1)
                            for d in range(1, k + 1) if gcd(k, d) == 1)
        for value, k, d in candidates:
            m = next(iter_hom_maps(dg, gen_ckd(k, d)), None)
            if m is not None:
                return ChiCResult(value, k, d, m)
        if cap >= hard_cap:
            raise ChiCapError(f"no (k,d)-colouring found with k <= {hard_cap}")
        lo, cap = cap + 1, min(2 * cap, hard_cap)


def quotient_hom(k: int, d: int, dprime: int):
    """The map v -> floor(v / d') from C(k*d', d*d') to C(k,d), verified.

    A failed verification signals an implementation bug, not a user error.
    """
    if not 1 <= d <= k:
        raise ValueError(f"need 1 <= d <= k, got k={k} d={d}")
    if dprime < 1:
        raise ValueError("d' must be at least 1")
    f = tuple(v // dprime for v in range(k * dprime))
    verdict = check_acyclic_hom(gen_ckd(k * dprime, d * dprime), gen_ckd(k, d), f)
    if not verdict.valid:
        raise RuntimeError(f"quotient map failed validation: {verdict.violation}")
    return f
