"""Randomized blow-up construction of large-girth witnesses.

The layered digraph D_n replaces each base vertex with a transitive
tournament on n vertices and each base arc with all n^2 cross arcs. Spanning
subdigraphs are sampled arc-by-arc; short cycles are then repaired away by
deleting a hitting set of arcs (optionally pairwise vertex-disjoint), and
the result is verified from scratch: girth, base-colourability through the
natural layer-collapsing map, and exhaustive non-colourability into the
forbidden target whenever the size cap allows.

Randomness contract: Python's ``random.Random`` (MT19937), whose random()
stream is documented stable across platforms; one draw per potential arc in
lexicographic arc order. Per-try seeds come from ``derive_seed``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .digraph import Digraph, girth, parse_digraph, short_cycles, write_digraph
from .hom import check_acyclic_hom, is_colourable, is_uniquely_colourable

MASK64 = (1 << 64) - 1
_SEED_STEP = 0x9E3779B97F4A7C15  # splitmix64 increment

SOLVER_CAP = 24


class RepairError(RuntimeError):
    """Independent repair could not hit every short cycle."""

    def __init__(self, unhit):
        self.unhit = list(unhit)
        super().__init__(
            "no independent arc available for cycle(s): "
            + "; ".join(str(c) for c in self.unhit))


class WitnessSearchError(RuntimeError):
    """All tries exhausted; carries per-try diagnostics."""

    def __init__(self, tries, diagnostics):
        self.tries = tries
        self.diagnostics = list(diagnostics)
        lines = "\n".join(f"  try {t}: {msg}" for t, msg in self.diagnostics)
        super().__init__(f"witness search exhausted after {tries} tries\n{lines}")


def derive_seed(seed: int, index: int) -> int:
    """Deterministic 64-bit seed stream for try/trial `index`."""
    return (seed + _SEED_STEP * (index + 1)) & MASK64


def _integer_root(x: int, k: int) -> int:
    """floor(x ** (1/k)) for non-negative integer x, exact."""
    if x < 2:
        return x
    r = 1 << ((x.bit_length() + k - 1) // k)
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    while r ** k > x:
        r -= 1
    return r


def ceil_rational_power(n: int, exponent: Fraction) -> int:
    """ceil(n ** exponent) for n >= 1 and exponent >= 0, computed exactly."""
    if n < 1:
        raise ValueError("n must be at least 1")
    e = Fraction(exponent)
    if e < 0:
        raise ValueError("exponent must be non-negative")
    target = n ** e.numerator
    r = _integer_root(target, e.denominator)
    return r if r ** e.denominator == target else r + 1


@dataclass(frozen=True)
class BlowUp:
    """The layered digraph with vertex (i, r) stored as id i*n + r."""

    base: Digraph
    n: int
    layered: Digraph
    natural: tuple  # natural[v] = base vertex of layered vertex v


def blowup(d: Digraph, n: int) -> BlowUp:
    """Replace each vertex with an n-layer transitive tournament and each
    arc with all n^2 cross arcs; |E| = q*n^2 + k*n*(n-1)/2."""
    if n < 1:
        raise ValueError("layer size must be at least 1")
    arcs = []
    for i, j in d.arcs:
        for r in range(n):
            for s in range(n):
                arcs.append((i * n + r, j * n + s))
    for i in range(d.n):
        for r in range(n):
            for s in range(r + 1, n):
                arcs.append((i * n + r, i * n + s))
    layered = Digraph(d.n * n, arcs)
    return BlowUp(d, n, layered, tuple(v // n for v in range(d.n * n)))


def sample_subdigraph(d: Digraph, p: float, seed: int) -> Digraph:
    """Keep each arc independently with probability p; deterministic in
    (d, p, seed): arcs are drawn in lexicographic order, one draw each."""
    if not 0 <= p <= 1:
        raise ValueError("probability out of range")
    rng = random.Random(seed)
    kept = [a for a in sorted(d.arcs) if rng.random() < p]
    return Digraph(d.n, kept)


def sample(b: BlowUp, p: float, seed: int) -> Digraph:
    """A random spanning subdigraph of the layered digraph."""
    return sample_subdigraph(b.layered, p, seed)


@dataclass(frozen=True)
class ConstructParams:
    """Parameters of the randomized construction.

    eps defaults to 1/(4g+1), the largest simple fraction below the 1/(4g)
    ceiling; p defaults to n**(eps-1) but may be overridden for desk-scale
    runs where the asymptotic density is far too sparse.
    """

    g: int
    n: int
    eps: Fraction = None
    p: float = None
    seed: int = 0
    max_tries: int = 32
    independent: bool = False

    def __post_init__(self):
        if self.g < 2:
            raise ValueError("girth target must be at least 2")
        if self.n < 1:
            raise ValueError("layer size must be at least 1")
        if self.eps is None:
            object.__setattr__(self, "eps", Fraction(1, 4 * self.g + 1))
        else:
            object.__setattr__(self, "eps", Fraction(self.eps))
        if not 0 < self.eps < Fraction(1, 4 * self.g):
            raise ValueError(f"eps must satisfy 0 < eps < 1/(4g) = 1/{4 * self.g}")
        if self.p is None:
            object.__setattr__(self, "p", float(self.n) ** (float(self.eps) - 1.0))
        if not 0 < self.p <= 1:
            raise ValueError("p must lie in (0, 1]")
        if self.max_tries < 1:
            raise ValueError("max_tries must be at least 1")

    @property
    def short_cycle_budget(self) -> int:
        """ceil(n ** (g * eps)), computed exactly."""
        return ceil_rational_power(self.n, self.g * self.eps)


def _cycle_arcs(cycle):
    return [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def short_cycle_repair(h: Digraph, g: int, independent: bool = False):
    """Delete arcs until no cycle of length < g remains.

    Plain mode greedily deletes the arc on the most remaining short cycles
    (ties to the lexicographically least arc). Independent mode processes
    cycles by increasing length and picks the first arc whose endpoints no
    prior deletion touched, raising RepairError when some cycle admits none.
    Returns (repaired digraph, deleted arcs in deletion order).
    """
    cycles = short_cycles(h, g)
    deleted = []
    if independent:
        touched = set()
        gone = set()
        unhit = []
        for cyc in cycles:
            arcs = _cycle_arcs(cyc)
            if any(a in gone for a in arcs):
                continue
            for a in sorted(arcs):
                if a[0] not in touched and a[1] not in touched:
                    deleted.append(a)
                    gone.add(a)
                    touched.update(a)
                    break
            else:
                unhit.append(cyc)
        if unhit:
            raise RepairError(unhit)
    else:
        remaining = [set(_cycle_arcs(c)) for c in cycles]
        while remaining:
            counts = {}
            for arcset in remaining:
                for a in arcset:
                    counts[a] = counts.get(a, 0) + 1
            best = min(counts, key=lambda a: (-counts[a], a))
            deleted.append(best)
            remaining = [s for s in remaining if best not in s]
    repaired = Digraph(h.n, h.arcs - frozenset(deleted))
    if girth(repaired) < g:
        raise RuntimeError("repair left a short cycle; this is a bug")
    return repaired, deleted


def double_cycles(h: Digraph, g: int):
    """All (l1, l2)-double cycles with l1, l2 < g.

    An occurrence is a directed l1-cycle plus a directed l2-path joining two
    of its (possibly equal) vertices, internally disjoint from the cycle;
    it spans l1+l2-1 vertices and l1+l2 arcs. Returned as
    (l1, l2, subdigraph) with the subdigraph on h's vertex set carrying
    exactly the occurrence's arcs.
    """
    if g < 2:
        raise ValueError("g must be at least 2")
    res = []
    maxlen = g - 1
    for cyc in short_cycles(h, g):
        on_cycle = set(cyc)
        cyc_arcs = set(_cycle_arcs(cyc))

        def paths_from(u):
            # directed paths u -> ... -> v with v on the cycle (v = u
            # allowed) and all internal vertices off it, <= maxlen arcs
            stack = [(u, (u,))]
            while stack:
                x, path = stack.pop()
                for y in h.out_neighbors(x):
                    if y in on_cycle:
                        yield path + (y,)
                    elif y not in path and len(path) <= maxlen - 1:
                        stack.append((y, path + (y,)))

        for u in cyc:
            for path in paths_from(u):
                l2 = len(path) - 1
                if l2 == 1 and (path[0], path[1]) in cyc_arcs:
                    continue
                arcs = set(cyc_arcs)
                arcs.update((path[i], path[i + 1]) for i in range(l2))
                res.append((len(cyc), l2, Digraph(h.n, arcs)))
    res.sort(key=lambda t: (t[0], t[1], sorted(t[2].arcs)))
    return res


def _pairwise_disjoint(cycles) -> bool:
    used = set()
    for cyc in cycles:
        for v in cyc:
            if v in used:
                return False
        used.update(cyc)
    return True


def in_d1(h: Digraph, params: ConstructParams) -> bool:
    """At most ceil(n**(g*eps)) cycles of length below the girth target."""
    return len(short_cycles(h, params.g)) <= params.short_cycle_budget


def in_d3(h: Digraph, params: ConstructParams) -> bool:
    """in_d1 and all short cycles pairwise vertex-disjoint."""
    cycles = short_cycles(h, params.g)
    return len(cycles) <= params.short_cycle_budget and _pairwise_disjoint(cycles)


@dataclass(frozen=True)
class VerificationReport:
    girth_ok: bool
    d_colourable: bool
    not_c_colourable: bool | None  # None: skipped (vertex count above cap)
    solver_exhaustive: bool
    uniquely_d_colourable: bool | None = None

    @property
    def accepted(self) -> bool:
        """All checks that ran passed; skipped checks never count as passed."""
        return (self.girth_ok and self.d_colourable
                and self.not_c_colourable is not False
                and self.uniquely_d_colourable is not False)


@dataclass(frozen=True)
class Witness:
    dstar: Digraph
    deleted: tuple
    params: ConstructParams
    tries_used: int
    report: VerificationReport


def _verify(dstar, base, target, params, solver_cap, aut_limit):
    girth_ok = girth(dstar) >= params.g
    if dstar.n == base.n * params.n:
        natural = tuple(v // params.n for v in range(dstar.n))
        d_colourable = check_acyclic_hom(dstar, base, natural).valid
    else:
        d_colourable = False
    exhaustive = True
    if dstar.n <= solver_cap:
        not_c = not is_colourable(dstar, target)
    else:
        not_c = None
        exhaustive = False
    unique = None
    if params.independent:
        if dstar.n <= solver_cap and base.n <= aut_limit:
            unique = is_uniquely_colourable(dstar, base, aut_limit)
        else:
            exhaustive = False
    return VerificationReport(girth_ok, d_colourable, not_c, exhaustive, unique)


def construct_witness(base: Digraph, target: Digraph, params: ConstructParams,
                      solver_cap: int = SOLVER_CAP, aut_limit: int = 10) -> Witness:
    """Search for a girth >= g digraph that is base-colourable but not
    target-colourable (uniquely base-colourable in independent mode).

    Precondition: base must not be target-colourable. Each try samples a
    spanning subdigraph of the blow-up with a derived seed, discards it
    unless it has few short cycles (pairwise disjoint ones in independent
    mode), repairs the girth and verifies from scratch. Raises
    WitnessSearchError with per-try diagnostics when every try fails.
    """
    if is_colourable(base, target):
        raise ValueError("precondition violated: base digraph is target-colourable")
    b = blowup(base, params.n)
    budget = params.short_cycle_budget
    diagnostics = []
    for t in range(params.max_tries):
        h = sample(b, params.p, derive_seed(params.seed, t))
        cycles = short_cycles(h, params.g)
        if len(cycles) > budget:
            diagnostics.append((t, f"{len(cycles)} short cycles exceed budget {budget}"))
            continue
        if params.independent and not _pairwise_disjoint(cycles):
            diagnostics.append((t, "short cycles are not pairwise disjoint"))
            continue
        try:
            dstar, deleted = short_cycle_repair(h, params.g, params.independent)
        except RepairError as exc:
            diagnostics.append((t, f"independent repair failed: {exc}"))
            continue
        report = _verify(dstar, base, target, params, solver_cap, aut_limit)
        if report.accepted:
            return Witness(dstar, tuple(deleted), params, t + 1, report)
        diagnostics.append((t, f"verification rejected: {report}"))
    raise WitnessSearchError(params.max_tries, diagnostics)


def verify_witness(w: Witness, base: Digraph, target: Digraph,
                   solver_cap: int = SOLVER_CAP, aut_limit: int = 10) -> VerificationReport:
    """Re-derive the verification report from scratch; pure in (w, base, target)."""
    return _verify(w.dstar, base, target, w.params, solver_cap, aut_limit)


def witness_to_json(w: Witness, base: Digraph, target: Digraph) -> str:
    """Self-contained certificate; verify needs nothing else."""
    p = w.params
    rep = w.report
    obj = {
        "base": write_digraph(base),
        "target": write_digraph(target),
        "params": {
            "g": p.g,
            "n": p.n,
            "eps_num": p.eps.numerator,
            "eps_den": p.eps.denominator,
            "p": p.p,
            "seed": p.seed,
            "max_tries": p.max_tries,
            "independent": p.independent,
        },
        "dstar": write_digraph(w.dstar),
        "deleted": [list(a) for a in w.deleted],
        "tries_used": w.tries_used,
        "report": {
            "girth_ok": rep.girth_ok,
            "d_colourable": rep.d_colourable,
            "not_c_colourable": rep.not_c_colourable,
            "solver_exhaustive": rep.solver_exhaustive,
            "uniquely_d_colourable": rep.uniquely_d_colourable,
        },
    }
    return json.dumps(obj, indent=2) + "\n"


def witness_from_json(text: str):
    """Returns (witness, base, target) parsed from a certificate."""
    obj = json.loads(text)
    pj = obj["params"]
    params = ConstructParams(
        g=pj["g"], n=pj["n"],
        eps=Fraction(pj["eps_num"], pj["eps_den"]),
        p=pj["p"], seed=pj["seed"], max_tries=pj["max_tries"],
        independent=pj["independent"],
    )
    rj = obj["report"]
    report = VerificationReport(
        girth_ok=rj["girth_ok"],
        d_colourable=rj["d_colourable"],
        not_c_colourable=rj["not_c_colourable"],
        solver_exhaustive=rj["solver_exhaustive"],
        uniquely_d_colourable=rj.get("uniquely_d_colourable"),
    )
    witness = Witness(
        dstar=parse_digraph(obj["dstar"]),
        deleted=tuple(tuple(a) for a in obj["deleted"]),
        params=params,
        tries_used=obj["tries_used"],
        report=report,
    )
    return witness, parse_digraph(obj["base"]), parse_digraph(obj["target"])
