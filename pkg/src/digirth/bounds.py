"""Exact expectation bounds and Monte Carlo estimators for the random
blow-up model.

Bounds are evaluated in exact rational arithmetic (the binomials get huge;
floating point would corrupt comparisons) and only rendered as floats for
display. Monte Carlo estimators report mean and standard error; acceptance
bands are five standard errors wide.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .construct import BlowUp, derive_seed, sample_subdigraph
from .digraph import Digraph, is_acyclic, short_cycles


def expected_cycles_bound(kn: int, ell: int, p) -> Fraction:
    """C(kn, ell) * (ell-1)! * p**ell, the expected-count bound for
    ell-cycles among kn sampled vertices."""
    if not 2 <= ell <= kn:
        raise ValueError(f"need 2 <= ell <= kn, got ell={ell} kn={kn}")
    p = Fraction(p)
    return comb(kn, ell) * factorial(ell - 1) * p ** ell


def double_cycle_bound(k: int, n: int, ell1: int, ell2: int, p) -> Fraction:
    """ell1 * (kn)**ell1 * (kn)**(ell2-1) * p**(ell1+ell2), the expected-count
    bound for (ell1, ell2)-double cycles."""
    if ell1 < 2 or ell2 < 1:
        raise ValueError("need ell1 >= 2 and ell2 >= 1")
    p = Fraction(p)
    kn = k * n
    return ell1 * Fraction(kn) ** ell1 * Fraction(kn) ** (ell2 - 1) * p ** (ell1 + ell2)


def bad_pair_bound(q: int, n: int, w: int, p) -> Fraction:
    """q * C(n,w)**2 * (1-p)**(w*w), the expected number of cross-layer
    w-set pairs spanning no arc."""
    if not 0 <= w <= n:
        raise ValueError(f"need 0 <= w <= n, got w={w} n={n}")
    p = Fraction(p)
    return q * Fraction(comb(n, w)) ** 2 * (1 - p) ** (w * w)


@dataclass(frozen=True)
class BoundReport:
    """An analytic value (exact rational, None when out of scope) next to a
    Monte Carlo estimate; stderr is sample std dev / sqrt(trials)."""

    analytic: Fraction | None
    empirical_mean: float
    empirical_stderr: float
    trials: int


def _mean_stderr(xs):
    t = len(xs)
    mean = sum(xs) / t
    if t < 2:
        return mean, 0.0
    var = sum((x - mean) ** 2 for x in xs) / (t - 1)
    return mean, math.sqrt(var / t)


@dataclass(frozen=True)
class CycleCountReport:
    cycles: BoundReport  # short-cycle count vs. summed expectation bound
    digons: BoundReport  # digon count vs. exact closed-form expectation


def _digon_count(d: Digraph) -> int:
    return sum(1 for u, v in d.arcs if u < v and (v, u) in d.arcs)


def mc_cycle_count(b: BlowUp, p, g: int, trials: int, seed: int = 0) -> CycleCountReport:
    """Sample `trials` spanning subdigraphs of the blow-up and count cycles
    of length < g in each.

    The short-cycle mean comes with the analytic bound sum over cycle
    lengths; the digon mean comes with its exact expectation
    (#bidirected base pairs) * n^2 * p^2.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    pf = Fraction(p)
    counts = []
    digons = []
    for t in range(trials):
        h = sample_subdigraph(b.layered, float(p), derive_seed(seed, t))
        counts.append(len(short_cycles(h, g)))
        digons.append(_digon_count(h))
    kn = b.layered.n
    cycle_bound = sum((expected_cycles_bound(kn, ell, pf)
                       for ell in range(2, min(g - 1, kn) + 1)), Fraction(0))
    digon_expect = _digon_count(b.base) * b.n ** 2 * pf ** 2
    cm, cs = _mean_stderr(counts)
    dm, ds = _mean_stderr(digons)
    return CycleCountReport(
        cycles=BoundReport(cycle_bound, cm, cs, trials),
        digons=BoundReport(digon_expect, dm, ds, trials),
    )


def pl_template(base: Digraph, cycle, w: int) -> Digraph:
    """The deterministic arc universe for the acyclicity estimator: w
    vertices per layer along the given base cycle, a transitive tournament
    inside each layer and every base arc among the cycle's vertices blown
    up to all w^2 cross arcs."""
    cycle = tuple(cycle)
    ell = len(cycle)
    if ell < 2 or len(set(cycle)) != ell:
        raise ValueError("cycle must list at least 2 distinct vertices")
    for i, v in enumerate(cycle):
        if not base.has_arc(v, cycle[(i + 1) % ell]):
            raise ValueError(f"({v}, {cycle[(i + 1) % ell]}) is not a base arc; "
                             "the sequence is not a directed cycle")
    if w < 1:
        raise ValueError("w must be at least 1")
    arcs = []
    for r in range(ell):
        for a in range(w):
            for bb in range(a + 1, w):
                arcs.append((r * w + a, r * w + bb))
    for r in range(ell):
        for t in range(ell):
            if r != t and base.has_arc(cycle[r], cycle[t]):
                arcs.extend((r * w + a, t * w + bb)
                            for a in range(w) for bb in range(w))
    return Digraph(ell * w, arcs)


def mc_estimate_pl(base: Digraph, cycle, w: int, p, trials: int,
                   seed: int = 0) -> BoundReport:
    """Empirical frequency with which the sampled layered subdigraph along
    a base cycle is acyclic. No analytic slot: the in-scope contract for
    this probability is estimation only."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    tmpl = pl_template(base, cycle, w)
    flags = []
    for t in range(trials):
        h = sample_subdigraph(tmpl, float(p), derive_seed(seed, t))
        flags.append(1.0 if is_acyclic(h) else 0.0)
    mean, stderr = _mean_stderr(flags)
    return BoundReport(None, mean, stderr, trials)


def report_to_dict(name: str, r: BoundReport) -> dict:
    return {
        "name": name,
        "analytic": None if r.analytic is None else float(r.analytic),
        "analytic_exact": None if r.analytic is None
        else f"{r.analytic.numerator}/{r.analytic.denominator}",
        "empirical_mean": r.empirical_mean,
        "empirical_stderr": r.empirical_stderr,
        "trials": r.trials,
    }


def reports_json(named_reports) -> str:
    return json.dumps([report_to_dict(n, r) for n, r in named_reports], indent=2) + "\n"


def reports_table(named_reports) -> str:
    """Aligned-column text rendering of a list of (name, BoundReport)."""
    header = ("quantity", "analytic", "empirical_mean", "stderr", "trials")
    rows = [header]
    for name, r in named_reports:
        rows.append((
            name,
            "-" if r.analytic is None else f"{float(r.analytic):.6g}",
            f"{r.empirical_mean:.6g}",
            f"{r.empirical_stderr:.6g}",
            str(r.trials),
        ))
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
             for row in rows]
    return "\n".join(lines) + "\n"
