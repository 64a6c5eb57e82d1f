"""Pure-Python backtracking kernel for acyclic-homomorphism search.

This is the fallback used when the compiled extension ``_mapcore_c`` is not
available. Both kernels implement exactly the same search and enumerate
solutions in the same deterministic order:

* source vertices are assigned in the caller-supplied ``order``;
* candidate target vertices are tried in ascending index order;
* an assignment u -> c is kept only if every arc between u and an already
  assigned vertex either collapses (equal images) or maps to a target arc,
  and adding u to the fiber of c does not close a directed cycle inside
  that fiber (any new fiber cycle must pass through u, since the fiber was
  acyclic before).

Arguments shared by both entry points:
  nd, nc     -- vertex counts of source and target
  out_adj/in_adj -- source adjacency, a sequence of int sequences
  cadj       -- bytes of length nc*nc, 1 where the target arc a->b exists
  order      -- assignment order, a permutation of range(nd)
"""


def _consistent(u, c, f, out_adj, in_adj, nc, cadj):
    base = c * nc
    for w in out_adj[u]:
        fw = f[w]
        if fw >= 0 and fw != c and not cadj[base + fw]:
            return False
    for w in in_adj[u]:
        fw = f[w]
        if fw >= 0 and fw != c and not cadj[fw * nc + c]:
            return False
    stack = [w for w in out_adj[u] if f[w] == c]
    if not stack:
        return True
    seen = set()
    while stack:
        x = stack.pop()
        if x in seen:
            continue
        seen.add(x)
        for y in out_adj[x]:
            if y == u:
                return False
            if f[y] == c and y not in seen:
                stack.append(y)
    return True


def iter_homomorphisms(nd, out_adj, in_adj, nc, cadj, order):
    """Yield every valid map as a tuple of length nd."""
    if nd == 0:
        yield ()
        return
    if nc == 0:
        return
    f = [-1] * nd
    nextval = [0] * nd
    depth = 0
    while depth >= 0:
        u = order[depth]
        c = nextval[depth]
        while c < nc and not _consistent(u, c, f, out_adj, in_adj, nc, cadj):
            c += 1
        if c == nc:
            nextval[depth] = 0
            depth -= 1
            if depth >= 0:
                f[order[depth]] = -1
            continue
        f[u] = c
        nextval[depth] = c + 1
        if depth == nd - 1:
            yield tuple(f)
            f[u] = -1
        else:
            depth += 1


def count_homomorphisms(nd, out_adj, in_adj, nc, cadj, order):
    """Number of valid maps; same search as iter_homomorphisms."""
    if nd == 0:
        return 1
    if nc == 0:
        return 0
    f = [-1] * nd
    nextval = [0] * nd
    depth = 0
    total = 0
    while depth >= 0:
        u = order[depth]
        c = nextval[depth]
        while c < nc and not _consistent(u, c, f, out_adj, in_adj, nc, cadj):
            c += 1
        if c == nc:
            nextval[depth] = 0
            depth -= 1
            if depth >= 0:
                f[order[depth]] = -1
            continue
        f[u] = c
        nextval[depth] = c + 1
        if depth == nd - 1:
            total += 1
            f[u] = -1
        else:
            depth += 1
    return total
