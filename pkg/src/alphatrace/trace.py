"""Exact spectral moments of the weighted degree/adjacency tensor.

For a k-uniform hypergraph H on n vertices, the tensor under study is
T(alpha) = alpha * D + (1 - alpha) * A, where D is the diagonal degree
tensor and A the adjacency tensor (edge entries 1/(k-1)!).  The d-th
moment is the power sum of its n(k-1)^{n-1} eigenvalues.  It equals a
weighted sum over index assignments: each assignment contributes the
product of its tensor entries times a closed-walk count of the arc
digraph its rows induce.

Two independent evaluation routes are implemented:

* ``trace_bruteforce``: direct enumeration of assignments, grouped by
  arc star (root plus target multiset); the (k-1)! row permutations of
  an edge row collapse against the 1/(k-1)! entry, so each edge row
  carries weight (1-alpha) and each diagonal row alpha * deg(v).
  Unbalanced or disconnected digraphs are pruned.
* ``trace_structural``: the same sum reorganized over connected
  k-valent sub-multigraphs (Veblen infragraphs).  An assignment with a
  nonzero walk count consists of edge rows whose multiset forms such an
  infragraph -- each vertex v then roots exactly deg(v)/k rows -- plus
  diagonal rows confined to its vertices.  This route stays cheap at
  every order and is the production path.

Both routes produce a table indexed by (diagonal rows, edge rows); the
moment polynomial, the degree-tensor slice (alpha = 1), the adjacency
slice (alpha = 0) and the signless-Laplacian scaling all read off it.

Closed forms: orders 1..k-1 are pure degree moments; order k adds a
term linear in the edge count; order k+1 adds the degree square sum and
a complete-subhypergraph term whose k-dependent constant is calibrated
once for k = 2 (for linear hypergraphs with k >= 3 the term vanishes);
order k+2 is assembled from per-edge degree correlations and rooted
spanning-tree counts of complete-subhypergraph digraphs.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .digraph import count_in_arborescences
from .errors import BudgetExceeded, HypergraphError, UnsupportedError
from .hypergraph import Hypergraph, complete_subhypergraphs, hypergraph
from .polynomial import AlphaPoly, basis_term

DEFAULT_MAX_ASSIGNMENT_CLASSES = 2_000_000
MAX_VEBLEN_EDGES = 40

Components = dict[tuple[int, int], Fraction]


def phi(h: Hypergraph, s: int) -> AlphaPoly:
    """(k-1)^{n-1} * (sum of deg^s) * alpha^s, the pure-degree monomial."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    total = sum(d**s for d in h.degrees())
    return AlphaPoly.monomial(s, (h.k - 1) ** (h.n - 1) * total)


def trace_order_zero(h: Hypergraph) -> AlphaPoly:
    """Order-0 moment: the number of tensor eigenvalues, n(k-1)^{n-1}."""
    return AlphaPoly.constant(h.n * (h.k - 1) ** (h.n - 1))


def components_to_poly(comp: Components) -> AlphaPoly:
    out = AlphaPoly.zero()
    for (t, e), value in sorted(comp.items()):
        out = out + basis_term(t, e) * value
    return out


# ---------------------------------------------------------------------------
# Brute force over assignment classes
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class _Star:
    root: int
    targets: tuple[int, ...]
    diag: bool


def _star_classes(h: Hypergraph) -> list[_Star]:
    stars = [_Star(v, (v,) * (h.k - 1), True) for v in range(h.n)]
    for e in h.edges:
        for r in e:
            stars.append(_Star(r, tuple(x for x in e if x != r), False))
    return stars


def brute_components(
    h: Hypergraph, d: int, max_classes: int = DEFAULT_MAX_ASSIGNMENT_CLASSES
) -> Components:
    """Moment table by direct enumeration of assignment classes."""
    _require_simple(h)
    if d == 0:
        return {(0, 0): Fraction(h.n * (h.k - 1) ** (h.n - 1))}
    stars = _star_classes(h)
    S = len(stars)
    estimate = math.comb(S + d - 1, d)
    if estimate > max_classes:
        raise BudgetExceeded(
            f"assignment enumeration needs {estimate} classes (cap {max_classes})",
            {"classes": estimate, "cap": max_classes, "order": d},
        )
    km1 = h.k - 1
    deg = h.degrees()
    comp: Components = defaultdict(Fraction)
    out = defaultdict(int)
    inn = defaultdict(int)
    chosen: list[tuple[int, int]] = []

    def apply_star(st: _Star, sign: int) -> int:
        if st.diag:
            out[st.root] += sign * km1
            inn[st.root] += sign * km1
            return 0
        delta = 0
        before = abs(out[st.root] - inn[st.root])
        out[st.root] += sign * km1
        delta += abs(out[st.root] - inn[st.root]) - before
        for t in st.targets:
            before = abs(out[t] - inn[t])
            inn[t] += sign
            delta += abs(out[t] - inn[t]) - before
        return delta

    def leaf():
        arcs: dict[tuple[int, int], int] = defaultdict(int)
        rows_at = defaultdict(int)
        diag_at = defaultdict(int)
        total_diag = 0
        for si, c in chosen:
            st = stars[si]
            rows_at[st.root] += c
            if st.diag:
                diag_at[st.root] += c
                total_diag += c
                arcs[(st.root, st.root)] += c * km1
            else:
                for t in st.targets:
                    arcs[(st.root, t)] += c
        support = sorted({u for u, _ in arcs} | {v for _, v in arcs})
        parent = {v: v for v in support}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in arcs:
            parent[find(u)] = find(v)
        if len({find(v) for v in support}) != 1:
            return
        tau = count_in_arborescences(arcs, support, support[0])
        if tau == 0:
            return
        num = d * km1 * tau
        den = 1
        for v in support:
            num *= math.factorial(rows_at[v])
            den *= km1 * rows_at[v]
        for _, c in chosen:
            den *= math.factorial(c)
        for v, cnt in diag_at.items():
            num *= deg[v] ** cnt
        comp[(total_diag, d - total_diag)] += Fraction(num, den)

    def rec(si: int, rem: int, imbalance: int):
        if rem == 0:
            if imbalance == 0:
                leaf()
            return
        if si == S or imbalance > 2 * km1 * rem:
            return
        rec(si + 1, rem, imbalance)
        st = stars[si]
        applied = 0
        for c in range(1, rem + 1):
            imbalance += apply_star(st, 1)
            applied += 1
            chosen.append((si, c))
            rec(si + 1, rem - c, imbalance)
            chosen.pop()
        for _ in range(applied):
            imbalance += apply_star(st, -1)

    rec(0, d, 0)
    scale = (h.k - 1) ** (h.n - 1)
    return {key: value * scale for key, value in comp.items()}


def trace_bruteforce(
    h: Hypergraph, d: int, max_classes: int = DEFAULT_MAX_ASSIGNMENT_CLASSES
) -> AlphaPoly:
    """The d-th moment by assignment enumeration (exact, budget-capped)."""
    if d == 0:
        return trace_order_zero(h)
    return components_to_poly(brute_components(h, d, max_classes))


def trace_decomposed(
    h: Hypergraph, d: int, max_classes: int = DEFAULT_MAX_ASSIGNMENT_CLASSES
) -> tuple[AlphaPoly, AlphaPoly, AlphaPoly]:
    """Split the brute-force sum by row kinds into (w1, w2, w3).

    w1 collects all-diagonal assignments, w2 all-edge, w3 mixed; the
    full moment is (k-1)^{n-1} (w1 + w2 + w3).
    """
    if d < 1:
        raise ValueError("decomposition defined for d >= 1")
    comp = brute_components(h, d, max_classes)
    scale = Fraction(1, (h.k - 1) ** (h.n - 1))
    w1 = basis_term(d, 0) * (comp.get((d, 0), Fraction(0)) * scale)
    w2 = basis_term(0, d) * (comp.get((0, d), Fraction(0)) * scale)
    w3 = AlphaPoly.zero()
    for (t, e), value in sorted(comp.items()):
        if 0 < t < d:
            w3 = w3 + basis_term(t, e) * (value * scale)
    return w1, w2, w3


# ---------------------------------------------------------------------------
# Connected k-valent infragraphs and the structural route
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class VeblenInfragraph:
    """A connected sub-multigraph of the host in which every vertex degree
    is a multiple of k."""

    host: Hypergraph
    edge_indices: tuple[int, ...]
    multiplicities: tuple[int, ...]

    @property
    def total_edges(self) -> int:
        return sum(self.multiplicities)

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for i in self.edge_indices for v in self.host.edges[i]}))

    def degrees(self) -> dict[int, int]:
        deg: dict[int, int] = defaultdict(int)
        for i, mu in zip(self.edge_indices, self.multiplicities):
            for v in self.host.edges[i]:
                deg[v] += mu
        return dict(deg)

    def as_hypergraph(self) -> Hypergraph:
        return hypergraph(
            self.host.k,
            self.host.n,
            [self.host.edges[i] for i in self.edge_indices],
            self.multiplicities,
        )


def _support_connected(h: Hypergraph, support: list[int]) -> bool:
    parent: dict[int, int] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in support:
        e = h.edges[i]
        for v in e:
            parent.setdefault(v, v)
        r = find(e[0])
        for v in e[1:]:
            parent[find(v)] = r
    roots = {find(v) for v in parent}
    return len(roots) == 1


def _veblen_vectors(h: Hypergraph, max_total: int):
    """Yield (edge_indices, multiplicities) of all connected k-valent
    infragraphs with total multiplicity <= max_total."""
    m = h.m
    k = h.k
    if m == 0:
        return
    last_edge = {}
    for i, e in enumerate(h.edges):
        for v in e:
            last_edge[v] = i
    close_at: list[list[int]] = [[] for _ in range(m)]
    for v, i in last_edge.items():
        close_at[i].append(v)
    deg = defaultdict(int)
    mu = [0] * m

    def rec(i: int, budget: int):
        if i == m:
            support = [j for j in range(m) if mu[j]]
            if support and _support_connected(h, support):
                yield tuple(support), tuple(mu[j] for j in support)
            return
        e = h.edges[i]
        c = 0
        while True:
            mu[i] = c
            ok = all(deg[v] % k == 0 for v in close_at[i])
            if ok:
                yield from rec(i + 1, budget - c)
            if c == budget:
                break
            c += 1
            for v in e:
                deg[v] += 1
        for _ in range(c):
            for v in e:
                deg[v] -= 1
        mu[i] = 0

    yield from rec(0, max_total)


def enumerate_veblen(
    h: Hypergraph, max_edges: int, limit: int = MAX_VEBLEN_EDGES
) -> list[VeblenInfragraph]:
    """All connected k-valent infragraphs with total multiplicity <= max_edges,
    one per multiplicity vector, in deterministic order."""
    _require_simple(h)
    if max_edges > limit:
        raise BudgetExceeded(
            f"infragraph enumeration capped at {limit} edges, asked {max_edges}",
            {"max_edges": max_edges, "cap": limit},
        )
    found = sorted(_veblen_vectors(h, max_edges))
    return [VeblenInfragraph(h, s, mu) for s, mu in found]


def _root_distributions(h: Hypergraph, support: tuple[int, ...], mu: tuple[int, ...]):
    """Yield, per infragraph, every way to root the edge rows: edge
    support[j] contributes mu[j] rows, and vertex v roots deg(v)/k of all
    rows.  Each distribution is a list of {vertex: count} dicts."""
    k = h.k
    deg: dict[int, int] = defaultdict(int)
    for j, ei in enumerate(support):
        for v in h.edges[ei]:
            deg[v] += mu[j]
    remaining = {v: deg[v] // k for v in deg}
    assign: list[dict[int, int]] = []

    def rec(j: int):
        if j == len(support):
            yield [dict(a) for a in assign]
            return
        verts = h.edges[support[j]]
        need = mu[j]

        def comp_rec(vi: int, left: int, current: dict[int, int]):
            if vi == len(verts) - 1:
                v = verts[vi]
                if left <= remaining[v]:
                    if left:
                        current[v] = left
                        remaining[v] -= left
                    assign.append(dict(current))
                    yield from rec(j + 1)
                    assign.pop()
                    if left:
                        remaining[v] += left
                        del current[v]
                return
            v = verts[vi]
            top = min(left, remaining[v])
            for c in range(top + 1):
                if c:
                    current[v] = c
                    remaining[v] -= c
                yield from comp_rec(vi + 1, left - c, current)
                if c:
                    remaining[v] += c
                    del current[v]

        yield from comp_rec(0, need, {})

    yield from rec(0)


def structural_components(h: Hypergraph, d: int) -> Components:
    """Moment table via the infragraph decomposition (fast at every order)."""
    _require_simple(h)
    if d == 0:
        return {(0, 0): Fraction(h.n * (h.k - 1) ** (h.n - 1))}
    k = h.k
    deg = h.degrees()
    comp: Components = defaultdict(Fraction)
    comp[(d, 0)] += Fraction((k - 1) ** (h.n - 1) * sum(x**d for x in deg))
    for support, mu in _veblen_vectors(h, d):
        edge_rows = sum(mu)
        t = d - edge_rows
        verts = sorted({v for i in support for v in h.edges[i]})
        rho: dict[int, int] = defaultdict(int)
        for j, ei in enumerate(support):
            for v in h.edges[ei]:
                rho[v] += mu[j]
        rho = {v: rho[v] // k for v in verts}
        # generating series per vertex for the diagonal-row placements
        convo = [Fraction(1)]
        for v in verts:
            series = [
                Fraction(math.factorial(rho[v] + j - 1) * deg[v] ** j, math.factorial(j))
                for j in range(t + 1)
            ]
            new = [Fraction(0)] * (t + 1)
            for a, ca in enumerate(convo):
                if ca:
                    for b in range(t + 1 - a):
                        new[a + b] += ca * series[b]
            convo = new
        nu_weight = convo[t]
        if nu_weight == 0:
            continue
        base = Fraction(d * (k - 1) ** (h.n - len(verts)))
        for dist in _root_distributions(h, support, mu):
            arcs: dict[tuple[int, int], int] = defaultdict(int)
            denom = 1
            for j, rooted in enumerate(dist):
                e = h.edges[support[j]]
                for v, c in rooted.items():
                    denom *= math.factorial(c)
                    for x in e:
                        if x != v:
                            arcs[(v, x)] += c
            tau = count_in_arborescences(arcs, verts, verts[0])
            comp[(t, edge_rows)] += base * tau * nu_weight / denom
    return dict(comp)


@lru_cache(maxsize=16384)
def _structural_components_cached(h: Hypergraph, d: int) -> tuple:
    return tuple(sorted(structural_components(h, d).items()))


def trace_structural(h: Hypergraph, d: int) -> AlphaPoly:
    """The d-th moment via the infragraph decomposition."""
    if d == 0:
        return trace_order_zero(h)
    return components_to_poly(dict(_structural_components_cached(h, d)))


def trace(h: Hypergraph, d: int, method: str = "auto") -> AlphaPoly:
    """The d-th moment.  ``method``: auto|structural|brute|closed."""
    if method in ("auto", "structural"):
        return trace_structural(h, d)
    if method == "brute":
        return trace_bruteforce(h, d)
    if method == "closed":
        return trace_closed(h, d) if d else trace_order_zero(h)
    raise ValueError(f"unknown trace method {method!r}")


def adjacency_moment(h: Hypergraph, d: int) -> Fraction:
    """The d-th moment of the pure adjacency tensor (a rational number)."""
    if d == 0:
        return Fraction(h.n * (h.k - 1) ** (h.n - 1))
    comp = dict(_structural_components_cached(h, d))
    return comp.get((0, d), Fraction(0))


def degree_moment(h: Hypergraph, d: int) -> Fraction:
    """The d-th moment of the pure degree tensor: (k-1)^{n-1} sum deg^d."""
    return Fraction((h.k - 1) ** (h.n - 1) * sum(x**d for x in h.degrees()))


def signless_laplacian_moment(h: Hypergraph, d: int) -> Fraction:
    """Moment of D + A, which equals 2^d times the alpha = 1/2 evaluation."""
    if d == 0:
        return Fraction(h.n * (h.k - 1) ** (h.n - 1))
    comp = dict(_structural_components_cached(h, d))
    return sum(comp.values(), Fraction(0))


# ---------------------------------------------------------------------------
# Closed forms through order k+2
# ---------------------------------------------------------------------------

def _complete_root_tree_sum(h: Hypergraph, vertex_set: tuple[int, ...]) -> int:
    """For a complete subhypergraph on k+1 vertices: sum, over all ways to
    root its k+1 edges so each vertex roots exactly one row, of the number
    of spanning in-trees of the induced arc digraph."""
    verts = list(vertex_set)
    total = 0
    for pi in permutations(verts):
        # edge omitting verts[i] is rooted at pi[i]; roots must avoid the
        # omitted vertex and exhaust every vertex once
        if any(pi[i] == verts[i] for i in range(len(verts))):
            continue
        arcs: dict[tuple[int, int], int] = defaultdict(int)
        for i, omitted in enumerate(verts):
            root = pi[i]
            for x in verts:
                if x != omitted and x != root:
                    arcs[(root, x)] += 1
        total += count_in_arborescences(arcs, verts, verts[0])
    return total


@lru_cache(maxsize=1)
def k2_complete_term_constant() -> Fraction:
    """The k = 2 constant of the order-(k+1) complete-subhypergraph term,
    calibrated once against the brute-force moment of the 3-cycle."""
    tri = hypergraph(2, 3, [(0, 1), (0, 2), (1, 2)])
    brute = trace_bruteforce(tri, 3)
    known = phi(tri, 3) + basis_term(1, 2) * (3 * sum(x**2 for x in tri.degrees()))
    diff = brute - known
    c = diff.evaluate(Fraction(0)) / 3
    if diff != basis_term(0, 3) * (3 * c):
        raise AssertionError("k=2 calibration residue has unexpected shape")
    return c


def trace_closed(h: Hypergraph, d: int) -> AlphaPoly:
    """Closed-form moment for 1 <= d <= k+2.

    For d = k+1 with complete subhypergraphs present and k >= 3 the
    required constant is not pinned; that case is refused (brute force
    remains available).
    """
    _require_simple(h)
    k, n = h.k, h.n
    if not 1 <= d <= k + 2:
        raise UnsupportedError(f"closed forms cover orders 1..k+2, got {d}")
    if d <= k - 1:
        return phi(h, d)
    if d == k:
        return phi(h, k) + basis_term(0, k) * ((k - 1) ** (n - k) * k ** (k - 1) * h.m)
    if d == k + 1:
        deg2 = sum(x**2 for x in h.degrees())
        result = phi(h, k + 1) + basis_term(1, k) * (
            (k + 1) * (k - 1) ** (n - k) * k ** (k - 2) * deg2
        )
        cliques = complete_subhypergraphs(h)
        if cliques:
            if k != 2:
                raise UnsupportedError(
                    "order k+1 with complete subhypergraphs is only pinned for k=2"
                )
            c2 = k2_complete_term_constant()
            result = result + basis_term(0, k + 1) * (
                (k + 1) * (k - 1) ** (n - k) * c2 * len(cliques)
            )
        return result
    return trace_k_plus_2(h)


def trace_k_plus_2(h: Hypergraph) -> AlphaPoly:
    """Order k+2: degree part, adjacency part, per-edge degree correlations,
    and the complete-subhypergraph tree-count term."""
    _require_simple(h)
    k, n = h.k, h.n
    d = k + 2
    deg = h.degrees()
    result = phi(h, d)
    adj = adjacency_moment(h, d)
    if adj:
        result = result + basis_term(0, d) * adj
    corr = 0
    for e in h.edges:
        ds = [deg[v] for v in e]
        pair_sum = sum(
            ds[i] * ds[j] for i in range(len(ds)) for j in range(i + 1, len(ds))
        )
        corr += pair_sum + sum(x**2 for x in ds)
    result = result + basis_term(2, k) * (
        (k + 2) * (k - 1) ** (n - k) * k ** (k - 2) * corr
    )
    for S in complete_subhypergraphs(h):
        trees = _complete_root_tree_sum(h, S)
        degsum = sum(deg[v] for v in S)
        result = result + basis_term(1, k + 1) * (
            (k + 2) * (k - 1) ** (n - k - 1) * trees * degsum
        )
    return result


def _require_simple(h: Hypergraph):
    if not h.is_simple():
        raise HypergraphError("moments are defined for simple hypergraphs")


def clear_caches():
    _structural_components_cached.cache_clear()
