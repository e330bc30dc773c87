"""k-uniform multi-hypergraphs with labeled vertices.

The one input object everything else consumes.  Values are immutable;
every operation returns a new hypergraph.  Edge multiplicities default
to 1 and are only ever >1 for k-valent infragraphs, which reuse this
type unchanged.

JSON interchange format::

    {"k": int, "n": int, "edges": [[v, ...], ...], "mult": [int, ...]}

``mult`` is optional (default all 1).  Edges are sorted ascending on
load; duplicate edges are merged by summing multiplicities.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import HypergraphError


@dataclass(frozen=True, slots=True)
class Hypergraph:
    k: int
    n: int
    edges: tuple[tuple[int, ...], ...]
    mult: tuple[int, ...]

    def __post_init__(self):
        if self.k < 2:
            raise HypergraphError(f"edge cardinality k={self.k} must be >= 2")
        if self.n < 0:
            raise HypergraphError("negative vertex count")
        if len(self.edges) != len(self.mult):
            raise HypergraphError("edges and multiplicities differ in length")
        prev = None
        for e, mu in zip(self.edges, self.mult):
            if len(e) != self.k or len(set(e)) != self.k:
                raise HypergraphError(f"edge {e} must have {self.k} distinct vertices")
            if tuple(sorted(e)) != e:
                raise HypergraphError(f"edge {e} is not sorted")
            if not all(0 <= v < self.n for v in e):
                raise HypergraphError(f"edge {e} has a vertex outside [0, {self.n})")
            if mu < 1:
                raise HypergraphError(f"multiplicity {mu} must be positive")
            if prev is not None and e <= prev:
                raise HypergraphError("edges must be strictly increasing")
            prev = e

    # -- construction ---------------------------------------------------
    @property
    def m(self) -> int:
        """Number of distinct edges."""
        return len(self.edges)

    @property
    def total_mult(self) -> int:
        return sum(self.mult)

    def is_simple(self) -> bool:
        return all(mu == 1 for mu in self.mult)

    def degree(self, v: int) -> int:
        return sum(mu for e, mu in zip(self.edges, self.mult) if v in e)

    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for e, mu in zip(self.edges, self.mult):
            for v in e:
                deg[v] += mu
        return tuple(deg)

    def incident_edges(self, v: int) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.edges) if v in e)

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Apply the vertex permutation v -> perm[v]."""
        return hypergraph(
            self.k,
            self.n,
            [tuple(perm[v] for v in e) for e in self.edges],
            self.mult,
        )

    # -- serialization ----------------------------------------------------
    def to_json_dict(self) -> dict:
        out = {"k": self.k, "n": self.n, "edges": [list(e) for e in self.edges]}
        if not self.is_simple():
            out["mult"] = list(self.mult)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    def __str__(self) -> str:
        return f"Hypergraph(k={self.k}, n={self.n}, edges={list(self.edges)})"


def hypergraph(
    k: int,
    n: int,
    edges: Iterable[Iterable[int]],
    mult: Iterable[int] | None = None,
) -> Hypergraph:
    """Normalizing constructor: sorts edges, merges duplicates."""
    raw = [tuple(sorted(e)) for e in edges]
    mults = list(mult) if mult is not None else [1] * len(raw)
    if len(mults) != len(raw):
        raise HypergraphError("mult list does not match edge list")
    merged: dict[tuple[int, ...], int] = {}
    for e, mu in zip(raw, mults):
        merged[e] = merged.get(e, 0) + mu
    items = sorted(merged.items())
    return Hypergraph(
        k=k,
        n=n,
        edges=tuple(e for e, _ in items),
        mult=tuple(mu for _, mu in items),
    )


def from_json_dict(data: dict) -> Hypergraph:
    return hypergraph(
        int(data["k"]),
        int(data["n"]),
        [tuple(int(v) for v in e) for e in data["edges"]],
        [int(x) for x in data["mult"]] if "mult" in data else None,
    )


def loads(text: str) -> Hypergraph:
    return from_json_dict(json.loads(text))


# -- structural predicates ---------------------------------------------------

def degree_sequence(h: Hypergraph) -> tuple[int, ...]:
    """Per-vertex degrees (sum of multiplicities of incident edges)."""
    return h.degrees()


def is_connected(h: Hypergraph) -> bool:
    if h.n <= 1:
        return True
    parent = list(range(h.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in h.edges:
        r = find(e[0])
        for v in e[1:]:
            parent[find(v)] = r
    return len({find(v) for v in range(h.n)}) == 1


def is_linear(h: Hypergraph) -> bool:
    """Any two edges (counting copies) share at most one vertex."""
    if any(mu > 1 for mu in h.mult):
        return False
    for i, e in enumerate(h.edges):
        se = set(e)
        for f in h.edges[i + 1:]:
            if len(se.intersection(f)) > 1:
                return False
    return True


def _incidence_adjacency(h: Hypergraph) -> list[list[int]]:
    """Bipartite incidence graph: nodes 0..n-1 vertices, n..n+m-1 edges."""
    adj: list[list[int]] = [[] for _ in range(h.n + h.m)]
    for i, e in enumerate(h.edges):
        node = h.n + i
        for v in e:
            adj[v].append(node)
            adj[node].append(v)
    return adj


def girth(h: Hypergraph) -> int | None:
    """Length (in edges) of a shortest Berge cycle; None when acyclic.

    A pair of edge copies, or two edges meeting in >= 2 vertices, forms a
    cycle of length 2.  Longer cycles are found as cycles of the bipartite
    incidence graph (a Berge cycle of length g is an incidence cycle of
    length 2g).
    """
    if any(mu > 1 for mu in h.mult):
        return 2
    for i, e in enumerate(h.edges):
        se = set(e)
        for f in h.edges[i + 1:]:
            if len(se.intersection(f)) > 1:
                return 2
    adj = _incidence_adjacency(h)
    best: int | None = None
    total = len(adj)
    for start in range(h.n, total):  # every cycle passes through an edge node
        dist = [-1] * total
        par = [-1] * total
        dist[start] = 0
        queue = [start]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            if best is not None and dist[x] >= best // 2:
                break
            for y in adj[x]:
                if dist[y] == -1:
                    dist[y] = dist[x] + 1
                    par[y] = x
                    queue.append(y)
                elif par[x] != y and par[y] != x:
                    cyc = dist[x] + dist[y] + 1
                    if best is None or cyc < best:
                        best = cyc
    if best is None:
        return None
    return best // 2


def diameter(h: Hypergraph) -> int:
    """Max over vertex pairs of the least number of edges on a connecting walk."""
    if not is_connected(h):
        raise HypergraphError("diameter of a disconnected hypergraph")
    if h.n <= 1:
        return 0
    adj = _incidence_adjacency(h)
    worst = 0
    for s in range(h.n):
        dist = {s: 0}
        queue = [s]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        worst = max(worst, max(d for node, d in dist.items() if node < h.n))
    return worst // 2


HYPERTREE = "hypertree"
LINEAR_UNICYCLIC = "linear-unicyclic"
OTHER = "other"


@dataclass(frozen=True, slots=True)
class Classification:
    kind: str
    girth: int | None = None


def classify(h: Hypergraph) -> Classification:
    """Hypertree / linear unicyclic (with girth) / other.

    A connected simple hypergraph on n = m(k-1)+1 vertices is acyclic; a
    connected linear one on n = m(k-1) vertices carries exactly one Berge
    cycle (its incidence graph has cyclomatic number 1).
    """
    if not is_connected(h):
        return Classification(OTHER)
    if h.is_simple() and h.n == h.m * (h.k - 1) + 1:
        return Classification(HYPERTREE)
    if is_linear(h) and h.n == h.m * (h.k - 1):
        return Classification(LINEAR_UNICYCLIC, girth(h))
    return Classification(OTHER)


def pendant_edges_at(h: Hypergraph, u: int) -> list[int]:
    """Indices of pendant edges attached at u.

    An edge is pendant when exactly one of its vertices has degree >= 2;
    that vertex is its attachment.
    """
    deg = h.degrees()
    out = []
    for i, e in enumerate(h.edges):
        heavy = [v for v in e if deg[v] >= 2]
        if len(heavy) == 1 and heavy[0] == u:
            out.append(i)
    return out


def complete_subhypergraphs(h: Hypergraph) -> list[tuple[int, ...]]:
    """Vertex sets S of size k+1 whose k+1 k-subsets are all edges of h."""
    if not h.is_simple():
        raise HypergraphError("complete subhypergraph scan expects a simple hypergraph")
    edge_set = set(h.edges)
    from itertools import combinations

    candidates = sorted({v for e in h.edges for v in e})
    found = []
    for s in combinations(candidates, h.k + 1):
        if all(tuple(sorted(set(s) - {v})) in edge_set for v in s):
            found.append(s)
    return found


