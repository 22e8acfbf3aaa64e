"""Simple undirected graphs and the constructions used throughout the package."""
from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from .groups import FiniteGroup, cyclic, direct_product
from .perm import CapExceeded, PermGroup, Permutation


class ConstructionError(ValueError):
    pass


class IdentityInL(ConstructionError):
    """The chosen reading of X_{m1,m2,t} puts the identity into L."""


class Graph:
    """Finite simple graph on ``0..n-1`` with sorted adjacency tuples."""

    __slots__ = ("n", "adj", "_nbr_sets", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self._nbr_sets = tuple(frozenset(s) for s in nbrs)
        self._edges: tuple[tuple[int, int], ...] | None = None

    @classmethod
    def from_simple_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Like the constructor, but loops are dropped instead of rejected."""
        return cls(n, ((u, v) for u, v in edges if u != v))

    def edges(self) -> tuple[tuple[int, int], ...]:
        if self._edges is None:
            self._edges = tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)
        return self._edges

    @property
    def m(self) -> int:
        return len(self.edges())

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def regular_degree(self) -> int | None:
        """The common degree, or None when the graph is not regular."""
        ds = set(self.degrees())
        if len(ds) == 1:
            return ds.pop()
        return 0 if self.n == 0 else None

    def is_regular(self, k: int | None = None) -> bool:
        d = self.regular_degree()
        return d is not None and (k is None or d == k)

    def is_automorphism(self, p: Sequence[int]) -> bool:
        if len(p) != self.n:
            return False
        sets = self._nbr_sets
        return all(sets[p[u]] == frozenset(p[v] for v in self.adj[u]) for u in range(self.n))

    def is_isomorphism_to(self, other: Graph, p: Sequence[int]) -> bool:
        if self.n != other.n or self.m != other.m or sorted(p) != list(range(self.n)):
            return False
        return all(other.has_edge(p[u], p[v]) for u, v in self.edges())

    def girth(self) -> float:
        best = math.inf
        for s in range(self.n):
            dist = {s: 0}
            parent = {s: -1}
            q = deque([s])
            while q:
                u = q.popleft()
                for w in self.adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        q.append(w)
                    elif parent[u] != w:
                        best = min(best, dist[u] + dist[w] + 1)
        return best

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # text format -------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"graph {self.n} {self.m}"]
        lines.extend(f"e {u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Graph:
        lines = text.splitlines()
        if not lines:
            raise ValueError("empty graph file")
        head = lines[0].split()
        if len(head) != 3 or head[0] != "graph":
            raise ValueError(f"bad header: {lines[0]!r}")
        n, m = int(head[1]), int(head[2])
        edges = []
        for ln in lines[1:]:
            if not ln.strip():
                continue
            parts = ln.split()
            if len(parts) != 3 or parts[0] != "e":
                raise ValueError(f"bad edge line: {ln!r}")
            u, v = int(parts[1]), int(parts[2])
            if not u < v:
                raise ValueError(f"edge endpoints must satisfy u < v: {ln!r}")
            edges.append((u, v))
        if len(edges) != m:
            raise ValueError(f"header declares {m} edges, found {len(edges)}")
        if edges != sorted(set(edges)):
            raise ValueError("edge lines must be sorted and unique")
        return cls(n, edges)

    def write(self, path: str | Path) -> None:
        path = Path(path)
        try:
            path.write_text(self.to_text(), encoding="utf-8")
        except OSError as exc:
            raise OSError(f"cannot write graph to {path}: {exc}") from exc

    @classmethod
    def read(cls, path: str | Path) -> Graph:
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise OSError(f"cannot read graph from {path}: {exc}") from exc
        return cls.from_text(text)


# group-based constructions ------------------------------------------------

def _members(G: FiniteGroup, S: Iterable[int]) -> frozenset[int]:
    out = frozenset(S)
    if any(not 0 <= s < G.order for s in out):
        raise ConstructionError("subset contains indices outside the group")
    return out


def _inverse_closed(G: FiniteGroup, S: frozenset[int]) -> bool:
    return all(G.inv[s] in S for s in S)


def cayley(G: FiniteGroup, S: Iterable[int]) -> Graph:
    """Cay(G, S): vertex g is adjacent to sg for every s in S."""
    S = _members(G, S)
    if 0 in S:
        raise ConstructionError("identity in connection set")
    if not _inverse_closed(G, S):
        raise ConstructionError("connection set is not inverse-closed")
    return Graph(G.order, ((g, G.mul[s][g]) for g in range(G.order) for s in S))


@dataclass(frozen=True)
class BiCayLabeling:
    """Vertex ``g`` is g_0 (right part); vertex ``|G| + g`` is g_1 (left part)."""

    group: FiniteGroup

    def vertex(self, g: int, part: int) -> int:
        return g + part * self.group.order

    def decode(self, v: int) -> tuple[int, int]:
        n = self.group.order
        return v % n, v // n

    def action(self, generators: Iterable[int] | None = None) -> PermGroup:
        """The semiregular action (x)_i -> (xg)_i of the group on both parts."""
        G = self.group
        n = G.order
        gens = G.generating_set() if generators is None else list(generators)
        perms = []
        for g in gens:
            img = [G.mul[x][g] for x in range(n)]
            perms.append(Permutation._raw(img + [n + y for y in img]))
        return PermGroup(2 * n, perms)

    def element_permutation(self, g: int) -> Permutation:
        G = self.group
        n = G.order
        img = [G.mul[x][g] for x in range(n)]
        return Permutation._raw(img + [n + y for y in img])


def bicayley(H: FiniteGroup, R: Iterable[int], L: Iterable[int], S: Iterable[int]) -> tuple[Graph, BiCayLabeling]:
    R, L, S = _members(H, R), _members(H, L), _members(H, S)
    if not _inverse_closed(H, R) or not _inverse_closed(H, L):
        raise ConstructionError("R and L must be inverse-closed")
    if 0 in R:
        raise ConstructionError("identity in R")
    if 0 in L:
        raise IdentityInL("identity in L")
    n = H.order
    mul = H.mul
    edges = []
    for h in range(n):
        edges.extend((h, mul[r][h]) for r in R)
        edges.extend((n + h, n + mul[l][h]) for l in L)
        edges.extend((h, n + mul[s][h]) for s in S)
    return Graph(2 * n, edges), BiCayLabeling(H)


READINGS = ("corrected", "literal")


def x_m1m2t(m1: int, m2: int, t: int, reading: str = "corrected") -> tuple[Graph, BiCayLabeling]:
    """BiCay(Z_m1 x Z_m2, R, L, S) with r of order m1 and s of order m2.

    ``literal``: R = {r, r^-1}, L = {r^t, r^-t}, S = {1, s}.
    ``corrected``: R = {s, s^-1}, L = {s^t, s^-t}, S = {1, r}, which keeps the
    exponent t on the factor it is defined modulo.
    """
    if reading not in READINGS:
        raise ValueError(f"reading must be one of {READINGS}")
    if m1 <= 1 or m2 <= 1 or m1 % 2 == 0 or m2 % 2 == 0:
        raise ConstructionError("m1, m2 must be odd integers greater than 1")
    if math.gcd(m1, m2) != 1:
        raise ConstructionError("m1 and m2 must be coprime")
    if not (1 <= t <= m2 and math.gcd(t, m2) == 1):
        raise ConstructionError("need 1 <= t <= m2 with gcd(t, m2) = 1")
    if (t * t + 1) % m2 != 0:
        raise ConstructionError(f"t^2 is not -1 mod {m2}")
    H = direct_product(cyclic(m1), cyclic(m2))

    def r(k):
        return (k % m1) * m2

    def s(k):
        return k % m2

    if reading == "literal":
        R, L, S = {r(1), r(-1)}, {r(t), r(-t)}, {0, s(1)}
    else:
        R, L, S = {s(1), s(-1)}, {s(t), s(-t)}, {0, r(1)}
    if 0 in L:
        raise IdentityInL(f"L contains the identity under the {reading} reading (t={t}, m1={m1})")
    return bicayley(H, R, L, S)


def coset_graph(G: PermGroup, H_generators: Iterable[Sequence[int]], D: Iterable[Sequence[int]],
                cap: int = 10**6) -> Graph:
    """cos(G, H, D): right cosets Hg, with Hg adjacent to Hdg.

    Cosets are numbered breadth-first from H, following G's generators in order.
    """
    n = G.degree
    H = PermGroup(n, H_generators)
    if not H.is_subgroup_of(G):
        raise ConstructionError("H is not contained in G")
    D = sorted({p if isinstance(p, Permutation) else Permutation(p) for p in D})
    for d in D:
        if not G.contains(d):
            raise ConstructionError("D is not contained in G")
    dset = set(D)
    if any(d.inverse() not in dset for d in D):
        raise ConstructionError("D is not inverse-closed")
    if any(h * d not in dset or d * h not in dset for d in D for h in H.generators):
        raise ConstructionError("D is not a union of double cosets of H")
    if any(H.contains(d) for d in D):
        raise ConstructionError("D meets H, which would create loops")
    if G.order() > cap:
        raise CapExceeded(G.order(), cap)
    h_elems = H.elements(cap)

    coset_of: dict[Permutation, int] = {}
    reps: list[Permutation] = []

    def register(g: Permutation) -> int:
        idx = coset_of.get(g)
        if idx is None:
            idx = len(reps)
            reps.append(g)
            for h in h_elems:
                coset_of[h * g] = idx
        return idx

    register(G.identity())
    i = 0
    while i < len(reps):
        g = reps[i]
        for x in G.generators:
            register(g * x)
        i += 1
    edges = set()
    for i, g in enumerate(reps):
        for d in D:
            j = coset_of[d * g]
            edges.add((min(i, j), max(i, j)))
    return Graph(len(reps), sorted(edges))


def double_coset(H_elements: Iterable[Permutation], d: Permutation) -> set[Permutation]:
    hs = list(H_elements)
    return {a * d * b for a in hs for b in hs}


# graph operations ---------------------------------------------------------

def lexicographic(X: Graph, Y: Graph) -> Graph:
    """X[Y] on pairs (x, y) numbered x*|Y| + y."""
    ny = Y.n
    edges = []
    for x1, x2 in X.edges():
        for y1 in range(ny):
            for y2 in range(ny):
                edges.append((x1 * ny + y1, x2 * ny + y2))
    for x in range(X.n):
        edges.extend((x * ny + y1, x * ny + y2) for y1, y2 in Y.edges())
    return Graph(X.n * ny, edges)


def lexicographic_witness(X: Graph, GX: PermGroup, Y: Graph, GY: PermGroup) -> PermGroup:
    """GX x GY acting coordinatewise on X[Y]; regular whenever GX and GY are."""
    nx, ny = X.n, Y.n
    gens = []
    for a in GX.generators:
        gens.append(Permutation._raw(a[v // ny] * ny + v % ny for v in range(nx * ny)))
    for b in GY.generators:
        gens.append(Permutation._raw((v // ny) * ny + b[v % ny] for v in range(nx * ny)))
    return PermGroup(nx * ny, gens)


def line_graph(X: Graph) -> Graph:
    """Vertices are X's edges in lexicographic order."""
    edges = X.edges()
    incident: list[list[int]] = [[] for _ in range(X.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    out = set()
    for inc in incident:
        out.update(combinations(inc, 2))
    return Graph(len(edges), sorted(out))


def generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k): outer vertices a_i = i, inner vertices b_i = n + i."""
    if n < 3 or not (1 <= k and 2 * k < n):
        raise ConstructionError(f"invalid generalized Petersen parameters ({n}, {k})")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph(2 * n, edges)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ConstructionError("cycle needs n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def matching(m: int) -> Graph:
    return Graph(2 * m, ((2 * i, 2 * i + 1) for i in range(m)))


def empty(n: int) -> Graph:
    return Graph(n)


def disjoint_union(X: Graph, Y: Graph) -> Graph:
    return Graph(X.n + Y.n, list(X.edges()) + [(u + X.n, v + X.n) for u, v in Y.edges()])


def octahedron() -> Graph:
    return Graph(6, ((u, v) for u, v in combinations(range(6), 2) if u // 2 != v // 2))


# Coxeter graph: a_i = i, b_i = 7 + i, c_i = 14 + i, d_i = 21 + i (i mod 7),
# with a_i ~ a_{i+1}, b_i ~ b_{i+2}, c_i ~ c_{i+3}, d_i ~ a_i, b_i, c_i.
COXETER_EDGES: tuple[tuple[int, int], ...] = (
    (0, 1), (0, 6), (0, 21), (1, 2), (1, 22), (2, 3), (2, 23), (3, 4), (3, 24),
    (4, 5), (4, 25), (5, 6), (5, 26), (6, 27), (7, 9), (7, 12), (7, 21), (8, 10),
    (8, 13), (8, 22), (9, 11), (9, 23), (10, 12), (10, 24), (11, 13), (11, 25),
    (12, 26), (13, 27), (14, 17), (14, 18), (14, 21), (15, 18), (15, 19), (15, 22),
    (16, 19), (16, 20), (16, 23), (17, 20), (17, 24), (18, 25), (19, 26), (20, 27),
)


def coxeter() -> Graph:
    return Graph(28, COXETER_EDGES)


_NAMED_FIXED = {
    "petersen": lambda: generalized_petersen(5, 2),
    "desargues": lambda: generalized_petersen(10, 3),
    "dodecahedron": lambda: generalized_petersen(10, 2),
    "coxeter": coxeter,
    "octahedron": octahedron,
}

_NAMED_PARAM = {
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "matching": (matching, 1),
    "empty": (empty, 1),
    "path": (path, 1),
}


def named(name: str, *params: int) -> Graph:
    """Catalog lookup; parameters may also be inlined, e.g. ``"cycle(6)"``."""
    m = re.fullmatch(r"\s*([a-z_]+)\s*(?:\(([\d,\s]*)\))?\s*", name.lower())
    if not m:
        raise KeyError(f"unknown graph name {name!r}")
    key = m.group(1)
    if m.group(2):
        params = tuple(int(x) for x in m.group(2).split(",") if x.strip()) + tuple(params)
    if key in _NAMED_FIXED:
        if params:
            raise ValueError(f"{key} takes no parameters")
        return _NAMED_FIXED[key]()
    if key in _NAMED_PARAM:
        fn, arity = _NAMED_PARAM[key]
        if len(params) != arity:
            raise ValueError(f"{key} takes {arity} parameter(s)")
        return fn(*params)
    raise KeyError(f"unknown graph name {name!r}")


NAMED_GRAPHS = tuple(_NAMED_FIXED) + tuple(_NAMED_PARAM)
