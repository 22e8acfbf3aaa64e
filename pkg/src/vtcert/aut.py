"""Graph automorphisms by equitable refinement and individualization.

The search builds the leftmost path of the refinement tree (individualize the
smallest vertex of the first smallest non-singleton cell), then walks back up
it.  At each level every vertex of the target cell that is not already in the
orbit of the path vertex is tested by looking for a leaf of its subtree that
matches the leftmost leaf.  The automorphisms found form a strong generating
set relative to the path.
"""
from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph
from .perm import PermGroup, Permutation, _UnionFind


class _Partition:
    """Ordered partition; a cell is named by its start position in ``lab``."""

    __slots__ = ("lab", "cell_of", "cell_end", "ncells")

    def __init__(self, lab, cell_of, cell_end, ncells):
        self.lab = lab
        self.cell_of = cell_of
        self.cell_end = cell_end
        self.ncells = ncells

    @classmethod
    def unit(cls, n: int) -> _Partition:
        return cls(list(range(n)), [0] * n, [n] * n, 1 if n else 0)

    def copy(self) -> _Partition:
        return _Partition(self.lab[:], self.cell_of[:], self.cell_end[:], self.ncells)

    def is_discrete(self) -> bool:
        return self.ncells == len(self.lab)

    def cells(self) -> list[list[int]]:
        out = []
        s = 0
        n = len(self.lab)
        while s < n:
            e = self.cell_end[s]
            out.append(self.lab[s:e])
            s = e
        return out

    def target_cell(self) -> int:
        """Start of the first smallest non-singleton cell."""
        best, best_size = -1, None
        s = 0
        n = len(self.lab)
        while s < n:
            e = self.cell_end[s]
            size = e - s
            if size > 1 and (best_size is None or size < best_size):
                best, best_size = s, size
                if size == 2:
                    break
            s = e
        return best

    def individualize(self, v: int) -> int:
        s = self.cell_of[v]
        e = self.cell_end[s]
        lab = self.lab
        i = lab.index(v, s, e)
        lab[s], lab[i] = lab[i], lab[s]
        self.cell_end[s] = s + 1
        self.cell_end[s + 1] = e
        for x in lab[s + 1:e]:
            self.cell_of[x] = s + 1
        self.ncells += 1
        return s


def refine(adj: Sequence[Sequence[int]], P: _Partition, splitters: list[int]) -> tuple:
    """Refine ``P`` in place to the coarsest equitable refinement; return the trace.

    The trace lists every split as (splitter start, cell start, fragment
    (count, size) pairs) and depends only on positions and counts, so it is
    invariant under relabelling.
    """
    lab, cell_of, cell_end = P.lab, P.cell_of, P.cell_end
    queue = deque(splitters)
    queued = set(splitters)
    trace = []
    while queue:
        w = queue.popleft()
        queued.discard(w)
        count: dict[int, int] = {}
        for u in lab[w:cell_end[w]]:
            for x in adj[u]:
                count[x] = count.get(x, 0) + 1
        for s in sorted({cell_of[x] for x in count}):
            e = cell_end[s]
            if e - s == 1:
                continue
            members = lab[s:e]
            keys = [count.get(v, 0) for v in members]
            if min(keys) == max(keys):
                continue
            pairs = sorted(zip(keys, members))
            frags = []
            start = s
            for i in range(1, len(pairs) + 1):
                if i == len(pairs) or pairs[i][0] != pairs[i - 1][0]:
                    frags.append((start, s + i, pairs[i - 1][0]))
                    start = s + i
            lab[s:e] = [v for _, v in pairs]
            for fs, fe, _ in frags:
                cell_end[fs] = fe
                for v in lab[fs:fe]:
                    cell_of[v] = fs
            P.ncells += len(frags) - 1
            trace.append((w, s, tuple((k, fe - fs) for fs, fe, k in frags)))
            if s in queued:
                push = frags[1:]
            else:
                largest = max(frags, key=lambda f: f[1] - f[0])
                push = [f for f in frags if f is not largest]
            for f in push:
                queue.append(f[0])
                queued.add(f[0])
    trace.append(P.ncells)
    return tuple(trace)


def is_equitable(X: Graph, cells: Sequence[Sequence[int]]) -> bool:
    cell_id = {}
    for i, c in enumerate(cells):
        for v in c:
            cell_id[v] = i
    for c in cells:
        profiles = set()
        for v in c:
            prof = [0] * len(cells)
            for w in X.adj[v]:
                prof[cell_id[w]] += 1
            profiles.add(tuple(prof))
        if len(profiles) > 1:
            return False
    return True


@dataclass
class _Path:
    nodes: list[_Partition]
    traces: list[tuple]
    targets: list[int]
    base: list[int]

    @property
    def leaf(self) -> list[int]:
        return self.nodes[-1].lab


def _first_path(X: Graph) -> _Path:
    root = _Partition.unit(X.n)
    traces = [refine(X.adj, root, [0] if X.n else [])]
    nodes, targets, base = [root], [], []
    P = root
    while not P.is_discrete():
        s = P.target_cell()
        v = min(P.lab[s:P.cell_end[s]])
        Q = P.copy()
        Q.individualize(v)
        traces.append(refine(X.adj, Q, [s]))
        nodes.append(Q)
        targets.append(s)
        base.append(v)
        P = Q
    return _Path(nodes, traces, targets, base)


class _LeafSearch:
    """Find a leaf of ``graph``'s tree matching ``ref``'s leftmost leaf."""

    def __init__(self, graph: Graph, ref: _Path, accept, prune_gens: list[Permutation]):
        self.graph = graph
        self.ref = ref
        self.accept = accept
        self.prune_gens = prune_gens
        self.nodes_visited = 0

    def run(self, P: _Partition, depth: int, fixed: list[int]):
        self.nodes_visited += 1
        ref = self.ref
        if depth == len(ref.base):
            if not P.is_discrete():
                return None
            return self.accept(P.lab)
        s = ref.targets[depth]
        cell = sorted(P.lab[s:P.cell_end[s]])
        stab = [g for g in self.prune_gens if all(g[x] == x for x in fixed)]
        uf = _UnionFind(self.graph.n) if stab else None
        if uf is not None:
            for g in stab:
                for x in cell:
                    uf.union(x, g[x])
        tried = set()
        for u in cell:
            key = uf.find(u) if uf is not None else u
            if key in tried:
                continue
            tried.add(key)
            Q = P.copy()
            Q.individualize(u)
            if refine(self.graph.adj, Q, [s]) != ref.traces[depth + 1]:
                continue
            found = self.run(Q, depth + 1, fixed + [u])
            if found is not None:
                return found
        return None


def _leaf_map(ref_leaf: Sequence[int], leaf: Sequence[int]) -> Permutation:
    img = [0] * len(leaf)
    for a, b in zip(ref_leaf, leaf):
        img[a] = b
    return Permutation._raw(img)


@functools.lru_cache(maxsize=128)
def automorphism_group(X: Graph) -> PermGroup:
    """Aut(X) as a PermGroup whose generators are a strong generating set."""
    if X.n == 0:
        raise ValueError("the empty vertex set has no permutation group")
    path = _first_path(X)
    ref_leaf = path.leaf
    edges = X.edges()

    def accept(leaf):
        g = _leaf_map(ref_leaf, leaf)
        if all(X.has_edge(g[u], g[v]) for u, v in edges):
            return g
        return None

    gens: list[Permutation] = []
    for level in range(len(path.base) - 1, -1, -1):
        P = path.nodes[level]
        s = path.targets[level]
        v = path.base[level]
        uf = _UnionFind(X.n)
        for g in gens:
            for x in range(X.n):
                uf.union(x, g[x])
        failed: list[int] = []
        for w in sorted(P.lab[s:P.cell_end[s]]):
            if uf.find(w) == uf.find(v) or any(uf.find(f) == uf.find(w) for f in failed):
                continue
            Q = P.copy()
            Q.individualize(w)
            if refine(X.adj, Q, [s]) != path.traces[level + 1]:
                failed.append(w)
                continue
            search = _LeafSearch(X, path, accept, gens)
            g = search.run(Q, level + 1, path.base[:level] + [w])
            if g is None:
                failed.append(w)
            else:
                gens.append(g)
                for x in range(X.n):
                    uf.union(x, g[x])
    return PermGroup(X.n, gens)


def are_isomorphic(X: Graph, Y: Graph) -> Permutation | None:
    """A vertex bijection carrying X's edges onto Y's, or None."""
    if X.n != Y.n or X.m != Y.m or sorted(X.degrees()) != sorted(Y.degrees()):
        return None
    if X.n == 0:
        return Permutation(())
    ref = _first_path(X)
    root = _Partition.unit(Y.n)
    if refine(Y.adj, root, [0]) != ref.traces[0]:
        return None
    aut_y = automorphism_group(Y)

    def accept(leaf):
        p = _leaf_map(ref.leaf, leaf)
        if all(Y.has_edge(p[u], p[v]) for u, v in X.edges()):
            return p
        return None

    return _LeafSearch(Y, ref, accept, list(aut_y.generators)).run(root, 0, [])


def root_trace(X: Graph) -> tuple:
    """Trace of the degree refinement; unequal traces rule out isomorphism."""
    return refine(X.adj, _Partition.unit(X.n), [0] if X.n else [])


def equitable_partition(X: Graph) -> list[list[int]]:
    P = _Partition.unit(X.n)
    refine(X.adj, P, [0] if X.n else [])
    return P.cells()


def edge_orbits(X: Graph, A: PermGroup | None = None) -> list[list[tuple[int, int]]]:
    A = A or automorphism_group(X)
    edges = X.edges()
    index = {e: i for i, e in enumerate(edges)}
    uf = _UnionFind(len(edges))
    for g in A.generators:
        for i, (u, v) in enumerate(edges):
            a, b = g[u], g[v]
            uf.union(i, index[(a, b) if a < b else (b, a)])
    groups: dict[int, list[tuple[int, int]]] = {}
    for i, e in enumerate(edges):
        groups.setdefault(uf.find(i), []).append(e)
    return list(groups.values())


def is_vertex_transitive(X: Graph) -> bool:
    if X.n <= 1:
        return True
    return automorphism_group(X).is_transitive()


def is_edge_transitive(X: Graph) -> bool:
    return len(edge_orbits(X)) <= 1


def is_arc_transitive(X: Graph) -> bool:
    """Vertex-transitive, and the stabilizer of vertex 0 is transitive on its neighbours."""
    if not is_vertex_transitive(X):
        return False
    if X.n == 0 or not X.adj[0]:
        return True
    stab = automorphism_group(X).stabilizer(0)
    return set(X.adj[0]) <= set(stab.orbit(X.adj[0][0]))
