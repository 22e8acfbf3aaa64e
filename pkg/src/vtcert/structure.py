"""Quotients, induced subgraphs, and searches for regular and semiregular subgroups.

Any regular subgroup of a group A acting on n points consists of the identity
and fixed-point-free elements of order dividing n.  The Cayley search therefore
only ever looks inside that set (called F here), which is usually a small
fraction of A.
"""
from __future__ import annotations

import enum
import logging
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .aut import automorphism_group
from .graph import Graph
from .perm import OrbitPartition, PermGroup, Permutation

log = logging.getLogger(__name__)

DEFAULT_CAP = 10**6


class Status(str, enum.Enum):
    YES = "yes"
    NO = "no"
    INCONCLUSIVE = "inconclusive"

    def __str__(self) -> str:
        return self.value


@dataclass
class CayleyVerdict:
    status: Status
    witness: PermGroup | None = None
    cap: int = DEFAULT_CAP
    aut_order: int | None = None
    f_size: int | None = None
    nodes: int = 0
    method: str = "search"

    def summary(self) -> dict:
        out = {
            "status": self.status.value,
            "method": self.method,
            "cap": self.cap,
            "aut_order": self.aut_order,
            "f_size": self.f_size,
            "search_nodes": self.nodes,
        }
        if self.witness is not None:
            out["witness_order"] = self.witness.order()
            out["witness_generators"] = [list(g) for g in self.witness.generators]
        return out


# partitions and subgraphs ---------------------------------------------------

def quotient_graph(X: Graph, P: OrbitPartition | Iterable[Iterable[int]]) -> Graph:
    """Cells become vertices; distinct cells are adjacent when an edge joins them."""
    cells = P.cells if isinstance(P, OrbitPartition) else [tuple(c) for c in P]
    cell_of = [-1] * X.n
    for i, c in enumerate(cells):
        for v in c:
            if not 0 <= v < X.n or cell_of[v] != -1:
                raise ValueError("cells are not a partition of the vertex set")
            cell_of[v] = i
    if -1 in cell_of:
        raise ValueError("cells do not cover the vertex set")
    edges = {(min(cell_of[u], cell_of[v]), max(cell_of[u], cell_of[v]))
             for u, v in X.edges() if cell_of[u] != cell_of[v]}
    return Graph(len(cells), sorted(edges))


def induced_subgraph(X: Graph, B: Iterable[int]) -> Graph:
    verts = sorted(set(B))
    if any(not 0 <= v < X.n for v in verts):
        raise ValueError("vertex out of range")
    pos = {v: i for i, v in enumerate(verts)}
    return Graph(len(verts), ((pos[u], pos[v]) for u, v in X.edges() if u in pos and v in pos))


def components(X: Graph) -> list[list[int]]:
    seen = [False] * X.n
    out = []
    for s in range(X.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        q = deque([s])
        while q:
            u = q.popleft()
            for w in X.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    q.append(w)
        out.append(sorted(comp))
    return out


def is_connected(X: Graph) -> bool:
    return len(components(X)) <= 1


# subgroup searches ----------------------------------------------------------

def _search_key(p: Permutation):
    return (-p.order(), tuple(p))


def _candidates(A: PermGroup, n_target: int, cap: int) -> list[Permutation]:
    """Non-identity fixed-point-free elements whose order divides ``n_target``."""
    out = []
    for g in A.iter_elements():
        if g.is_fixed_point_free() and n_target % g.order() == 0:
            out.append(g)
    out.sort(key=_search_key)
    return out


def _cyclic_representatives(candidates: list[Permutation]) -> list[Permutation]:
    """One generator per cyclic subgroup, keeping the first in search order.

    <H, g> = <H, g^k> whenever gcd(k, |g|) = 1, so the other generators of
    <g> add nothing to the search.
    """
    covered: set[Permutation] = set()
    reps = []
    for g in candidates:
        if g in covered:
            continue
        reps.append(g)
        n = g.order()
        x = g
        for k in range(1, n):
            if math.gcd(k, n) == 1:
                covered.add(x)
            x = x * g
    return reps


class _ClosureSearch:
    """Exhaustive search over subgroups contained in F = candidates + identity."""

    def __init__(self, degree: int, candidates: list[Permutation], target: int):
        self.ident = Permutation.identity(degree)
        self.cands = _cyclic_representatives(candidates)
        self.allowed = set(candidates)
        self.allowed.add(self.ident)
        self.target = target
        self.visited: set[frozenset] = set()
        self.nodes = 0

    def _extend(self, H: frozenset, g: Permutation) -> frozenset | None:
        # closure of H and g; abort as soon as it leaves F or overshoots the target
        gens = self._gens[H] + [g]
        elems = set(H)
        queue = deque(H)
        while queue:
            x = queue.popleft()
            for s in gens:
                y = x * s
                if y not in elems:
                    if y not in self.allowed or len(elems) == self.target:
                        return None
                    elems.add(y)
                    queue.append(y)
        if self.target % len(elems):
            return None
        K = frozenset(elems)
        self._gens.setdefault(K, gens)
        return K

    def run(self) -> frozenset | None:
        start = frozenset([self.ident])
        self._gens = {start: []}
        self.visited.add(start)
        if self.target == 1:
            return start
        stack = [start]
        while stack:
            H = stack.pop()
            self.nodes += 1
            children = []
            for g in self.cands:
                if g in H:
                    continue
                K = self._extend(H, g)
                if K is None or K in self.visited:
                    continue
                self.visited.add(K)
                if len(K) == self.target:
                    return K
                children.append(K)
            # depth-first, keeping the preferred (long-cycle) children on top
            stack.extend(reversed(children))
        return None


def _group_from_elements(degree: int, elems: Iterable[Permutation]) -> PermGroup:
    elems = sorted(elems, key=_search_key)
    gens: list[Permutation] = []
    span: set[Permutation] = {Permutation.identity(degree)}
    for g in elems:
        if g not in span:
            gens.append(g)
            span = _span(degree, gens)
    return PermGroup(degree, gens)


def _span(degree: int, gens: list[Permutation]) -> set[Permutation]:
    ident = Permutation.identity(degree)
    seen = {ident}
    q = deque([ident])
    while q:
        x = q.popleft()
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                q.append(y)
    return seen


def find_regular_subgroup(A: PermGroup, n: int | None = None, cap: int = DEFAULT_CAP) -> CayleyVerdict:
    """Look for a subgroup of A acting regularly on its ``n`` points."""
    n = A.degree if n is None else n
    if n != A.degree:
        raise ValueError("n must equal the degree of A")
    order = A.order()
    if order > cap:
        return CayleyVerdict(Status.INCONCLUSIVE, cap=cap, aut_order=order)
    if not A.is_transitive():
        return CayleyVerdict(Status.NO, cap=cap, aut_order=order, f_size=0, method="intransitive")
    cands = _candidates(A, n, cap)
    search = _ClosureSearch(n, cands, n)
    K = search.run()
    if K is None:
        return CayleyVerdict(Status.NO, cap=cap, aut_order=order, f_size=len(cands) + 1,
                             nodes=search.nodes)
    W = _group_from_elements(n, K)
    return CayleyVerdict(Status.YES, witness=W, cap=cap, aut_order=order,
                         f_size=len(cands) + 1, nodes=search.nodes)


def verify_regular_witness(X: Graph, W: PermGroup) -> bool:
    return (W.degree == X.n and W.is_regular()
            and all(X.is_automorphism(g) for g in W.generators))


def is_cayley(X: Graph, cap: int = DEFAULT_CAP, witness: PermGroup | None = None) -> CayleyVerdict:
    """Cayley verdict for X.  A supplied witness is verified and short-circuits the search."""
    if witness is not None:
        if not verify_regular_witness(X, witness):
            raise ValueError("supplied witness is not a regular group of automorphisms")
        return CayleyVerdict(Status.YES, witness=witness, cap=cap, method="witness")
    if X.n == 1:
        return CayleyVerdict(Status.YES, witness=PermGroup(1), cap=cap, aut_order=1, method="trivial")
    A = automorphism_group(X)
    verdict = find_regular_subgroup(A, X.n, cap)
    if verdict.status is Status.YES:
        assert verify_regular_witness(X, verdict.witness)
    return verdict


def find_semiregular_two_orbits(A: PermGroup, k: int, cap: int = DEFAULT_CAP,
                                cyclic: bool = False) -> PermGroup | None | Status:
    """A semiregular subgroup of order k with two orbits on the 2k points.

    Returns the subgroup, None when none exists, or ``Status.INCONCLUSIVE``
    when |A| exceeds the cap.  With ``cyclic=True`` only cyclic subgroups
    are considered.
    """
    if A.degree != 2 * k:
        raise ValueError("degree of A must be 2k")
    if A.order() > cap:
        return Status.INCONCLUSIVE
    cands = _candidates(A, k, cap)
    if cyclic:
        for g in cands:
            if _is_semiregular_cyclic(g, k):
                return PermGroup(2 * k, [g])
        return None
    K = _ClosureSearch(2 * k, cands, k).run()
    if K is None:
        return None
    return _group_from_elements(2 * k, K)


def _is_semiregular_cyclic(rho: Permutation, n: int) -> bool:
    return rho.order() == n and all(len(c) == n for c in rho.cycles())


def is_metacirculant(X: Graph, m: int, n: int, cap: int = DEFAULT_CAP) -> Status:
    """Decide whether X is an (m, n)-metacirculant by scanning Aut(X)."""
    if m * n != X.n:
        raise ValueError("|V(X)| must equal m*n")
    A = automorphism_group(X)
    if A.order() > cap:
        return Status.INCONCLUSIVE
    elems = A.elements(cap)
    seen_subgroups = set()
    for rho in elems:
        if not _is_semiregular_cyclic(rho, n):
            continue
        powers = [rho ** i for i in range(n)]
        cyc = frozenset(powers)
        if cyc in seen_subgroups:
            continue
        seen_subgroups.add(cyc)
        orbit_of = {}
        for i, c in enumerate(rho.cycles()):
            for v in c:
                orbit_of[v] = i
        reps = [c[0] for c in rho.cycles()]
        for sigma in elems:
            if sigma.inverse() * rho * sigma not in cyc:
                continue
            # induced permutation of the m orbits must be a single m-cycle
            induced = [orbit_of[sigma[r]] for r in reps]
            j, steps = 0, 0
            while True:
                j = induced[j]
                steps += 1
                if j == 0:
                    break
            if steps != m:
                continue
            if (sigma ** m).fixed_points():
                return Status.YES
    return Status.NO


def cyclic_normality_diagnostic(n: int, S: Iterable[int]) -> dict:
    """Compare |Aut(Z_n, S)| with the vertex stabilizer of Cay(Z_n, S).

    Equality is what a normal circulant would show; this is a diagnostic only.
    """
    from .groups import aut_cyclic_stabilizing, cyclic as cyclic_group
    from .graph import cayley

    S = sorted({s % n for s in S})
    X = cayley(cyclic_group(n), S)
    A = automorphism_group(X)
    multipliers = aut_cyclic_stabilizing(n, S)
    stab = A.order() // n if A.is_transitive() else None
    return {
        "n": n,
        "connection_set": S,
        "aut_order": A.order(),
        "stabilizer_order": stab,
        "aut_group_s_order": len(multipliers),
        "consistent_with_normal": stab == len(multipliers),
    }
