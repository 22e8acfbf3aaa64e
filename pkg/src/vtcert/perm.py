"""Permutations and permutation groups with a Schreier-Sims stabilizer chain.

Permutations act on ``{0, ..., n-1}`` and compose left to right: ``p * q``
applies ``p`` first, then ``q``.  The stabilizer chain follows Knuth's
formulation with the fixed base order ``0, 1, ..., n-1``; levels with a
trivial transversal are redundant, so the effective base is "smallest point
moved by the current stabilizer".
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class CapExceeded(Exception):
    """The group is larger than the caller's element budget."""

    def __init__(self, order: int, cap: int):
        super().__init__(f"group order {order} exceeds cap {cap}")
        self.order = order
        self.cap = cap


class Permutation(tuple):
    """A bijection on ``range(len(self))`` stored as its image sequence."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        p = tuple.__new__(cls, images)
        n = len(p)
        if sorted(p) != list(range(n)):
            raise ValueError(f"not a permutation of 0..{n - 1}: {tuple(p)}")
        return p

    @classmethod
    def _raw(cls, images: Iterable[int]) -> Permutation:
        # trusted constructor; skips the bijection check
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._raw(range(n))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> Permutation:
        images = list(range(n))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self) != len(other):
            raise ValueError(f"degree mismatch: {len(self)} vs {len(other)}")
        return Permutation._raw(map(other.__getitem__, self))

    def __rmul__(self, other):
        return NotImplemented

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(len(self))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: int) -> int:
        return self[x]

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, x in enumerate(self):
            inv[x] = i
        return Permutation._raw(inv)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self))

    def fixed_points(self) -> list[int]:
        return [i for i, x in enumerate(self) if i == x]

    def is_fixed_point_free(self) -> bool:
        return all(i != x for i, x in enumerate(self))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self)
        out = []
        for i in range(len(self)):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = self[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if len(self) else 1

    def __repr__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"
        return f"Permutation<{len(self)}>{body}"

    def __str__(self) -> str:
        return repr(self)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: the result sends ``x`` to ``q(p(x))``."""
    return p * q


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


@dataclass(frozen=True)
class OrbitPartition:
    degree: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = sorted(v for c in self.cells for v in c)
        if seen != list(range(self.degree)):
            raise ValueError("cells do not partition the point set")

    @classmethod
    def from_cells(cls, degree: int, cells: Iterable[Iterable[int]]) -> OrbitPartition:
        norm = sorted(tuple(sorted(c)) for c in cells)
        return cls(degree, tuple(norm))

    @property
    def cell_index(self) -> list[int]:
        idx = [0] * self.degree
        for i, c in enumerate(self.cells):
            for v in c:
                idx[v] = i
        return idx

    def __len__(self) -> int:
        return len(self.cells)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra < rb:
            self.parent[rb] = ra
        else:
            self.parent[ra] = rb
        return True


def orbit_partition(degree: int, generators: Iterable[Sequence[int]]) -> OrbitPartition:
    uf = _UnionFind(degree)
    for g in generators:
        for i, x in enumerate(g):
            uf.union(i, x)
    cells: dict[int, list[int]] = {}
    for v in range(degree):
        cells.setdefault(uf.find(v), []).append(v)
    return OrbitPartition.from_cells(degree, cells.values())


class _Chain:
    """Knuth-style Sims table: level k holds elements fixing 0..k-1."""

    def __init__(self, n: int):
        self.n = n
        self.ident = Permutation.identity(n)
        self.gens: list[list[Permutation]] = [[] for _ in range(n)]
        self.trans: list[dict[int, Permutation]] = [{k: self.ident} for k in range(n)]
        self.trans_inv: list[dict[int, Permutation]] = [{k: self.ident} for k in range(n)]

    def sift(self, g: Permutation, k: int = 0) -> tuple[Permutation, int]:
        for i in range(k, self.n):
            j = g[i]
            if j == i:
                continue
            u_inv = self.trans_inv[i].get(j)
            if u_inv is None:
                return g, i
            g = g * u_inv
        return g, self.n

    def add(self, k: int, g: Permutation) -> None:
        residue, _ = self.sift(g, k)
        if residue == self.ident:
            return
        # invariant: level k is generated by gens[k], even by elements fixing k
        self.gens[k].append(g)
        for tau in list(self.trans[k].values()):
            self._close(k, tau * g)

    def _close(self, k: int, tau: Permutation) -> None:
        queue = [tau]
        while queue:
            tau = queue.pop()
            j = tau[k]
            u = self.trans[k].get(j)
            if u is None:
                self.trans[k][j] = tau
                self.trans_inv[k][j] = tau.inverse()
                queue.extend(tau * s for s in self.gens[k])
            else:
                residue = tau * self.trans_inv[k][j]
                if residue != self.ident:
                    self.add(k + 1, residue)


class PermGroup:
    """A permutation group given by generators; the chain is built on demand."""

    def __init__(self, degree: int, generators: Iterable[Sequence[int]] = ()):
        if degree < 1:
            raise ValueError("degree must be positive")
        self.degree = degree
        gens: list[Permutation] = []
        seen = set()
        for g in generators:
            g = g if isinstance(g, Permutation) else Permutation(g)
            if len(g) != degree:
                raise ValueError(f"generator degree {len(g)} != group degree {degree}")
            if g.is_identity() or g in seen:
                continue
            seen.add(g)
            gens.append(g)
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self._chain: _Chain | None = None

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"

    @property
    def chain(self) -> _Chain:
        if self._chain is None:
            ch = _Chain(self.degree)
            for g in self.generators:
                ch.add(0, g)
            self._chain = ch
        return self._chain

    def order(self) -> int:
        return math.prod(len(t) for t in self.chain.trans)

    def base(self) -> list[int]:
        return [k for k, t in enumerate(self.chain.trans) if len(t) > 1]

    def strong_generators(self) -> list[Permutation]:
        return [g for level in self.chain.gens for g in level]

    def transversal_sizes(self) -> list[int]:
        return [len(self.chain.trans[k]) for k in self.base()]

    def stabilizer_chain(self) -> tuple[int, _Chain]:
        return self.order(), self.chain

    def contains(self, p: Sequence[int]) -> bool:
        if len(p) != self.degree:
            raise ValueError(f"degree mismatch: {len(p)} vs {self.degree}")
        p = p if isinstance(p, Permutation) else Permutation(p)
        residue, _ = self.chain.sift(p)
        return residue == self.chain.ident

    __contains__ = contains

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def orbits(self) -> OrbitPartition:
        return orbit_partition(self.degree, self.generators)

    def orbit(self, point: int) -> list[int]:
        seen = {point}
        todo = [point]
        while todo:
            x = todo.pop()
            for g in self.generators:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return sorted(seen)

    def stabilizer(self, point: int) -> PermGroup:
        """Point stabilizer, read off a chain whose first base point is ``point``."""
        n = self.degree
        if point == 0:
            return PermGroup(n, self.chain.gens[1] if n > 1 else ())
        swap = Permutation.from_cycles(n, (0, point))
        conj = PermGroup(n, [swap * g * swap for g in self.generators])
        stab = conj.stabilizer(0)
        return PermGroup(n, [swap * g * swap for g in stab.generators])

    def iter_elements(self) -> Iterator[Permutation]:
        """Every element exactly once, as products of transversal elements."""
        levels = [list(self.chain.trans[k].values()) for k in self.base()]
        levels.reverse()

        def rec(i: int, acc: Permutation):
            if i == len(levels):
                yield acc
                return
            for u in levels[i]:
                yield from rec(i + 1, acc * u)

        yield from rec(0, self.identity())

    def elements(self, cap: int) -> list[Permutation]:
        order = self.order()
        if order > cap:
            raise CapExceeded(order, cap)
        return sorted(self.iter_elements())

    def random_element(self, rng) -> Permutation:
        g = self.identity()
        for k in reversed(self.base()):
            g = g * rng.choice(list(self.chain.trans[k].values()))
        return g

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def is_semiregular(self) -> bool:
        # each orbit size equals |G| iff every point stabilizer is trivial
        order = self.order()
        return all(len(c) == order for c in self.orbits().cells)

    def is_regular(self) -> bool:
        via_semiregular = self.is_transitive() and self.is_semiregular()
        via_order = self.is_transitive() and self.order() == self.degree
        assert via_semiregular == via_order, "regularity routes disagree"
        return via_semiregular

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return all(other.contains(g) for g in self.generators)

    def is_abelian(self) -> bool:
        gs = self.generators
        return all(a * b == b * a for i, a in enumerate(gs) for b in gs[i + 1:])

    def is_cyclic(self) -> bool:
        """Decided by looking for an element whose order equals the group order."""
        order = self.order()
        if order == 1:
            return True
        if not self.is_abelian():
            return False
        # abelian: exponent is the lcm of generator orders
        exponent = 1
        for g in self.generators:
            exponent = math.lcm(exponent, g.order())
        return exponent == order


def orbits(G: PermGroup) -> OrbitPartition:
    return G.orbits()


def stabilizer_chain(G: PermGroup) -> tuple[int, _Chain]:
    return G.stabilizer_chain()


def contains(G: PermGroup, p: Sequence[int]) -> bool:
    return G.contains(p)


def elements(G: PermGroup, cap: int) -> list[Permutation]:
    return G.elements(cap)


def is_semiregular(G: PermGroup) -> bool:
    return G.is_semiregular()


def is_transitive(G: PermGroup) -> bool:
    return G.is_transitive()


def is_regular(G: PermGroup) -> bool:
    return G.is_regular()


def closure(degree: int, generators: Iterable[Permutation]) -> set[Permutation]:
    """Brute-force element set of a small group (breadth-first closure)."""
    gens = list(generators)
    ident = Permutation.identity(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen
