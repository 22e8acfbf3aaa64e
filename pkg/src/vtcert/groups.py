"""Finite groups as multiplication tables.

Element 0 is always the identity.  ``mul[a][b]`` is the product ``ab``; the
right regular representation sends ``x`` to ``x*g``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .perm import PermGroup, Permutation

MAX_TABLE_ORDER = 10000


class GroupTooLarge(ValueError):
    pass


class NotCyclicError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    names: tuple[str, ...] | None = None
    label: str = ""
    _gens: list = field(default_factory=list, repr=False, compare=False)

    @property
    def order(self) -> int:
        return len(self.mul)

    def __len__(self) -> int:
        return len(self.mul)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label or '?'}, order={self.order})"

    def name(self, x: int) -> str:
        return self.names[x] if self.names else str(x)

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv[x], -k
        acc = 0
        for _ in range(k % self.element_order(x)):
            acc = self.mul[acc][x]
        return acc

    def element_order(self, x: int) -> int:
        k, acc = 1, x
        while acc != 0:
            acc = self.mul[acc][x]
            k += 1
        return k

    def is_abelian(self) -> bool:
        m = self.mul
        n = self.order
        return all(m[a][b] == m[b][a] for a in range(n) for b in range(a + 1, n))

    def subgroup_generated(self, elems: Iterable[int]) -> set[int]:
        gens = list(elems)
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def generating_set(self) -> list[int]:
        """Greedy generating set: scan elements in index order."""
        if not self._gens:
            gens: list[int] = []
            span = {0}
            for x in range(self.order):
                if x not in span:
                    gens.append(x)
                    span = self.subgroup_generated(gens)
            self._gens.extend(gens)
        return list(self._gens)

    def check_axioms(self, max_assoc: int = 64) -> None:
        n = self.order
        rng = range(n)
        for row in self.mul:
            if sorted(row) != list(rng):
                raise ValueError("multiplication table is not a Latin square")
        for c in rng:
            if sorted(self.mul[r][c] for r in rng) != list(rng):
                raise ValueError("multiplication table is not a Latin square")
        if any(self.mul[0][x] != x or self.mul[x][0] != x for x in rng):
            raise ValueError("element 0 is not the identity")
        if any(self.mul[x][self.inv[x]] != 0 for x in rng):
            raise ValueError("inverse table is wrong")
        if n <= max_assoc:
            m = self.mul
            for a in rng:
                for b in rng:
                    ab = m[a][b]
                    for c in rng:
                        if m[ab][c] != m[a][m[b][c]]:
                            raise ValueError(f"not associative at {(a, b, c)}")


def _from_table(mul: Sequence[Sequence[int]], names=None, label="") -> FiniteGroup:
    n = len(mul)
    inv = [0] * n
    for x in range(n):
        inv[x] = mul[x].index(0)
    return FiniteGroup(tuple(tuple(r) for r in mul), tuple(inv),
                       tuple(names) if names else None, label)


def _check_size(n: int, limit: int) -> None:
    if n > limit:
        raise GroupTooLarge(f"table order {n} exceeds maximum {limit}")


def cyclic(n: int, max_order: int = MAX_TABLE_ORDER) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    _check_size(n, max_order)
    mul = [[(a + b) % n for b in range(n)] for a in range(n)]
    return _from_table(mul, [f"a^{k}" if k else "1" for k in range(n)], f"Z{n}")


def dihedral(n: int, max_order: int = MAX_TABLE_ORDER) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n; index i + n*e stands for r^i s^e."""
    if n < 3:
        raise ValueError("dihedral group needs n >= 3")
    _check_size(2 * n, max_order)

    def prod(x, y):
        i, a = x % n, x // n
        j, b = y % n, y // n
        k = (i + (j if a == 0 else -j)) % n
        return k + n * ((a + b) % 2)

    mul = [[prod(x, y) for y in range(2 * n)] for x in range(2 * n)]
    names = []
    for x in range(2 * n):
        rot = f"r^{x % n}" if x % n else ""
        names.append((rot + ("s" if x >= n else "")) or "1")
    return _from_table(mul, names, f"D{2 * n}")


def direct_product(A: FiniteGroup, B: FiniteGroup, max_order: int = MAX_TABLE_ORDER) -> FiniteGroup:
    """Index ``a*|B| + b`` stands for the pair (a, b)."""
    na, nb = A.order, B.order
    _check_size(na * nb, max_order)
    mul = [[A.mul[x // nb][y // nb] * nb + B.mul[x % nb][y % nb]
            for y in range(na * nb)] for x in range(na * nb)]
    names = [f"({A.name(x // nb)},{B.name(x % nb)})" for x in range(na * nb)]
    return _from_table(mul, names, f"{A.label}x{B.label}")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def frobenius_3p(p: int, k: int) -> FiniteGroup:
    """Z_p semidirect Z_3 where the generator of Z_3 acts by x -> kx.

    Index ``x + p*e`` stands for the pair (x, e) with product
    ``(x1, e1)(x2, e2) = (x1 + k^e1 x2, e1 + e2)``.
    """
    if not _is_prime(p) or p % 3 != 1:
        raise ValueError(f"need a prime p = 1 mod 3, got {p}")
    if k % p == 1 or pow(k, 3, p) != 1:
        raise ValueError(f"k={k} is not a nontrivial cube root of unity mod {p}")
    n = 3 * p
    kp = [pow(k, e, p) for e in range(3)]

    def prod(u, v):
        x1, e1 = u % p, u // p
        x2, e2 = v % p, v // p
        return (x1 + kp[e1] * x2) % p + p * ((e1 + e2) % 3)

    mul = [[prod(u, v) for v in range(n)] for u in range(n)]
    names = [f"({u % p},{u // p})" for u in range(n)]
    return _from_table(mul, names, f"F{n}")


def regular_representation(G: FiniteGroup, generators: Iterable[int] | None = None) -> PermGroup:
    """Right regular representation: element g acts as x -> xg."""
    gens = G.generating_set() if generators is None else list(generators)
    n = G.order
    perms = [Permutation._raw(G.mul[x][g] for x in range(n)) for g in gens]
    return PermGroup(n, perms)


def right_multiplication(G: FiniteGroup, g: int) -> Permutation:
    return Permutation._raw(G.mul[x][g] for x in range(G.order))


def aut_cyclic_stabilizing(n: int | FiniteGroup, S: Iterable[int]) -> list[int]:
    """Units u mod n with u*S = S, i.e. the automorphisms a -> a^u of Z_n fixing S."""
    if isinstance(n, FiniteGroup):
        G = n
        n = G.order
        if any(G.mul[a][b] != (a + b) % n for a in range(n) for b in range(n)):
            raise NotCyclicError("ambient group is not the standard cyclic table")
    members = {s % n for s in S}
    units = [u for u in range(1, n) if math.gcd(u, n) == 1] if n > 1 else [1]
    return [u for u in units if {(u * s) % n for s in members} == members]
