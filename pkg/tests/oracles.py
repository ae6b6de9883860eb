"""Independent brute-force oracles for the test suite.

Everything here is built from first principles (signed permutations as
tuples, breadth-first closures, conjugacy by exhaustive multiplication)
so that the values frozen into the tests do not depend on the code paths
they are checking.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Set, Tuple

Perm = Tuple[int, ...]  # entry i-1 is the signed image of +i


def papply(p: Perm, point: int) -> int:
    return p[point - 1] if point > 0 else -p[-point - 1]


def pmul(p: Perm, q: Perm) -> Perm:
    return tuple(papply(p, q[i]) for i in range(len(p)))


def pidentity(degree: int) -> Perm:
    return tuple(range(1, degree + 1))


def symmetric_generators(n: int) -> List[Perm]:
    """Adjacent transpositions of an (n+1)-point set: Coxeter type A_n."""
    gens = []
    for i in range(1, n + 1):
        p = list(range(1, n + 2))
        p[i - 1], p[i] = p[i], p[i - 1]
        gens.append(tuple(p))
    return gens


def signed_generators(n: int, even: bool = False) -> List[Perm]:
    """Signed permutation generators: type B_n, or D_n when even=True."""
    gens = []
    for i in range(1, n):
        p = list(range(1, n + 1))
        p[i - 1], p[i] = p[i], p[i - 1]
        gens.append(tuple(p))
    last = list(range(1, n + 1))
    if even:
        last[n - 2], last[n - 1] = -n, -(n - 1)
    else:
        last[n - 1] = -n
    gens.append(tuple(last))
    return gens


def closure(gens: Sequence[Perm]) -> Set[Perm]:
    degree = len(gens[0])
    seen = {pidentity(degree)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = pmul(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def involution_class_count(group: Set[Perm]) -> int:
    """Number of conjugacy classes of nontrivial involutions."""
    degree = len(next(iter(group)))
    ident = pidentity(degree)
    invs = {p for p in group if p != ident and pmul(p, p) == ident}
    elements = list(group)
    inv_of = {}
    for p in elements:
        for q in elements:
            if pmul(p, q) == ident:
                inv_of[p] = q
                break
    classes = 0
    remaining = set(invs)
    while remaining:
        rep = remaining.pop()
        orbit = {pmul(pmul(g, rep), inv_of[g]) for g in elements}
        remaining -= orbit
        classes += 1
    return classes
