"""Exact reflection representations of the irreducible Weyl groups.

Each group acts on the root lattice basis {x_i} by unimodular integer
matrices.  The basis scales the simple roots so that all pairings stay
integral: x_i = v_i except for the doubled nodes of B_n / F4 and the
tripled node of G2, where v_i are the unit Tits basis vectors.

Node numbering is fixed once and inherited everywhere: A_n and B_n are
paths 1..n with the 4-edge of B at node n; D_n has trunk 1..n-2 (node 1
at the free end) and fork nodes n-1, n on node n-2; E_n has top row
1..n-1 with node n below node 3; F4 is the path 1-2-3-4 with the 4-edge
between 2 and 3; G2 is 1-2 with a 6-edge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .symbols import CoxeterSymbol

Matrix = Tuple[Tuple[int, ...], ...]

_EXCEPTIONAL_RANKS = {"G2": 2, "F4": 4, "E6": 6, "E7": 7, "E8": 8}


class WeylError(ValueError):
    pass


@dataclass(frozen=True)
class WeylData:
    """Static data of one irreducible Weyl group in the scaled root basis."""

    family: str
    rank: int
    symbol: CoxeterSymbol
    cartan: Matrix
    gram2: Matrix
    exponents: Tuple[int, ...]
    coxeter_number: int
    index_of_connection: int
    minus_one_type: bool
    scaled_nodes: frozenset

    @property
    def order(self) -> int:
        n = 1
        for m in self.exponents:
            n *= m + 1
        return n

    def label(self) -> str:
        if self.family in ("A", "B", "D"):
            return f"{self.family}{self.rank}"
        return self.family


def _family_symbol(family: str, rank: int) -> Tuple[CoxeterSymbol, frozenset]:
    nodes = list(range(1, rank + 1))
    if family == "A":
        edges = [(i, i + 1, 3) for i in range(1, rank)]
        scaled = frozenset()
    elif family == "B":
        edges = [(i, i + 1, 3) for i in range(1, rank - 1)] + [(rank - 1, rank, 4)]
        scaled = frozenset({rank})
    elif family == "D":
        edges = [(i, i + 1, 3) for i in range(1, rank - 2)]
        edges += [(rank - 2, rank - 1, 3), (rank - 2, rank, 3)]
        scaled = frozenset()
    elif family == "G2":
        edges = [(1, 2, 6)]
        scaled = frozenset({2})
    elif family == "F4":
        edges = [(1, 2, 3), (2, 3, 4), (3, 4, 3)]
        scaled = frozenset({3, 4})
    else:  # E6, E7, E8
        edges = [(i, i + 1, 3) for i in range(1, rank - 1)] + [(3, rank, 3)]
        scaled = frozenset()
    return CoxeterSymbol(nodes, edges), scaled


def _exponents(family: str, rank: int) -> Tuple[int, ...]:
    if family == "A":
        return tuple(range(1, rank + 1))
    if family == "B":
        return tuple(range(1, 2 * rank, 2))
    if family == "D":
        return tuple(sorted(list(range(1, 2 * rank - 2, 2)) + [rank - 1]))
    return {
        "G2": (1, 5),
        "F4": (1, 5, 7, 11),
        "E6": (1, 4, 5, 7, 8, 11),
        "E7": (1, 5, 7, 9, 11, 13, 17),
        "E8": (1, 7, 11, 13, 17, 19, 23, 29),
    }[family]


_WEYL_CACHE: Dict[Tuple[str, int], WeylData] = {}


def weyl_data(family: str, rank: Optional[int] = None) -> WeylData:
    """Data record for one irreducible Weyl group, e.g. weyl_data("B", 4)."""
    family = family.upper()
    if family in _EXCEPTIONAL_RANKS:
        expected = _EXCEPTIONAL_RANKS[family]
        if rank not in (None, expected):
            raise WeylError(f"{family} has rank {expected}")
        rank = expected
    elif family in ("E", "F", "G") and rank is not None:
        return weyl_data(f"{family}{rank}")
    elif family == "A":
        if rank is None or rank < 1:
            raise WeylError("A_n needs rank n >= 1")
    elif family == "B":
        if rank is None or rank < 2:
            raise WeylError("B_n needs rank n >= 2")
    elif family == "D":
        if rank is None or rank < 4:
            raise WeylError("D_n needs rank n >= 4")
    else:
        raise WeylError(f"unknown family {family!r}")

    key = (family, rank)
    if key in _WEYL_CACHE:
        return _WEYL_CACHE[key]

    symbol, scaled = _family_symbol(family, rank)
    norm2 = {v: (2 if family in ("B", "F4") and v in scaled else 3 if v in scaled else 1)
             for v in symbol.nodes}
    gram2 = []
    for i in symbol.nodes:
        row = []
        for j in symbol.nodes:
            if i == j:
                row.append(2 * norm2[i])
            else:
                m = symbol.order(i, j)
                if m == 2:
                    row.append(0)
                elif m == 3:
                    row.append(-norm2[i] if norm2[i] == norm2[j] else None)
                elif m == 4:
                    row.append(-2)
                else:  # m == 6
                    row.append(-3)
        gram2.append(tuple(row))
    if any(v is None for row in gram2 for v in row):
        raise WeylError("inconsistent scaling")  # pragma: no cover
    gram2 = tuple(gram2)
    cartan = tuple(
        tuple(2 * gram2[i][j] // gram2[i][i] for j in range(rank)) for i in range(rank)
    )
    exponents = _exponents(family, rank)
    h = max(exponents) + 1
    index_conn = {"A": rank + 1, "B": 2, "D": 4, "G2": 1, "F4": 1,
                  "E6": 3, "E7": 2, "E8": 1}[family]
    minus_one = {"A": rank == 1, "B": True, "D": rank % 2 == 0, "G2": True,
                 "F4": True, "E6": False, "E7": True, "E8": True}[family]
    data = WeylData(family, rank, symbol, cartan, gram2, exponents, h,
                    index_conn, minus_one, scaled)
    _WEYL_CACHE[key] = data
    return data


def cartan_matrix(w: WeylData) -> Matrix:
    """Entries <x_j, x_i^v> = 2(x_j, x_i)/(x_i, x_i) at row i, column j."""
    return w.cartan


# ---------------------------------------------------------------------------
# Integer matrices (tuples of row tuples)

def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a: Matrix, v: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_pow(a: Matrix, k: int) -> Matrix:
    result = identity_matrix(len(a))
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def mat_inverse(a: Matrix) -> Matrix:
    """Exact inverse of a unimodular integer matrix."""
    n = len(a)
    work = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
            for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if work[r][col] != 0)
        work[col], work[pivot] = work[pivot], work[col]
        pv = work[col][col]
        work[col] = [x / pv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    inv = tuple(tuple(int(work[i][n + j]) for j in range(n)) for i in range(n))
    return inv


def rank_rational(a: Matrix) -> int:
    """Rank over the rationals via exact Gaussian elimination."""
    rows = [list(map(Fraction, row)) for row in a]
    n_cols = len(a[0]) if a else 0
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [x / pv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def preserves_gram(w: WeylData, m: Matrix) -> bool:
    mt = tuple(zip(*m))
    return mat_mul(mat_mul(mt, w.gram2), m) == w.gram2


# ---------------------------------------------------------------------------
# Group elements

def reflection_matrix(w: WeylData, i: int) -> Matrix:
    """s_i(x_j) = x_j - <x_j, x_i^v> x_i; an involutive integer matrix."""
    if i not in set(w.symbol.nodes):
        raise WeylError(f"unknown node {i!r}")
    n = w.rank
    row_i = i - 1
    return tuple(
        tuple((1 if r == c else 0) - (w.cartan[row_i][c] if r == row_i else 0)
              for c in range(n))
        for r in range(n)
    )


def word_to_matrix(w: WeylData, word: Sequence[int]) -> Matrix:
    m = identity_matrix(w.rank)
    for s in word:
        m = mat_mul(m, reflection_matrix(w, s))
    return m


def coxeter_element(w: WeylData, nodes: Optional[Iterable[int]] = None) -> Matrix:
    """Product of the reflections over nodes in ascending numbering."""
    if nodes is None:
        chosen = list(w.symbol.nodes)
    else:
        chosen = sorted(set(nodes))
        from .symbols import connected_components, induced_subsymbol

        sub = induced_subsymbol(w.symbol, chosen)
        if len(connected_components(sub)) != 1:
            raise WeylError("Coxeter element needs a connected node set")
    return word_to_matrix(w, chosen)


def element_order(m: Matrix, bound: int = 64) -> int:
    if bound < 1:
        raise WeylError("bound must be >= 1")
    ident = identity_matrix(len(m))
    acc = m
    for k in range(1, bound + 1):
        if acc == ident:
            return k
        acc = mat_mul(acc, m)
    raise WeylError(f"element order exceeds bound {bound}")


def longest_word(w: WeylData, delta: Optional[Iterable[int]] = None) -> Tuple[int, ...]:
    """Reduced word for the longest element of the visible subgroup on delta.

    Greedy ascent: starting from the identity, repeatedly right-multiply by
    the smallest s in delta whose root image is still a nonnegative vector.
    The step count equals the number of positive roots of the subgroup.
    """
    nodes = sorted(set(w.symbol.nodes if delta is None else delta))
    m = identity_matrix(w.rank)
    word: List[int] = []
    while True:
        for s in nodes:
            col = tuple(row[s - 1] for row in m)
            if all(c >= 0 for c in col):
                m = mat_mul(m, reflection_matrix(w, s))
                word.append(s)
                break
        else:
            return tuple(word)


def longest_element(w: WeylData, delta: Optional[Iterable[int]] = None) -> Tuple[Matrix, int]:
    word = longest_word(w, delta)
    return word_to_matrix(w, word), len(word)


def verify_exponents(w: WeylData, tol: float = 1e-6) -> bool:
    """Numeric check that a Coxeter element has eigenvalues zeta^{m_k}."""
    xi = coxeter_element(w)
    actual = np.poly(np.array(xi, dtype=float))
    zeta = np.exp(2j * np.pi / w.coxeter_number)
    expected = np.poly([zeta ** m for m in w.exponents])
    return bool(np.allclose(actual, expected, atol=tol))


# ---------------------------------------------------------------------------
# Signed permutation models for the classical families

Perm = Tuple[int, ...]


def perm_identity(degree: int) -> Perm:
    return tuple(range(1, degree + 1))


def perm_apply(p: Perm, point: int) -> int:
    if point > 0:
        return p[point - 1]
    return -p[-point - 1]


def perm_mul(p: Perm, q: Perm) -> Perm:
    """Composite acting as p after q (matching word-order matrix products)."""
    return tuple(perm_apply(p, q[i]) for i in range(len(p)))


def _perm_generators(w: WeylData) -> Dict[int, Perm]:
    n = w.rank
    gens: Dict[int, Perm] = {}
    if w.family == "A":
        degree = n + 1
        for i in range(1, n + 1):
            p = list(range(1, degree + 1))
            p[i - 1], p[i] = p[i], p[i - 1]
            gens[i] = tuple(p)
        return gens
    if w.family not in ("B", "D"):
        raise WeylError("permutation model exists for the classical families only")
    for i in range(1, n):
        p = list(range(1, n + 1))
        p[i - 1], p[i] = p[i], p[i - 1]
        gens[i] = tuple(p)
    last = list(range(1, n + 1))
    if w.family == "B":
        last[n - 1] = -n
    else:
        last[n - 2], last[n - 1] = -n, -(n - 1)
    gens[n] = tuple(last)
    return gens


def perm_model(w: WeylData, word: Sequence[int]) -> Perm:
    """Signed permutation image of a word (plain permutation in type A)."""
    gens = _perm_generators(w)
    degree = w.rank + 1 if w.family == "A" else w.rank
    acc = perm_identity(degree)
    for s in word:
        acc = perm_mul(acc, gens[s])
    return acc
