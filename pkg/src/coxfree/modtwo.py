"""Weyl root lattices over the two-element field.

Vectors in L/2 are int bitsets (bit i-1 is the coordinate of the basis
root x_i); operators are tuples of column bitsets.  Everything here is
exact and dimensions stay at most 12, so a vector fits one machine word.

The heart of the module is the weight vector u_s orthogonal to every
simple root but x_s, its orbit under subsets of reflections, and the
linear independence data these orbits produce: admissibility of a node,
the dimension of the orbit span, the kernel/image invariant of a Coxeter
half-turn, and the geometric-series operator used to hit its targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Sequence, Set, Tuple

from . import weyl as wy
from .symbols import CoxeterSymbol
from .weyl import Matrix, WeylData

F2Matrix = Tuple[int, ...]  # column bitsets


class ModTwoError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Bitset linear algebra

def vec_mod2(coords: Sequence[int]) -> int:
    mask = 0
    for i, c in enumerate(coords):
        if c & 1:
            mask |= 1 << i
    return mask


def vec_bits(mask: int, n: int) -> Tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(n))


def mat_mod2(rows: Matrix) -> F2Matrix:
    """Column bitsets of an integer matrix reduced mod 2."""
    n = len(rows)
    return tuple(
        sum(((rows[i][j] & 1) << i) for i in range(n)) for j in range(n)
    )


def reduce_mod2(obj):
    """Entrywise parity of an integer vector or matrix."""
    if obj and isinstance(obj[0], (tuple, list)):
        return mat_mod2(tuple(tuple(r) for r in obj))
    return vec_mod2(obj)


def f2_identity(n: int) -> F2Matrix:
    return tuple(1 << j for j in range(n))


def f2_mat_vec(cols: F2Matrix, v: int) -> int:
    out = 0
    j = 0
    while v:
        if v & 1:
            out ^= cols[j]
        v >>= 1
        j += 1
    return out


def f2_mat_mul(a: F2Matrix, b: F2Matrix) -> F2Matrix:
    return tuple(f2_mat_vec(a, col) for col in b)


def f2_mat_add(a: F2Matrix, b: F2Matrix) -> F2Matrix:
    return tuple(x ^ y for x, y in zip(a, b))


def f2_mat_pow(a: F2Matrix, k: int) -> F2Matrix:
    result = f2_identity(len(a))
    base = a
    while k:
        if k & 1:
            result = f2_mat_mul(result, base)
        base = f2_mat_mul(base, base)
        k >>= 1
    return result


def echelon_basis(vectors: Iterable[int]) -> Tuple[int, ...]:
    """Reduced echelon basis (canonical per subspace), pivots from bit 0 up."""
    basis: List[int] = []
    for v in vectors:
        for b in basis:
            low = b & -b
            if v & low:
                v ^= b
        if v:
            basis.append(v)
            basis.sort(key=lambda x: x & -x)
    # Back-eliminate so each pivot bit appears in exactly one basis vector.
    for i, b in enumerate(basis):
        low = b & -b
        for j in range(len(basis)):
            if j != i and basis[j] & low:
                basis[j] ^= b
    return tuple(sorted(basis, key=lambda x: x & -x))


@dataclass(frozen=True)
class F2Subspace:
    """Subspace of F2^ambient held as a reduced echelon basis."""

    basis: Tuple[int, ...]
    ambient: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: int) -> bool:
        for b in self.basis:
            if v & (b & -b):
                v ^= b
        return v == 0

    def __le__(self, other: "F2Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)


def span(vectors: Iterable[int], ambient: int) -> F2Subspace:
    return F2Subspace(echelon_basis(vectors), ambient)


def f2_rank(vectors: Iterable[int]) -> int:
    return len(echelon_basis(vectors))


def f2_nullspace(cols: F2Matrix, n: int) -> Tuple[int, ...]:
    """Basis of {v : M v = 0} for the operator with the given columns."""
    # Row masks of the n x n matrix.
    rows = [sum(((cols[j] >> i) & 1) << j for j in range(n)) for i in range(n)]
    pivots: Dict[int, int] = {}
    work: List[int] = []
    for r in rows:
        for col, wrow in pivots.items():
            if (r >> col) & 1:
                r ^= wrow
        if r:
            col = (r & -r).bit_length() - 1
            for c2 in list(pivots):
                if (pivots[c2] >> col) & 1:
                    pivots[c2] ^= r
            pivots[col] = r
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for j in free:
        v = 1 << j
        for col, wrow in pivots.items():
            if (wrow >> j) & 1:
                v |= 1 << col
        basis.append(v)
    return echelon_basis(basis)


# ---------------------------------------------------------------------------
# Weight vectors

@dataclass(frozen=True)
class WeightVector:
    """Primitive lattice vector orthogonal to every simple root but x_s."""

    coords: Tuple[int, ...]
    node: int

    def mod2(self) -> int:
        return vec_mod2(self.coords)


def weight_vector(w: WeylData, s: int) -> WeightVector:
    """Solve the orthogonality system over Q and normalize to a primitive
    integer vector with positive coordinate at s."""
    if s not in set(w.symbol.nodes):
        raise ModTwoError(f"unknown node {s!r}")
    n = w.rank
    rows = [
        [Fraction(w.gram2[t - 1][j]) for j in range(n)]
        for t in w.symbol.nodes
        if t != s
    ]
    # Gaussian elimination; gram2 is nonsingular, so the nullspace is a line.
    pivots: List[Tuple[int, List[Fraction]]] = []
    for row in rows:
        for col, prow in pivots:
            if row[col] != 0:
                f = row[col]
                row = [x - f * y for x, y in zip(row, prow)]
        lead = next((j for j, x in enumerate(row) if x != 0), None)
        if lead is None:
            continue
        row = [x / row[lead] for x in row]
        for col, prow in pivots:
            if prow[lead] != 0:
                f = prow[lead]
                prow[:] = [x - f * y for x, y in zip(prow, row)]
        pivots.append((lead, row))
    pivot_cols = {c for c, _ in pivots}
    free = [j for j in range(n) if j not in pivot_cols]
    if len(free) != 1:
        raise ModTwoError("weight system is degenerate")  # pragma: no cover
    j0 = free[0]
    vec = [Fraction(0)] * n
    vec[j0] = Fraction(1)
    for col, prow in pivots:
        vec[col] = -prow[j0]
    mult = 1
    for x in vec:
        mult = mult * x.denominator // gcd(mult, x.denominator)
    ints = [int(x * mult) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    if ints[s - 1] < 0:
        ints = [-x for x in ints]
    if ints[s - 1] == 0:
        raise ModTwoError("weight vector vanishes at its node")  # pragma: no cover
    return WeightVector(tuple(ints), s)


# ---------------------------------------------------------------------------
# Orbits and independence data

def f2_generators(w: WeylData) -> Dict[int, F2Matrix]:
    return {i: mat_mod2(wy.reflection_matrix(w, i)) for i in w.symbol.nodes}


def orbit_span(gens: Sequence[F2Matrix], start: int, ambient: int) -> Tuple[frozenset, F2Subspace]:
    """BFS closure of start under the generators (generator order, FIFO)."""
    orbit: Set[int] = {start}
    queue = [start]
    while queue:
        v = queue.pop(0)
        for g in gens:
            img = f2_mat_vec(g, v)
            if img not in orbit:
                orbit.add(img)
                queue.append(img)
    return frozenset(orbit), span(sorted(orbit), ambient)


def tree_path(symbol: CoxeterSymbol, s, t) -> Tuple:
    """Unique minimal path between two nodes of a tree symbol."""
    if s == t:
        return (s,)
    prev = {s: None}
    queue = [s]
    while queue:
        v = queue.pop(0)
        for u in symbol.neighbors(v):
            if u not in prev:
                prev[u] = v
                if u == t:
                    path = [t]
                    while path[-1] != s:
                        path.append(prev[path[-1]])
                    return tuple(reversed(path))
                queue.append(u)
    raise ModTwoError(f"nodes {s!r} and {t!r} are not connected")


def x_set(w: WeylData, s: int, t: int) -> List[int]:
    """Successive reflection images of u_s mod 2 along the path from s to t.

    The list has k+1 entries for a k-node path and keeps duplicates; the
    set of distinct values may be smaller.
    """
    path = tree_path(w.symbol, s, t)
    gens = f2_generators(w)
    v = weight_vector(w, s).mod2()
    out = [v]
    for node in path:
        v = f2_mat_vec(gens[node], v)
        out.append(v)
    return out


def is_independent_for(w: WeylData, s: int, t_set: Iterable[int]) -> bool:
    """True when the path images span one more dimension than the number of
    nodes on the union of the minimal paths from s."""
    targets = sorted(set(t_set))
    if not targets:
        raise ModTwoError("t_set must be nonempty")
    vectors: Set[int] = set()
    path_nodes: Set[int] = set()
    for t in targets:
        vectors.update(x_set(w, s, t))
        path_nodes.update(tree_path(w.symbol, s, t))
    return f2_rank(sorted(vectors)) == len(path_nodes) + 1


def _a_path_targets(w: WeylData, s: int, parity: str) -> List[int]:
    """Nodes t whose minimal path from s induces a type-A subsymbol.

    parity "odd" keeps odd node counts only, "all" keeps every length.
    """
    out = []
    for t in w.symbol.nodes:
        path = tree_path(w.symbol, s, t)
        if any(w.symbol.order(path[i], path[i + 1]) != 3 for i in range(len(path) - 1)):
            continue
        if parity == "odd" and len(path) % 2 == 0:
            continue
        out.append(t)
    return out


def is_admissible(w: WeylData, s: int) -> bool:
    if s in w.scaled_nodes:
        return False
    return all(is_independent_for(w, s, {t}) for t in _a_path_targets(w, s, "odd"))


def is_specially_admissible(w: WeylData, s: int) -> bool:
    if s in w.scaled_nodes:
        return False
    return all(is_independent_for(w, s, {t}) for t in _a_path_targets(w, s, "all"))


def admissible_nodes(w: WeylData) -> List[Tuple[int, bool]]:
    """Admissible nodes with their specially-admissible flag."""
    out = []
    for s in w.symbol.nodes:
        if is_admissible(w, s):
            out.append((s, is_specially_admissible(w, s)))
    return out


def lambda_dim(w: WeylData, s: int) -> int:
    """Dimension of the span of the full reflection-group orbit of u_s mod 2."""
    gens = [mat_mod2(wy.reflection_matrix(w, i)) for i in w.symbol.nodes]
    _, sp = orbit_span(gens, weight_vector(w, s).mod2(), w.rank)
    return sp.dim


# ---------------------------------------------------------------------------
# Involution kernel/image data and the geometric-series operator

def involution_ker_im(g: F2Matrix, n: int) -> Tuple[F2Subspace, F2Subspace, int]:
    """Kernel and image of g + 1 for an involution g, with d = dim ker - dim im.

    The image always sits inside the kernel since (g + 1)^2 = 0 over F2.
    """
    if f2_mat_mul(g, g) != f2_identity(n):
        raise ModTwoError("operator is not an involution mod 2")
    a = f2_mat_add(g, f2_identity(n))
    im = span(a, n)
    ker = F2Subspace(f2_nullspace(a, n), n)
    if not (im <= ker):
        raise ModTwoError("image not inside kernel")  # pragma: no cover
    return ker, im, ker.dim - im.dim


def dpsi(w: WeylData) -> int:
    """Kernel/image defect of the Coxeter half-turn acting on L/2."""
    h = w.coxeter_number
    if h % 2 != 0:
        raise ModTwoError(f"Coxeter number {h} is odd")
    half = wy.mat_pow(wy.coxeter_element(w), h // 2)
    _, _, d = involution_ker_im(mat_mod2(half), w.rank)
    return d


def alpha_map(w: WeylData, xi: Matrix, q: int, p: int) -> F2Matrix:
    """1 + xi^q + xi^(2q) + ... + xi^((2^(p-1)-1) q) over F2."""
    if p < 1:
        raise ModTwoError("p must be >= 1")
    xc = mat_mod2(xi)
    step = f2_mat_pow(xc, q)
    acc = tuple(0 for _ in range(w.rank))
    cur = f2_identity(w.rank)
    for _ in range(2 ** (p - 1)):
        acc = f2_mat_add(acc, cur)
        cur = f2_mat_mul(cur, step)
    return acc


def find_target(w: WeylData, xi: Matrix, q: int, p: int) -> int:
    """First vector u (lexicographic scan of L/2, coordinate 1 most
    significant) whose alpha image lies in ker(g+1) minus im(g+1), where
    g is the half-turn xi^(2^(p-1) q) mod 2."""
    n = w.rank
    alpha = alpha_map(w, xi, q, p)
    g = f2_mat_pow(mat_mod2(xi), (2 ** (p - 1)) * q)
    ker, im, _ = involution_ker_im(g, n)
    for val in range(1, 1 << n):
        mask = 0
        for i in range(n):
            if (val >> (n - 1 - i)) & 1:
                mask |= 1 << i
        img = f2_mat_vec(alpha, mask)
        if ker.contains(img) and not im.contains(img):
            return mask
    raise ModTwoError("no vector hits the kernel-minus-image target")
