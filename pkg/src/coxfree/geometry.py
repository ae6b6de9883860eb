"""Exact hyperbolic covolumes and manifold volumes.

Even-dimensional covolumes are rational multiples of pi^(n/2), computed
two independent ways: the combinatorial Euler characteristic scaled by
the Gauss-Bonnet constant, and the Bernoulli-number formula for the
reflection group of the odd self-dual Lorentzian lattice (Siegel 1936,
evaluated by Ratcliffe-Tschantz 1997).  Multiplying by the index of a
certified torsion-free subgroup gives exact manifold volumes in
dimensions 4, 6 and 8.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import List, Optional, Tuple

from . import modtwo as m2
from . import torsionfree as tf
from . import weyl as wy
from .symbols import CoxeterSymbol, euler_characteristic, signature

ExactRational = Fraction


class GeometryError(ValueError):
    pass


@dataclass(frozen=True)
class PiMonomial:
    """Exact rational coefficient times an integer power of pi."""

    coeff: Fraction
    power: int

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PiMonomial(self.coeff * other, self.power)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PiMonomial):
            if other.power != self.power:
                raise GeometryError("pi powers differ")
            return self.coeff / other.coeff
        if isinstance(other, (int, Fraction)):
            return PiMonomial(self.coeff / other, self.power)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, PiMonomial):
            if other.power != self.power:
                raise GeometryError("pi powers differ")
            return PiMonomial(self.coeff + other.coeff, self.power)
        return NotImplemented

    def to_json(self) -> dict:
        return {"num": self.coeff.numerator, "den": self.coeff.denominator,
                "pi_power": self.power}

    def __str__(self):
        return f"({self.coeff})*pi^{self.power}"


@lru_cache(maxsize=None)
def _bernoulli_all(upto: int) -> Tuple[Fraction, ...]:
    # sum_{j<=m} C(m+1, j) B_j = 0 for m >= 1, starting from B_0 = 1.
    values: List[Fraction] = [Fraction(1)]
    for m in range(1, upto + 1):
        acc = sum((comb(m + 1, j) * values[j] for j in range(m)), Fraction(0))
        values.append(-acc / (m + 1))
    return tuple(values)


def bernoulli(k: int) -> Fraction:
    """Exact k-th Bernoulli number for even k up to 32."""
    if k <= 0 or k % 2 != 0 or k > 32:
        raise GeometryError(f"bernoulli defined here for even k in 2..32, got {k}")
    return _bernoulli_all(k)[k]


def kappa(n: int) -> PiMonomial:
    """Gauss-Bonnet constant kappa_n = 2^n (n!)^-1 (-pi)^(n/2) (n/2)!."""
    if n <= 0 or n % 2 != 0:
        raise GeometryError("kappa needs a positive even dimension")
    coeff = Fraction((-1) ** (n // 2) * 2 ** n * factorial(n // 2), factorial(n))
    return PiMonomial(coeff, n // 2)


def covolume_gauss_bonnet(g: CoxeterSymbol, n: int) -> PiMonomial:
    """kappa_n times the Euler characteristic of the reflection group."""
    if n % 2 != 0:
        raise GeometryError("Gauss-Bonnet route needs even dimension")
    return kappa(n) * euler_characteristic(g)


def covolume_siegel(n: int) -> PiMonomial:
    """Covolume of the rank-(n+1) Lorentzian reflection group, n in {4,6,8}:
    (2^(n/2) -+ 1) pi^(n/2) / n! times the product of |B_2|..|B_n|,
    with the minus sign for n = 4, 6 and the plus sign for n = 8."""
    if n not in (4, 6, 8):
        raise GeometryError("Bernoulli covolume implemented for n in {4, 6, 8}")
    sign = 1 if n == 8 else -1
    coeff = Fraction(2 ** (n // 2) + sign, factorial(n))
    for k in range(1, n // 2 + 1):
        coeff *= abs(bernoulli(2 * k))
    return PiMonomial(coeff, n // 2)


# ---------------------------------------------------------------------------
# The simplex family over the odd self-dual Lorentzian lattices

_VINBERG_CORE = {4: ("A", 4), 5: ("D", 5), 6: ("E", 6), 7: ("E", 7), 8: ("E", 8)}


def _affine_e8_symbol() -> CoxeterSymbol:
    base = wy.weyl_data("E8").symbol
    nodes = list(base.nodes) + [0]
    edges = list(base.edges()) + [(7, 0, 3)]
    return CoxeterSymbol(nodes, edges)


def _root_gram_det(core: CoxeterSymbol, s) -> Fraction:
    """Determinant of the integer Gram matrix of the candidate root basis:
    norm-2 roots on the (simply laced) core plus a norm-1 pendant root
    joined to s, pairing -1 along every edge."""
    nodes = list(core.nodes)
    idx = {v: i for i, v in enumerate(nodes)}
    size = len(nodes) + 1
    gram = [[Fraction(0)] * size for _ in range(size)]
    for i, v in enumerate(nodes):
        gram[i][i] = Fraction(2)
        for u in core.neighbors(v):
            gram[i][idx[u]] = Fraction(-1)
    gram[-1][-1] = Fraction(1)
    gram[-1][idx[s]] = gram[idx[s]][-1] = Fraction(-1)
    det = Fraction(1)
    for c in range(size):
        pivot = next((r for r in range(c, size) if gram[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            gram[c], gram[pivot] = gram[pivot], gram[c]
            det = -det
        det *= gram[c][c]
        inv = 1 / gram[c][c]
        for r in range(c + 1, size):
            f = gram[r][c] * inv
            if f:
                gram[r] = [a - f * b for a, b in zip(gram[r], gram[c])]
    return det


def vinberg_symbol(n: int) -> Tuple[CoxeterSymbol, Optional[tf.DaggerSymbol]]:
    """Simplex reflection symbol of the odd self-dual Lorentzian lattice in
    dimension n (4 <= n <= 9): the core Weyl (or affine, n = 9) symbol plus
    one pendant node on an order-4 edge.

    The pendant location is found by scanning: it must give hyperbolic
    signature (n positive, 1 negative) and a unimodular root-basis Gram
    matrix, since the roots form a basis of the self-dual lattice.  For
    even n the placement is cross-checked against the Bernoulli covolume.
    Symmetric placements give isomorphic symbols; the first in node order
    is kept.  For n in {4, 6, 8} the attachment is admissible and the
    pendant symbol is returned as well.
    """
    if n not in range(4, 10):
        raise GeometryError("simplex family covers 4 <= n <= 9")
    if n == 9:
        core = _affine_e8_symbol()
        psi = None
    else:
        psi = wy.weyl_data(*_VINBERG_CORE[n])
        core = psi.symbol
    candidates = []
    for s in core.nodes:
        trial = CoxeterSymbol(list(core.nodes) + ["t1"],
                              list(core.edges()) + [(s, "t1", 4)])
        if signature(trial) != (n, 1, 0) or _root_gram_det(core, s) != -1:
            continue
        if n % 2 == 0 and covolume_gauss_bonnet(trial, n) != covolume_siegel(n):
            continue
        candidates.append((s, trial))
    if not candidates:
        raise GeometryError(f"no pendant node embeds in dimension {n}")
    covols = {covolume_gauss_bonnet(t, n) for _, t in candidates} if n % 2 == 0 else set()
    if len(covols) > 1:
        raise GeometryError("ambiguous pendant placement")  # pragma: no cover
    s, symbol = candidates[0]
    if n in (4, 6, 8):
        dagger = tf.build_dagger(psi, [s])
        return dagger.gamma, dagger
    return symbol, None


def manifold_volume(n: int) -> Tuple[PiMonomial, Fraction, int, int]:
    """Exact volume of the hyperbolic n-manifold cut out by the certified
    subgroup of the simplex group, n in {4, 6, 8}.

    Dimension 4 uses the kernel itself (the type-A core has odd Coxeter
    number, so no extension exists); 6 extends by Z/8 through the visible
    D5 of E6; 8 extends by Z/2.  Returns (volume, Euler characteristic,
    subgroup index, deck group order).
    """
    if n not in (4, 6, 8):
        raise GeometryError("manifold volumes implemented for n in {4, 6, 8}")
    _, dagger = vinberg_symbol(n)
    if n == 4:
        index = tf.kernel_index(dagger, "hat")
        deck = 1
    else:
        ext = tf.cyclic_extension(dagger)
        if not ext.certificate.ok:
            raise GeometryError("extension certificate failed")  # pragma: no cover
        index = ext.index
        deck = 2 ** ext.p
    vol = index * covolume_siegel(n)
    chi = vol / kappa(n)
    return vol, chi, index, deck
