"""Conjugacy classes of involutions via subsymbol combinatorics.

An involution class of a Coxeter group corresponds to an equivalence
class of antipodal subsymbols (those whose longest element acts as minus
the identity), with two subsymbols equivalent when a chain of one-node
exchange moves connects them (Richardson, J. Algebra 1982).  This module
enumerates the subsymbols, closes them under the moves, and checks the
Coxeter half-turn against the unique class of maximal rank.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import weyl as wy
from .symbols import (
    CoxeterSymbol,
    FiniteType,
    MAX_NODES,
    SymbolError,
    classify_finite_type,
    connected_components,
    induced_subsymbol,
    node_sort_key,
)
from .weyl import WeylData

# Irreducible finite types whose longest element is central minus one.
_MINUS_ONE_FAMILIES = {"B", "G2", "F4", "E7", "E8", "H3", "H4"}


class InvolutionError(ValueError):
    pass


def _component_type_is_minus_one(t: FiniteType) -> bool:
    if t.family in _MINUS_ONE_FAMILIES:
        return True
    if t.family == "A":
        return t.rank == 1
    if t.family == "D":
        return t.rank % 2 == 0
    if t.family == "I2":
        return (t.order // 2) % 2 == 0
    return False


def is_minus_one_type(g: CoxeterSymbol, t_nodes) -> bool:
    """True when every component of the induced subsymbol has a central
    longest element acting as minus one."""
    nodes = list(t_nodes)
    if not nodes:
        return False
    sub = induced_subsymbol(g, nodes)
    types = classify_finite_type(sub)
    if types is None:
        return False
    return all(_component_type_is_minus_one(t) for t in types)


def _standard_symbol(t: FiniteType) -> CoxeterSymbol:
    if t.family in ("A", "B", "D"):
        return wy.weyl_data(t.family, t.rank).symbol
    if t.family in ("E6", "E7", "E8", "F4", "G2"):
        return wy.weyl_data(t.family).symbol
    if t.family == "I2":
        return CoxeterSymbol([1, 2], [(1, 2, t.order // 2)])
    if t.family == "H3":
        return CoxeterSymbol([1, 2, 3], [(1, 2, 5), (2, 3, 3)])
    if t.family == "H4":
        return CoxeterSymbol([1, 2, 3, 4], [(1, 2, 5), (2, 3, 3), (3, 4, 3)])
    raise InvolutionError(f"no standard symbol for {t!r}")  # pragma: no cover


def _find_isomorphism(a: CoxeterSymbol, b: CoxeterSymbol) -> Optional[Dict]:
    """Backtracking label-preserving graph isomorphism (small tree symbols)."""
    if a.rank != b.rank:
        return None
    a_nodes = sorted(a.nodes, key=lambda v: (-len(a.neighbors(v)), node_sort_key(v)))
    used = set()
    mapping: Dict = {}

    def extend(idx: int) -> bool:
        if idx == len(a_nodes):
            return True
        v = a_nodes[idx]
        for w in b.nodes:
            if w in used:
                continue
            if len(a.neighbors(v)) != len(b.neighbors(w)):
                continue
            ok = True
            for u in mapping:
                if a.order(v, u) != b.order(w, mapping[u]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if extend(idx + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(mapping) if extend(0) else None


_STANDARD_PI = {
    # family -> fixed-point-free part of the unique order-2 diagram symmetry
    "A": lambda n: {i: n + 1 - i for i in range(1, n + 1)},
    "D": lambda n: {**{i: i for i in range(1, n - 1)}, n - 1: n, n: n - 1},
    "E6": lambda n: {1: 5, 5: 1, 2: 4, 4: 2, 3: 3, 6: 6},
    "I2": lambda n: {1: 2, 2: 1},
}


def pi_permutation(g: CoxeterSymbol) -> Dict:
    """Identity on an antipodal symbol, else its unique order-2 symmetry."""
    comps = connected_components(g)
    if len(comps) != 1:
        raise InvolutionError("symbol must be connected")
    types = classify_finite_type(g)
    if types is None:
        raise InvolutionError("symbol is not of finite type")
    t = types[0]
    if _component_type_is_minus_one(t):
        return {v: v for v in g.nodes}
    std = _standard_symbol(t)
    iso = _find_isomorphism(std, g)
    if iso is None:
        raise InvolutionError("classification/isomorphism mismatch")  # pragma: no cover
    std_pi = _STANDARD_PI[t.family](t.rank)
    return {iso[v]: iso[std_pi[v]] for v in std.nodes}


def elementary_moves(g: CoxeterSymbol, t_nodes) -> List[Tuple]:
    """One-node exchange moves from an antipodal subsymbol.

    For a node s outside the subsymbol whose attached component is finite
    but not antipodal, the move swaps s in and its symmetric partner out.
    """
    t_set = set(t_nodes)
    if not is_minus_one_type(g, t_set):
        raise InvolutionError("moves are defined on antipodal subsymbols only")
    results = []
    for s in g.nodes:
        if s in t_set:
            continue
        enlarged = t_set | {s}
        comp = next(c for c in connected_components(induced_subsymbol(g, enlarged))
                    if s in c)
        comp_sym = induced_subsymbol(g, comp)
        types = classify_finite_type(comp_sym)
        if types is None or is_minus_one_type(g, comp):
            continue
        partner = pi_permutation(comp_sym)[s]
        new_set = tuple(sorted(enlarged - {partner}, key=node_sort_key))
        results.append(new_set)
    return results


@dataclass(frozen=True)
class EquivalenceClass:
    """One involution class: all mutually reachable antipodal node sets."""

    members: Tuple[Tuple, ...]
    rank: int

    @property
    def canonical(self) -> Tuple:
        return self.members[0]


def equivalence_classes(g: CoxeterSymbol) -> List[EquivalenceClass]:
    """All involution classes of the group, one per move-closure of
    antipodal subsymbols.  Deterministic: members sorted, classes ordered
    by (rank, least member)."""
    if g.rank > MAX_NODES:
        raise SymbolError(f"class enumeration capped at {MAX_NODES} nodes")
    subsets = []
    for r in range(1, g.rank + 1):
        for combo in itertools.combinations(g.nodes, r):
            key = tuple(sorted(combo, key=node_sort_key))
            if is_minus_one_type(g, key):
                subsets.append(key)
    parent = {s: s for s in subsets}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for sub in subsets:
        for moved in elementary_moves(g, sub):
            ra, rb = find(sub), find(moved)
            if ra != rb:
                parent[ra] = rb
    groups: Dict[Tuple, List[Tuple]] = {}
    for sub in subsets:
        groups.setdefault(find(sub), []).append(sub)
    classes = []
    for members in groups.values():
        members.sort(key=lambda m: tuple(node_sort_key(v) for v in m))
        classes.append(EquivalenceClass(tuple(members), len(members[0])))
    classes.sort(key=lambda c: (c.rank, tuple(node_sort_key(v) for v in c.canonical)))
    return classes


def maximal_rank_class(w: WeylData) -> EquivalenceClass:
    """The unique class of maximal rank of an irreducible Weyl group."""
    classes = equivalence_classes(w.symbol)
    top = max(c.rank for c in classes)
    winners = [c for c in classes if c.rank == top]
    if len(winners) != 1:
        raise InvolutionError("maximal rank class is not unique")  # pragma: no cover
    return winners[0]


def half_coxeter_check(w: WeylData) -> bool:
    """Verify that the Coxeter half-turn is an involution whose minus-one
    eigenspace dimension equals the maximal involution-class rank."""
    h = w.coxeter_number
    if h % 2 != 0:
        raise InvolutionError(f"Coxeter number {h} is odd")
    g = wy.mat_pow(wy.coxeter_element(w), h // 2)
    n = w.rank
    if wy.mat_mul(g, g) != wy.identity_matrix(n):
        raise InvolutionError("half-turn is not an involution")  # pragma: no cover
    diff = tuple(
        tuple(g[i][j] - (1 if i == j else 0) for j in range(n)) for i in range(n)
    )
    return wy.rank_rational(diff) == maximal_rank_class(w).rank
