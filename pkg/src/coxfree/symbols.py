"""Coxeter symbols as labeled graphs.

A symbol records a Coxeter presentation: nodes are the generators, and an
edge labeled m >= 3 between s and t encodes the relation (st)^m = 1.
Absent edges mean m = 2 (the generators commute) and m(s, s) = 1 is never
stored.  INF marks an infinite product order.

This module recognizes finite-type symbols, computes exact Euler
characteristics, and evaluates the cosine bilinear form and its signature.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

INF = math.inf

# Subset enumeration (Euler characteristics, involution classes) is 2^|S|.
MAX_NODES = 12

SIGNATURE_TOL = 1e-8


def node_sort_key(node):
    """Stable sort key for possibly mixed int/str node identifiers."""
    if isinstance(node, int):
        return (0, node, "")
    return (1, 0, str(node))


class SymbolError(ValueError):
    pass


class CoxeterSymbol:
    """Finite labeled graph of a Coxeter presentation.

    Nodes are hashable identifiers kept in their construction order.
    Edges are stored sparsely: only labels m >= 3 (or INF) appear.
    Instances are treated as immutable values.
    """

    def __init__(self, nodes: Iterable, edges: Iterable[tuple] = ()):
        self.nodes: Tuple = tuple(nodes)
        if len(set(self.nodes)) != len(self.nodes):
            raise SymbolError("duplicate node identifiers")
        node_set = set(self.nodes)
        self._edges: Dict[FrozenSet, object] = {}
        for a, b, m in edges:
            if a not in node_set or b not in node_set:
                raise SymbolError(f"edge endpoint {a!r} or {b!r} is not a node")
            if a == b:
                raise SymbolError("m(s,s) = 1 always; self-edges are not allowed")
            if m != INF:
                if not isinstance(m, int) or m < 2:
                    raise SymbolError(f"edge order {m!r} out of range (need int >= 2 or INF)")
                if m == 2:
                    continue
            key = frozenset((a, b))
            if key in self._edges:
                raise SymbolError(f"duplicate edge {a!r}-{b!r}")
            self._edges[key] = m
        self._adj: Dict[object, List] = {v: [] for v in self.nodes}
        for key in self._edges:
            a, b = tuple(key)
            self._adj[a].append(b)
            self._adj[b].append(a)
        for v in self._adj:
            self._adj[v].sort(key=node_sort_key)

    def order(self, s, t):
        """Product order m(s,t); 1 on the diagonal, 2 for non-edges."""
        if s == t:
            return 1
        return self._edges.get(frozenset((s, t)), 2)

    def neighbors(self, s):
        return tuple(self._adj[s])

    def edges(self) -> List[tuple]:
        out = []
        for key, m in self._edges.items():
            a, b = sorted(key, key=node_sort_key)
            out.append((a, b, m))
        out.sort(key=lambda e: (node_sort_key(e[0]), node_sort_key(e[1])))
        return out

    @property
    def rank(self) -> int:
        return len(self.nodes)

    def __eq__(self, other):
        if not isinstance(other, CoxeterSymbol):
            return NotImplemented
        return self.nodes == other.nodes and self._edges == other._edges

    def __hash__(self):
        return hash((self.nodes, frozenset(self._edges.items())))

    def __repr__(self):
        return f"CoxeterSymbol(nodes={list(self.nodes)!r}, edges={self.edges()!r})"


@dataclass(frozen=True)
class FiniteType:
    """One irreducible finite factor, e.g. B with rank 5 (order 2^5 * 5!)."""

    family: str
    rank: int
    order: int

    def label(self) -> str:
        if self.family == "I2":
            return f"I2({self.order // 2})"
        if self.family in ("A", "B", "D"):
            return f"{self.family}{self.rank}"
        return self.family


def parse_symbol(text) -> CoxeterSymbol:
    """Parse {"nodes": [...], "edges": [[a, b, m], ...]} (m int or "inf")."""
    if isinstance(text, (str, bytes)):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SymbolError(f"malformed symbol JSON: {exc}") from exc
    else:
        data = text
    if not isinstance(data, dict) or "nodes" not in data:
        raise SymbolError('symbol JSON must be an object with a "nodes" list')
    nodes = data["nodes"]
    if not isinstance(nodes, list) or not all(isinstance(v, str) for v in nodes):
        raise SymbolError("nodes must be a list of strings")
    edges = []
    for entry in data.get("edges", []):
        if not (isinstance(entry, (list, tuple)) and len(entry) == 3):
            raise SymbolError(f"bad edge entry {entry!r}")
        a, b, m = entry
        if m == "inf":
            m = INF
        edges.append((a, b, m))
    return CoxeterSymbol(nodes, edges)


def serialize_symbol(g: CoxeterSymbol) -> dict:
    """Inverse of parse_symbol, with deterministic edge order."""
    edges = []
    for a, b, m in g.edges():
        edges.append([str(a), str(b), "inf" if m == INF else m])
    return {"nodes": [str(v) for v in g.nodes], "edges": edges}


def induced_subsymbol(g: CoxeterSymbol, t_nodes) -> CoxeterSymbol:
    """Subsymbol on the nodes in t_nodes, keeping edges with both ends inside."""
    keep = set(t_nodes)
    unknown = keep - set(g.nodes)
    if unknown:
        raise SymbolError(f"unknown nodes {sorted(unknown, key=node_sort_key)!r}")
    nodes = [v for v in g.nodes if v in keep]
    edges = [(a, b, m) for a, b, m in g.edges() if a in keep and b in keep]
    return CoxeterSymbol(nodes, edges)


def connected_components(g: CoxeterSymbol) -> List[Tuple]:
    """Partition of the nodes by edge connectivity, deterministically ordered."""
    seen = set()
    comps = []
    for start in g.nodes:
        if start in seen:
            continue
        comp = {start}
        queue = [start]
        while queue:
            v = queue.pop()
            for w in g.neighbors(v):
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(tuple(sorted(comp, key=node_sort_key)))
    comps.sort(key=lambda c: node_sort_key(c[0]))
    return comps


def _path_label_sequence(g: CoxeterSymbol, comp: Sequence) -> Optional[List]:
    """Edge labels along a path component, or None if it is not a path."""
    ends = [v for v in comp if len([w for w in g.neighbors(v) if w in comp]) <= 1]
    inside = set(comp)
    if len(comp) == 1:
        return []
    if len(ends) != 2 or any(
        len([w for w in g.neighbors(v) if w in inside]) > 2 for v in comp
    ):
        return None
    walk = [ends[0]]
    prev = None
    while len(walk) < len(comp):
        nxt = [w for w in g.neighbors(walk[-1]) if w in inside and w != prev]
        if len(nxt) != 1:
            return None
        prev = walk[-1]
        walk.append(nxt[0])
    return [g.order(walk[i], walk[i + 1]) for i in range(len(walk) - 1)]


def _classify_component(g: CoxeterSymbol, comp: Sequence) -> Optional[FiniteType]:
    n = len(comp)
    inside = set(comp)
    labels = [m for a, b, m in g.edges() if a in inside and b in inside]
    if any(m == INF for m in labels):
        return None
    if len(labels) != n - 1:
        return None  # finite diagrams are trees
    if n == 1:
        return FiniteType("A", 1, 2)
    seq = _path_label_sequence(g, comp)
    if seq is not None:
        return _classify_path(n, seq)
    # One branch node, three arms, all labels 3.
    degs = {v: len([w for w in g.neighbors(v) if w in inside]) for v in comp}
    branch = [v for v in comp if degs[v] == 3]
    if len(branch) != 1 or any(d > 3 for d in degs.values()):
        return None
    if any(m != 3 for m in labels):
        return None
    center = branch[0]
    arms = sorted(
        (_arm_length(g, inside, center, w) for w in g.neighbors(center) if w in inside),
        reverse=True,
    )
    if None in arms or len(arms) != 3:
        return None
    a, b, c = arms
    if (b, c) == (1, 1):
        return FiniteType("D", n, 2 ** (n - 1) * math.factorial(n))
    if (b, c) == (2, 1) and a in (2, 3, 4):
        orders = {6: 51840, 7: 2903040, 8: 696729600}
        return FiniteType(f"E{n}", n, orders[n])
    return None


def _arm_length(g, inside, center, first) -> Optional[int]:
    length = 1
    prev, cur = center, first
    while True:
        nxt = [w for w in g.neighbors(cur) if w in inside and w != prev]
        if not nxt:
            return length
        if len(nxt) > 1:
            return None
        prev, cur = cur, nxt[0]
        length += 1


def _classify_path(n: int, seq: List) -> Optional[FiniteType]:
    if n == 2:
        m = seq[0]
        if m == 3:
            return FiniteType("A", 2, 6)
        if m == 4:
            return FiniteType("B", 2, 8)
        if m == 6:
            return FiniteType("G2", 2, 12)
        return FiniteType("I2", 2, 2 * m)
    if all(m == 3 for m in seq):
        return FiniteType("A", n, math.factorial(n + 1))
    big = [m for m in seq if m != 3]
    if len(big) != 1:
        return None
    m = big[0]
    at_end = seq[0] != 3 or seq[-1] != 3
    if m == 4:
        if at_end:
            return FiniteType("B", n, 2 ** n * math.factorial(n))
        if n == 4 and seq[1] == 4:
            return FiniteType("F4", 4, 1152)
        return None
    if m == 5 and at_end:
        if n == 3:
            return FiniteType("H3", 3, 120)
        if n == 4:
            return FiniteType("H4", 4, 14400)
    return None


def classify_finite_type(g: CoxeterSymbol) -> Optional[List[FiniteType]]:
    """Per-component finite types, or None if some component is infinite."""
    out = []
    for comp in connected_components(g):
        t = _classify_component(g, comp)
        if t is None:
            return None
        out.append(t)
    return out


def finite_order(g: CoxeterSymbol) -> int:
    types = classify_finite_type(g)
    if types is None:
        raise SymbolError("symbol is not of finite type")
    order = 1
    for t in types:
        order *= t.order
    return order


def euler_characteristic(g: CoxeterSymbol) -> Fraction:
    """Exact group Euler characteristic.

    chi = sum over node subsets T with finite visible subgroup of
    (-1)^|T| / |W_T|.  The empty subset contributes +1.  For a symbol of
    finite type this collapses to 1/|W|.
    """
    if g.rank > MAX_NODES:
        raise SymbolError(f"Euler characteristic capped at {MAX_NODES} nodes")
    chi = Fraction(0)
    nodes = g.nodes
    for r in range(g.rank + 1):
        for subset in itertools.combinations(nodes, r):
            sub = induced_subsymbol(g, subset)
            types = classify_finite_type(sub)
            if types is None:
                continue
            order = 1
            for t in types:
                order *= t.order
            chi += Fraction((-1) ** r, order)
    return chi


def bilinear_gram(g: CoxeterSymbol, inf_value: float = -1.0) -> np.ndarray:
    """Cosine matrix B(v_s, v_t) = -cos(pi / m(s,t)), with inf_value at m = INF."""
    if inf_value > -1.0:
        raise SymbolError("inf_value must be <= -1")
    n = g.rank
    mat = np.eye(n)
    index = {v: i for i, v in enumerate(g.nodes)}
    for a, b, m in g.edges():
        val = inf_value if m == INF else -math.cos(math.pi / m)
        mat[index[a], index[b]] = val
        mat[index[b], index[a]] = val
    return mat


def signature(g: CoxeterSymbol, inf_value: float = -1.0) -> Tuple[int, int, int]:
    """Counts (n_plus, n_minus, n_zero) of eigenvalue signs of the cosine form.

    Eigenvalues with |lambda| < 1e-8 count as zero; at the scales handled
    here the smallest nonzero eigenvalues stay above 1e-3.
    """
    eig = np.linalg.eigvalsh(bilinear_gram(g, inf_value))
    n_plus = int(np.sum(eig > SIGNATURE_TOL))
    n_minus = int(np.sum(eig < -SIGNATURE_TOL))
    return (n_plus, n_minus, g.rank - n_plus - n_minus)


def parity_character(g: CoxeterSymbol, t, word: Sequence) -> int:
    """Occurrence count of the generator t in the word, mod 2.

    Well-defined on the group only when every finite edge label at t is
    even: the braid relations then preserve the parity of t-occurrences.
    """
    if t not in set(g.nodes):
        raise SymbolError(f"unknown node {t!r}")
    for s in g.neighbors(t):
        m = g.order(s, t)
        if m != INF and m % 2 == 1:
            raise SymbolError(f"odd edge label m({s!r},{t!r}) = {m}; parity is ill-defined")
    node_set = set(g.nodes)
    for s in word:
        if s not in node_set:
            raise SymbolError(f"unknown generator {s!r} in word")
    return sum(1 for s in word if s == t) % 2
