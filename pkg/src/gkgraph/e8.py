"""Generative construction of the prime graph of E8(q).

Adjacency between odd non-defining primes depends only on their e-classes
(the multiplicative order of q modulo the prime), with a single genuinely
prime-dependent exception: the prime 5 sitting in class 4 is adjacent to
class 20.  That exception is why the class quotient splits 5 out on its own.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .arith import PrimePower, primitive_prime_divisors
from .graphs import GKGraph

# exponents i with q^i - 1 a factor of the group order
ORDER_DEGREES = (2, 8, 12, 14, 18, 20, 24, 30)
# every divisor of an entry of ORDER_DEGREES; the admissible e-classes
ADMISSIBLE_ORDERS = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 18, 20, 24, 30)

# classes nonadjacent to 2, to the defining prime, and to classes 1 and 2
_ISOLATED_FROM_CORE = frozenset({15, 20, 24, 30})


class ClassInconsistencyError(RuntimeError):
    """A class pair showed mixed adjacency not explained by the 5-class-20 rule."""


@dataclass(frozen=True)
class EClassIndex:
    """Partition of the prime spectrum of E8(q) into the defining prime and
    one class per admissible multiplicative order."""

    q: PrimePower
    classes: tuple[tuple[int, frozenset[int]], ...]

    @cached_property
    def _by_order(self) -> dict[int, frozenset[int]]:
        return dict(self.classes)

    @cached_property
    def _order_of(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for i, members in self.classes:
            for r in members:
                out[r] = i
        return out

    @property
    def characteristic_class(self) -> frozenset[int]:
        return frozenset({self.q.p})

    def class_of(self, i: int) -> frozenset[int]:
        return self._by_order[i]

    def e_value_of(self, r: int) -> int | None:
        """The e-class of a spectrum prime; None for the defining prime."""
        if r == self.q.p:
            return None
        try:
            return self._order_of[r]
        except KeyError:
            raise ValueError(f"{r} is not in the prime spectrum of E8({self.q})")

    def vertex_set(self) -> frozenset[int]:
        out = frozenset({self.q.p})
        for _, members in self.classes:
            out |= members
        return out


@lru_cache(maxsize=None)
def e_class_index(q: PrimePower) -> EClassIndex:
    classes = tuple((i, primitive_prime_divisors(q.q, i)) for i in ADMISSIBLE_ORDERS)
    return EClassIndex(q, classes)


def e8_nonadjacent(r: int, s: int, q: PrimePower) -> bool:
    """Whether distinct spectrum primes r and s are nonadjacent in the prime
    graph of E8(q)."""
    if r == s:
        raise ValueError(f"vertices must be distinct, got {r} twice")
    idx = e_class_index(q)
    e_r = idx.e_value_of(r)
    e_s = idx.e_value_of(s)
    p = q.p

    if r in (2, p) or s in (2, p):
        other, e_other = (s, e_s) if r in (2, p) else (r, e_r)
        if other == p:
            return False
        return e_other in _ISOLATED_FROM_CORE

    k, l, anchor = e_r, e_s, r
    if k > l:
        k, l, anchor = l, k, s
    if k == l:
        return False
    if l == 6:
        return k == 5
    if l in (7, 14):
        return k >= 3
    if l == 9:
        return k >= 4
    if l in (8, 12):
        return k >= 5 and k != 6
    if l == 10:
        return k >= 3 and k not in (4, 6)
    if l == 18:
        return k not in (1, 2, 6)
    if l == 20:
        return anchor * k != 20
    if l in (15, 24, 30):
        return True
    return False


def build_e8_graph(q: PrimePower) -> GKGraph:
    """The full prime graph of E8(q)."""
    verts = sorted(e_class_index(q).vertex_set())
    edges = [(r, s)
             for i, r in enumerate(verts)
             for s in verts[i + 1:]
             if not e8_nonadjacent(r, s, q)]
    return GKGraph.build(verts, edges, label=f"E8({q})")


@dataclass(frozen=True)
class ClassQuotient:
    """Quotient of the prime graph by e-class, with the core classes 1, 2 and
    the defining prime merged into one vertex "R" and, whenever 5 lies in
    class 4, the prime 5 split out as its own vertex ("5")."""

    q: PrimePower
    labels: tuple[str, ...]
    members: tuple[tuple[str, frozenset[int]], ...]
    edges: frozenset[tuple[str, str]]
    five_split: bool

    @cached_property
    def members_of(self) -> dict[str, frozenset[int]]:
        return dict(self.members)

    def has_edge(self, a: str, b: str) -> bool:
        return (a, b) in self.edges or (b, a) in self.edges


def class_quotient(q: PrimePower) -> ClassQuotient:
    idx = e_class_index(q)
    core = idx.class_of(1) | idx.class_of(2) | {q.p}

    five_split = 5 in idx.class_of(4)
    groups: list[tuple[tuple[int, int], str, frozenset[int]]] = [((0, 0), "R", core)]
    for i in ADMISSIBLE_ORDERS:
        if i <= 2:
            continue
        members = idx.class_of(i)
        if five_split and i == 4:
            members = members - {5}
        if members:
            groups.append(((i, 0), f"R{i}", members))
    if five_split:
        groups.append(((4, 1), "5", frozenset({5})))
    groups.sort(key=lambda item: item[0])

    labels = tuple(label for _, label, _ in groups)
    members = tuple((label, mem) for _, label, mem in groups)
    edges = set()
    for a in range(len(groups)):
        for b in range(a + 1, len(groups)):
            la, ma = groups[a][1], groups[a][2]
            lb, mb = groups[b][1], groups[b][2]
            verdicts = {e8_nonadjacent(r, s, q) for r in ma for s in mb}
            if len(verdicts) > 1:
                raise ClassInconsistencyError(
                    f"mixed adjacency between {la} and {lb} for q={q}")
            if verdicts == {False}:
                edges.add((la, lb))
    return ClassQuotient(q, labels, members, frozenset(edges), five_split)
