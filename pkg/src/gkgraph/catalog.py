"""Group identities, the E8(q) order formula, and embedded prime-graph data
for the sporadic and small groups the audits compare against.

Non-E8 data ships in data/groups.json at two fidelity levels: "full-graph"
records carry the complete labeled graph, "components-only" records carry
just the component partition (no adjacency inside the big component is
published for those groups, and the catalog refuses to invent it).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from math import isqrt

from .arith import FactoredInteger, PrimePower, factor_cyclotomic, factorize
from .e8 import ADMISSIBLE_ORDERS, ORDER_DEGREES, build_e8_graph
from .graphs import ComponentPartition, GKGraph, connected_components, is_clique

FULL_GRAPH = "full-graph"
COMPONENTS_ONLY = "components-only"

FAMILIES = frozenset({
    "E8", "TwoE6", "Sz", "PSL3_4", "M22", "J1", "J4", "Ly", "ON",
    "Fi24prime", "Monster", "A5", "A6", "A10", "AutJ2", "S5", "S6",
})
_PARAMETRIC = frozenset({"E8", "Sz"})


def _is_odd_power_of_two(q: PrimePower) -> bool:
    return q.p == 2 and q.k % 2 == 1 and q.k >= 3


@dataclass(frozen=True)
class GroupId:
    family: str
    parameter: PrimePower | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown group family: {self.family}")
        if self.family in _PARAMETRIC:
            if self.parameter is None:
                raise ValueError(f"{self.family} requires a field parameter")
            if self.family == "Sz" and not _is_odd_power_of_two(self.parameter):
                raise ValueError(
                    f"Sz parameter must be an odd power of 2 greater than 2, "
                    f"got {self.parameter}")
        elif self.parameter is not None:
            raise ValueError(f"{self.family} takes no field parameter")

    def __str__(self) -> str:
        names = {"TwoE6": "2E6(2)", "PSL3_4": "PSL3(4)", "Fi24prime": "Fi24'",
                 "Monster": "M", "ON": "O'N", "AutJ2": "Aut(J2)"}
        if self.family in _PARAMETRIC:
            return f"{self.family}({self.parameter})"
        return names.get(self.family, self.family)


@dataclass(frozen=True)
class CatalogEntry:
    id: GroupId
    fidelity: str
    graph: GKGraph | None
    partition: ComponentPartition
    provenance: str


def _pi(n: int) -> frozenset[int]:
    return factorize(n).prime_set


# ---------------------------------------------------------------------------
# E8(q): order and spectrum
# ---------------------------------------------------------------------------

def e8_order(q: PrimePower) -> FactoredInteger:
    """Fully factored group order q^120 * prod(q^i - 1) over the eight degrees.

    Each q^i - 1 splits into cyclotomic values, so only those (already cached
    by the e-class machinery) ever get factored.
    """
    factors: dict[int, int] = {q.p: 120 * q.k}
    for d in ADMISSIBLE_ORDERS:
        multiplicity = sum(1 for i in ORDER_DEGREES if i % d == 0)
        for prime, exponent in factor_cyclotomic(d, q.q).factors:
            factors[prime] = factors.get(prime, 0) + exponent * multiplicity
    return FactoredInteger.from_factor_map(factors)


def prime_spectrum(g: GroupId) -> frozenset[int]:
    """All primes dividing the group order."""
    if g.family == "E8":
        return e8_order(g.parameter).prime_set
    return catalog_entry(g).partition.vertex_set()


# ---------------------------------------------------------------------------
# embedded data
# ---------------------------------------------------------------------------

def _parse_record(rec: dict) -> CatalogEntry:
    parameter = rec["parameter"]
    gid = GroupId(rec["family"],
                  PrimePower.from_q(parameter) if parameter is not None else None)
    vertices = [int(v) for v in rec["vertices"]]
    partition = ComponentPartition(
        tuple(frozenset(int(v) for v in block) for block in rec["partition"]))
    fidelity = rec["fidelity"]
    graph = None
    if fidelity == FULL_GRAPH:
        edges = [(int(a), int(b)) for a, b in rec["edges"]]
        graph = GKGraph.build(vertices, edges, label=str(gid))
    elif fidelity != COMPONENTS_ONLY:
        raise ValueError(f"unknown fidelity: {fidelity}")
    entry = CatalogEntry(gid, fidelity, graph, partition, rec["provenance"])
    _validate_entry(entry, frozenset(vertices))
    return entry


def _validate_entry(entry: CatalogEntry, vertices: frozenset[int]) -> None:
    if entry.partition.vertex_set() != vertices:
        raise ValueError(f"{entry.id}: partition does not cover the vertex list")
    if 2 not in entry.partition.blocks[0]:
        raise ValueError(f"{entry.id}: 2 must lie in the first block")
    if entry.graph is not None:
        computed = connected_components(entry.graph).block_set()
        if computed != entry.partition.block_set():
            raise ValueError(f"{entry.id}: stored partition != graph components")
        for block in entry.partition.blocks[1:]:
            if not is_clique(entry.graph, block):
                raise ValueError(f"{entry.id}: non-clique component {sorted(block)}")


@lru_cache(maxsize=1)
def _load_catalog() -> dict[tuple[str, int | None], CatalogEntry]:
    raw = resources.files("gkgraph").joinpath("data/groups.json").read_text("utf-8")
    data = json.loads(raw)
    entries = {}
    for rec in data["groups"]:
        entry = _parse_record(rec)
        key = (entry.id.family,
               entry.id.parameter.q if entry.id.parameter else None)
        if key in entries:
            raise ValueError(f"duplicate catalog record: {key}")
        entries[key] = entry
    return entries


def catalog_groups() -> tuple[GroupId, ...]:
    """All embedded (non-E8) groups, in data-file order."""
    return tuple(entry.id for entry in _load_catalog().values())


def catalog_entry(g: GroupId) -> CatalogEntry:
    if g.family == "E8":
        raise ValueError("E8 graphs are generated, not embedded; "
                         "use e8.build_e8_graph")
    key = (g.family, g.parameter.q if g.parameter else None)
    try:
        return _load_catalog()[key]
    except KeyError:
        raise ValueError(f"group not in catalog: {g}") from None


# ---------------------------------------------------------------------------
# Suzuki component formulas
# ---------------------------------------------------------------------------

def sz_partition(q: PrimePower) -> ComponentPartition:
    """Component partition of the Suzuki group prime graph for q = 2^(2m+1) > 2:
    [{2}, pi(q-1), pi(q-sqrt(2q)+1), pi(q+sqrt(2q)+1)], in table order."""
    if not _is_odd_power_of_two(q):
        raise ValueError(
            f"Suzuki parameter must be an odd power of 2 greater than 2, got {q}")
    value = q.q
    root = isqrt(2 * value)
    assert root * root == 2 * value
    return ComponentPartition((
        frozenset({2}),
        _pi(value - 1),
        _pi(value - root + 1),
        _pi(value + root + 1),
    ))


def build_group_graph(g: GroupId) -> tuple[GKGraph | None, ComponentPartition]:
    """(graph-or-None, partition) for any group id; E8 is generated."""
    if g.family == "E8":
        graph = build_e8_graph(g.parameter)
        return graph, connected_components(graph)
    entry = catalog_entry(g)
    return entry.graph, entry.partition
