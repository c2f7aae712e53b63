"""Basic-subgraph enumeration and the coefficient theorem.

A basic subgraph is a vertex-disjoint union of single edges and cycles.  Its
signed, cycle-weighted count reproduces the characteristic polynomial of a
gain adjacency matrix: with p(B) components and c(B) cycles,

    c_i    = sum over basic subgraphs B on i vertices of
             (-1)**p(B) * 2**c(B) * R(B),
    Mdet(A) = sum over spanning basic subgraphs B of
             (-1)**(n + p(B)) * 2**c(B) * R(B),

where R(C) is the real part (a dual number) of the walk gain around a cycle
(independent of start and direction) and R(B) the product over its cycles.
Enumeration is explicit and capped at 12 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotACycleError, SizeCapExceededError
from .gain_graph import GainGraph, UnderlyingGraph
from .scalars import DualNumber, DualScalar

SIZE_CAP = 12


@dataclass(frozen=True)
class BasicSubgraph:
    """A disjoint union of single edges and cycles (as vertex tuples)."""

    edges: tuple
    cycles: tuple

    @property
    def vertices(self) -> frozenset:
        out = set()
        for u, v in self.edges:
            out.update((u, v))
        for cyc in self.cycles:
            out.update(cyc)
        return frozenset(out)

    @property
    def component_count(self) -> int:
        return len(self.edges) + len(self.cycles)

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)


@dataclass(frozen=True)
class CycleRealGain:
    """Real part of a cycle's walk gain; well defined per cycle."""

    cycle: tuple
    value: DualNumber


def real_gain_of_cycle(phi: GainGraph, cycle) -> CycleRealGain:
    """R(C) = Re(walk gain around C), a dual number independent of the
    starting vertex and direction."""
    cyc = tuple(int(v) for v in cycle)
    if cyc and cyc[0] == cyc[-1]:
        cyc = cyc[:-1]
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        raise NotACycleError(f"{cycle!r} is not a simple cycle")
    for u, v in zip(cyc, cyc[1:] + (cyc[0],)):
        if not phi.graph.has_edge(u, v):
            raise NotACycleError(f"({u}, {v}) is not an edge")
    walk = list(cyc) + [cyc[0]]
    return CycleRealGain(cyc, phi.gain_of_walk(walk).real_part())


def enumerate_cycles(graph: UnderlyingGraph, size_cap: int = SIZE_CAP) -> list[tuple]:
    """All simple cycles, each emitted once: minimal vertex first and the
    smaller neighbor chosen as the second vertex."""
    if graph.n > size_cap:
        raise SizeCapExceededError(f"n={graph.n} exceeds the size cap {size_cap}")
    adj = {v: graph.neighbors(v) for v in range(graph.n)}
    cycles = []

    def extend(path, allowed):
        head = path[0]
        tail = path[-1]
        for nxt in adj[tail]:
            if nxt == head and len(path) >= 3:
                if path[1] < path[-1]:
                    cycles.append(tuple(path))
            elif nxt in allowed and nxt not in path and nxt > head:
                extend(path + [nxt], allowed)

    for root in range(graph.n):
        extend([root], set(range(root + 1, graph.n)))
    cycles.sort()
    return cycles


def enumerate_basic_subgraphs(graph: UnderlyingGraph, i: int,
                              size_cap: int = SIZE_CAP) -> list[BasicSubgraph]:
    """All basic subgraphs covering exactly i vertices, in deterministic
    order."""
    if graph.n > size_cap:
        raise SizeCapExceededError(f"n={graph.n} exceeds the size cap {size_cap}")
    if not 0 <= i <= graph.n:
        raise ValueError(f"vertex count {i} out of range")
    adj = {v: graph.neighbors(v) for v in range(graph.n)}
    all_cycles = enumerate_cycles(graph, size_cap)
    cycles_by_min = {}
    for cyc in all_cycles:
        cycles_by_min.setdefault(cyc[0], []).append(cyc)

    out = []

    def recurse(v, used, edges, cycles):
        if len(used) > i:
            return
        if v == graph.n:
            if len(used) == i:
                out.append(BasicSubgraph(tuple(edges), tuple(cycles)))
            return
        if v in used:
            recurse(v + 1, used, edges, cycles)
            return
        # v stays uncovered
        recurse(v + 1, used, edges, cycles)
        # v is the smaller endpoint of a single-edge component
        for w in adj[v]:
            if w > v and w not in used:
                recurse(v + 1, used | {v, w}, edges + [(v, w)], cycles)
        # v is the minimal vertex of a cycle component
        for cyc in cycles_by_min.get(v, ()):
            cyc_set = set(cyc)
            if cyc_set & used:
                continue
            recurse(v + 1, used | cyc_set, edges, cycles + [cyc])

    recurse(0, frozenset(), [], [])
    out.sort(key=lambda b: (b.edges, b.cycles))
    return out


def coefficients(phi: GainGraph, size_cap: int = SIZE_CAP) -> list[DualNumber]:
    """Characteristic-polynomial coefficients c_1..c_n of the adjacency
    matrix, as dual numbers (x**n + c_1 x**(n-1) + ... + c_n)."""
    n = phi.n
    if n > size_cap:
        raise SizeCapExceededError(f"n={n} exceeds the size cap {size_cap}")
    real_gains = {cyc: real_gain_of_cycle(phi, cyc).value
                  for cyc in enumerate_cycles(phi.graph, size_cap)}
    out = []
    for i in range(1, n + 1):
        acc = DualNumber.zero()
        for basic in enumerate_basic_subgraphs(phi.graph, i, size_cap):
            term = DualNumber(float(2 ** basic.cycle_count), 0.0)
            if basic.component_count % 2:
                term = -term
            for cyc in basic.cycles:
                term = term * real_gains[cyc]
            acc = acc + term
        out.append(acc)
    return out


def char_poly_from_eigenvalues(values) -> list[DualNumber]:
    """Expand prod (x - lambda_i) over dual numbers; returns c_1..c_n.

    Independent cross-check partner for `coefficients`: c_i must equal
    (-1)**i e_i(lambda), which is exactly what this expansion produces.
    """
    coeffs = [DualNumber(1.0)]
    for lam in values:
        nxt = [DualNumber.zero() for _ in range(len(coeffs) + 1)]
        for i, c in enumerate(coeffs):
            nxt[i] = nxt[i] + c
            nxt[i + 1] = nxt[i + 1] - c * lam
        coeffs = nxt
    return coeffs[1:]


def mdet_via_subgraphs(phi: GainGraph, size_cap: int = SIZE_CAP) -> DualScalar:
    """Moore determinant of the adjacency matrix as the spanning
    basic-subgraph sum; an empty sum gives zero."""
    n = phi.n
    if n > size_cap:
        raise SizeCapExceededError(f"n={n} exceeds the size cap {size_cap}")
    acc = DualNumber.zero()
    for basic in enumerate_basic_subgraphs(phi.graph, n, size_cap):
        term = DualNumber(float(2 ** basic.cycle_count), 0.0)
        if (n + basic.component_count) % 2:
            term = -term
        for cyc in basic.cycles:
            term = term * real_gain_of_cycle(phi, cyc).value
        acc = acc + term
    return acc.to_scalar(phi.ring)
