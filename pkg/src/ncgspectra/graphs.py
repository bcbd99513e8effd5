"""Non-commuting graphs, complete-multipartite certification, distance matrices.

The distance matrix is always computed by breadth-first search, even though
the graphs at hand provably have diameter 2; this keeps the oracle honest and
family-agnostic.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .exactalg import IntMatrix
from .groups import FiniteGroup, center


class AbelianGroupError(ValueError):
    """The non-commuting graph of an abelian group has no vertices."""


class NotCompleteMultipartite(ValueError):
    """The complement of the graph is not a disjoint union of cliques."""


class DisconnectedGraph(ValueError):
    """Some vertex pair has no connecting path."""


class MatrixKind(str, Enum):
    DISTANCE = "d"
    DISTANCE_LAPLACIAN = "dl"
    DISTANCE_SIGNLESS_LAPLACIAN = "dq"

    def __str__(self) -> str:
        return self.value


ALL_KINDS = (
    MatrixKind.DISTANCE,
    MatrixKind.DISTANCE_LAPLACIAN,
    MatrixKind.DISTANCE_SIGNLESS_LAPLACIAN,
)


@dataclass(frozen=True)
class NCGraph:
    """A simple undirected graph with labeled vertices and boolean adjacency."""

    vertices: tuple
    adjacency: tuple[tuple[bool, ...], ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    def permuted(self, order: Sequence[int]) -> "NCGraph":
        """Same graph with vertices re-listed in the given index order."""
        if sorted(order) != list(range(self.order)):
            raise ValueError("order must be a permutation of the vertex indices")
        verts = tuple(self.vertices[i] for i in order)
        adj = tuple(tuple(self.adjacency[i][j] for j in order) for i in order)
        return NCGraph(verts, adj)


@dataclass(frozen=True)
class PartitionStructure:
    """Certified multipartition of a complete multipartite graph.

    `classes` lists vertex-index groups in part-major order (largest part
    first, ties by smallest vertex index); `sizes` are the matching class
    sizes; `parts` is the (size, count) multiset summary.
    """

    parts: tuple[tuple[int, int], ...]
    total: int
    sizes: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    def vertex_order(self) -> tuple[int, ...]:
        return tuple(i for cls in self.classes for i in cls)


def non_commuting_graph(group: FiniteGroup) -> NCGraph:
    """Graph on the non-central elements, adjacent iff they do not commute."""
    z = center(group)
    verts = tuple(e for e in group.elements if e not in z)
    if not verts:
        raise AbelianGroupError(f"{group.spec.label()} is abelian, no vertices")
    mult = group.mult
    n = len(verts)
    adj = []
    for i in range(n):
        u = verts[i]
        row = []
        for j in range(n):
            v = verts[j]
            row.append(i != j and mult(u, v) != mult(v, u))
        adj.append(tuple(row))
    return NCGraph(verts, tuple(adj))


def complete_multipartite(sizes: Iterable[int]) -> NCGraph:
    """K_{n_1,...,n_k} with integer vertex labels, parts in the given order."""
    sizes = tuple(int(s) for s in sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    part_of = []
    for p, s in enumerate(sizes):
        part_of.extend([p] * s)
    n = len(part_of)
    adj = tuple(
        tuple(i != j and part_of[i] != part_of[j] for j in range(n)) for i in range(n)
    )
    return NCGraph(tuple(range(n)), adj)


def partition_structure(graph: NCGraph) -> PartitionStructure:
    """Certify the graph as complete multipartite and return its parts.

    The parts are the connected components of the complement; the complement
    must be a disjoint union of cliques and every cross-part pair must be
    adjacent, otherwise NotCompleteMultipartite is raised.
    """
    n = graph.order
    adj = graph.adjacency
    seen = [False] * n
    classes = []
    for start in range(n):
        if seen[start]:
            continue
        comp = []
        queue = deque([start])
        seen[start] = True
        while queue:
            u = queue.popleft()
            comp.append(u)
            for v in range(n):
                if not seen[v] and u != v and not adj[u][v]:
                    seen[v] = True
                    queue.append(v)
        comp.sort()
        classes.append(tuple(comp))
    for comp in classes:
        for a in range(len(comp)):
            for b in range(a + 1, len(comp)):
                if adj[comp[a]][comp[b]]:
                    raise NotCompleteMultipartite(
                        f"vertices {comp[a]} and {comp[b]} are adjacent inside a "
                        f"complement component of size {len(comp)}"
                    )
    for ci in range(len(classes)):
        for cj in range(ci + 1, len(classes)):
            for u in classes[ci]:
                for v in classes[cj]:
                    if not adj[u][v]:
                        raise NotCompleteMultipartite(
                            f"cross-part vertices {u} and {v} are not adjacent"
                        )
    classes.sort(key=lambda c: (-len(c), c[0]))
    sizes = tuple(len(c) for c in classes)
    counts = Counter(sizes)
    parts = tuple(sorted(counts.items(), key=lambda sc: -sc[0]))
    return PartitionStructure(parts, n, sizes, tuple(classes))


def part_major(graph: NCGraph) -> tuple[NCGraph, PartitionStructure]:
    """Certify and reorder so parts occupy consecutive index blocks.

    Largest part first; within a part the original vertex order is kept, so
    the result is deterministic for a fixed input graph.
    """
    partition = partition_structure(graph)
    reordered = graph.permuted(partition.vertex_order())
    return reordered, partition_structure(reordered)


def distance_matrix(graph: NCGraph) -> IntMatrix:
    """All-pairs shortest path lengths by BFS from every vertex."""
    n = graph.order
    neighbors = [
        [j for j in range(n) if graph.adjacency[i][j]] for i in range(n)
    ]
    rows = []
    for src in range(n):
        dist = [-1] * n
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for v in neighbors[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        if any(d < 0 for d in dist):
            far = dist.index(-1)
            raise DisconnectedGraph(f"vertex {far} unreachable from vertex {src}")
        rows.append(tuple(dist))
    return IntMatrix(tuple(rows))


def transmissions(dist: IntMatrix) -> tuple[int, ...]:
    """Row sums of the distance matrix."""
    return tuple(sum(row) for row in dist.rows)


def dl_matrix(dist: IntMatrix) -> IntMatrix:
    """Distance Laplacian: diagonal transmissions minus distances."""
    tr = transmissions(dist)
    rows = tuple(
        tuple((tr[i] if i == j else 0) - dist.rows[i][j] for j in range(dist.n))
        for i in range(dist.n)
    )
    return IntMatrix(rows)


def dq_matrix(dist: IntMatrix) -> IntMatrix:
    """Distance signless Laplacian: diagonal transmissions plus distances."""
    tr = transmissions(dist)
    rows = tuple(
        tuple((tr[i] if i == j else 0) + dist.rows[i][j] for j in range(dist.n))
        for i in range(dist.n)
    )
    return IntMatrix(rows)


def matrix_of_kind(dist: IntMatrix, kind: MatrixKind) -> IntMatrix:
    if kind == MatrixKind.DISTANCE:
        return dist
    if kind == MatrixKind.DISTANCE_LAPLACIAN:
        return dl_matrix(dist)
    return dq_matrix(dist)
