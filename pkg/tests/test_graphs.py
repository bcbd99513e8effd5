import pytest

from ncgspectra import (
    AbelianGroupError,
    DisconnectedGraph,
    GroupElement,
    GroupSpec,
    IntMatrix,
    NCGraph,
    NotCompleteMultipartite,
    claimed_partition_sizes,
    complete_multipartite,
    distance_matrix,
    dl_matrix,
    dq_matrix,
    enumerate_elements,
    non_commuting_graph,
    part_major,
    partition_structure,
    transmissions,
)

K2 = complete_multipartite([1, 1])


def graph_of(spec):
    return non_commuting_graph(enumerate_elements(spec))


def test_vertex_counts():
    assert graph_of(GroupSpec.q4n(2)).order == 6
    assert graph_of(GroupSpec.qd(4)).order == 14
    assert graph_of(GroupSpec.u6n(1)).order == 5


def test_adjacency_is_noncommuting_and_symmetric():
    g = enumerate_elements(GroupSpec.u6n(2))
    graph = non_commuting_graph(g)
    for i, u in enumerate(graph.vertices):
        assert not graph.adjacency[i][i]
        for j, v in enumerate(graph.vertices):
            assert graph.adjacency[i][j] == graph.adjacency[j][i]
            assert graph.adjacency[i][j] == (i != j and g.mult(u, v) != g.mult(v, u))


def test_abelian_group_rejected():
    class Cyclic:
        def __init__(self, n):
            self.n = n
            self.elements = tuple(GroupElement(i, 0) for i in range(n))
            self.spec = GroupSpec.u6n(1)

        def mult(self, x, y):
            return GroupElement((x.a_exp + y.a_exp) % self.n, 0)

    with pytest.raises(AbelianGroupError):
        non_commuting_graph(Cyclic(5))


@pytest.mark.parametrize(
    "spec,parts",
    [
        (GroupSpec.q4n(2), ((2, 3),)),
        (GroupSpec.qd(4), ((6, 1), (2, 4))),
        (GroupSpec.u6n(2), ((4, 1), (2, 3))),
        (GroupSpec.u6n(1), ((2, 1), (1, 3))),
        (GroupSpec.metacyclic(5, 1), ((4, 1), (1, 5))),
        (GroupSpec.metacyclic(6, 1), ((4, 1), (2, 3))),
        (GroupSpec.metacyclic(4, 2), ((4, 3),)),
    ],
    ids=lambda v: v.label() if isinstance(v, GroupSpec) else str(v),
)
def test_partition_shapes(spec, parts):
    partition = partition_structure(graph_of(spec))
    assert partition.parts == parts
    assert partition.total == sum(s * c for s, c in parts)
    assert partition.sizes == claimed_partition_sizes(spec)


def test_partition_classes_cover_and_match_sizes():
    partition = partition_structure(graph_of(GroupSpec.q4n(3)))
    seen = sorted(i for cls in partition.classes for i in cls)
    assert seen == list(range(partition.total))
    assert tuple(len(c) for c in partition.classes) == partition.sizes


def test_partition_reconstruction_reproduces_adjacency():
    for spec in [GroupSpec.q4n(3), GroupSpec.u6n(2), GroupSpec.metacyclic(5, 2)]:
        reordered, partition = part_major(graph_of(spec))
        rebuilt = complete_multipartite(partition.sizes)
        assert rebuilt.adjacency == reordered.adjacency


def test_not_complete_multipartite_rejected():
    # path on four vertices: its complement is connected but not a clique
    adj = (
        (False, True, False, False),
        (True, False, True, False),
        (False, True, False, True),
        (False, False, True, False),
    )
    with pytest.raises(NotCompleteMultipartite):
        partition_structure(NCGraph((0, 1, 2, 3), adj))


def test_part_major_blocks_are_contiguous():
    reordered, partition = part_major(graph_of(GroupSpec.qd(4)))
    assert partition.sizes == (6, 2, 2, 2, 2)
    start = 0
    for cls in partition.classes:
        assert cls == tuple(range(start, start + len(cls)))
        start += len(cls)
    # big part first means the first six vertices are the cyclic-generator powers
    assert all(v.b_exp == 0 for v in reordered.vertices[:6])


def test_permuted_requires_permutation():
    with pytest.raises(ValueError):
        K2.permuted([0, 0])


def test_distance_matrix_k2():
    assert distance_matrix(K2) == IntMatrix(((0, 1), (1, 0)))


def test_distance_entries_and_diameter():
    for spec in [GroupSpec.q4n(2), GroupSpec.u6n(2), GroupSpec.metacyclic(6, 1)]:
        graph, partition = part_major(graph_of(spec))
        dist = distance_matrix(graph)
        part_of = {}
        for p, cls in enumerate(partition.classes):
            for i in cls:
                part_of[i] = p
        for i in range(dist.n):
            for j in range(dist.n):
                if i == j:
                    assert dist.rows[i][j] == 0
                elif part_of[i] == part_of[j]:
                    assert dist.rows[i][j] == 2
                else:
                    assert dist.rows[i][j] == 1


def test_disconnected_graph_rejected():
    with pytest.raises(DisconnectedGraph):
        distance_matrix(complete_multipartite([3]))


def test_transmissions():
    d = distance_matrix(part_major(graph_of(GroupSpec.q4n(2)))[0])
    assert transmissions(d) == (6,) * 6
    assert transmissions(distance_matrix(K2)) == (1, 1)
    d = distance_matrix(part_major(graph_of(GroupSpec.u6n(1)))[0])
    assert transmissions(d) == (5, 5, 4, 4, 4)


def test_dl_dq_matrices():
    assert dl_matrix(distance_matrix(K2)) == IntMatrix(((1, -1), (-1, 1)))
    d = distance_matrix(part_major(graph_of(GroupSpec.q4n(2)))[0])
    dl = dl_matrix(d)
    assert all(sum(row) == 0 for row in dl.rows)
    assert dl == IntMatrix(
        tuple(
            tuple((6 if i == j else 0) - d.rows[i][j] for j in range(6))
            for i in range(6)
        )
    )
    dq = dq_matrix(d)
    assert dq.trace() == 36
    assert all(
        dq.rows[i][j] - dl.rows[i][j] == 2 * d.rows[i][j]
        for i in range(6)
        for j in range(6)
    )


def test_dl_rows_sum_to_zero_across_families():
    for spec in [GroupSpec.qd(4), GroupSpec.u6n(3), GroupSpec.metacyclic(7, 1)]:
        d = distance_matrix(part_major(graph_of(spec))[0])
        assert all(sum(row) == 0 for row in dl_matrix(d).rows)
