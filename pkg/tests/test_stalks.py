from hilbschur.partitions import integer_partitions, num_partitions, preceq
from hilbschur.stalks import (check_column_sums, check_triangularity,
                              concat_sorted, dual_phi_matrix, phi_matrix,
                              tuple_basis)


def test_tuple_basis_size():
    for n in range(1, 8):
        for shape in integer_partitions(n):
            expected = 1
            for p in shape:
                expected *= num_partitions(p)
            assert len(tuple_basis(shape)) == expected


def test_phi_identity_for_single_part():
    for n in range(1, 6):
        m = phi_matrix((n,))
        assert len(m.rows) == len(m.cols) == num_partitions(n)
        # one tuple per partition, marked on its own row
        for i, mu in enumerate(m.rows):
            for j, t in enumerate(m.cols):
                assert m.entries[i][j] == (1 if t == (mu,) else 0)


def test_phi_21_example():
    m = phi_matrix((2, 1))
    assert m.entry((3,), ((2,), (1,))) == 0
    assert m.entry((3,), ((1, 1), (1,))) == 0
    assert m.entry((2, 1), ((2,), (1,))) == 1
    assert m.entry((2, 1), ((1, 1), (1,))) == 0
    assert m.entry((1, 1, 1), ((1, 1), (1,))) == 1


def test_shape_row_has_unit_coefficient():
    # the row of the indexing shape marks exactly the tuple of single parts
    for n in range(1, 7):
        for shape in integer_partitions(n):
            m = phi_matrix(shape)
            row = m.entries[m.rows.index(shape)]
            parts_tuple = tuple((p,) for p in shape)
            for j, t in enumerate(m.cols):
                assert row[j] == (1 if t == parts_tuple else 0)


def test_dual_phi_examples():
    m = dual_phi_matrix((1, 1, 1))
    assert len(m.cols) == 1
    assert m.entry((1, 1, 1), (((1,), (1,), (1,)))) == 1
    m = dual_phi_matrix((2, 1))
    assert m.entry((2, 1), ((2,), (1,))) == 1
    assert m.entry((1, 1, 1), ((1, 1), (1,))) == 1
    assert m.entry((3,), ((2,), (1,))) == 0


def test_concat_sorted():
    assert concat_sorted(((2, 1), (3,))) == (3, 2, 1)
    assert concat_sorted(((1, 1), (1,))) == (1, 1, 1)


def test_triangularity_up_to_8():
    rep = check_triangularity(8)
    assert rep.ok
    # and the vanishing criterion is exactly the merge order
    for n in range(1, 7):
        for shape in integer_partitions(n):
            m = phi_matrix(shape)
            for i, mu in enumerate(m.rows):
                nonzero = any(m.entries[i])
                assert nonzero == preceq(mu, shape)


def test_column_sums_are_one():
    assert check_column_sums(8).ok


def test_json_layout():
    doc = phi_matrix((2, 1)).to_json()
    assert doc["rows"] == ["3", "2,1", "1,1,1"]
    assert doc["cols"] == ["2;1", "1,1;1"]
    assert doc["matrix"] == [[0, 0], [1, 0], [0, 1]]
