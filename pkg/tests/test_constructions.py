import re

import pytest
from hypothesis import given, settings, strategies as st

from fshopf import linalg
from fshopf.constructions import (
    FiniteGroup,
    dihedral_group,
    group_algebra,
    group_preset,
    presets,
    q8_times_c2,
    root_counts,
    verify_eq1,
)
from fshopf.errors import InvalidGroupTable
from fshopf.field import GR, I, ONE
from fshopf.wedderburn import decompose


def test_invalid_tables():
    with pytest.raises(InvalidGroupTable):
        FiniteGroup.from_table(["x", "y"], [[0, 0], [1, 1]])
    with pytest.raises(InvalidGroupTable):
        FiniteGroup.from_table(["x", "y", "z"], [[0, 2, 1], [2, 1, 0], [1, 0, 2]])
    # a Latin square with identity that is not associative (order 5 loop)
    loop = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(InvalidGroupTable):
        FiniteGroup.from_table(list("abcde"), loop)


def test_dihedral_relations():
    G = dihedral_group(4)
    r, s = G.labels.index("r"), G.labels.index("s")
    assert G.power(r, 4) == G.identity and G.power(s, 2) == G.identity
    assert G.mul(s, r) == G.mul(G.inverse[r], s)
    assert G.involution_count() == 5


def _matrix_model(label):
    """Q8 x C2 as (2x2 matrix over Z[i], sign)."""
    A = [[I, GR(0)], [GR(0), -I]]
    B = linalg.as_matrix([[0, 1], [-1, 0]])
    a_exp, b, g = re.fullmatch(r"(?:a(\d?))?(b?)(g?)", "" if label == "e" else label).groups()
    i = 0 if a_exp is None else int(a_exp or 1)
    M = linalg.identity(2)
    for _ in range(i):
        M = linalg.matmul(M, A)
    if b:
        M = linalg.matmul(M, B)
    return (tuple(map(tuple, M)), -1 if g else 1)


def test_kac16_algebra_is_group_algebra_of_matrix_model():
    H = presets("kac16")
    G = q8_times_c2()
    assert G.order == 16 and len(set(G.labels)) == 16
    model = {lab: _matrix_model(lab) for lab in G.labels}
    assert len(set(model.values())) == 16
    back = {v: k for k, v in model.items()}
    for x in G.labels:
        for y in G.labels:
            (M, s), (N, t) = model[x], model[y]
            prod = (tuple(map(tuple, linalg.matmul([list(r) for r in M], [list(r) for r in N]))), s * t)
            k = H.labels.index(back[prod])
            assert H.algebra.mult[H.labels.index(x)][H.labels.index(y)] == ((k, ONE),)
    assert H.algebra == group_algebra(G).algebra


def test_root_count_examples():
    s3 = group_preset("s3")
    assert root_counts(s3, 2).counts[s3.identity] == 4
    q8 = group_preset("q8")
    t = root_counts(q8, 2).counts
    assert t[q8.identity] == 2 and t[q8.labels.index("a2")] == 6


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["c4", "s3", "d4", "q8"]), st.integers(1, 12))
def test_root_counts_are_class_functions(name, m):
    G = group_preset(name)
    t = root_counts(G, m).counts
    assert sum(t) == G.order
    for cls in G.conjugacy_classes():
        assert len({t[g] for g in cls}) == 1


@pytest.mark.parametrize("name", ["c2", "c4", "s3", "d4", "q8"])
def test_eq1(name):
    H = presets(name)
    D = decompose(H.algebra)
    for m in range(1, 7):
        assert verify_eq1(group_preset(name), H, D, m).ok


def test_preset_fields():
    assert presets("s3").algebra.field == "Q"
    assert presets("kac16").algebra.field == "Qi"
    with pytest.raises(KeyError):
        presets("nope")
