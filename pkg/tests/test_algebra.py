from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fshopf import linalg
from fshopf.algebra import (
    add,
    casimir_element,
    center_basis,
    dual_basis,
    functional_form,
    left_regular_matrix,
    minimal_polynomial,
    multiply,
    regular_trace,
    scale,
    trace_form,
    verify_algebra,
)
from fshopf.constructions import group_preset, matrix_units_algebra, presets, q8_times_c2
from fshopf.errors import DegenerateForm
from fshopf.field import GR, ONE, ZERO, Polynomial
from fshopf.hopf import lambda_form

from oracles import conjugacy_class_count, eigenvalue_set, to_sympy


def s3():
    return presets("s3").algebra


def test_multiply_group_elements():
    A = s3()
    r, s = A.basis(A.index("r")), A.basis(A.index("s"))
    assert multiply(r, s, A) == A.basis(A.index("rs"))
    assert multiply(s, r, A) == A.basis(A.index("r2s"))
    half = GR(Fraction(1, 2))
    e = scale(half, add(A.basis(0), s))
    assert multiply(e, e, A) == e


def test_multiply_matrix_units():
    A = matrix_units_algebra(2)
    e12, e21, e11 = A.basis(1), A.basis(2), A.basis(0)
    assert multiply(e12, e21, A) == e11
    assert multiply(e21, e21, A) == A.zero()


def test_verify_algebra_presets():
    for name in ("c2", "s3", "q8", "kac16"):
        assert verify_algebra(presets(name).algebra).ok
    assert verify_algebra(matrix_units_algebra(3)).ok


def test_verify_algebra_detects_perturbation():
    A = s3()
    r, s, rs = A.index("r"), A.index("s"), A.index("rs")
    broken = A.with_product(r, s, [(rs, 1), (0, 1)])
    v = verify_algebra(broken)
    assert not v["associativity"].passed
    assert len(v["associativity"].witness) == 3


def test_left_regular_matrix():
    A = s3()
    assert left_regular_matrix(list(A.unit), A) == linalg.identity(6)
    total = [ONE] * 6
    assert linalg.trace(left_regular_matrix(total, A)) == 6
    assert regular_trace(total, A) == 6
    C4 = presets("c4").algebra
    g = left_regular_matrix(C4.basis(1), C4)
    assert linalg.matmul(linalg.matmul(g, g), linalg.matmul(g, g)) == linalg.identity(4)
    assert linalg.trace(g) == 0


@pytest.mark.parametrize("name", ["c4", "s3", "d4", "q8"])
def test_center_dimension_is_class_count(name):
    assert len(center_basis(presets(name).algebra)) == conjugacy_class_count(group_preset(name))


def test_center_kac16_and_matrix_algebra():
    assert len(center_basis(presets("kac16").algebra)) == conjugacy_class_count(q8_times_c2())
    assert len(center_basis(matrix_units_algebra(2))) == 1


def test_center_elements_commute():
    A = presets("d4").algebra
    for z in center_basis(A):
        for j in range(A.dim):
            assert multiply(z, A.basis(j), A) == multiply(A.basis(j), z, A)


def test_dual_basis_c2_trace_form():
    A = presets("c2").algebra
    form = trace_form(A)
    assert form.gram == ((2, 0), (0, 2))
    pair = dual_basis(form)
    assert pair.b_basis[0] == [GR(Fraction(1, 2)), ZERO]


@pytest.mark.parametrize("name", ["c2", "s3", "q8"])
def test_dual_basis_reproduces(name):
    H = presets(name)
    A = H.algebra
    form = lambda_form(H)
    pair = dual_basis(form)
    for r, a in enumerate(pair.a_basis):
        for j, b in enumerate(pair.b_basis):
            assert form(a, b) == (1 if r == j else 0)
    for c in range(A.dim):
        x = A.basis(c)
        rebuilt = A.zero()
        for a, b in zip(pair.a_basis, pair.b_basis):
            rebuilt = add(rebuilt, scale(form(x, b), a))
        assert rebuilt == x


def test_degenerate_form_raises():
    A = presets("c2").algebra
    with pytest.raises(DegenerateForm):
        dual_basis(functional_form(A, [1, 1]))


invertible = st.lists(st.lists(st.integers(-2, 2), min_size=6, max_size=6), min_size=6, max_size=6).filter(
    lambda M: linalg.rank(linalg.as_matrix(M)) == 6
)


@settings(max_examples=20, deadline=None)
@given(invertible)
def test_casimir_is_basis_independent(P):
    form = trace_form(s3())
    basis = [[GR(P[r][c]) for r in range(6)] for c in range(6)]
    assert casimir_element(dual_basis(form, basis)) == casimir_element(dual_basis(form))


def test_casimir_scales_inversely():
    form = trace_form(s3())
    c1 = casimir_element(dual_basis(form))
    c2 = casimir_element(dual_basis(form.scaled(2)))
    assert c2 == [x / 2 for x in c1]


def test_casimir_of_identity_gram():
    A = presets("c2").algebra
    form = functional_form(A, [1, 0])
    # gram = [[1, 0], [0, 1]]: e(x)e + g(x)g
    assert casimir_element(dual_basis(form)) == [ONE, ZERO, ZERO, ONE]


def test_minimal_polynomial_examples():
    A = presets("c2").algebra
    x = Polynomial.x()
    assert minimal_polynomial(list(A.unit), A) == x - ONE
    e = scale(GR(Fraction(1, 2)), add(A.basis(0), A.basis(1)))
    assert minimal_polynomial(e, A) == x * x - x


@pytest.mark.parametrize("name, label", [("s3", "s"), ("s3", "r"), ("q8", "a"), ("c4", "g")])
def test_minimal_polynomial_against_eigenvalues(name, label):
    A = presets(name).algebra
    y = A.basis(A.index(label))
    p = minimal_polynomial(y, A)
    L = left_regular_matrix(y, A)
    acc = linalg.zeros(A.dim)
    for c in reversed(p.coeffs):
        acc = linalg.mat_add(linalg.matmul(acc, L), linalg.identity(A.dim), c)
    assert linalg.is_zero_matrix(acc)
    import sympy

    lam = sympy.Symbol("lam")
    roots = set(sympy.roots(sympy.Poly([to_sympy(c) for c in reversed(p.coeffs)], lam), multiple=False))
    assert {sympy.nsimplify(r) for r in roots} == eigenvalue_set(L)


def test_class_sum_minimal_polynomial():
    A = s3()
    T = A.element({"s": 1, "rs": 1, "r2s": 1})
    p = minimal_polynomial(T, A)
    x = Polynomial.x()
    assert p == x * (x - GR(3)) * (x + GR(3))
