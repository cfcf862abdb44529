import pytest
from hypothesis import given, settings, strategies as st

from fshopf import linalg
from fshopf.algebra import trace_form
from fshopf.constructions import (
    group_preset,
    involution_from_form,
    matrix_units_algebra,
    presets,
    symplectic_involution,
    transpose_involution,
)
from fshopf.errors import NotInvolution, ReducibleRepresentation
from fshopf.field import GR, ZERO
from fshopf.hopf import lambda_form, sweedler_matrix
from fshopf.indicators import (
    albert_classify,
    block_weighted_form,
    chi2_decompose,
    indicator_report,
    invariant_form_on_module,
    mu2_via_form,
    nu_m,
    self_duality,
    trace_via_matrix_units,
)
from fshopf.wedderburn import decompose

from oracles import group_inner

GROUPS = ["c2", "c4", "s3", "d4", "q8"]


def data(name):
    H = presets(name)
    return H, decompose(H.algebra)


def ints(*xs):
    return [GR(x) for x in xs]


def test_nu_examples():
    H, D = data("s3")
    assert nu_m(H, D, 1) == ints(1, 0, 0)
    assert nu_m(H, D, 2) == ints(1, 1, 1)
    assert nu_m(*data("c4"), 2) == ints(1, 0, 1, 0)
    assert nu_m(*data("q8"), 2) == ints(1, 1, 1, 1, -1)


def test_kac16_regression_values():
    # computed once by this implementation and frozen; see the README
    H, D = data("kac16")
    assert nu_m(H, D, 2) == ints(1, 1, 1, 1, 1, 0, 0, 1, -1, 1)
    assert linalg.trace(H.antipode_matrix()) == 6


@pytest.mark.parametrize("name", GROUPS)
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_nu_m_matches_group_average(name, m):
    H, D = data(name)
    G = group_preset(name)
    expected = []
    for chi in D.characters:
        total = ZERO
        for g in range(G.order):
            x = G.identity
            for _ in range(m):
                x = G.table[x][g]
            total = total + chi[x]
        expected.append(total / G.order)
    assert nu_m(H, D, m) == expected


@pytest.mark.parametrize("name", GROUPS + ["kac16"])
def test_mu2_is_form_independent(name):
    H, D = data(name)
    A, S = H.algebra, H.antipode_matrix()
    nu2 = nu_m(H, D, 2)
    weights = [GR(k + 1) for k in range(D.d)]
    for form in (lambda_form(H), trace_form(A), lambda_form(H).scaled(3), block_weighted_form(A, D, weights)):
        assert mu2_via_form(A, S, D, form) == nu2


@pytest.mark.parametrize("name", GROUPS + ["kac16"])
def test_self_dual_iff_nonzero_indicator(name):
    H, D = data(name)
    flags = self_duality(D, H.antipode_matrix())
    assert flags == [x != 0 for x in nu_m(H, D, 2)]


def test_albert_diagonal_form():
    D3 = linalg.as_matrix([[1, 0, 0], [0, 2, 0], [0, 0, 3]])
    r = albert_classify(involution_from_form(3, D3), 3)
    assert r.form.kind == "symmetric"
    assert r.form.gram[0][0] == 1
    assert r.trace_S == 3 and r.verdict.ok


def test_albert_symplectic_m2():
    r = albert_classify(symplectic_involution(2), 4)
    assert r.form.kind == "skew" and r.trace_S == -4 and r.unit_sum == -4


def test_albert_rejects_non_involution():
    n = 2
    U = linalg.identity(n * n)
    U[0][0] = GR(2)
    with pytest.raises(NotInvolution):
        albert_classify(U, n)


@pytest.mark.parametrize("S, sign", [(transpose_involution(2), 1), (symplectic_involution(1), -1)])
def test_mu2_on_matrix_algebra_matches_form_type(S, sign):
    A = matrix_units_algebra(2)
    D = decompose(A)
    assert mu2_via_form(A, S, D, trace_form(A)) == [GR(sign)]


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 3).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(-5, 5), min_size=n**4, max_size=n**4))))
def test_trace_via_matrix_units_is_trace(data):
    n, flat = data
    N = n * n
    U = [[GR(flat[r * N + c]) for c in range(N)] for r in range(N)]
    # sum tr(U(e_lm) e_ml) picks the diagonal entries with (p, q) = (l, m)
    assert trace_via_matrix_units(U, n) == linalg.trace(U)


def test_invariant_forms_on_fixture_modules():
    H, _ = data("s3")
    assert invariant_form_on_module(H, H.rep("std2")).kind == "symmetric"
    sign = [[[GR(-1) if "s" in lab else GR(1)]] for lab in H.labels]
    assert invariant_form_on_module(H, sign).kind == "symmetric"
    Hq, _ = data("q8")
    fc = invariant_form_on_module(Hq, Hq.rep("quat2"))
    assert fc.kind == "skew" and fc.gram == linalg.as_matrix([[0, 1], [-1, 0]])


def test_invariant_forms_kac16():
    H, _ = data("kac16")
    assert invariant_form_on_module(H, H.rep("quat2_g+")).kind == "skew"
    assert invariant_form_on_module(H, H.rep("quat2_g-")).kind == "symmetric"


def test_non_self_dual_module_has_no_form():
    H, _ = data("c4")
    rho = [[[GR(0, 1) ** k]] for k in range(4)]
    assert invariant_form_on_module(H, rho) is None


def test_reducible_module_raises():
    H, _ = data("s3")
    triv2 = [linalg.identity(2) for _ in range(H.dim)]
    with pytest.raises(ReducibleRepresentation):
        invariant_form_on_module(H, triv2)


@pytest.mark.parametrize("name", GROUPS)
def test_chi2_coefficients_for_groups(name):
    H, D = data(name)
    G = group_preset(name)
    for i, chi in enumerate(D.characters):
        r = chi2_decompose(H, D, i)
        assert r.status == "in_span" and r.integral
        f = [chi[G.power(g, 2)] for g in range(G.order)]
        assert r.functional == f
        assert r.coefficients == [group_inner(G, f, psi) for psi in D.characters]


def test_chi2_s3_standard():
    H, D = data("s3")
    r = chi2_decompose(H, D, 2)
    # chi(g^2) for the 2-dim character is chi_0 - chi_1 + chi_2
    assert r.coefficients == ints(1, -1, 1)
    assert r.mixed_sign


def test_kac16_chi2_status_agrees_with_class_function_test():
    H, D = data("kac16")
    A = H.algebra
    P2 = sweedler_matrix(H, 2)
    for i in range(D.d):
        r = chi2_decompose(H, D, i, P2)
        f = r.functional
        central = all(
            sum((c * f[k] for k, c in A.mult[x][y]), ZERO) == sum((c * f[k] for k, c in A.mult[y][x]), ZERO)
            for x in range(A.dim)
            for y in range(A.dim)
        )
        assert r.in_span == central


def test_indicator_report_records():
    rep = indicator_report(presets("q8"), ms=(1, 2, 3))
    assert rep.ok
    assert rep.trace_S == 2
    assert [r.nu[1] for r in rep.records] == ints(1, 0, 0, 0, 0)
    assert rep.forms["quat2"][0].kind == "skew"
