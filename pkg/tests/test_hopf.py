import re
from fractions import Fraction

import pytest

from fshopf import linalg
from fshopf.constructions import group_preset, presets, q8_quaternion_rep
from fshopf.errors import NotSemisimpleHopf
from fshopf.field import GR, ZERO
from fshopf.hopf import (
    integral_dual_bases_identity,
    regular_character,
    sweedler_matrix,
    sweedler_power,
    two_sided_integral,
    verify_hopf,
)
from fshopf.indicators import chi2_decompose, rep_character
from fshopf.wedderburn import decompose

HOPF_PRESETS = ["c2", "c4", "s3", "d4", "q8", "kac16"]
HALF = GR(Fraction(1, 2))


@pytest.mark.parametrize("name", HOPF_PRESETS)
def test_presets_are_hopf_algebras(name):
    v = verify_hopf(presets(name))
    assert v.ok, v.lines()


def test_sweedler4_is_hopf_but_not_involutive():
    v = verify_hopf(presets("sweedler4"))
    assert v["coassociativity"].passed and v["antipode"].passed
    assert not v["antipode involutive"].passed


def test_kac16_sign_flip_is_detected():
    H = presets("kac16")
    a = H.labels.index("a")
    terms = list(H.comult[a])
    j, k, c = terms[-1]
    terms[-1] = (j, k, -c)
    v = verify_hopf(H.with_comult(a, terms))
    assert not v.ok
    assert v.failures


@pytest.mark.parametrize("name", ["c2", "s3", "q8", "kac16"])
def test_integral_is_normalized_group_sum(name):
    H = presets(name)
    assert two_sided_integral(H).lambda_H == [GR(1) / H.dim] * H.dim


def test_sweedler4_has_no_normalized_integral():
    with pytest.raises(NotSemisimpleHopf):
        two_sided_integral(presets("sweedler4"))


@pytest.mark.parametrize("name", ["s3", "kac16"])
def test_regular_character(name):
    H = presets(name)
    lam = regular_character(H)
    assert lam.lambda_star == [GR(H.dim)] + [ZERO] * (H.dim - 1)
    D = decompose(H.algebra)
    for j in range(H.dim):
        assert lam.lambda_star[j] == sum((n * chi[j] for n, chi in zip(D.degrees, D.characters)), ZERO)


@pytest.mark.parametrize("name", ["c4", "s3", "q8"])
@pytest.mark.parametrize("m", [1, 2, 3, 5])
def test_group_sweedler_power_is_group_power(name, m):
    H, G = presets(name), group_preset(name)
    P = sweedler_matrix(H, m)
    for g in range(G.order):
        assert [P[r][g] for r in range(G.order)] == H.algebra.basis(G.power(g, m))


def test_kac16_sweedler_square_of_a():
    H = presets("kac16")
    A = H.algebra
    got = sweedler_power(A.basis(A.index("a")), 2, H)
    expected = A.element({"a2": HALF, "a2g": HALF, "ab": HALF, "abg": -HALF})
    assert got == expected


@pytest.mark.parametrize("name", ["s3", "kac16"])
def test_bracketing_independence(name):
    H = presets(name)
    for m in (2, 3, 4):
        assert sweedler_matrix(H, m, "right") == sweedler_matrix(H, m, "left")


@pytest.mark.parametrize("name", HOPF_PRESETS)
def test_integral_dual_bases_identity(name):
    assert integral_dual_bases_identity(presets(name)).ok


# independent route for chi(h_1 h_2) on the 2-dim kac16 modules ---------------


def kron(X, Y):
    n, m = len(X), len(Y)
    return [[X[i // m][j // m] * Y[i % m][j % m] for j in range(n * m)] for i in range(n * m)]


def swap(n):
    P = linalg.zeros(n * n)
    for i in range(n):
        for j in range(n):
            P[i * n + j][j * n + i] = GR(1)
    return P


def mpow(M, k):
    out = linalg.identity(len(M))
    for _ in range(k):
        out = linalg.matmul(out, M)
    return out


@pytest.mark.parametrize("sign", [1, -1])
def test_kac16_chi2_matches_kronecker_oracle(sign):
    H = presets("kac16")
    D = decompose(H.algebra)
    rho = q8_quaternion_rep(sign)
    ix = {lab: i for i, lab in enumerate(H.labels)}

    def R(lab):
        return rho[ix[lab]]

    def tensor(terms):
        acc = linalg.zeros(4)
        for c, x, y in terms:
            acc = linalg.mat_add(acc, kron(R(x), R(y)), GR.coerce(c))
        return acc

    # generator coproducts, taken from the printed formulas
    da = tensor([(HALF, "a", "a"), (HALF, "ag", "a"), (HALF, "a", "b"), (-HALF, "ag", "b")])
    db = tensor([(HALF, "b", "b"), (HALF, "bg", "b"), (HALF, "b", "a"), (-HALF, "bg", "a")])
    dg = kron(R("g"), R("g"))
    P = swap(2)
    f = []
    for lab in H.labels:
        a_exp, b, g = re.fullmatch(r"(?:a(\d?))?(b?)(g?)", "" if lab == "e" else lab).groups()
        i = 0 if a_exp is None else int(a_exp or 1)
        j, k = len(b), len(g)
        M = linalg.matmul(linalg.matmul(mpow(da, i), mpow(db, j)), mpow(dg, k))
        f.append(linalg.trace(linalg.matmul(P, M)))
    idx = [list(c) for c in D.characters].index(rep_character(rho))
    assert chi2_decompose(H, D, idx).functional == f
