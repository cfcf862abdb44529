"""Coalgebra, bialgebra and antipode structure on top of a StructureAlgebra.

``comult[i]`` is a tuple of ``(j, k, c)`` meaning Delta(b_i) = sum c b_j (x) b_k.
The antipode is a dense matrix whose column i holds S(b_i).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .algebra import (
    BilinearForm,
    StructureAlgebra,
    functional_form,
    left_regular_matrix,
    multiply,
    right_regular_matrix,
    verify_algebra,
)
from .errors import (
    DimensionMismatch,
    NoIntegral,
    NormalizationFailure,
    NotSemisimpleHopf,
    NotUnimodular,
)
from .field import GR, ONE, ZERO
from .report import Verdict


@dataclass(frozen=True, eq=False)
class HopfData:
    algebra: StructureAlgebra
    comult: tuple
    counit: tuple
    antipode: tuple
    name: str = "H"
    reps: tuple = ()  # ((name, (matrix per basis element, ...)), ...)

    @classmethod
    def build(cls, algebra, comult_entries, counit, antipode, name="H", reps=None):
        """``comult_entries`` are ``(i, j, k, c)``; ``antipode`` is a dense matrix (column i = S(b_i))."""
        n = algebra.dim
        acc = [{} for _ in range(n)]
        for i, j, k, c in comult_entries:
            if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                raise DimensionMismatch(f"comultiplication index out of range: {(i, j, k)}")
            acc[i][(j, k)] = acc[i].get((j, k), ZERO) + GR.coerce(c)
        comult = tuple(tuple(sorted((j, k, c) for (j, k), c in d.items() if c)) for d in acc)
        counit = tuple(GR.coerce(c) for c in counit)
        S = tuple(tuple(GR.coerce(x) for x in row) for row in antipode)
        if len(counit) != n or len(S) != n or any(len(r) != n for r in S):
            raise DimensionMismatch("counit/antipode shape does not match the algebra dimension")
        rep_items = tuple(
            (rname, tuple(tuple(tuple(GR.coerce(x) for x in row) for row in M) for M in mats))
            for rname, mats in (reps or {}).items()
        )
        return cls(algebra, comult, counit, S, name, rep_items)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def labels(self):
        return self.algebra.labels

    def comult_entries(self):
        for i, terms in enumerate(self.comult):
            for j, k, c in terms:
                yield i, j, k, c

    def rep(self, name):
        for rname, mats in self.reps:
            if rname == name:
                return [[list(row) for row in M] for M in mats]
        raise KeyError(name)

    def rep_names(self):
        return [r for r, _ in self.reps]

    def with_comult(self, i, terms) -> "HopfData":
        """Copy with Delta(b_i) replaced by ``terms`` (fault injection)."""
        comult = list(self.comult)
        comult[i] = tuple(sorted((j, k, GR.coerce(c)) for j, k, c in terms if GR.coerce(c)))
        return HopfData(self.algebra, tuple(comult), self.counit, self.antipode, self.name, self.reps)

    # linear maps -------------------------------------------------------------

    def coproduct(self, x) -> dict:
        out = {}
        for i, a in enumerate(x):
            if not a:
                continue
            for j, k, c in self.comult[i]:
                out[(j, k)] = out.get((j, k), ZERO) + a * c
        return {key: v for key, v in out.items() if v}

    def eps(self, x):
        return sum((a * e for a, e in zip(x, self.counit) if a), ZERO)

    def S(self, x):
        return linalg.mat_vec(self.antipode, x)

    def antipode_matrix(self):
        return [list(r) for r in self.antipode]


def _tensor_product_algebra(t1: dict, t2: dict, A: StructureAlgebra) -> dict:
    """Product in A (x) A of two sparse tensors keyed by (j, k)."""
    out = {}
    for (j1, k1), c1 in t1.items():
        for (j2, k2), c2 in t2.items():
            c = c1 * c2
            for a, ca in A.mult[j1][j2]:
                cca = c * ca
                for b, cb in A.mult[k1][k2]:
                    key = (a, b)
                    out[key] = out.get(key, ZERO) + cca * cb
    return {k: v for k, v in out.items() if v}


def _first_bad(H, pred):
    for i in range(H.dim):
        if not pred(i):
            return i
    return None


def verify_hopf(H: HopfData) -> Verdict:
    """Itemised Hopf axiom suite, exact on every basis element (or pair)."""
    A = H.algebra
    n = H.dim
    v = Verdict()
    v.extend(verify_algebra(A), prefix="algebra.")
    lab = A.labels
    basis = [A.basis(i) for i in range(n)]

    # coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta
    def coassoc(i):
        left, right = {}, {}
        for j, k, c in H.comult[i]:
            for j2, k2, c2 in H.comult[j]:
                key = (j2, k2, k)
                left[key] = left.get(key, ZERO) + c * c2
            for j2, k2, c2 in H.comult[k]:
                key = (j, j2, k2)
                right[key] = right.get(key, ZERO) + c * c2
        return {a: b for a, b in left.items() if b} == {a: b for a, b in right.items() if b}

    bad = _first_bad(H, coassoc)
    v.add("coassociativity", bad is None, "" if bad is None else f"fails on {lab[bad]}", None if bad is None else (bad,))

    def counit_ax(i):
        left, right = [ZERO] * n, [ZERO] * n
        for j, k, c in H.comult[i]:
            left[k] = left[k] + H.counit[j] * c
            right[j] = right[j] + H.counit[k] * c
        return left == basis[i] and right == basis[i]

    bad = _first_bad(H, counit_ax)
    v.add("counit", bad is None, "" if bad is None else f"fails on {lab[bad]}")

    deltas = [H.coproduct(b) for b in basis]
    one_one = {}
    for j, cj in enumerate(A.unit):
        for k, ck in enumerate(A.unit):
            if cj and ck:
                one_one[(j, k)] = cj * ck
    unit_ok = H.coproduct(list(A.unit)) == one_one
    mult_bad = None
    for i in range(n):
        for j in range(n):
            prod = [ZERO] * n
            for k, c in A.mult[i][j]:
                prod[k] = c
            if H.coproduct(prod) != _tensor_product_algebra(deltas[i], deltas[j], A):
                mult_bad = (i, j)
                break
        if mult_bad:
            break
    detail = ""
    if not unit_ok:
        detail = "Delta(1) != 1 (x) 1"
    elif mult_bad:
        detail = f"Delta({lab[mult_bad[0]]}*{lab[mult_bad[1]]}) != Delta({lab[mult_bad[0]]})Delta({lab[mult_bad[1]]})"
    v.add("comultiplication multiplicative", unit_ok and mult_bad is None, detail, mult_bad)

    eps_bad = None
    if H.eps(list(A.unit)) != ONE:
        eps_bad = "unit"
    else:
        for i in range(n):
            for j in range(n):
                e = sum((c * H.counit[k] for k, c in A.mult[i][j]), ZERO)
                if e != H.counit[i] * H.counit[j]:
                    eps_bad = f"{lab[i]}*{lab[j]}"
                    break
            if eps_bad:
                break
    v.add("counit multiplicative", eps_bad is None, "" if eps_bad is None else f"fails on {eps_bad}")

    Scols = [H.S(b) for b in basis]

    def antipode_ax(i):
        left, right = [ZERO] * n, [ZERO] * n
        for j, k, c in H.comult[i]:
            left = _axpy(left, c, multiply(Scols[j], basis[k], A))
            right = _axpy(right, c, multiply(basis[j], Scols[k], A))
        target = [H.counit[i] * u for u in A.unit]
        return left == target and right == target

    bad = _first_bad(H, antipode_ax)
    v.add("antipode", bad is None, "" if bad is None else f"S(h1)h2 = eps(h)1 = h1S(h2) fails on {lab[bad]}")

    anti_bad = antiautomorphism_failure(H.antipode_matrix(), A)
    v.add("antipode antiautomorphism", anti_bad is None, anti_bad or "")

    S2 = linalg.matmul(H.antipode_matrix(), H.antipode_matrix())
    v.add("antipode involutive", S2 == linalg.identity(n), "" if S2 == linalg.identity(n) else "S^2 != id")
    return v


def _axpy(acc, c, x):
    return [a + c * b if b else a for a, b in zip(acc, x)]


def antiautomorphism_failure(S_matrix, A: StructureAlgebra):
    """``None`` if S(ab) = S(b)S(a) on all basis pairs and S(1) = 1, else a description."""
    n = A.dim
    cols = [[S_matrix[r][i] for r in range(n)] for i in range(n)]
    if linalg.mat_vec(S_matrix, list(A.unit)) != list(A.unit):
        return "S(1) != 1"
    for i in range(n):
        for j in range(n):
            sab = [ZERO] * n
            for k, c in A.mult[i][j]:
                sab = _axpy(sab, c, cols[k])
            if sab != multiply(cols[j], cols[i], A):
                return f"S({A.labels[i]}*{A.labels[j]}) != S({A.labels[j]})S({A.labels[i]})"
    return None


# integrals and the regular character -------------------------------------


@dataclass(frozen=True)
class Integral:
    lambda_H: list


def two_sided_integral(H: HopfData) -> Integral:
    """The two-sided integral with eps = 1, from the exact system h*L = eps(h)*L."""
    A = H.algebra
    n = H.dim
    rows = []
    for h in range(n):
        L = left_regular_matrix(A.basis(h), A)
        for i in range(n):
            L[i][i] = L[i][i] - H.counit[h]
        rows.extend(r for r in L if any(r))
    space = linalg.nullspace(rows, n)
    if len(space) != 1:
        raise NoIntegral(f"space of left integrals has dimension {len(space)}, expected 1")
    lam = space[0]
    e = H.eps(lam)
    if not e:
        raise NotSemisimpleHopf("eps vanishes on the integral (Maschke obstruction)")
    lam = [x / e for x in lam]
    for h in range(n):
        R = right_regular_matrix(A.basis(h), A)
        if linalg.mat_vec(R, lam) != [H.counit[h] * x for x in lam]:
            raise NotUnimodular(f"left integral is not a right integral (fails for {A.labels[h]})")
    return Integral(lam)


@dataclass(frozen=True)
class RegularCharacter:
    lambda_star: list

    def __call__(self, x):
        return sum((a * t for a, t in zip(x, self.lambda_star) if a), ZERO)


def regular_character(H: HopfData, integral: Integral | None = None) -> RegularCharacter:
    """lambda(b_i) = Tr(L_{b_i}); checked against lambda(1) = dim and lambda(Lambda) = 1."""
    A = H.algebra
    values = [linalg.trace(left_regular_matrix(A.basis(i), A)) for i in range(H.dim)]
    lam = RegularCharacter(values)
    if lam(list(A.unit)) != H.dim:
        raise NormalizationFailure(f"lambda(1) = {lam(list(A.unit))}, expected {H.dim}")
    if integral is None:
        integral = two_sided_integral(H)
    if lam(integral.lambda_H) != ONE:
        raise NormalizationFailure(f"lambda(Lambda) = {lam(integral.lambda_H)}, expected 1")
    return lam


def lambda_form(H: HopfData, lam: RegularCharacter | None = None) -> BilinearForm:
    """<a|b> = lambda(ab)."""
    lam = lam or regular_character(H)
    return functional_form(H.algebra, lam.lambda_star, "lambda")


# Sweedler powers -----------------------------------------------------------


def sweedler_matrix(H: HopfData, m: int, bracket: str = "right"):
    """Matrix of h -> h^[m] (column i = b_i^[m]).

    ``bracket="right"`` peels Delta off the last leg, ``"left"`` off the first;
    coassociativity makes the two agree.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    A = H.algebra
    n = H.dim
    cols = [A.basis(i) for i in range(n)]
    for _ in range(m - 1):
        new = []
        for i in range(n):
            acc = [ZERO] * n
            for j, k, c in H.comult[i]:
                if bracket == "right":
                    prod = multiply(A.basis(j), cols[k], A)
                else:
                    prod = multiply(cols[j], A.basis(k), A)
                acc = _axpy(acc, c, prod)
            new.append(acc)
        cols = new
    return linalg.transpose(cols)


def sweedler_power(h, m: int, H: HopfData, bracket: str = "right"):
    """h^[m] = sum h_1 h_2 ... h_m."""
    return linalg.mat_vec(sweedler_matrix(H, m, bracket), list(h))


def integral_dual_bases_identity(H: HopfData, integral: Integral | None = None, lam: RegularCharacter | None = None) -> Verdict:
    """Check that {S(Lambda_1), Lambda_2} are dual bases for <a|b> = lambda(ab)."""
    A = H.algebra
    n = H.dim
    integral = integral or two_sided_integral(H)
    lam = lam or regular_character(H, integral)
    form = lambda_form(H, lam)
    v = Verdict()
    v.add("lambda-form symmetric", form.is_symmetric())
    v.add("lambda-form nondegenerate", form.is_nondegenerate())
    delta = H.coproduct(integral.lambda_H)
    bad = None
    for c in range(n):
        cvec = A.basis(c)
        acc = [ZERO] * n
        for (j, k), coef in delta.items():
            w = lam(multiply(H.S(A.basis(j)), cvec, A))
            if w:
                acc[k] = acc[k] + coef * w
        if acc != cvec:
            bad = c
            break
    v.add(
        "dual-bases reproduction",
        bad is None,
        "" if bad is None else f"sum lambda(S(L1)c)L2 != c for c = {A.labels[bad]}",
    )
    return v
