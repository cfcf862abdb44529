"""Frobenius-Schur indicators and the checks built around them.

Indicators nu_m from Sweedler powers of the integral, the trace-form
version mu_2 for any algebra with involution, the antipode trace identity,
self-duality, classification of involutions of M_n, invariant forms on
supplied representations, and the span test for chi o (h -> h^[2]).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .algebra import (
    BilinearForm,
    StructureAlgebra,
    dual_basis,
    left_regular_matrix,
    multiply,
)
from .errors import (
    DegenerateForm,
    NoAdjointForm,
    NotAssociativeForm,
    NotInvolution,
    NotRepresentation,
    ReducibleRepresentation,
    ZeroNormalizer,
)
from .field import GR, ONE, ZERO, format_scalar
from .hopf import (
    HopfData,
    Integral,
    antiautomorphism_failure,
    lambda_form,
    regular_character,
    sweedler_matrix,
    two_sided_integral,
)
from .report import Verdict
from .wedderburn import BlockDecomposition, antiauto_block_permutation, decompose

INDICATOR_VALUES = (GR(0), GR(1), GR(-1))


def nu_m(H: HopfData, decomp: BlockDecomposition, m: int, integral: Integral | None = None) -> list:
    """nu_m(chi_i) = chi_i(Lambda^[m])."""
    integral = integral or two_sided_integral(H)
    power = linalg.mat_vec(sweedler_matrix(H, m), integral.lambda_H)
    return [decomp.chi(i, power) for i in range(decomp.d)]


def _require_involution(S_matrix, A: StructureAlgebra):
    fail = antiautomorphism_failure(S_matrix, A)
    if fail is not None:
        raise NotInvolution(f"not an antiautomorphism: {fail}")
    if linalg.matmul(S_matrix, S_matrix) != linalg.identity(A.dim):
        raise NotInvolution("S^2 != id")


def mu2_via_form(A: StructureAlgebra, S_matrix, decomp: BlockDecomposition, form: BilinearForm) -> list:
    """mu_2(chi_i) = n_i chi_i(sum S(a_r) b_r) / chi_i(sum a_r b_r) for dual bases of ``form``."""
    _require_involution(S_matrix, A)
    if not form.is_symmetric():
        raise DegenerateForm(f"{form.name} is not symmetric")
    if not form.is_associative(A):
        raise NotAssociativeForm(f"{form.name} is not associative")
    pair = dual_basis(form)
    plain = A.zero()
    twisted = A.zero()
    for a, b in zip(pair.a_basis, pair.b_basis):
        plain = [x + y for x, y in zip(plain, multiply(a, b, A))]
        twisted = [x + y for x, y in zip(twisted, multiply(linalg.mat_vec(S_matrix, a), b, A))]
    out = []
    for i, n in enumerate(decomp.degrees):
        denom = decomp.chi(i, plain)
        if not denom:
            raise ZeroNormalizer(f"chi_{i}(sum a_r b_r) = 0")
        out.append(GR(n) * decomp.chi(i, twisted) / denom)
    return out


def block_weighted_form(A: StructureAlgebra, decomp: BlockDecomposition, weights) -> BilinearForm:
    """<a|b> = sum_i w_i chi_i(ab), a symmetric associative form for any nonzero weights."""
    values = [sum((GR.coerce(w) * row[j] for w, row in zip(weights, decomp.characters)), ZERO) for j in range(A.dim)]
    from .algebra import functional_form

    return functional_form(A, values, "block-weighted")


def block_trace(S_matrix, A: StructureAlgebra, idempotent) -> GR:
    """Tr of S restricted to A f for a central idempotent f (S-stable)."""
    return linalg.trace(linalg.matmul(S_matrix, left_regular_matrix(idempotent, A)))


def trace_antipode_report(H: HopfData, decomp: BlockDecomposition, nu2, group=None) -> tuple:
    """Verdict on Tr S = sum nu_2(chi) chi(1), plus the per-block trace identities."""
    A = H.algebra
    S = H.antipode_matrix()
    trS = linalg.trace(S)
    rhs = sum((nu * n for nu, n in zip(nu2, decomp.degrees)), ZERO)
    v = Verdict()
    v.add("Tr S = sum nu2 * deg", trS == rhs, f"Tr S = {trS}, sum = {rhs}")
    perm = antiauto_block_permutation(S, decomp, A)
    bad = []
    for i, j in enumerate(perm.perm):
        if i == j:
            if block_trace(S, A, decomp.idempotents[i]) != nu2[i] * decomp.degrees[i]:
                bad.append(f"self-dual block {i}")
        elif i < j:
            f = [x + y for x, y in zip(decomp.idempotents[i], decomp.idempotents[j])]
            if block_trace(S, A, f) or nu2[i] or nu2[j]:
                bad.append(f"blocks {i},{j}")
    v.add("block traces", not bad, ", ".join(bad))
    if group is not None:
        t = group.involution_count()
        v.add("Tr S = 1 + t", trS == 1 + t, f"t = {t}")
    return v, trS


def self_duality(decomp: BlockDecomposition, S_matrix) -> list:
    """Flag i iff chi_i o S = chi_i on every basis element."""
    n = len(S_matrix)
    cols = [[S_matrix[r][k] for r in range(n)] for k in range(n)]
    return [[decomp.chi(i, c) for c in cols] == list(decomp.characters[i]) for i in range(decomp.d)]


# involutions of matrix algebras ------------------------------------------------


@dataclass
class FormClassification:
    gram: list
    kind: str  # "symmetric" | "skew"

    @property
    def sign(self) -> int:
        return 1 if self.kind == "symmetric" else -1


def _normalize_first_nonzero(M):
    for row in M:
        for x in row:
            if x:
                inv = x.inverse()
                return [[y * inv for y in r] for r in M]
    return M


def _classify(J) -> str | None:
    Jt = linalg.transpose(J)
    if Jt == J:
        return "symmetric"
    if Jt == [[-x for x in row] for row in J]:
        return "skew"
    return None


@dataclass
class AlbertResult:
    form: FormClassification
    trace_S: GR
    unit_sum: GR  # sum_{l,m} tr(S(e_lm) e_ml)
    verdict: Verdict


def albert_classify(S_matrix, n: int, A: StructureAlgebra | None = None) -> AlbertResult:
    """Find J with S(a) = J a^T J^-1 on M_n (matrix-unit basis) and classify it."""
    from .constructions import matrix_units_algebra, unit_matrix

    A = A or matrix_units_algebra(n)
    if A.dim != n * n:
        raise ValueError("algebra is not n^2-dimensional")
    _require_involution(S_matrix, A)

    def image(l, m):
        col = l * n + m
        return [[S_matrix[p * n + q][col] for q in range(n)] for p in range(n)]

    # S(e_lm) J - J e_ml = 0, linear in the n^2 entries of J
    rows = []
    for l in range(n):
        for m in range(n):
            Sm = image(l, m)
            for p in range(n):
                for q in range(n):
                    row = [ZERO] * (n * n)
                    for r in range(n):
                        if Sm[p][r]:
                            row[r * n + q] = row[r * n + q] + Sm[p][r]
                    if q == l:
                        # (J e_ml)_{pq} = J_{pm} when q = l
                        row[p * n + m] = row[p * n + m] - ONE
                    if any(row):
                        rows.append(row)
    space = linalg.nullspace(rows, n * n)
    if len(space) != 1:
        raise NoAdjointForm(f"adjoint-form space has dimension {len(space)}, expected 1")
    J = _normalize_first_nonzero([space[0][p * n:(p + 1) * n] for p in range(n)])
    kind = _classify(J)
    if kind is None:
        raise NoAdjointForm("solved form is neither symmetric nor skew-symmetric")
    trS = linalg.trace(S_matrix)
    unit_sum = ZERO
    for l in range(n):
        for m in range(n):
            unit_sum = unit_sum + linalg.trace(linalg.matmul(image(l, m), unit_matrix(n, m, l)))
    expected = GR(n) if kind == "symmetric" else GR(-n)
    v = Verdict()
    v.add("J nondegenerate", linalg.rank(J) == n)
    v.add("Tr S = +-n", trS == expected, f"Tr S = {trS}, expected {expected}")
    v.add("sum tr(S(e_lm) e_ml) = +-n", unit_sum == expected, f"sum = {unit_sum}")
    v.add("sum tr(S(e_lm) e_ml) = Tr S", unit_sum == trS)
    return AlbertResult(FormClassification(J, kind), trS, unit_sum, v)


def trace_via_matrix_units(U, n: int) -> GR:
    """sum_{l,m} tr(U(e_lm) e_ml) for a linear map U on M_n given as an n^2 x n^2 matrix."""
    from .constructions import unit_matrix

    total = ZERO
    for l in range(n):
        for m in range(n):
            col = l * n + m
            img = [[U[p * n + q][col] for q in range(n)] for p in range(n)]
            total = total + linalg.trace(linalg.matmul(img, unit_matrix(n, m, l)))
    return total


# invariant forms on modules ----------------------------------------------------


def check_representation(A: StructureAlgebra, rep):
    if len(rep) != A.dim:
        raise NotRepresentation(f"need {A.dim} matrices, got {len(rep)}")
    n = len(rep[0])
    unit_img = linalg.zeros(n)
    for k, c in enumerate(A.unit):
        if c:
            unit_img = linalg.mat_add(unit_img, rep[k], c)
    if unit_img != linalg.identity(n):
        raise NotRepresentation("rho(1) != identity")
    for i in range(A.dim):
        for j in range(A.dim):
            rhs = linalg.zeros(n)
            for k, c in A.mult[i][j]:
                rhs = linalg.mat_add(rhs, rep[k], c)
            if linalg.matmul(rep[i], rep[j]) != rhs:
                raise NotRepresentation(f"rho({A.labels[i]})rho({A.labels[j]}) != rho({A.labels[i]}*{A.labels[j]})")


def invariant_form_on_module(H: HopfData, rep) -> FormClassification | None:
    """Solve sum rho(h_1)^T J rho(h_2) = eps(h) J over all basis h.

    Returns ``None`` when only J = 0 works; raises
    :class:`ReducibleRepresentation` when the solution space is not a line.
    """
    A = H.algebra
    rep = [linalg.as_matrix(M) for M in rep]
    check_representation(A, rep)
    n = len(rep[0])
    rows = []
    for h in range(A.dim):
        # coefficient of J_rs in entry (p, q): sum c * rho(j)[r][p] * rho(k)[s][q]
        block = [[ZERO] * (n * n) for _ in range(n * n)]
        for j, k, c in H.comult[h]:
            Rj, Rk = rep[j], rep[k]
            for p in range(n):
                for q in range(n):
                    row = block[p * n + q]
                    for r in range(n):
                        x = Rj[r][p]
                        if not x:
                            continue
                        for s in range(n):
                            y = Rk[s][q]
                            if y:
                                row[r * n + s] = row[r * n + s] + c * x * y
        for p in range(n * n):
            block[p][p] = block[p][p] - H.counit[h]
        rows.extend(r for r in block if any(r))
    space = linalg.nullspace(rows, n * n)
    if not space:
        return None
    if len(space) > 1:
        raise ReducibleRepresentation(f"invariant forms form a {len(space)}-dimensional space")
    J = _normalize_first_nonzero([space[0][p * n:(p + 1) * n] for p in range(n)])
    kind = _classify(J)
    if kind is None:
        raise NoAdjointForm("invariant form is neither symmetric nor skew-symmetric")
    return FormClassification(J, kind)


def rep_character(rep) -> list:
    return [linalg.trace(M) for M in rep]


# chi o square ------------------------------------------------------------------


@dataclass
class Chi2Decomposition:
    functional: list
    in_span: bool
    coefficients: list | None = None
    integral: bool = False
    mixed_sign: bool = False

    @property
    def status(self) -> str:
        return "in_span" if self.in_span else "not_in_span"


def chi2_decompose(H: HopfData, decomp: BlockDecomposition, i: int, square=None) -> Chi2Decomposition:
    """Write h -> chi_i(h^[2]) in the span of the irreducible characters, if possible."""
    A = H.algebra
    P2 = square if square is not None else sweedler_matrix(H, 2)
    f = [decomp.chi(i, [P2[r][j] for r in range(A.dim)]) for j in range(A.dim)]
    X_t = linalg.transpose([list(row) for row in decomp.characters])
    c = linalg.solve(X_t, f)
    if c is None:
        return Chi2Decomposition(f, False)
    integral = all(x.is_integer for x in c)
    mixed = integral and any(x.re > 0 for x in c) and any(x.re < 0 for x in c)
    return Chi2Decomposition(f, True, c, integral, mixed)


# full report ---------------------------------------------------------------------


@dataclass
class CharacterRecord:
    index: int
    degree: int
    nu2: GR
    self_dual: bool
    dual_index: int
    nu: dict = field(default_factory=dict)
    mu2: GR | None = None


@dataclass
class IndicatorReport:
    name: str
    records: list
    trace_S: GR
    identity_checks: Verdict
    decomposition: BlockDecomposition
    chi2: list = field(default_factory=list)
    forms: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.identity_checks.ok


def indicator_report(H: HopfData, ms=(2,), seed=None, decomp=None, with_chi2=True) -> IndicatorReport:
    """All indicator identities for one Hopf algebra, as a single report."""
    from .wedderburn import DEFAULT_SEED

    A = H.algebra
    decomp = decomp or decompose(A, DEFAULT_SEED if seed is None else seed)
    integral = two_sided_integral(H)
    lam = regular_character(H, integral)
    S = H.antipode_matrix()
    checks = Verdict()

    ms = sorted(set(ms) | {2})
    nus = {m: nu_m(H, decomp, m, integral) for m in ms}
    nu2 = nus[2]
    checks.add("nu2 in {0, 1, -1}", all(x in INDICATOR_VALUES for x in nu2), ", ".join(map(format_scalar, nu2)))

    perm = antiauto_block_permutation(S, decomp, A)
    flags = self_duality(decomp, S)
    checks.add(
        "nu2 != 0 iff chi o S = chi",
        all((x != 0) == f for x, f in zip(nu2, flags)),
    )
    checks.add("dual permutation agrees with self-duality", all((perm[i] == i) == f for i, f in enumerate(flags)))

    lam_ok = all(
        lam.lambda_star[j] == sum((GR(n) * row[j] for n, row in zip(decomp.degrees, decomp.characters)), ZERO)
        for j in range(A.dim)
    )
    checks.add("lambda = sum n_i chi_i", lam_ok)

    tv, trS = trace_antipode_report(H, decomp, nu2)
    checks.extend(tv)

    mu2 = mu2_via_form(A, S, decomp, lambda_form(H, lam))
    checks.add("mu2 (lambda-form) = nu2", mu2 == nu2)
    checks.extend(_dual_bases_checks(H, integral, lam))

    forms = {}
    for rname in H.rep_names():
        rep = H.rep(rname)
        try:
            fc = invariant_form_on_module(H, rep)
        except ReducibleRepresentation:
            forms[rname] = None
            continue
        chi = rep_character(rep)
        idx = next((i for i in range(decomp.d) if list(decomp.characters[i]) == chi), None)
        forms[rname] = (fc, idx)
        if idx is not None:
            expected = {1: "symmetric", -1: "skew"}.get(int(nu2[idx].re) if nu2[idx].is_integer else 0)
            got = None if fc is None else fc.kind
            checks.add(f"invariant form on {rname} matches nu2", got == expected, f"form {got}, nu2 = {nu2[idx]}")

    records = [
        CharacterRecord(i, decomp.degrees[i], nu2[i], flags[i], perm[i], {m: nus[m][i] for m in ms}, mu2[i])
        for i in range(decomp.d)
    ]
    chi2 = []
    if with_chi2:
        P2 = sweedler_matrix(H, 2)
        chi2 = [chi2_decompose(H, decomp, i, P2) for i in range(decomp.d)]
    return IndicatorReport(H.name, records, trS, checks, decomp, chi2, forms)


def _dual_bases_checks(H, integral, lam):
    from .hopf import integral_dual_bases_identity

    return integral_dual_bases_identity(H, integral, lam)
