"""Associative algebras given by structure constants.

Elements are plain lists of :class:`GaussianRational` coefficients over the
algebra basis. The multiplication tensor is stored sparsely:
``mult[i][j]`` is a tuple of ``(k, c)`` pairs meaning ``b_i b_j = sum c b_k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

from . import linalg
from .errors import DegenerateForm, DimensionMismatch, SingularMatrix
from .field import GR, ONE, ZERO, Polynomial
from .report import Check, Verdict

Element = list  # list[GaussianRational], length A.dim


@dataclass(frozen=True, eq=False)
class StructureAlgebra:
    dim: int
    labels: tuple
    mult: tuple
    unit: tuple
    field: str = "Qi"

    @classmethod
    def from_entries(cls, labels, entries, unit, field="Qi"):
        """Build from ``(i, j, k, c)`` entries; ``unit`` is a dense coefficient vector."""
        n = len(labels)
        acc = [[{} for _ in range(n)] for _ in range(n)]
        for i, j, k, c in entries:
            c = GR.coerce(c)
            if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                raise DimensionMismatch(f"structure constant index out of range: {(i, j, k)}")
            cell = acc[i][j]
            cell[k] = cell.get(k, ZERO) + c
        mult = tuple(
            tuple(tuple(sorted((k, c) for k, c in cell.items() if c)) for cell in row) for row in acc
        )
        unit = tuple(GR.coerce(c) for c in unit)
        if len(unit) != n:
            raise DimensionMismatch("unit vector has wrong length")
        return cls(n, tuple(labels), mult, unit, field)

    def entries(self):
        for i, row in enumerate(self.mult):
            for j, cell in enumerate(row):
                for k, c in cell:
                    yield i, j, k, c

    def with_product(self, i: int, j: int, terms) -> "StructureAlgebra":
        """Copy with ``b_i b_j`` replaced by ``terms`` (used for fault injection)."""
        rows = [list(r) for r in self.mult]
        rows[i][j] = tuple(sorted((k, GR.coerce(c)) for k, c in terms if c))
        return StructureAlgebra(self.dim, self.labels, tuple(tuple(r) for r in rows), self.unit, self.field)

    def basis(self, i: int) -> Element:
        v = [ZERO] * self.dim
        v[i] = ONE
        return v

    def zero(self) -> Element:
        return [ZERO] * self.dim

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def element(self, coeffs: dict) -> Element:
        """Element from a ``{label: scalar}`` mapping."""
        v = self.zero()
        for lab, c in coeffs.items():
            v[self.index(lab)] += GR.coerce(c)
        return v

    @cached_property
    def trace_vector(self) -> tuple:
        """Regular trace of each basis element, Tr(L_{b_i})."""
        out = []
        for i in range(self.dim):
            t = ZERO
            for j in range(self.dim):
                for k, c in self.mult[i][j]:
                    if k == j:
                        t = t + c
            out.append(t)
        return tuple(out)

    def __eq__(self, other):
        if not isinstance(other, StructureAlgebra):
            return NotImplemented
        return (self.dim, self.labels, self.mult, self.unit) == (other.dim, other.labels, other.mult, other.unit)

    __hash__ = object.__hash__


def _check_dim(A, *vectors):
    for v in vectors:
        if len(v) != A.dim:
            raise DimensionMismatch(f"vector of length {len(v)} in a {A.dim}-dimensional algebra")


def multiply(x: Element, y: Element, A: StructureAlgebra) -> Element:
    _check_dim(A, x, y)
    out = [ZERO] * A.dim
    ys = [(j, b) for j, b in enumerate(y) if b]
    for i, a in enumerate(x):
        if not a:
            continue
        row = A.mult[i]
        for j, b in ys:
            ab = a * b
            for k, c in row[j]:
                out[k] = out[k] + ab * c
    return out


def add(x: Element, y: Element) -> Element:
    return [a + b for a, b in zip(x, y)]


def scale(c, x: Element) -> Element:
    c = GR.coerce(c)
    return [c * a for a in x]


def power(x: Element, n: int, A: StructureAlgebra, unit: Element | None = None) -> Element:
    out = list(A.unit if unit is None else unit)
    for _ in range(n):
        out = multiply(out, x, A)
    return out


def regular_trace(x: Element, A: StructureAlgebra):
    """Tr(L_x)."""
    return sum((a * t for a, t in zip(x, A.trace_vector) if a), ZERO)


def verify_algebra(A: StructureAlgebra) -> Verdict:
    checks = []
    basis_products = [[[ZERO] * A.dim for _ in range(A.dim)] for _ in range(A.dim)]
    for i, j, k, c in A.entries():
        basis_products[i][j][k] = c
    bad = None
    for i in range(A.dim):
        for j in range(A.dim):
            bij = basis_products[i][j]
            for k in range(A.dim):
                left = multiply(bij, A.basis(k), A)
                right = multiply(A.basis(i), basis_products[j][k], A)
                if left != right:
                    bad = (i, j, k)
                    break
            if bad:
                break
        if bad:
            break
    if bad:
        labs = tuple(A.labels[t] for t in bad)
        checks.append(Check("associativity", False, f"(b_i b_j) b_k != b_i (b_j b_k) at {labs}", bad))
    else:
        checks.append(Check("associativity", True))

    unit_bad = None
    for k in range(A.dim):
        b = A.basis(k)
        if multiply(list(A.unit), b, A) != b or multiply(b, list(A.unit), A) != b:
            unit_bad = k
            break
    if unit_bad is None:
        checks.append(Check("unit", True))
    else:
        checks.append(Check("unit", False, f"unit fails on {A.labels[unit_bad]}", (unit_bad,)))
    return Verdict(checks)


def left_regular_matrix(x: Element, A: StructureAlgebra):
    """Matrix of L_x; column j is x * b_j."""
    _check_dim(A, x)
    M = linalg.zeros(A.dim)
    for i, a in enumerate(x):
        if not a:
            continue
        for j, cell in enumerate(A.mult[i]):
            for k, c in cell:
                M[k][j] = M[k][j] + a * c
    return M


def right_regular_matrix(x: Element, A: StructureAlgebra):
    """Matrix of R_x; column j is b_j * x."""
    _check_dim(A, x)
    M = linalg.zeros(A.dim)
    for i, a in enumerate(x):
        if not a:
            continue
        for j in range(A.dim):
            for k, c in A.mult[j][i]:
                M[k][j] = M[k][j] + a * c
    return M


def center_basis(A: StructureAlgebra) -> list[Element]:
    rows = []
    for k in range(A.dim):
        block = [[ZERO] * A.dim for _ in range(A.dim)]
        for i in range(A.dim):
            for l, c in A.mult[i][k]:
                block[l][i] = block[l][i] + c
            for l, c in A.mult[k][i]:
                block[l][i] = block[l][i] - c
        rows.extend(r for r in block if any(r))
    return linalg.nullspace(rows, A.dim)


def span_dimension(vectors) -> int:
    vectors = [v for v in vectors]
    if not vectors:
        return 0
    return linalg.rank(vectors)


# bilinear forms ------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class BilinearForm:
    """Bilinear form on A given by its Gram matrix over the algebra basis."""

    gram: tuple
    name: str = dc_field(default="form", compare=False)

    @classmethod
    def from_matrix(cls, M, name="form"):
        return cls(tuple(tuple(GR.coerce(x) for x in row) for row in M), name)

    @property
    def dim(self) -> int:
        return len(self.gram)

    def __call__(self, x: Element, y: Element):
        acc = ZERO
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.gram[i]
            for j, b in enumerate(y):
                if b and row[j]:
                    acc = acc + a * row[j] * b
        return acc

    def scaled(self, c) -> "BilinearForm":
        c = GR.coerce(c)
        return BilinearForm.from_matrix([[c * g for g in row] for row in self.gram], f"{c}*{self.name}")

    def is_symmetric(self) -> bool:
        n = self.dim
        return all(self.gram[i][j] == self.gram[j][i] for i in range(n) for j in range(i + 1, n))

    def is_nondegenerate(self) -> bool:
        return linalg.rank([list(r) for r in self.gram]) == self.dim

    def is_associative(self, A: StructureAlgebra) -> bool:
        """<ab|c> = <a|bc> on all basis triples."""
        n = A.dim
        for i in range(n):
            for j in range(n):
                ab = A.mult[i][j]
                for k in range(n):
                    left = sum((c * self.gram[l][k] for l, c in ab), ZERO)
                    right = sum((c * self.gram[i][l] for l, c in A.mult[j][k]), ZERO)
                    if left != right:
                        return False
        return True


def functional_form(A: StructureAlgebra, values, name="form") -> BilinearForm:
    """The form <a|b> = f(ab) for a functional given by its values on the basis."""
    values = [GR.coerce(v) for v in values]
    gram = []
    for i in range(A.dim):
        row = []
        for j in range(A.dim):
            row.append(sum((c * values[k] for k, c in A.mult[i][j]), ZERO))
        gram.append(tuple(row))
    return BilinearForm(tuple(gram), name)


def trace_form(A: StructureAlgebra) -> BilinearForm:
    """<a|b> = Tr(L_{ab}); symmetric and associative for every algebra."""
    return functional_form(A, A.trace_vector, "trace")


@dataclass(frozen=True)
class DualBasisPair:
    a_basis: list
    b_basis: list


def dual_basis(form: BilinearForm, basis=None) -> DualBasisPair:
    """Dual bases with respect to ``form``.

    ``basis`` (optional) lists the first basis as coefficient vectors; the
    default is the standard basis. The second basis solves <a_r|b_j> = delta.
    """
    n = form.dim
    P = linalg.identity(n) if basis is None else linalg.transpose([list(map(GR.coerce, v)) for v in basis])
    G = [list(r) for r in form.gram]
    try:
        X = linalg.inverse(linalg.matmul(linalg.transpose(P), G))
    except SingularMatrix:
        raise DegenerateForm(f"{form.name} is degenerate (or the given basis is not a basis)") from None
    a_basis = [[P[i][r] for i in range(n)] for r in range(n)]
    b_basis = [[X[i][j] for i in range(n)] for j in range(n)]
    return DualBasisPair(a_basis, b_basis)


def casimir_element(pair: DualBasisPair) -> list:
    """sum_r a_r (x) b_r as a flat dim*dim vector, index i*dim + j."""
    n = len(pair.a_basis)
    out = [ZERO] * (n * n)
    for a, b in zip(pair.a_basis, pair.b_basis):
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i * n + j] = out[i * n + j] + x * y
    return out


def minimal_polynomial(x: Element, A: StructureAlgebra, unit: Element | None = None) -> Polynomial:
    """Monic least-degree p with p(x) = 0.

    With ``unit`` given (an idempotent e with x = xe), x is treated as an
    element of the corner algebra eAe and powers start at e.
    """
    _check_dim(A, x)
    one = list(A.unit if unit is None else unit)
    powers = [one]
    while True:
        nxt = multiply(powers[-1], x, A)
        # columns are the powers; a 1-dim kernel gives the relation
        cols = powers + [nxt]
        M = linalg.transpose(cols)
        R, pivots = linalg.rref(M, len(cols))
        if len(pivots) < len(cols):
            ker = linalg.nullspace(M, len(cols))[0]
            return Polynomial(ker).monic()
        powers.append(nxt)
        if len(powers) > A.dim + 1:
            raise ArithmeticError("minimal polynomial search exceeded dimension bound")
