"""Split semisimple decomposition A = M_{n_1}(k) + ... + M_{n_d}(k).

Only central data is computed: primitive central idempotents, block
degrees and the irreducible characters (via the regular trace on each
block). Irreducible representations themselves are never built.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import (
    StructureAlgebra,
    add,
    center_basis,
    minimal_polynomial,
    multiply,
    regular_trace,
    scale,
    span_dimension,
    trace_form,
)
from .errors import (
    IdempotentNotMapped,
    NonSplitOverField,
    NonSquareBlock,
    NotAntiautomorphism,
    NotInvolution,
    NotSemisimple,
)
from .field import GR, ONE, ZERO, split_into_linear_factors
from .hopf import antiautomorphism_failure

DEFAULT_SEED = 20_000_101
RANDOM_TRIES = 48


@dataclass(frozen=True)
class BlockDecomposition:
    idempotents: list
    degrees: list
    characters: list  # characters[i][j] = chi_i(b_j)

    @property
    def d(self) -> int:
        return len(self.degrees)

    @property
    def block_dims(self) -> list:
        return [n * n for n in self.degrees]

    def chi(self, i: int, x):
        row = self.characters[i]
        return sum((a * c for a, c in zip(x, row) if a), ZERO)


@dataclass(frozen=True)
class DualPermutation:
    perm: tuple

    def __getitem__(self, i):
        return self.perm[i]

    def fixed_points(self):
        return [i for i, j in enumerate(self.perm) if i == j]


def check_semisimple(A: StructureAlgebra):
    """Characteristic-0 criterion: the regular trace form must be nondegenerate."""
    form = trace_form(A)
    r = linalg.rank([list(row) for row in form.gram])
    if r != A.dim:
        raise NotSemisimple(f"regular trace form has rank {r} < {A.dim}: the algebra has a nonzero radical")


def _candidates(A, center, rng):
    yield from center
    bound = 2
    for t in range(RANDOM_TRIES):
        coeffs = [rng.randint(-bound, bound) for _ in center]
        yield [sum((c * z[k] for c, z in zip(coeffs, center)), ZERO) for k in range(A.dim)]
        if t % 8 == 7:
            bound *= 2


def _split_component(A, e, center, rng):
    """Split central idempotent ``e`` using a central element with >= 2 eigenvalues on Ze."""
    Ze = [multiply(z, e, A) for z in center]
    if span_dimension(Ze) <= 1:
        return None
    for z in _candidates(A, center, rng):
        ze = multiply(z, e, A)
        p = minimal_polynomial(ze, A, unit=e)
        if p.degree < 2:
            continue
        try:
            roots = split_into_linear_factors(p, A.field)
        except NonSplitOverField as exc:
            raise NonSplitOverField(
                f"minimal polynomial {p} of a central element does not split over {A.field}", polynomial=p
            ) from exc
        if any(mult > 1 for _, mult in roots):
            raise NotSemisimple(f"central element has repeated root in minimal polynomial {p}")
        rs = [r for r, _ in roots]
        pieces = []
        for r in rs:
            f = list(e)
            for s in rs:
                if s == r:
                    continue
                shifted = add(ze, scale(-s, e))
                f = scale(ONE / (r - s), multiply(f, shifted, A))
            pieces.append(f)
        return pieces
    raise NotSemisimple("no separating central element found")


def primitive_central_idempotents(A: StructureAlgebra, seed: int = DEFAULT_SEED) -> list:
    check_semisimple(A)
    rng = random.Random(seed)
    center = center_basis(A)
    work = [list(A.unit)]
    done = []
    while work:
        e = work.pop()
        pieces = _split_component(A, e, center, rng)
        if pieces is None:
            done.append(e)
        else:
            work.extend(pieces)
    return done


def _angle_key(z: GR):
    """Exact total order on Q(i) by argument in [0, 2pi), then modulus; zero first."""
    x, y = z.re, z.im
    if not x and not y:
        return (-1, 0, Fraction(0), Fraction(0))
    upper = y > 0 or (y == 0 and x > 0)
    on_axis = y == 0
    return (0 if upper else 1, 0 if on_axis else 1, Fraction(0) if on_axis else -x / y, x * x + y * y)


def _block_certified_split(A, e, n, rng):
    """True if e A contains an element whose minimal polynomial has n distinct roots in the field.

    Such an element yields n orthogonal idempotents in the simple block, which
    forces the block to be M_n(k) rather than M_r(D) for a division algebra D.
    """
    if n == 1:
        return True, None
    cands = [multiply(A.basis(j), e, A) for j in range(A.dim)]
    for _ in range(RANDOM_TRIES):
        cands.append([GR(rng.randint(-3, 3)) * x for x in cands[rng.randrange(A.dim)]])
        j, k = rng.randrange(A.dim), rng.randrange(A.dim)
        cands.append(add(cands[j], scale(rng.randint(1, 3), cands[k])))
    last = None
    for x in cands:
        if not any(x):
            continue
        p = minimal_polynomial(x, A, unit=e)
        if p.degree != n:
            continue
        last = p
        try:
            roots = split_into_linear_factors(p, A.field)
        except NonSplitOverField:
            continue
        if len(roots) == n:
            return True, None
    return False, last


def characters_and_degrees(A: StructureAlgebra, idempotents, seed: int = DEFAULT_SEED) -> BlockDecomposition:
    """Degrees from block dimensions, chi_i(b_j) = Tr(L_{b_j e_i}) / n_i, blocks sorted canonically."""
    rng = random.Random(seed + 1)
    blocks = []
    for e in idempotents:
        dim_block = linalg.rank(linalg.transpose([multiply(A.basis(j), e, A) for j in range(A.dim)]))
        n = math.isqrt(dim_block)
        if n * n != dim_block:
            raise NonSquareBlock(f"block of dimension {dim_block} is not a full matrix algebra")
        ok, poly = _block_certified_split(A, e, n, rng)
        if not ok:
            raise NonSplitOverField(
                f"simple block of dimension {dim_block} is not certified split over {A.field}"
                + (f" (e.g. minimal polynomial {poly})" if poly is not None else ""),
                polynomial=poly,
            )
        chi = [regular_trace(multiply(A.basis(j), e, A), A) / n for j in range(A.dim)]
        blocks.append((n, chi, e))
    blocks.sort(key=lambda t: (t[0], [_angle_key(c) for c in t[1]]))
    return BlockDecomposition(
        idempotents=[b[2] for b in blocks],
        degrees=[b[0] for b in blocks],
        characters=[b[1] for b in blocks],
    )


def decompose(A: StructureAlgebra, seed: int = DEFAULT_SEED) -> BlockDecomposition:
    return characters_and_degrees(A, primitive_central_idempotents(A, seed), seed)


def antiauto_block_permutation(S_matrix, decomp: BlockDecomposition, A: StructureAlgebra) -> DualPermutation:
    """i -> i* with S(e_i) = e_{i*}; cross-checked against chi_{i*} = chi_i o S."""
    fail = antiautomorphism_failure(S_matrix, A)
    if fail is not None:
        raise NotAntiautomorphism(fail)
    if linalg.matmul(S_matrix, S_matrix) != linalg.identity(A.dim):
        raise NotInvolution("S^2 != id")
    perm = []
    for e in decomp.idempotents:
        img = linalg.mat_vec(S_matrix, e)
        try:
            perm.append(decomp.idempotents.index(img))
        except ValueError:
            raise IdempotentNotMapped("S(e_i) is not a primitive central idempotent") from None
    for i, j in enumerate(perm):
        twisted = [decomp.chi(i, [S_matrix[r][k] for r in range(A.dim)]) for k in range(A.dim)]
        if twisted != decomp.characters[j]:
            raise IdempotentNotMapped(f"chi_{j} != chi_{i} o S although S(e_{i}) = e_{j}")
    return DualPermutation(tuple(perm))
