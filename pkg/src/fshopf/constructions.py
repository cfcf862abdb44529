"""Inputs and group-side oracles.

Finite groups from multiplication tables, their group algebras, the named
presets used throughout the tests and CLI, the 16-dimensional smash
coproduct kQ8 #^alpha kC2 (generated from its five generator formulas), and
brute-force root counting for the classical expansion of theta_m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .algebra import StructureAlgebra
from .errors import InvalidGroupTable
from .field import GR, I, ONE, ZERO
from .hopf import HopfData
from .report import Verdict


@dataclass(frozen=True)
class FiniteGroup:
    labels: tuple
    table: tuple  # table[g][h] = index of g*h
    identity: int
    inverse: tuple

    @classmethod
    def from_table(cls, labels, table) -> "FiniteGroup":
        n = len(table)
        table = tuple(tuple(int(x) for x in row) for row in table)
        if len(labels) != n or any(len(row) != n for row in table):
            raise InvalidGroupTable("table is not square or labels have the wrong length")
        full = set(range(n))
        for row in table:
            if set(row) != full:
                raise InvalidGroupTable("rows are not permutations (not a Latin square)")
        for col in zip(*table):
            if set(col) != full:
                raise InvalidGroupTable("columns are not permutations (not a Latin square)")
        ids = [e for e in range(n) if all(table[e][g] == g and table[g][e] == g for g in range(n))]
        if len(ids) != 1:
            raise InvalidGroupTable("no two-sided identity")
        e = ids[0]
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                for c in range(n):
                    if table[ab][c] != table[a][table[b][c]]:
                        raise InvalidGroupTable(f"not associative at {(labels[a], labels[b], labels[c])}")
        inverse = tuple(row.index(e) for row in table)
        return cls(tuple(labels), table, e, inverse)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def power(self, g: int, m: int) -> int:
        x = self.identity
        for _ in range(m):
            x = self.table[x][g]
        return x

    def conjugacy_classes(self) -> list[list[int]]:
        seen, classes = set(), []
        for g in range(self.order):
            if g in seen:
                continue
            cls_ = sorted({self.table[self.table[x][g]][self.inverse[x]] for x in range(self.order)})
            seen.update(cls_)
            classes.append(cls_)
        return classes

    def involution_count(self) -> int:
        return sum(1 for g in range(self.order) if g != self.identity and self.table[g][g] == self.identity)


def group_from_normal_forms(elements, mul, label) -> FiniteGroup:
    """Group from an explicit element list and a multiplication on normal forms."""
    index = {x: i for i, x in enumerate(elements)}
    table = [[index[mul(x, y)] for y in elements] for x in elements]
    return FiniteGroup.from_table([label(x) for x in elements], table)


def _power_label(sym, k):
    return "" if k == 0 else (sym if k == 1 else f"{sym}{k}")


def cyclic_group(n: int) -> FiniteGroup:
    return group_from_normal_forms(
        list(range(n)), lambda x, y: (x + y) % n, lambda x: _power_label("g", x) or "e"
    )


def dihedral_group(n: int) -> FiniteGroup:
    """Order 2n, elements r^i s^j with s r = r^-1 s."""
    elems = [(i, j) for j in range(2) for i in range(n)]

    def mul(x, y):
        (i, j), (p, q) = x, y
        return ((i + (p if j == 0 else -p)) % n, (j + q) % 2)

    return group_from_normal_forms(elems, mul, lambda x: (_power_label("r", x[0]) + ("s" if x[1] else "")) or "e")


def _q8_mul(x, y):
    """a^i b^j with a^4 = e, b^2 = a^2, b a = a^-1 b."""
    (i, j), (p, q) = x, y
    i2 = i + (p if j == 0 else -p)
    if j == 1 and q == 1:
        i2 += 2
    return (i2 % 4, (j + q) % 2)


def _q8_label(x):
    i, j = x
    return (_power_label("a", i) + ("b" if j else "")) or "e"


Q8_ELEMENTS = [(i, j) for j in range(2) for i in range(4)]


def quaternion_group() -> FiniteGroup:
    return group_from_normal_forms(Q8_ELEMENTS, _q8_mul, _q8_label)


KAC16_ELEMENTS = [(i, j, k) for (i, j) in Q8_ELEMENTS for k in range(2)]


def _kac_mul(x, y):
    i, j = _q8_mul(x[:2], y[:2])
    return (i, j, (x[2] + y[2]) % 2)


def _kac_label(x):
    base = _q8_label(x[:2])
    if x[2]:
        return "g" if base == "e" else base + "g"
    return base


def q8_times_c2() -> FiniteGroup:
    """G = <a, b, g | a^4 = e, b^2 = a^2, ba = a^-1 b, ag = ga, bg = gb, g^2 = e>.

    Basis order {e, a, a2, a3, b, ab, a2b, a3b} x {1, g}, lexicographic.
    """
    return group_from_normal_forms(KAC16_ELEMENTS, _kac_mul, _kac_label)


# group algebras --------------------------------------------------------------


def group_algebra(G: FiniteGroup, field: str = "Qi", name: str = "kG", reps=None) -> HopfData:
    """kG with Delta(g) = g (x) g, eps(g) = 1, S(g) = g^-1."""
    n = G.order
    entries = [(g, h, G.table[g][h], ONE) for g in range(n) for h in range(n)]
    unit = [ONE if g == G.identity else ZERO for g in range(n)]
    A = StructureAlgebra.from_entries(G.labels, entries, unit, field)
    comult = [(g, g, g, ONE) for g in range(n)]
    S = linalg.zeros(n)
    for g in range(n):
        S[G.inverse[g]][g] = ONE
    return HopfData.build(A, comult, [ONE] * n, S, name, reps)


def _rep_from_words(elements, images):
    """Matrices for every group element from a word -> matrix function."""
    return [images(x) for x in elements]


def _mpow(M, k):
    out = linalg.identity(len(M))
    for _ in range(k):
        out = linalg.matmul(out, M)
    return out


def s3_standard_rep():
    """2-dim reflection representation of S3 with integer matrices."""
    R = linalg.as_matrix([[0, -1], [1, -1]])
    Sm = linalg.as_matrix([[0, 1], [1, 0]])
    elems = [(i, j) for j in range(2) for i in range(3)]
    return _rep_from_words(elems, lambda x: linalg.matmul(_mpow(R, x[0]), _mpow(Sm, x[1])))


def q8_quaternion_rep(g_sign: int | None = None):
    """2-dim rep a -> diag(i, -i), b -> [[0, 1], [-1, 0]] (optionally g -> +-1 on Q8 x C2)."""
    Am = [[I, ZERO], [ZERO, -I]]
    Bm = linalg.as_matrix([[0, 1], [-1, 0]])

    def image(x):
        M = linalg.matmul(_mpow(Am, x[0]), _mpow(Bm, x[1]))
        if g_sign is not None and x[2] and g_sign < 0:
            M = linalg.scale_matrix(M, GR(-1))
        return M

    elems = Q8_ELEMENTS if g_sign is None else KAC16_ELEMENTS
    return _rep_from_words(elems, image)


# the 16-dimensional example ------------------------------------------------

HALF = GR(Fraction(1, 2))


def _kac_generator_data():
    """Delta and S on the generators a, b, g, as sparse dicts over group elements."""
    G = q8_times_c2()
    ix = {lab: i for i, lab in enumerate(G.labels)}

    def t(*terms):
        out = {}
        for c, x, y in terms:
            out[(ix[x], ix[y])] = out.get((ix[x], ix[y]), ZERO) + GR.coerce(c)
        return out

    def v(*terms):
        out = {}
        for c, x in terms:
            out[ix[x]] = out.get(ix[x], ZERO) + GR.coerce(c)
        return out

    h = Fraction(1, 2)
    delta = {
        "a": t((h, "a", "a"), (h, "ag", "a"), (h, "a", "b"), (-h, "ag", "b")),
        "b": t((h, "b", "b"), (h, "bg", "b"), (h, "b", "a"), (-h, "bg", "a")),
        "g": t((1, "g", "g")),
    }
    # b^3 = a^2 b in the normal form
    antipode = {
        "a": v((h, "a3"), (h, "a3g"), (h, "a2b"), (-h, "a2bg")),
        "b": v((h, "a2b"), (h, "a2bg"), (h, "a3"), (-h, "a3g")),
        "g": v((1, "g"),),
    }
    return G, delta, antipode


def _group_tensor_mul(G, t1, t2):
    out = {}
    for (a, b), c in t1.items():
        for (x, y), d in t2.items():
            key = (G.table[a][x], G.table[b][y])
            out[key] = out.get(key, ZERO) + c * d
    return {k: v for k, v in out.items() if v}


def _group_vec_mul(G, v1, v2):
    out = {}
    for a, c in v1.items():
        for x, d in v2.items():
            k = G.table[a][x]
            out[k] = out.get(k, ZERO) + c * d
    return {k: v for k, v in out.items() if v}


def expand_kac16():
    """Extend Delta multiplicatively and S antimultiplicatively over a^i b^j g^k.

    Returns ``(G, comult_entries, antipode_matrix)``; the result is certified
    afterwards by :func:`fshopf.hopf.verify_hopf`.
    """
    G, delta, antipode = _kac_generator_data()
    e = G.identity
    comult_entries = []
    S = linalg.zeros(G.order)
    for idx, (i, j, k) in enumerate(KAC16_ELEMENTS):
        d = {(e, e): ONE}
        s = {e: ONE}
        factors = ["a"] * i + ["b"] * j + ["g"] * k
        for f in factors:
            d = _group_tensor_mul(G, d, delta[f])
            s = _group_vec_mul(G, antipode[f], s)  # S(xy) = S(y) S(x)
        assert G.labels[idx] == _kac_label((i, j, k))
        comult_entries.extend((idx, x, y, c) for (x, y), c in sorted(d.items()))
        for x, c in s.items():
            S[x][idx] = c
    return G, comult_entries, S


def kac16(field: str = "Qi") -> HopfData:
    G, comult, S = expand_kac16()
    A = group_algebra(G, field).algebra
    reps = {"quat2_g+": q8_quaternion_rep(+1), "quat2_g-": q8_quaternion_rep(-1)}
    return HopfData.build(A, comult, [ONE] * G.order, S, "kac16", reps)


# non-group fixtures ----------------------------------------------------------


def sweedler4(field: str = "Q") -> HopfData:
    """Sweedler's 4-dim Hopf algebra <g, x | g^2 = 1, x^2 = 0, xg = -gx>; not semisimple."""
    labels = ("1", "g", "x", "gx")
    table = {
        (0, 0): [(0, 1)], (0, 1): [(1, 1)], (0, 2): [(2, 1)], (0, 3): [(3, 1)],
        (1, 0): [(1, 1)], (1, 1): [(0, 1)], (1, 2): [(3, 1)], (1, 3): [(2, 1)],
        (2, 0): [(2, 1)], (2, 1): [(3, -1)], (2, 2): [], (2, 3): [],
        (3, 0): [(3, 1)], (3, 1): [(2, -1)], (3, 2): [], (3, 3): [],
    }
    entries = [(i, j, k, c) for (i, j), terms in table.items() for k, c in terms]
    A = StructureAlgebra.from_entries(labels, entries, [1, 0, 0, 0], field)
    comult = [
        (0, 0, 0, 1),
        (1, 1, 1, 1),
        (2, 2, 0, 1), (2, 1, 2, 1),
        (3, 3, 1, 1), (3, 0, 3, 1),
    ]
    S = linalg.as_matrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    return HopfData.build(A, comult, [1, 1, 0, 0], S, "sweedler4")


def matrix_units_algebra(n: int, field: str = "Qi") -> StructureAlgebra:
    """M_n with basis e_lm (index l*n + m), e_lm e_pq = delta_mp e_lq."""
    labels = [f"e{l + 1}{m + 1}" for l in range(n) for m in range(n)]
    entries = [(l * n + m, m * n + q, l * n + q, ONE) for l in range(n) for m in range(n) for q in range(n)]
    unit = [ONE if l == m else ZERO for l in range(n) for m in range(n)]
    return StructureAlgebra.from_entries(labels, entries, unit, field)


def unit_matrix(n, l, m):
    M = linalg.zeros(n)
    M[l][m] = ONE
    return M


def involution_from_form(n: int, J) -> list:
    """Matrix (n^2 x n^2) of a -> J a^T J^-1 on M_n in the matrix-unit basis."""
    J = linalg.as_matrix(J)
    Jinv = linalg.inverse(J)
    S = linalg.zeros(n * n)
    for l in range(n):
        for m in range(n):
            img = linalg.matmul(linalg.matmul(J, unit_matrix(n, m, l)), Jinv)
            for p in range(n):
                for q in range(n):
                    S[p * n + q][l * n + m] = img[p][q]
    return S


def transpose_involution(n: int) -> list:
    return involution_from_form(n, linalg.identity(n))


def symplectic_involution(m: int) -> list:
    """a -> G a^T G^-1 with G = diag of m blocks [[0, 1], [-1, 0]]."""
    n = 2 * m
    Gm = linalg.zeros(n)
    for b in range(m):
        Gm[2 * b][2 * b + 1] = ONE
        Gm[2 * b + 1][2 * b] = GR(-1)
    return involution_from_form(n, Gm)


# presets ---------------------------------------------------------------------

GROUP_PRESETS = {
    "c2": lambda: cyclic_group(2),
    "c3": lambda: cyclic_group(3),
    "c4": lambda: cyclic_group(4),
    "s3": lambda: dihedral_group(3),
    "d4": lambda: dihedral_group(4),
    "q8": quaternion_group,
}

DEFAULT_FIELD = {"c2": "Q", "c3": "Qi", "c4": "Qi", "s3": "Q", "d4": "Q", "q8": "Qi", "kac16": "Qi", "sweedler4": "Q"}

PRESET_NAMES = ("c2", "c3", "c4", "s3", "d4", "q8", "kac16", "sweedler4")


@lru_cache(maxsize=None)
def group_preset(name: str) -> FiniteGroup:
    try:
        return GROUP_PRESETS[name]()
    except KeyError:
        raise KeyError(f"{name!r} is not a group preset; choose from {sorted(GROUP_PRESETS)}") from None


@lru_cache(maxsize=None)
def presets(name: str, field: str | None = None) -> HopfData:
    if name not in PRESET_NAMES:
        raise KeyError(f"unknown preset {name!r}; choose from {list(PRESET_NAMES)}")
    field = field or DEFAULT_FIELD[name]
    if name == "kac16":
        return kac16(field)
    if name == "sweedler4":
        return sweedler4(field)
    reps = None
    if name == "s3":
        reps = {"std2": s3_standard_rep()}
    elif name == "q8":
        reps = {"quat2": q8_quaternion_rep()}
    return group_algebra(group_preset(name), field, name, reps)


# theta_m and the classical expansion ----------------------------------------


@dataclass(frozen=True)
class RootCountFunction:
    m: int
    counts: tuple


def root_counts(G: FiniteGroup, m: int) -> RootCountFunction:
    """theta_m(h) = #{g : g^m = h} by enumeration."""
    if m < 1:
        raise ValueError("m must be >= 1")
    counts = [0] * G.order
    for g in range(G.order):
        counts[G.power(g, m)] += 1
    return RootCountFunction(m, tuple(counts))


def group_nu_m(G: FiniteGroup, decomp, m: int) -> list:
    """(1/|G|) sum_g chi(g^m) for every character row of ``decomp``."""
    out = []
    for chi in decomp.characters:
        s = sum((chi[G.power(g, m)] for g in range(G.order)), ZERO)
        out.append(s / G.order)
    return out


def verify_eq1(G: FiniteGroup, H: HopfData, decomp, m: int) -> Verdict:
    """theta_m(h) = sum nu_m(chi) chi(h) pointwise, with nu_m computed both ways."""
    from .hopf import two_sided_integral
    from .indicators import nu_m

    v = Verdict()
    nu_group = group_nu_m(G, decomp, m)
    nu_hopf = nu_m(H, decomp, m, two_sided_integral(H))
    v.add("nu_m group = nu_m Hopf", nu_group == nu_hopf, f"group {[str(x) for x in nu_group]}, hopf {[str(x) for x in nu_hopf]}")
    theta = root_counts(G, m)
    bad = None
    for h in range(G.order):
        rhs = sum((nu * chi[h] for nu, chi in zip(nu_group, decomp.characters)), ZERO)
        if rhs != theta.counts[h]:
            bad = h
            break
    v.add("theta_m expansion", bad is None, "" if bad is None else f"fails at h = {G.labels[bad]}")
    trS = linalg.trace(H.antipode_matrix())
    t = G.involution_count()
    v.add("Tr S = 1 + t", trS == 1 + t, f"Tr S = {trS}, t = {t}")
    return v
