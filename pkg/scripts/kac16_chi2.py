"""Inspect h -> chi(h_1 h_2) on the two 2-dim characters of the 16-dim example.

Reports the span test, a direct class-function test f(xy) = f(yx), and
whether the character ring is commutative.
"""

from fshopf.constructions import presets
from fshopf.field import ZERO, format_scalar
from fshopf.hopf import sweedler_matrix
from fshopf.indicators import chi2_decompose
from fshopf.wedderburn import decompose

H = presets("kac16")
A = H.algebra
D = decompose(A)
P2 = sweedler_matrix(H, 2)


def on(f, x, y):
    return sum((c * f[k] for k, c in A.mult[x][y]), ZERO)


for i, n in enumerate(D.degrees):
    if n != 2:
        continue
    r = chi2_decompose(H, D, i, P2)
    central = all(on(r.functional, x, y) == on(r.functional, y, x) for x in range(A.dim) for y in range(A.dim))
    print(f"chi{i}: {r.status}, class function: {central}")
    print("  values:", " ".join(format_scalar(v) for v in r.functional))
    if r.in_span:
        print("  coefficients:", " ".join(format_scalar(v) for v in r.coefficients))


def product(i, j):
    return [
        sum((c * D.characters[i][a] * D.characters[j][b] for a, b, c in H.comult[h]), ZERO) for h in range(A.dim)
    ]


pairs = [(i, j) for i in range(D.d) for j in range(i + 1, D.d) if product(i, j) != product(j, i)]
print("non-commuting character pairs:", pairs)
