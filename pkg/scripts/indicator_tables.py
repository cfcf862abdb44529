"""Print degrees, nu_2, Tr S and chi^(2) status for every semisimple preset."""

import argparse

from fshopf.constructions import presets
from fshopf.field import format_scalar
from fshopf.indicators import indicator_report

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("names", nargs="*", default=["c2", "c4", "s3", "d4", "q8", "kac16"])
parser.add_argument("--m", type=int, action="append", default=[], help="extra indicator orders")
args = parser.parse_args()

for name in args.names:
    rep = indicator_report(presets(name), ms=tuple(args.m) or (2,))
    print(f"== {name} (dim {sum(d * d for d in rep.decomposition.degrees)}, Tr S = {format_scalar(rep.trace_S)})")
    for r, c in zip(rep.records, rep.chi2):
        nus = "  ".join(f"nu{m}={format_scalar(v)}" for m, v in sorted(r.nu.items()))
        print(f"  chi{r.index:<2} deg {r.degree}  {nus}  dual chi{r.dual_index}  chi2 {c.status}")
    print(f"  checks: {'all pass' if rep.ok else 'FAILURES'}")
