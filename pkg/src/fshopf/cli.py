"""Command-line front end.

Exit status: 0 all checks pass, 1 a mathematical check failed, 2 input or
usage error, 3 the input is not split semisimple over its field.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field as dc_field

from .algebra import verify_algebra
from .constructions import PRESET_NAMES, group_preset, presets, verify_eq1
from .errors import FsHopfError, HypothesisViolation, InputError
from .field import format_scalar
from .hopf import HopfData, two_sided_integral, verify_hopf
from .indicators import chi2_decompose, indicator_report, trace_antipode_report, nu_m
from .io import dumps, hopf_to_document, load_document
from .report import Verdict
from .wedderburn import DEFAULT_SEED, check_semisimple, decompose

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_HYPOTHESIS = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    preset: str | None = None
    field: str | None = None
    seed: int = DEFAULT_SEED
    ms: list = dc_field(default_factory=lambda: [2])
    json_path: str | None = None
    timing: bool = False


def _seed_default():
    env = os.environ.get("HOPF_SEED")
    if env is None:
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise InputError(f"HOPF_SEED must be an integer, got {env!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fshopf", description="Exact Frobenius-Schur indicators for semisimple Hopf algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, needs_input=True):
        if needs_input:
            sp.add_argument("input", nargs="?", help="input JSON document")
            sp.add_argument("--preset", choices=PRESET_NAMES)
            sp.add_argument("--field", choices=("Q", "Qi"), help="override the preset's field")
        sp.add_argument("--json", dest="json_path", metavar="PATH", help="write the machine-readable report")
        sp.add_argument("--seed", type=int, default=None, help="splitting PRNG seed (env HOPF_SEED)")
        sp.add_argument("--timing", action="store_true", help="include wall-clock timing in reports")

    common(sub.add_parser("verify", help="Hopf axiom suite, semisimplicity, unimodularity"))
    common(sub.add_parser("decompose", help="Wedderburn blocks and character table"))
    sp = sub.add_parser("indicators", help="nu_m report with indicator identity checks")
    common(sp)
    sp.add_argument("--m", dest="ms", type=int, action="append", help="extra m values (repeatable)")
    common(sub.add_parser("trace-s", help="Tr S = sum nu_2(chi) chi(1)"))
    common(sub.add_parser("sq2", help="span test for chi(h_1 h_2)"))
    sp = sub.add_parser("eq1", help="theta_m(h) = sum nu_m(chi) chi(h) for a group preset")
    sp.add_argument("--preset", required=True, choices=sorted(["c2", "c3", "c4", "s3", "d4", "q8"]))
    sp.add_argument("--field", choices=("Q", "Qi"))
    sp.add_argument("--m", dest="ms", type=int, action="append", required=True)
    common(sp, needs_input=False)
    sp = sub.add_parser("dump", help="emit a preset as an input document")
    sp.add_argument("--preset", required=True, choices=PRESET_NAMES)
    sp.add_argument("--field", choices=("Q", "Qi"))
    sp.add_argument("-o", "--output", help="output path (default stdout)")
    return p


def _load(cfg: RunConfig):
    if cfg.preset and cfg.input:
        raise InputError("give either an input file or --preset, not both")
    if cfg.preset:
        return presets(cfg.preset, cfg.field)
    if not cfg.input:
        raise InputError("an input file or --preset is required")
    obj = load_document(cfg.input)
    return obj


def _require_hopf(obj) -> HopfData:
    if not isinstance(obj, HopfData):
        raise InputError("this command needs coalgebra data (counit, comult, antipode)")
    return obj


def _table(header, rows) -> list[str]:
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    fmt = "  ".join(f"{{:>{w}}}" for w in widths)
    return [fmt.format(*header)] + [fmt.format(*map(str, r)) for r in rows]


def _block_rows(decomp, labels):
    rows = []
    for i in range(decomp.d):
        rows.append([f"chi{i}", decomp.degrees[i]] + [format_scalar(x) for x in decomp.characters[i]])
    return _table(["block", "deg"] + list(labels), rows)


def _decomp_json(decomp):
    return [
        {"block": i, "degree": decomp.degrees[i], "character": [format_scalar(x) for x in decomp.characters[i]]}
        for i in range(decomp.d)
    ]


def cmd_verify(cfg, obj):
    lines, v = [], Verdict()
    if isinstance(obj, HopfData):
        v.extend(verify_hopf(obj))
    else:
        v.extend(verify_algebra(obj))
    A = obj.algebra if isinstance(obj, HopfData) else obj
    try:
        check_semisimple(A)
        v.add("semisimple", True)
    except HypothesisViolation as exc:
        v.add("semisimple", False, str(exc))
    if isinstance(obj, HopfData) and v.ok:
        try:
            two_sided_integral(obj)
            v.add("unimodular integral", True)
        except FsHopfError as exc:
            v.add("unimodular integral", False, str(exc))
    lines.extend(v.lines())
    return v.ok, lines, {"verdicts": v.to_json()}


def cmd_decompose(cfg, obj):
    A = obj.algebra if isinstance(obj, HopfData) else obj
    decomp = decompose(A, cfg.seed)
    lines = [f"blocks: {decomp.d}; degrees: {decomp.degrees}; sum n^2 = {sum(decomp.block_dims)} = dim {A.dim}"]
    lines += _block_rows(decomp, A.labels)
    return True, lines, {"basis": list(A.labels), "blocks": _decomp_json(decomp)}


def _chi2_json(c):
    out = {"status": c.status, "functional": [format_scalar(x) for x in c.functional]}
    if c.in_span:
        out["coefficients"] = [format_scalar(x) for x in c.coefficients]
        out["integral"] = c.integral
        out["mixed_sign"] = c.mixed_sign
    return out


def cmd_indicators(cfg, obj):
    H = _require_hopf(obj)
    rep = indicator_report(H, ms=cfg.ms, seed=cfg.seed)
    ms = sorted(rep.records[0].nu) if rep.records else [2]
    header = ["block", "deg", "dual", "self_dual"] + [f"nu{m}" for m in ms] + ["mu2", "sq2"]
    rows = []
    for r, c in zip(rep.records, rep.chi2):
        rows.append(
            [f"chi{r.index}", r.degree, f"chi{r.dual_index}", "yes" if r.self_dual else "no"]
            + [format_scalar(r.nu[m]) for m in ms]
            + [format_scalar(r.mu2), c.status]
        )
    lines = [f"{H.name}: dim {H.dim}, {len(rep.records)} irreducible characters, Tr S = {format_scalar(rep.trace_S)}"]
    lines += _table(header, rows)
    for rname, val in rep.forms.items():
        if val is None:
            lines.append(f"invariant form on {rname}: reducible (solution space > 1)")
        else:
            fc, idx = val
            lines.append(f"invariant form on {rname} (chi{idx}): {'none' if fc is None else fc.kind}")
    lines += rep.identity_checks.lines()
    data = {
        "basis": list(H.labels),
        "blocks": _decomp_json(rep.decomposition),
        "indicators": [
            {
                "block": r.index,
                "degree": r.degree,
                "dual": r.dual_index,
                "self_dual": r.self_dual,
                "nu": {str(m): format_scalar(r.nu[m]) for m in ms},
                "mu2": format_scalar(r.mu2),
                "sq2": _chi2_json(c),
            }
            for r, c in zip(rep.records, rep.chi2)
        ],
        "trace_S": format_scalar(rep.trace_S),
        "forms": {
            k: (None if v is None else {"block": v[1], "kind": None if v[0] is None else v[0].kind})
            for k, v in rep.forms.items()
        },
        "verdicts": rep.identity_checks.to_json(),
    }
    return rep.ok, lines, data


def cmd_trace_s(cfg, obj):
    H = _require_hopf(obj)
    decomp = decompose(H.algebra, cfg.seed)
    nu2 = nu_m(H, decomp, 2)
    v, trS = trace_antipode_report(H, decomp, nu2)
    lines = [f"Tr S = {format_scalar(trS)}; sum nu2(chi) chi(1) = " + " + ".join(
        f"({format_scalar(x)})*{n}" for x, n in zip(nu2, decomp.degrees))]
    lines += v.lines()
    return v.ok, lines, {"trace_S": format_scalar(trS), "nu2": [format_scalar(x) for x in nu2], "verdicts": v.to_json()}


def cmd_sq2(cfg, obj):
    H = _require_hopf(obj)
    decomp = decompose(H.algebra, cfg.seed)
    results = [chi2_decompose(H, decomp, i) for i in range(decomp.d)]
    lines = []
    for i, c in enumerate(results):
        extra = ""
        if c.in_span:
            coeffs = ", ".join(format_scalar(x) for x in c.coefficients)
            extra = f" [{coeffs}]" + (" integral" if c.integral else "") + (" mixed-sign" if c.mixed_sign else "")
        lines.append(f"chi{i} (deg {decomp.degrees[i]}): {c.status}{extra}")
    return True, lines, {"sq2": [_chi2_json(c) | {"block": i} for i, c in enumerate(results)]}


def cmd_eq1(cfg, _obj):
    G = group_preset(cfg.preset)
    H = presets(cfg.preset, cfg.field)
    decomp = decompose(H.algebra, cfg.seed)
    v = Verdict()
    for m in cfg.ms:
        v.extend(verify_eq1(G, H, decomp, m), prefix=f"m={m}: ")
    return v.ok, v.lines(), {"preset": cfg.preset, "m": cfg.ms, "verdicts": v.to_json()}


COMMANDS = {
    "verify": cmd_verify,
    "decompose": cmd_decompose,
    "indicators": cmd_indicators,
    "trace-s": cmd_trace_s,
    "sq2": cmd_sq2,
    "eq1": cmd_eq1,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        if args.command == "dump":
            text = dumps(hopf_to_document(presets(args.preset, args.field)))
            if args.output:
                with open(args.output, "w", encoding="utf-8") as fh:
                    fh.write(text)
            else:
                out.write(text)
            return EXIT_OK
        seed = args.seed if args.seed is not None else _seed_default()
        cfg = RunConfig(
            command=args.command,
            input=getattr(args, "input", None),
            preset=getattr(args, "preset", None),
            field=getattr(args, "field", None),
            seed=seed,
            ms=sorted(set(getattr(args, "ms", None) or [2])),
            json_path=args.json_path,
            timing=args.timing,
        )
        t0 = time.perf_counter()
        obj = None if cfg.command == "eq1" else _load(cfg)
        ok, lines, data = COMMANDS[cfg.command](cfg, obj)
        elapsed = time.perf_counter() - t0
    except HypothesisViolation as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_HYPOTHESIS
    except (InputError, KeyError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except FsHopfError as exc:
        err.write(f"check failed: {type(exc).__name__}: {exc}\n")
        return EXIT_CHECK

    for line in lines:
        out.write(line + "\n")
    if cfg.timing:
        out.write(f"elapsed: {elapsed:.3f}s\n")
    if cfg.json_path:
        doc = {"command": cfg.command, "source": cfg.preset or cfg.input, "seed": cfg.seed, "ok": ok}
        doc.update(data)
        if cfg.timing:
            doc["timing_seconds"] = round(elapsed, 3)
        with open(cfg.json_path, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(doc, indent=1) + "\n")
    return EXIT_OK if ok else EXIT_CHECK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
