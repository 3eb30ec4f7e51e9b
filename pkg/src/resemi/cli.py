"""Command-line front end.

Inline grammar: a transformation is a comma list of images ("0,0,1"),
multiple transformations are ';'-separated.  A matrix is ';'-separated
rows of ',' entries ("1,0;1,1"); multiple matrices are '|'-separated.
A subspace is given by ';'-separated spanning rows.

Exit codes: 0 success, 2 validation error, 3 size-cap refusal, 4 when a
predicate and its oracle disagree (or a sweep reports any mismatch).
"""

from __future__ import annotations

import argparse
import json
import sys

from .gflinear import GFMatrix, Subspace
from .linear_semigroup import (
    L_ELEMENT_MODES,
    L_SEMIGROUP_MODES,
    LInstance,
    build_lsw,
    l_instance_from_dict,
    thm_element_l,
    thm_semigroup_l,
)
from .semigroups import (
    FiniteSemigroup,
    SizeCapExceeded,
    element_oracle,
    generate,
    idempotents_units,
    semigroup_oracle,
)
from .sweep import SweepPlan, run_sweep
from .transform_semigroup import (
    T_ELEMENT_MODES,
    T_SEMIGROUP_MODES,
    TInstance,
    build_tsy,
    t_instance_from_dict,
    thm_element_t,
    thm_semigroup_t,
)
from .transformations import IndexSubset, Transformation

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_SIZE_CAP = 3
EXIT_MISMATCH = 4


def _parse_transformations(text: str) -> list[Transformation]:
    return [Transformation.from_text(part) for part in text.split(";") if part.strip()]


def _parse_matrices(text: str, p: int) -> list[GFMatrix]:
    return [GFMatrix.from_text(p, part) for part in text.split("|")]


def _witness_text(witness) -> object:
    if witness is None:
        return None
    if isinstance(witness, tuple):
        return [_witness_text(w) for w in witness]
    if hasattr(witness, "to_text"):
        return witness.to_text()
    return str(witness)


def _load_instance(args):
    """Instance from --input JSON or from inline flags."""
    inline = [args.n, args.y, args.sy, args.p, args.w, args.sw, args.gens]
    if args.input is not None:
        if any(v is not None for v in inline) or args.kind is not None:
            raise ValueError("--input and inline instance flags are mutually exclusive")
        with open(args.input) as fh:
            data = json.load(fh)
        if data.get("kind") == "transformation":
            return t_instance_from_dict(data, close=args.close)
        if data.get("kind") == "linear":
            return l_instance_from_dict(data, close=args.close)
        raise ValueError('instance JSON needs "kind": "transformation" or "linear"')
    if args.kind == "t":
        if args.n is None or args.y is None:
            raise ValueError("--kind t needs --n and --y")
        n = args.n
        y = IndexSubset.from_text(n, args.y)
        if args.gens is not None:
            s_y = generate(_parse_transformations(args.gens))
        elif args.sy is not None:
            elems = _parse_transformations(args.sy)
            s_y = generate(elems) if args.close else FiniteSemigroup(elems)
        else:
            raise ValueError("--kind t needs --sy or --gens")
        return TInstance(n, y, s_y)
    if args.kind == "l":
        if args.p is None or args.n is None or args.w is None:
            raise ValueError("--kind l needs --p, --n and --w")
        w = Subspace(args.p, args.n, [
            [int(v) for v in row.split(",")] for row in args.w.split(";") if row.strip()
        ])
        if args.gens is not None:
            s_w = generate(_parse_matrices(args.gens, args.p))
        elif args.sw is not None:
            elems = _parse_matrices(args.sw, args.p)
            s_w = generate(elems) if args.close else FiniteSemigroup(elems)
        else:
            raise ValueError("--kind l needs --sw or --gens")
        return LInstance(args.p, args.n, w, s_w)
    raise ValueError("--kind t|l (or --input) is required")


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        data = {k: v for k, v in payload.items() if k != "_text"}
        print(json.dumps(data, sort_keys=True, indent=2))
        return
    for line in payload["_text"]:
        print(line)


def _cmd_build(args) -> int:
    inst = _load_instance(args)
    is_t = isinstance(inst, TInstance)
    build = build_tsy(inst, args.size_cap) if is_t else build_lsw(inst, args.size_cap)
    idem, units, has_ident = idempotents_units(build)
    payload = {
        "command": "build",
        "instance": inst.key(),
        "size": len(build),
        "has_identity": has_ident,
        "idempotents": len(idem),
        "units": len(units),
        "_text": [
            f"semigroup size: {len(build)}",
            f"two-sided identity: {'yes' if has_ident else 'no'}",
            f"idempotents: {len(idem)}",
            f"units: {len(units)}",
        ],
    }
    _emit(payload, args.format)
    return EXIT_OK


def _default_modes(inst, element_level: bool) -> list[str]:
    is_t = isinstance(inst, TInstance)
    has_ident = inst.has_identity_y if is_t else inst.has_identity_w
    if element_level:
        modes = list(T_ELEMENT_MODES if is_t else L_ELEMENT_MODES)
    else:
        modes = list(T_SEMIGROUP_MODES if is_t else L_SEMIGROUP_MODES)
    if not has_ident:
        modes = [m for m in modes if m != "unit_regular"]
    return modes


def _cmd_classify(args) -> int:
    inst = _load_instance(args)
    is_t = isinstance(inst, TInstance)
    modes = args.mode or _default_modes(inst, element_level=False)
    build = None
    if not args.no_oracle:
        build = build_tsy(inst, args.size_cap) if is_t else build_lsw(inst, args.size_cap)
    results = []
    lines = []
    disagreement = False
    for mode in modes:
        thm = thm_semigroup_t(inst, mode) if is_t else thm_semigroup_l(inst, mode)
        if build is None:
            oracle_verdict: object = "skipped"
            oracle_witness = None
            agree: object = "skipped"
        else:
            orc = semigroup_oracle(build, mode)
            oracle_verdict = orc.holds
            oracle_witness = _witness_text(orc.witness)
            agree = thm.holds == orc.holds
            if not agree:
                disagreement = True
        results.append(
            {
                "mode": mode, "theorem": thm.holds, "clause": thm.clause,
                "oracle": oracle_verdict, "oracle_witness": oracle_witness,
                "agree": agree, "witness": _witness_text(thm.witness),
            }
        )
        marker = "" if agree in (True, "skipped") else "  << DISAGREEMENT"
        lines.append(
            f"{mode}: theorem={thm.holds} ({thm.clause}), oracle={oracle_verdict}{marker}"
        )
    payload = {
        "command": "classify",
        "instance": inst.key(),
        "build_size": None if build is None else len(build),
        "results": results,
        "_text": lines,
    }
    _emit(payload, args.format)
    return EXIT_MISMATCH if disagreement else EXIT_OK


def _cmd_element(args) -> int:
    inst = _load_instance(args)
    is_t = isinstance(inst, TInstance)
    if args.f is None:
        raise ValueError("element command needs --f")
    f = Transformation.from_text(args.f) if is_t else GFMatrix.from_text(inst.p, args.f)
    modes = args.mode or _default_modes(inst, element_level=True)
    build = None
    if not args.no_oracle:
        build = build_tsy(inst, args.size_cap) if is_t else build_lsw(inst, args.size_cap)
    results = []
    lines = []
    disagreement = False
    for mode in modes:
        thm = thm_element_t(inst, f, mode) if is_t else thm_element_l(inst, f, mode)
        if build is None:
            oracle_verdict: object = "skipped"
            oracle_witness = None
            agree: object = "skipped"
        else:
            orc = element_oracle(build, f, mode)
            oracle_verdict = orc.holds
            oracle_witness = _witness_text(orc.witness)
            agree = thm.holds == orc.holds
            if not agree:
                disagreement = True
        results.append(
            {
                "mode": mode, "theorem": thm.holds, "clause": thm.clause,
                "theorem_witness": _witness_text(thm.witness),
                "oracle": oracle_verdict, "oracle_witness": oracle_witness,
                "agree": agree,
            }
        )
        marker = "" if agree in (True, "skipped") else "  << DISAGREEMENT"
        lines.append(
            f"{mode}: theorem={thm.holds} ({thm.clause}), oracle={oracle_verdict}{marker}"
        )
    payload = {
        "command": "element",
        "instance": inst.key(),
        "element": f.to_text(),
        "results": results,
        "_text": lines,
    }
    _emit(payload, args.format)
    return EXIT_MISMATCH if disagreement else EXIT_OK


def _cmd_sweep(args) -> int:
    if args.input is not None:
        if args.kind is not None or args.ns or args.pn or args.sizes:
            raise ValueError("--input and inline plan flags are mutually exclusive")
        with open(args.input) as fh:
            plan = SweepPlan.from_dict(json.load(fh))
    else:
        if args.kind is None:
            raise ValueError("sweep needs --kind t|l or --input plan.json")
        family = "transformation" if args.kind == "t" else "linear"
        source = ("exhaustive",) if args.source == "exhaustive" else ("seeded", args.samples, str(args.seed))
        modes = tuple(args.mode) if args.mode else (
            T_SEMIGROUP_MODES if family == "transformation" else L_SEMIGROUP_MODES
        )
        plan = SweepPlan(
            family=family,
            ns=tuple(int(v) for v in args.ns.split(",")) if args.ns else (),
            pns=tuple(
                tuple(int(v) for v in pair.split(","))
                for pair in args.pn.split(";")
            ) if args.pn else (),
            subset_sizes=tuple(int(v) for v in args.sizes.split(",")) if args.sizes else None,
            source=source,
            modes=modes,
            size_cap=args.size_cap,
            element_cap=args.element_cap,
        )
    report = run_sweep(plan)
    if args.format == "json":
        print(report.to_json())
    else:
        d = report.to_dict()
        print(f"instances run: {d['instances_run']}")
        print(f"semigroup checks: {d['semigroup_checks']} agreements: {d['semigroup_agreements']}")
        print(f"element checks: {d['element_checks']} agreements: {d['element_agreements']}")
        print(f"witnesses checked: {d['witnesses_checked']}")
        print(f"skipped: {len(d['skipped'])}")
        total_bad = (
            len(d["mismatches"]) + len(d["implication_violations"])
            + len(d["size_formula_violations"]) + len(d["transversal_failures"])
            + len(d["definition_failures"]) + len(d["alpha_family_failures"])
        )
        print(f"mismatches: {total_bad}")
        for entry in d["mismatches"]:
            print(f"  MISMATCH {entry}")
    return EXIT_OK if report.clean else EXIT_MISMATCH


def _add_instance_flags(sp) -> None:
    sp.add_argument("--input", help="instance JSON file (exclusive with inline flags)")
    sp.add_argument("--kind", choices=("t", "l"), help="t: transformations, l: linear maps")
    sp.add_argument("--n", type=int, help="ambient size (|X| or dim V)")
    sp.add_argument("--y", help="subset Y as comma list, e.g. 0,1")
    sp.add_argument("--sy", help="S(Y) elements, ';'-separated transformations")
    sp.add_argument("--p", type=int, help="prime modulus")
    sp.add_argument("--w", help="subspace W as ';'-separated spanning rows")
    sp.add_argument("--sw", help="S(W) elements, '|'-separated matrices")
    sp.add_argument("--gens", help="generators instead of elements (closure is applied)")
    sp.add_argument("--close", action="store_true",
                    help="close non-closed --sy/--sw input instead of rejecting it")
    sp.add_argument("--mode", action="append", help="property to check (repeatable)")
    sp.add_argument("--no-oracle", action="store_true",
                    help="skip the brute-force oracle (reported as 'skipped')")
    sp.add_argument("--size-cap", type=int, default=1_000_000)
    sp.add_argument("--format", choices=("text", "json"), default="text")


_GRAMMAR = """\
inline grammar:
  transformation   comma list of images, e.g. "0,0,1" (2 maps to 1);
                   several elements separated by ';'   -> --sy "0,1;1,0"
  matrix           ';'-separated rows of ',' entries, e.g. "1,0;1,1";
                   several elements separated by '|'   -> --sw "1|0"
  subspace         ';'-separated spanning rows          -> --w "1,0;0,1"
exit codes: 0 ok, 2 validation error, 3 size-cap refusal, 4 disagreement/mismatch
"""


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="resemi",
        description="Build and classify semigroups of (linear) transformations "
                    "constrained by their restriction to an invariant subset/subspace.",
        epilog=_GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = ap.add_subparsers(dest="command", required=True)

    for name, fn in (("build", _cmd_build), ("classify", _cmd_classify), ("element", _cmd_element)):
        sp = sub.add_parser(name)
        _add_instance_flags(sp)
        if name == "element":
            sp.add_argument("--f", help="the element to classify (same grammar as elements)")
        sp.set_defaults(fn=fn)

    sp = sub.add_parser("sweep")
    sp.add_argument("--input", help="plan JSON file")
    sp.add_argument("--kind", choices=("t", "l"))
    sp.add_argument("--ns", help="ambient sizes, e.g. 1,2,3")
    sp.add_argument("--pn", help="(p,n) cells, e.g. 2,2;3,2")
    sp.add_argument("--sizes", help="|Y| or dim W values to include, e.g. 1,2")
    sp.add_argument("--source", choices=("exhaustive", "seeded"), default="exhaustive")
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--seed", default="0")
    sp.add_argument("--mode", action="append")
    sp.add_argument("--size-cap", type=int, default=1_000_000)
    sp.add_argument("--element-cap", type=int, default=4096)
    sp.add_argument("--format", choices=("text", "json"), default="json")
    sp.set_defaults(fn=_cmd_sweep)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_CAP
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
