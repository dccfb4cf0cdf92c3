"""Command-line surface: check, construct, solve, compute, enumerate.

Every run produces a report: the echoed command, one verdict per requested
property (carrying a counterexample when one exists), any produced artifacts
(inline, or on disk via --output), and wall time.  Exit status 0 means every
requested property holds, 1 means some property failed, 2 means the input
was malformed.  --format json prints the report as one JSON object tagged
with a schema version; verdict content is deterministic, only the seconds
field varies between runs.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

import numpy as np

from . import braid as braid_mod
from . import enumeration
from .cocycles import (Cochain, SES, cocycles_cohomologous, extend,
                       extend_mutual_pair, is_binary_2cocycle,
                       is_ternary_2cocycle, three_cocycle_from_ses)
from .constructions import (PreconditionError, affine_op, augmented_ternary,
                            compose_mn, conj_quandle, core_quandle,
                            doubling_binary, doubling_ternary, f_functor,
                            g_functor, generalized_alexander, heap_op,
                            monoid_product, power_op, product_mutual_pair,
                            projection_op)
from .homology import cohomology_solve, homology, verify_chain_map
from .linear import (Field, LinMap, LieAlgebraObject, SDObject,
                     augmented_operation, check_augmented_hopf, check_nary_sd,
                     group_algebra_hopf, hopf_adjoint_ternary, hopf_heap,
                     lie_to_binary_sd)
from .optable import (CheckResult, FiniteGroup, InputError, OpTable,
                      are_compatible_ternary, are_mutually_distributive,
                      cyclic_group, dihedral_group, is_nary_distributive,
                      is_quandle, is_rack, symmetric_group)

SCHEMA = "selfdist-report/1"


# ---------------------------------------------------------------------------
# report


def _jsonable(value):
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


class Report:
    """Accumulates verdicts and artifacts for one invocation."""

    def __init__(self, argv):
        self.command = list(argv)
        self.verdicts = []
        self.artifacts = []
        self.seconds = 0.0

    def verdict(self, prop: str, result, detail: str = ""):
        if isinstance(result, CheckResult):
            cex = None
            if result.counterexample is not None:
                c = result.counterexample
                cex = {"witness": _jsonable(c.witness), "lhs": _jsonable(c.lhs),
                       "rhs": _jsonable(c.rhs)}
            self.verdicts.append({
                "property": prop, "holds": bool(result), "counterexample": cex,
                "detail": detail or result.detail})
        else:
            self.verdicts.append({"property": prop, "holds": bool(result),
                                  "counterexample": None, "detail": detail})

    def artifact(self, name: str, content: dict):
        self.artifacts.append({"name": name, "content": _jsonable(content),
                               "path": None})

    @property
    def exit_code(self) -> int:
        return 0 if all(v["holds"] for v in self.verdicts) else 1

    def as_json(self) -> dict:
        return {"schema": SCHEMA, "command": self.command,
                "verdicts": self.verdicts, "artifacts": self.artifacts,
                "seconds": self.seconds}

    def render_human(self) -> str:
        lines = []
        for v in self.verdicts:
            lines.append(f"{v['property']}: {'yes' if v['holds'] else 'no'}")
            if not v["holds"]:
                c = v["counterexample"]
                if c is not None:
                    lines.append(f"  at {tuple(c['witness'])}: "
                                 f"{c['lhs']} != {c['rhs']}")
                if v["detail"]:
                    lines.append(f"  {v['detail']}")
        for a in self.artifacts:
            if a["path"] is not None:
                lines.append(f"{a['name']} -> {a['path']}")
            else:
                lines.append(f"{a['name']}: {_summary(a['content'])}")
        lines.append(f"({self.seconds:.2f}s)")
        return "\n".join(lines)


def _summary(content) -> str:
    if isinstance(content, dict):
        if "table" in content and "size" in content:
            body = f"size {content['size']} arity {content['arity']}"
            if len(content["table"]) <= 64:
                body += " " + "".join(str(v) for v in content["table"])
            return body
        if "group" in content:
            return content["group"]
        text = json.dumps(content)
        return text if len(text) <= 400 else text[:400] + "..."
    return str(content)


# ---------------------------------------------------------------------------
# input parsing helpers


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}")


def _load_op(path: str) -> OpTable:
    return OpTable.from_json(_load_json(path))


def _load_cochain(path: str) -> Cochain:
    return Cochain.from_json(_load_json(path))


def _load_group(spec: str) -> FiniteGroup:
    kind, _, arg = spec.partition(":")
    if kind in ("cyclic", "dihedral", "symmetric"):
        try:
            n = int(arg)
        except ValueError:
            raise InputError(f"group spec {spec!r} needs an integer parameter")
        return {"cyclic": cyclic_group, "dihedral": dihedral_group,
                "symmetric": symmetric_group}[kind](n)
    return FiniteGroup.from_json(_load_json(spec))


def _load_ses(spec: str) -> SES:
    kind, _, arg = spec.partition(":")
    if kind in ("cyclic", "split"):
        parts = arg.split(",")
        if len(parts) != 2:
            raise InputError(f"sequence spec {spec!r} needs sub,quotient orders")
        from .cocycles import cyclic_ses, split_ses
        build = cyclic_ses if kind == "cyclic" else split_ses
        return build(int(parts[0]), int(parts[1]))
    return SES.from_json(_load_json(spec))


def _ints(text: str) -> tuple:
    try:
        return tuple(int(v) for v in text.split(",") if v != "")
    except ValueError:
        raise InputError(f"expected a comma-separated integer list, got {text!r}")


def _coeff(text: str):
    if text in ("Z", "z"):
        return None
    vals = _ints(text)
    if not vals:
        raise InputError("empty coefficient spec")
    return vals[0] if len(vals) == 1 else vals


def _rack_word(arity: int) -> str:
    return {2: "rack", 3: "ternary rack"}.get(arity, f"{arity}-ary rack")


# ---------------------------------------------------------------------------
# check


def _cmd_check(args, report, jobs):
    if args.what == "axioms":
        op = _load_op(args.op)
        props = args.props.split(",") if args.props else ["sd", "rack", "quandle"]
        for p in props:
            if p == "sd":
                report.verdict("self-distributive",
                               is_nary_distributive(op, jobs=jobs))
            elif p == "rack":
                report.verdict(_rack_word(op.arity), is_rack(op, jobs=jobs))
            elif p == "quandle":
                report.verdict("quandle", is_quandle(op, jobs=jobs))
            else:
                raise InputError(f"unknown property {p!r}")
    elif args.what == "mutual":
        op0, op1 = _load_op(args.op), _load_op(args.op1)
        report.verdict("mutually distributive",
                       are_mutually_distributive(op0, op1, jobs=jobs))
    elif args.what == "compat":
        t0, t1 = _load_op(args.op), _load_op(args.op1)
        report.verdict("compatible ternary pair",
                       are_compatible_ternary(t0, t1, jobs=jobs))
    elif args.what == "cocycle":
        op = _load_op(args.op)
        c = _load_cochain(args.cochain)
        if op.arity == 2:
            report.verdict("binary 2-cocycle", is_binary_2cocycle(c, op))
        elif op.arity == 3:
            report.verdict("ternary 2-cocycle", is_ternary_2cocycle(c, op))
        else:
            raise InputError("cocycle conditions cover arity 2 and 3 only")


# ---------------------------------------------------------------------------
# construct


def _cmd_construct(args, report, jobs):
    verify = not args.no_verify
    name = args.name

    def need(flag, value):
        if value is None:
            raise InputError(f"construct {name} needs --{flag}")
        return value

    if name == "affine":
        out = affine_op(need("modulus", args.modulus),
                        need("arity", args.arity),
                        _ints(need("coeffs", args.coeffs)))
    elif name == "projection":
        out = projection_op(need("size", args.size), need("arity", args.arity))
    elif name in ("conj", "core", "heap"):
        g = _load_group(need("group", args.group))
        out = {"conj": conj_quandle, "core": core_quandle, "heap": heap_op}[name](g)
    elif name == "alexander":
        g = _load_group(need("group", args.group))
        out = generalized_alexander(g, _ints(need("auto", args.auto)))
    elif name == "power":
        out = power_op(_load_op(need("op", args.op)),
                       need("exponent", args.exponent), verify=verify)
    elif name == "double-binary":
        out = doubling_binary(_load_op(need("op0", args.op0)),
                              _load_op(need("op1", args.op1)), verify=verify)
    elif name == "double-ternary":
        out = doubling_ternary(_load_op(need("op0", args.op0)),
                               _load_op(need("op1", args.op1)), verify=verify)
    elif name == "f":
        out = f_functor(_load_op(need("op0", args.op0)),
                        _load_op(need("op1", args.op1)), verify=verify)
    elif name == "g":
        out = g_functor(_load_op(need("op0", args.op0)),
                        _load_op(need("op1", args.op1)), verify=verify)
    elif name == "compose":
        out = compose_mn(_load_op(need("op0", args.op0)),
                         _load_op(need("op1", args.op1)), verify=verify)
    elif name == "monoid-product":
        out = monoid_product(_load_op(need("op0", args.op0)),
                             _load_op(need("op1", args.op1)))
    elif name == "product-pair":
        a, b = product_mutual_pair(_load_op(need("op0", args.op0)),
                                   _load_op(need("op1", args.op1)),
                                   verify=verify)
        report.artifact("op0", a.as_json())
        report.artifact("op1", b.as_json())
        return
    elif name == "augmented":
        g = _load_group(need("group", args.group))
        out = augmented_ternary(need("size", args.size), g,
                                _load_json(need("action", args.action)),
                                _load_json(need("pairing", args.pairing)),
                                verify=verify)
    elif name == "extend":
        out = extend(_load_op(need("op", args.op)),
                     _load_cochain(need("cochain", args.cochain)),
                     verify=verify)
    elif name == "extend-pair":
        a, b = extend_mutual_pair(_load_op(need("op0", args.op0)),
                                  _load_op(need("op1", args.op1)),
                                  _load_cochain(need("cochain0", args.cochain0)),
                                  _load_cochain(need("cochain1", args.cochain1)),
                                  verify=verify)
        report.artifact("op0", a.as_json())
        report.artifact("op1", b.as_json())
        return
    elif name == "twist":
        hat = _load_op(need("op", args.op))
        star = _load_op(need("star", args.star))
        word = braid_mod.BraidWord(hat.arity - 1, _ints(need("word", args.word)))
        out = braid_mod.twist_op(hat, star, word, verify=verify)
    else:
        raise InputError(f"unknown construction {name!r}")
    report.artifact("table", out.as_json())


# ---------------------------------------------------------------------------
# homology / cohomology / cocycle


def _homology_target(args):
    if args.pair:
        return [_load_op(p) for p in args.pair]
    if args.op:
        return _load_op(args.op)
    raise InputError("need --op FILE or --pair FILE0 FILE1")


def _group_string(betti: int, torsion) -> str:
    parts = ["Z"] * betti + [f"Z/{d}" for d in torsion]
    return " + ".join(parts) if parts else "0"


def _cmd_homology(args, report, jobs):
    res = homology(_homology_target(args), args.degree, _coeff(args.coeff))
    report.artifact(f"H_{args.degree}", {
        "degree": args.degree, "coefficients": args.coeff,
        "betti": res.betti, "torsion": list(res.torsion),
        "group": _group_string(res.betti, res.torsion)})


def _cmd_cohomology(args, report, jobs):
    coeff = _coeff(args.coeff)
    if coeff is None:
        raise InputError("cohomology solving needs finite coefficients")
    res = cohomology_solve(_homology_target(args), args.degree, coeff)
    content = {
        "degree": args.degree, "coefficients": args.coeff,
        "cocycles": int(res.cocycles.shape[0]),
        "coboundaries": int(res.coboundaries.shape[0]),
        "invariants": list(res.invariants),
        "group": _group_string(0, res.invariants)}
    if args.generators:
        content["cocycle_generators"] = res.cocycles
        content["coboundary_generators"] = res.coboundaries
    report.artifact(f"H^{args.degree}", content)


def _cmd_cocycle(args, report, jobs):
    if args.what == "check":
        op = _load_op(args.op)
        c = _load_cochain(args.cochain)
        if op.arity == 2:
            report.verdict("binary 2-cocycle", is_binary_2cocycle(c, op))
        elif op.arity == 3:
            report.verdict("ternary 2-cocycle", is_ternary_2cocycle(c, op))
        else:
            raise InputError("cocycle conditions cover arity 2 and 3 only")
    elif args.what == "solve":
        _cmd_cohomology(args, report, jobs)
    elif args.what == "extend":
        out = extend(_load_op(args.op), _load_cochain(args.cochain),
                     verify=not args.no_verify)
        report.artifact("table", out.as_json())
    elif args.what == "three-from-ses":
        alpha = three_cocycle_from_ses(_load_cochain(args.cochain),
                                       _load_op(args.op), _load_ses(args.ses),
                                       verify=not args.no_verify)
        report.artifact("cochain", alpha.as_json())
    elif args.what == "cohomologous":
        op = _load_op(args.op)
        same, eta = cocycles_cohomologous(_load_cochain(args.c1),
                                          _load_cochain(args.c2), op)
        report.verdict("cohomologous", same)
        if eta is not None:
            report.artifact("eta", eta.as_json())


def _cmd_chainmap(args, report, jobs):
    op0, op1 = (_load_op(p) for p in args.pair)
    report.verdict("chain map squares commute", verify_chain_map(op0, op1))


# ---------------------------------------------------------------------------
# braid


def _cmd_braid(args, report, jobs):
    if args.what == "act":
        op = _load_op(args.op)
        xs = _ints(args.input)
        word = braid_mod.BraidWord(len(xs), _ints(args.word))
        out = braid_mod.braid_act(op, word, xs)
        report.artifact("action", {"input": list(xs), "word": list(word.word),
                                   "output": list(out)})
    elif args.what == "relations":
        op = _load_op(args.op)
        report.verdict(f"braid relations on X^{args.strands}",
                       braid_mod.verify_braid_relations(op, args.strands))
    elif args.what == "twist":
        hat = _load_op(args.op)
        star = _load_op(args.star)
        word = braid_mod.BraidWord(hat.arity - 1, _ints(args.word))
        out = braid_mod.twist_op(hat, star, word, verify=not args.no_verify)
        report.artifact("table", out.as_json())


# ---------------------------------------------------------------------------
# linear


def _default_pairing(H) -> LinMap:
    ident = LinMap.identity(H.unit.field, H.dim)
    return H.mult @ H.antipode.tensor(ident)


def _cmd_linear(args, report, jobs):
    if args.what == "check-sd":
        obj = SDObject.from_json(_load_json(args.object), verify=False)
        report.verdict("linear self-distributivity", check_nary_sd(obj))
        return
    if args.what == "lie":
        L = LieAlgebraObject.from_json(_load_json(args.object))
        obj = lie_to_binary_sd(L)
        report.verdict("linear self-distributivity", check_nary_sd(obj))
        report.artifact("object", obj.as_json())
        return
    field = Field(args.field)
    H = group_algebra_hopf(_load_group(args.group), field)
    if args.what == "heap":
        obj = hopf_heap(H)
        report.verdict("linear self-distributivity", check_nary_sd(obj))
        report.artifact("object", obj.as_json())
    elif args.what == "adjoint":
        obj = hopf_adjoint_ternary(H)
        report.verdict("linear self-distributivity", check_nary_sd(obj))
        report.artifact("object", obj.as_json())
    elif args.what == "augmented":
        p_map = (LinMap.from_json(_load_json(args.pairing))
                 if args.pairing else _default_pairing(H))
        X = H.comonoid()
        res = check_augmented_hopf(p_map, H, X, H.mult)
        report.verdict("augmented self-distributivity axiom", res)
        if res:
            obj = augmented_operation(p_map, H, X, H.mult, verify=False)
            report.artifact("object", obj.as_json())


# ---------------------------------------------------------------------------
# enumerate


def _cmd_enumerate(args, report, jobs):
    if args.pairs:
        pairs = enumeration.enumerate_mutual_pairs(args.size)
        report.artifact("pairs", {
            "count": len(pairs),
            "pairs": [[a.as_json(), b.as_json()] for a, b in pairs]})
        return
    if args.scan == "full":
        ops = enumeration.enumerate_operations(args.size, args.arity, args.kind)
    elif args.scan == "affine":
        ops = enumeration.enumerate_affine(args.size, args.arity, args.kind)
    elif args.scan == "translations":
        kind = args.kind if args.kind in ("rack", "quandle") else "rack"
        ops = enumeration.enumerate_racks(args.size, args.arity, kind)
    else:
        raise InputError(f"unknown scan {args.scan!r}")
    report.artifact("tables", {"count": len(ops),
                               "tables": [o.as_json() for o in ops]})


# ---------------------------------------------------------------------------
# wiring

HANDLERS = {"check": _cmd_check, "construct": _cmd_construct,
            "homology": _cmd_homology, "cohomology": _cmd_cohomology,
            "cocycle": _cmd_cocycle, "chainmap": _cmd_chainmap,
            "braid": _cmd_braid, "linear": _cmd_linear,
            "enumerate": _cmd_enumerate}


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json"),
                        default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
    common.add_argument("-o", "--output", default=argparse.SUPPRESS)

    top = argparse.ArgumentParser(
        prog="selfdist",
        description="Self-distributive operations: check, construct, compute.")
    top.add_argument("--format", choices=("human", "json"), default="human")
    top.add_argument("--jobs", type=int,
                     default=int(os.environ.get("SELFDIST_JOBS", "1")))
    top.add_argument("-o", "--output", default=None)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common],
                       help="axiom, mutual, compatibility, cocycle checks")
    ps = p.add_subparsers(dest="what", required=True)
    q = ps.add_parser("axioms", parents=[common])
    q.add_argument("op")
    q.add_argument("--props", default=None,
                   help="comma list out of sd,rack,quandle (default all)")
    q = ps.add_parser("mutual", parents=[common])
    q.add_argument("op")
    q.add_argument("op1")
    q = ps.add_parser("compat", parents=[common])
    q.add_argument("op")
    q.add_argument("op1")
    q = ps.add_parser("cocycle", parents=[common])
    q.add_argument("op")
    q.add_argument("cochain")

    p = sub.add_parser("construct", parents=[common],
                       help="run a table construction")
    p.add_argument("name", choices=(
        "affine", "projection", "conj", "core", "heap", "alexander", "power",
        "double-binary", "double-ternary", "f", "g", "compose",
        "monoid-product", "product-pair", "augmented", "extend",
        "extend-pair", "twist"))
    p.add_argument("--modulus", type=int)
    p.add_argument("--arity", type=int)
    p.add_argument("--size", type=int)
    p.add_argument("--coeffs")
    p.add_argument("--group")
    p.add_argument("--auto")
    p.add_argument("--op")
    p.add_argument("--op0")
    p.add_argument("--op1")
    p.add_argument("--star")
    p.add_argument("--word")
    p.add_argument("--exponent", type=int)
    p.add_argument("--action")
    p.add_argument("--pairing")
    p.add_argument("--cochain")
    p.add_argument("--cochain0")
    p.add_argument("--cochain1")
    p.add_argument("--no-verify", action="store_true",
                   help="skip hypothesis checks (unsafe)")

    for cmd in ("homology", "cohomology"):
        p = sub.add_parser(cmd, parents=[common])
        p.add_argument("--op")
        p.add_argument("--pair", nargs=2)
        p.add_argument("--degree", type=int, required=True)
        p.add_argument("--coeff", default="Z" if cmd == "homology" else None,
                       required=cmd == "cohomology")
        if cmd == "cohomology":
            p.add_argument("--generators", action="store_true")

    p = sub.add_parser("cocycle", parents=[common])
    ps = p.add_subparsers(dest="what", required=True)
    q = ps.add_parser("check", parents=[common])
    q.add_argument("--op", required=True)
    q.add_argument("--cochain", required=True)
    q = ps.add_parser("solve", parents=[common])
    q.add_argument("--op")
    q.add_argument("--pair", nargs=2)
    q.add_argument("--degree", type=int, required=True)
    q.add_argument("--coeff", required=True)
    q.add_argument("--generators", action="store_true")
    q = ps.add_parser("extend", parents=[common])
    q.add_argument("--op", required=True)
    q.add_argument("--cochain", required=True)
    q.add_argument("--no-verify", action="store_true")
    q = ps.add_parser("three-from-ses", parents=[common])
    q.add_argument("--op", required=True)
    q.add_argument("--cochain", required=True)
    q.add_argument("--ses", required=True,
                   help="sequence file, or cyclic:SUB,QUOT / split:SUB,QUOT")
    q.add_argument("--no-verify", action="store_true")
    q = ps.add_parser("cohomologous", parents=[common])
    q.add_argument("--op", required=True)
    q.add_argument("--c1", required=True)
    q.add_argument("--c2", required=True)

    p = sub.add_parser("chainmap", parents=[common])
    ps = p.add_subparsers(dest="what", required=True)
    q = ps.add_parser("verify", parents=[common])
    q.add_argument("--pair", nargs=2, required=True)

    p = sub.add_parser("braid", parents=[common])
    ps = p.add_subparsers(dest="what", required=True)
    q = ps.add_parser("act", parents=[common])
    q.add_argument("--op", required=True)
    q.add_argument("--word", required=True, help="signed letters, e.g. 1,1,-2")
    q.add_argument("--input", required=True, help="tuple to act on, e.g. 0,1,2")
    q = ps.add_parser("relations", parents=[common])
    q.add_argument("--op", required=True)
    q.add_argument("--strands", type=int, default=3)
    q = ps.add_parser("twist", parents=[common])
    q.add_argument("--op", required=True)
    q.add_argument("--star", required=True)
    q.add_argument("--word", required=True)
    q.add_argument("--no-verify", action="store_true")

    p = sub.add_parser("linear", parents=[common])
    ps = p.add_subparsers(dest="what", required=True)
    q = ps.add_parser("check-sd", parents=[common])
    q.add_argument("--object", required=True)
    q = ps.add_parser("lie", parents=[common])
    q.add_argument("--object", required=True)
    for name in ("heap", "adjoint", "augmented"):
        q = ps.add_parser(name, parents=[common])
        q.add_argument("--group", required=True,
                       help="group file or cyclic:N / dihedral:N / symmetric:N")
        q.add_argument("--field", type=int, required=True)
        if name == "augmented":
            q.add_argument("--pairing")

    p = sub.add_parser("enumerate", parents=[common])
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--arity", type=int, default=2)
    p.add_argument("--kind", default="sd",
                   choices=("all", "sd", "rack", "quandle"))
    p.add_argument("--scan", default="full",
                   choices=("full", "affine", "translations"))
    p.add_argument("--pairs", action="store_true",
                   help="mutually distributive binary pairs instead of tables")
    return top


def _write_output(report: Report, path: str):
    if not report.artifacts:
        raise InputError("--output given but the command produced no artifact")
    if len(report.artifacts) == 1:
        payload = report.artifacts[0]["content"]
    else:
        payload = {a["name"]: a["content"] for a in report.artifacts}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
    for a in report.artifacts:
        a["path"] = path
        a["content"] = None


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    args = parser.parse_args(argv)
    report = Report(argv)
    start = time.perf_counter()
    try:
        HANDLERS[args.command](args, report, max(1, args.jobs))
        if args.output:
            _write_output(report, args.output)
    except PreconditionError as exc:
        result = getattr(exc, "result", None)
        if isinstance(result, CheckResult):
            report.verdict("construction hypothesis", result, detail=str(exc))
        else:
            report.verdict("construction hypothesis", False, detail=str(exc))
    except InputError as exc:
        report.seconds = time.perf_counter() - start
        if args.format == "json":
            out = report.as_json()
            out["error"] = str(exc)
            print(json.dumps(out, indent=2))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 2
    report.seconds = time.perf_counter() - start
    if args.format == "json":
        print(json.dumps(report.as_json(), indent=2))
    else:
        print(report.render_human())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
