"""Command-line frontend: ``foldedcodes <command> ...`` (or ``python3 -m foldedcodes``).

Block indices given with ``--blocks`` are 1-based.  Exit status is 0 on
success, 1 on domain errors or unreadable files, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from foldedcodes import bounds, code, constructions, pseudoarc, qmds, wdist
from foldedcodes.errors import DomainError
from foldedcodes.gf import GF, FieldExtension, field_create, power_basis


class UsageError(Exception):
    pass


def _ints(text: str | None, what: str) -> list[int]:
    if text is None:
        raise UsageError(f"{what} is required")
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"{what} must be a comma-separated list of integers, got {text!r}") from None


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for this command")


def _field(args):
    if args.p is not None:
        return field_create(args.p, args.e or 1)
    if args.q is not None:
        return GF(args.q)
    return GF(2)


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload, indent=2) if args.json else text)


def _emit_code(args, c: code.LinearCode, note: str = "") -> None:
    if args.out:
        code.save_code(c, args.out)
        summary = {"out": str(args.out), "n": c.n, "r": c.r, "k": c.k, "q": c.q}
        _emit(args, summary, f"wrote [n={c.n}, r={c.r}, k={c.k}] code over F_{c.q} to {args.out}{note}")
    else:
        print(json.dumps(c.to_json()))


def _blocks(args, n: int) -> list[int]:
    idx = _ints(args.blocks, "--blocks")
    if any(not 1 <= i <= n for i in idx):
        raise DomainError(f"--blocks entries must lie in 1..{n}")
    return [i - 1 for i in idx]


def _rng(args) -> np.random.Generator:
    _need(args, "seed")
    return np.random.default_rng(args.seed)


# -- construct -------------------------------------------------------------


def cmd_construct(args) -> None:
    kind = args.kind
    if kind == "binary-long":
        _need(args, "r")
        c = constructions.binary_long_code(args.r)
    elif kind == "repetition-dual":
        _need(args, "n", "r")
        c = constructions.repetition_dual_code(args.n, args.r, _field(args))
    elif kind == "pi":
        _need(args, "n", "r", "k")
        F = _field(args)
        method = args.method or "distinct"
        if method in ("distinct", "repeated"):
            moduli = constructions.split_moduli(F, args.r, args.n, method)
        elif method == "irreducible":
            moduli = constructions.irreducible_moduli(F, args.r, args.n)
        elif method == "random":
            moduli = constructions.random_coprime_moduli(F, args.r, args.n, _rng(args))
        else:
            raise UsageError(f"unknown moduli method {method!r} (distinct|repeated|irreducible|random)")
        c = constructions.pi_code(F, moduli, args.k)
    elif kind == "subcode":
        _need(args, "in_", "k")
        c = constructions.qmds_subcode(code.load_code(args.in_), args.k)
    elif kind == "expand":
        # input: an F_{q^r}-linear code stored with block width 1
        _need(args, "in_")
        src = code.load_code(args.in_)
        if src.r != 1:
            raise DomainError("expand needs a code over the big field with block width 1")
        base = _field(args)
        ext = FieldExtension(src.field, base)
        basis = power_basis(ext)
        if args.method == "dual":
            basis = basis.dual
        elif args.method not in (None, "power"):
            raise UsageError(f"unknown basis {args.method!r} (power|dual)")
        c = code.expand_code(src.generator, basis)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(kind)
    _emit_code(args, c)


# -- analysis --------------------------------------------------------------


def cmd_classify(args) -> None:
    _need(args, "in_")
    c = code.load_code(args.in_)
    method = args.method or "by_minors"
    if method == "auto":
        res = qmds.classify_auto(c, args.budget)
    else:
        res = qmds.classify(c, method, args.budget)
    _emit(args, res.to_json(), str(res))


def _dist_text(A: wdist.WeightDistribution) -> str:
    text = ",".join(str(a) for a in A.counts)
    if not A.valid:
        text += f"  (negative at {list(A.negative)}: no such dually QMDS code)"
    return text


def cmd_wdist(args) -> None:
    method = args.method or "exhaustive"
    if method == "formula":
        if args.params:
            n, r, k, q = _ints(args.params, "--params")
        else:
            _need(args, "in_")
            c = code.load_code(args.in_)
            n, r, k, q = c.n, c.r, c.k, c.q
        A = wdist.wdist_formula(n, r, k, q)
        _emit(args, A.to_json(), _dist_text(A))
        return
    if method == "reconstruct" and args.params:
        vals = _ints(args.params, "--params")
        if len(vals) != 6:
            raise UsageError("reconstruct --params takes n,r,k,q,d,d_perp")
        head = _ints(args.head, "--head") if args.head else []
        A = wdist.reconstruct_distribution(head, *vals)
        _emit(args, A.to_json(), _dist_text(A))
        return
    _need(args, "in_")
    c = code.load_code(args.in_)
    if method == "exhaustive":
        A = wdist.wdist_exhaustive(c, args.budget)
        _emit(args, A.to_json(), _dist_text(A))
    elif method == "macwilliams-check":
        A = wdist.wdist_exhaustive(c, args.budget)
        B = wdist.wdist_exhaustive(code.dual(c), args.budget)
        res = wdist.macwilliams_check(A, B)
        ok = all(x == 0 for x in res)
        payload = {"A": A.to_json()["A"], "A_perp": B.to_json()["A"], "residuals": [str(x) for x in res], "ok": ok}
        _emit(args, payload, f"A      = {_dist_text(A)}\nA_perp = {_dist_text(B)}\nresiduals = {','.join(map(str, res))}\n" + ("ok" if ok else "FAILED"))
    elif method == "reconstruct":
        A = wdist.wdist_exhaustive(c, args.budget)
        d = code.min_distance(c, "rank_blocks")
        dp = code.dual_distance_by_rank(c.canonical, c.n, c.r)
        dp = c.n + 1 if dp is None else dp
        head = A.counts[d : c.n - dp + 1]
        R = wdist.reconstruct_distribution(head, c.n, c.r, c.k, c.q, d, dp)
        match = R.counts == A.counts
        payload = dict(R.to_json(), head=[str(a) for a in head], matches_exhaustive=match)
        _emit(args, payload, f"{_dist_text(R)}\nmatches exhaustive: {'yes' if match else 'no'}")
    else:
        raise UsageError(f"unknown wdist method {method!r}")


def _subcode_cmd(args, op) -> None:
    _need(args, "in_", "blocks")
    c = code.load_code(args.in_)
    _emit_code(args, op(c, _blocks(args, c.n)))


def cmd_restrict(args) -> None:
    _subcode_cmd(args, code.restrict)


def cmd_shorten(args) -> None:
    _subcode_cmd(args, code.shorten)


def cmd_bounds(args) -> None:
    _need(args, "q", "r", "k")
    rep = bounds.dually_qmds_bounds(args.q, args.r, args.k, args.n)
    payload = rep.to_json()
    text = rep.table()
    if args.d is not None:
        if args.d >= 3:
            hb = bounds.length_bound_hamming(args.d, args.q, args.r, args.k)
            payload["length_bound_hamming"] = hb
            text += f"\n  {'n (Hamming, d=' + str(args.d) + ')':<22} <= {hb}"
        else:
            payload["length_bound_hamming"] = None
            text += "\n  Hamming length bound inapplicable for d < 3"
    _emit(args, payload, text)


def cmd_density(args) -> None:
    _need(args, "n", "r", "k", "q", "trials", "seed")
    res = bounds.density_experiment(args.n, args.r, args.k, args.q, args.trials, args.seed)
    print(json.dumps(res.to_json(), indent=2 if args.json else None))


def cmd_pseudoarc(args) -> None:
    _need(args, "in_")
    if args.action == "from-code":
        a = pseudoarc.arc_from_code(code.load_code(args.in_))
        if args.out:
            pseudoarc.save_arc(a, args.out)
            _emit(args, {"out": str(args.out), "n": a.n, "r": a.r, "m": a.m}, f"wrote arc n={a.n} r={a.r} m={a.m} to {args.out}")
        else:
            print(json.dumps(a.to_json()))
    elif args.action == "to-code":
        _emit_code(args, pseudoarc.code_from_arc(pseudoarc.load_arc(args.in_)))
    else:
        p = pseudoarc.arc_params(pseudoarc.load_arc(args.in_))
        text = f"n={p.n} r={p.r} m={p.m} t={p.t} {'nondegenerate' if p.nondegenerate else 'degenerate'}"
        _emit(args, p._asdict(), text)


def cmd_isometry(args) -> None:
    _need(args, "in_")
    c = code.load_code(args.in_)
    if args.iso:
        with open(args.iso) as fh:
            iso = code.Isometry.from_json(c.field, json.load(fh))
    else:
        iso = code.Isometry.random(c.field, c.n, c.r, _rng(args))
    if args.action == "apply":
        _emit_code(args, code.apply_isometry(c, iso))
        return
    w = pseudoarc.equivalence_witness(c, iso)
    payload = {"isometry": iso.to_json(), "B": w.B.to_json(), "sigma": list(w.iso.sigma), "verified": w.verify()}
    rows = "\n".join(" ".join(str(x) for x in row) for row in w.B.entries.tolist())
    _emit(args, payload, f"B =\n{rows}\nsigma = {list(w.iso.sigma)}\nverified: {w.verify()}")


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    for flag in ("--q", "--p", "--e", "--r", "--n", "--k", "--d", "--seed", "--trials", "--budget"):
        common.add_argument(flag, type=int)
    common.add_argument("--in", dest="in_", type=Path, metavar="PATH")
    common.add_argument("--out", type=Path, metavar="PATH")
    common.add_argument("--method", metavar="NAME")
    common.add_argument("--blocks", metavar="I,J,...", help="1-based block indices")
    common.add_argument("--params", metavar="N,R,K,Q[,D,DPERP]")
    common.add_argument("--head", metavar="A_d,...", help="known head for wdist reconstruct")
    common.add_argument("--iso", type=Path, metavar="PATH", help="isometry JSON file")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="foldedcodes", description="Codes under the folded Hamming metric.")
    sub = p.add_subparsers(dest="command", required=True)
    sp = sub.add_parser("construct", parents=[common])
    sp.add_argument("kind", choices=["pi", "binary-long", "repetition-dual", "subcode", "expand"])
    sp.set_defaults(func=cmd_construct)
    for name, func in (
        ("classify", cmd_classify),
        ("wdist", cmd_wdist),
        ("restrict", cmd_restrict),
        ("shorten", cmd_shorten),
        ("bounds", cmd_bounds),
        ("density", cmd_density),
    ):
        sub.add_parser(name, parents=[common]).set_defaults(func=func)
    sp = sub.add_parser("pseudoarc", parents=[common])
    sp.add_argument("action", choices=["from-code", "to-code", "params"])
    sp.set_defaults(func=cmd_pseudoarc)
    sp = sub.add_parser("isometry", parents=[common])
    sp.add_argument("action", choices=["apply", "dual-witness"])
    sp.set_defaults(func=cmd_isometry)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on usage errors
    try:
        args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"foldedcodes: error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"foldedcodes: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
