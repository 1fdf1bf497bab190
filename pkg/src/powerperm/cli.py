"""Command-line front end.

Every command is a thin adapter over the library: identical inputs produce
byte-identical output. Exit codes: 0 success, 2 usage or validation error,
3 domain failure (for example no preimage for a root query).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, binomial, coding
from .errors import PowerPermError
from .padic import PrimeBase, valuation as padic_valuation

_EXIT_OK = 0
_EXIT_USAGE = 2
_EXIT_DOMAIN = 3


def _emit(ns: argparse.Namespace, text: str) -> None:
    # One trailing newline, LF endings, no locale formatting.
    out_path = getattr(ns, "out", None)
    if out_path:
        with open(out_path, "w", newline="\n") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _json(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _max_entries(ns: argparse.Namespace) -> int:
    return 1 << ns.max_table_bits


def _coding_params(ns: argparse.Namespace) -> coding.CodingParams:
    return coding.CodingParams.make(ns.p, ns.n, ns.l, ns.r, getattr(ns, "j", 0))


def cmd_shift(ns: argparse.Namespace) -> int:
    base = PrimeBase(ns.p)
    power = coding.PowerSpec.from_power(ns.n, base)
    alpha = coding.shift(power, base) + power.n * ns.j
    if ns.format == "json":
        _emit(ns, _json({"p": ns.p, "n": ns.n, "j": ns.j,
                         "q": power.q, "k": power.k, "alpha": alpha}))
    elif ns.format == "csv":
        _emit(ns, "p,n,j,q,k,alpha\n"
              f"{ns.p},{ns.n},{ns.j},{power.q},{power.k},{alpha}")
    elif ns.j:
        _emit(ns, f"alpha'={alpha} (q={power.q}, k={power.k}, j={ns.j})")
    else:
        _emit(ns, f"alpha={alpha} (q={power.q}, k={power.k})")
    return _EXIT_OK


def cmd_table(ns: argparse.Namespace) -> int:
    params = _coding_params(ns)
    table = coding.permutation_table(params, _max_entries(ns))
    if ns.format == "json":
        _emit(ns, _json({"p": ns.p, "n": ns.n, "l": ns.l, "r": ns.r, "j": ns.j,
                         "alpha": coding.extended_shift(params),
                         "image": list(table.image)}))
    elif ns.format == "csv":
        rows = "\n".join(f"{x},{z}" for x, z in enumerate(table.image))
        _emit(ns, "x,z\n" + rows)
    else:
        _emit(ns, " ".join(str(z) for z in table.image))
    return _EXIT_OK


def cmd_encode(ns: argparse.Namespace) -> int:
    params = _coding_params(ns)
    z = coding.encode(params, ns.x)
    if ns.format == "json":
        _emit(ns, _json({"p": ns.p, "n": ns.n, "l": ns.l, "r": ns.r, "j": ns.j,
                         "x": ns.x, "z": z}))
    elif ns.format == "csv":
        _emit(ns, f"x,z\n{ns.x},{z}")
    else:
        _emit(ns, str(z))
    return _EXIT_OK


def cmd_decode(ns: argparse.Namespace) -> int:
    params = _coding_params(ns)
    x = coding.decode(params, ns.code, max_entries=_max_entries(ns))
    if ns.format == "json":
        _emit(ns, _json({"p": ns.p, "n": ns.n, "l": ns.l, "r": ns.r, "j": ns.j,
                         "code": ns.code, "x": x}))
    elif ns.format == "csv":
        _emit(ns, f"code,x\n{ns.code},{x}")
    else:
        _emit(ns, str(x))
    return _EXIT_OK


def _root_candidates(ns: argparse.Namespace) -> list[dict[str, int]]:
    base = PrimeBase(ns.p)
    power = coding.PowerSpec.from_power(ns.n, base)
    p = ns.p
    v = padic_valuation(ns.z, base) if ns.z % p == 0 else 0
    if v % ns.n:
        return []
    j = v // ns.n
    w = ns.z // p**v
    alpha = coding.shift(power, base)
    # Low digits of the unit part pin the residue; the window pins the rest.
    check_mod = p ** (power.k + ns.l + 1)
    out = []
    for r in range(1, p):
        if pow(r, ns.n, p**alpha) != w % p**alpha:
            continue
        params = coding.CodingParams(p=base, power=power, l=ns.l, r=r, j=j)
        code = (w // p**alpha) % p**ns.l
        xp = coding.decode(params, code, max_entries=_max_entries(ns))
        unit = p * xp + r
        if pow(unit, ns.n, check_mod) != w % check_mod:
            continue
        out.append({"r": r, "xprime": xp, "x": p**j * unit,
                    "modulus": p ** (j + ns.l + 1)})
    return out


def cmd_root(ns: argparse.Namespace) -> int:
    candidates = _root_candidates(ns)
    if ns.format == "json":
        _emit(ns, _json({"p": ns.p, "n": ns.n, "l": ns.l, "z": ns.z,
                         "candidates": candidates}))
    elif ns.format == "csv":
        rows = "\n".join(f"{c['r']},{c['xprime']},{c['x']},{c['modulus']}"
                         for c in candidates)
        _emit(ns, "r,xprime,x,modulus" + ("\n" + rows if rows else ""))
    elif candidates:
        _emit(ns, "\n".join(
            f"x = {c['x']} (mod {c['modulus']})  [x' = {c['xprime']}, r = {c['r']}]"
            for c in candidates))
    else:
        _emit(ns, "no preimage")
    return _EXIT_OK if candidates else _EXIT_DOMAIN


def cmd_verify(ns: argparse.Namespace) -> int:
    base = PrimeBase(ns.p)
    power = coding.PowerSpec.from_power(ns.n, base)
    results = []
    for l in range(1, ns.lmax + 1):
        for r in range(1, ns.p):
            for j in (0, 1):
                params = coding.CodingParams(p=base, power=power, l=l, r=r, j=j)
                audit = analysis.audit_bijectivity(params, _max_entries(ns))
                results.append((l, r, j, params.size(), audit.ok))
    failures = sum(1 for rec in results if not rec[4])
    if ns.format == "json":
        _emit(ns, _json({"p": ns.p, "n": ns.n, "results": [
            {"l": l, "r": r, "j": j, "size": size, "ok": ok}
            for l, r, j, size, ok in results], "all_pass": failures == 0}))
    elif ns.format == "csv":
        rows = "\n".join(f"{l},{r},{j},{size},{'pass' if ok else 'FAIL'}"
                         for l, r, j, size, ok in results)
        _emit(ns, "l,r,j,size,status\n" + rows)
    else:
        lines = [f"l={l} r={r} j={j} size={size} {'pass' if ok else 'FAIL'}"
                 for l, r, j, size, ok in results]
        tail = (f"all pass ({len(results)} tables)" if failures == 0
                else f"FAILURES: {failures} of {len(results)} tables")
        _emit(ns, "\n".join(lines + [tail]))
    return _EXIT_OK if failures == 0 else _EXIT_DOMAIN


def cmd_valuation(ns: argparse.Namespace) -> int:
    base = PrimeBase(ns.p)
    lemma_form = ns.k is not None or ns.j is not None
    general_form = ns.top is not None or ns.bottom is not None
    if lemma_form == general_form:
        raise PowerPermError("give either --k and --j, or --top and --bottom")
    reports = []
    if lemma_form:
        if ns.k is None or ns.j is None:
            raise PowerPermError("the closed-form query needs both --k and --j")
        reports.append(binomial.valuation_lemma1(base, ns.k, ns.j))
        top, bottom = base.p**ns.k, ns.j
    else:
        if ns.top is None or ns.bottom is None:
            raise PowerPermError("the general query needs both --top and --bottom")
        top, bottom = ns.top, ns.bottom
    reports.append(binomial.kummer_carries(base, top, bottom))
    reports.append(binomial.valuation_legendre(base, top, bottom))
    if top <= binomial.DIRECT_BOUND:
        reports.append(binomial.valuation_direct(base, top, bottom))
    agree = len({rep.valuation for rep in reports}) == 1
    if ns.format == "json":
        _emit(ns, _json({"p": ns.p, "top": top, "bottom": bottom,
                         "methods": {rep.method: rep.valuation for rep in reports},
                         "agree": agree}))
    elif ns.format == "csv":
        rows = "\n".join(f"{ns.p},{top},{bottom},{rep.method},{rep.valuation}"
                         for rep in reports)
        _emit(ns, "p,top,bottom,method,valuation\n" + rows)
    else:
        fields = " ".join(f"{rep.method}={rep.valuation}" for rep in reports)
        _emit(ns, f"{fields} {'AGREE' if agree else 'DISAGREE'}")
    return _EXIT_OK if agree else _EXIT_DOMAIN


def cmd_plotdata(ns: argparse.Namespace) -> int:
    if not ns.out:
        raise PowerPermError("plotdata requires --out")
    params = _coding_params(ns)
    data = analysis.export_scatter(params, _max_entries(ns))
    with open(ns.out, "w", newline="\n") as fh:
        fh.write("x,z\n")
        for x, z in data.points:
            fh.write(f"{x},{z}\n")
    sys.stdout.write(f"wrote {len(data.points)} rows to {ns.out}\n")
    return _EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "csv", "json"),
                        default="plain", help="output format (default plain)")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--max-table-bits", type=_positive, default=coding.TABLE_BITS,
                        help="refuse enumerations beyond 2**BITS entries")

    parser = argparse.ArgumentParser(
        prog="powerperm",
        description="Permutations induced on base-p digit blocks by x -> x**n.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("shift", parents=[common],
                        help="digit position where the permuted window starts")
    sp.add_argument("--p", type=_positive, required=True)
    sp.add_argument("--n", type=_positive, required=True)
    sp.add_argument("--j", type=_non_negative, default=0)
    sp.set_defaults(func=cmd_shift)

    for name, func, extra in (
        ("table", cmd_table, ()),
        ("encode", cmd_encode, ("x",)),
        ("decode", cmd_decode, ("code",)),
        ("plotdata", cmd_plotdata, ()),
    ):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--p", type=_positive, required=True)
        sp.add_argument("--n", type=_positive, required=True)
        sp.add_argument("--l", type=_positive, required=True)
        sp.add_argument("--r", type=_non_negative, required=True)
        sp.add_argument("--j", type=_non_negative, default=0)
        for flag in extra:
            sp.add_argument(f"--{flag}", type=_non_negative, required=True)
        sp.set_defaults(func=func)

    sp = sub.add_parser("root", parents=[common],
                        help="recover x from an exact power x**n")
    sp.add_argument("--p", type=_positive, required=True)
    sp.add_argument("--n", type=_positive, required=True)
    sp.add_argument("--l", type=_positive, required=True)
    sp.add_argument("--z", type=_positive, required=True)
    sp.set_defaults(func=cmd_root)

    sp = sub.add_parser("verify", parents=[common],
                        help="audit bijectivity over a parameter sweep")
    sp.add_argument("--p", type=_positive, required=True)
    sp.add_argument("--n", type=_positive, required=True)
    sp.add_argument("--lmax", type=_positive, required=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("valuation", parents=[common],
                        help="p-adic valuation of a binomial coefficient")
    sp.add_argument("--p", type=_positive, required=True)
    sp.add_argument("--k", type=_positive, default=None)
    sp.add_argument("--j", type=_positive, default=None)
    sp.add_argument("--top", type=_non_negative, default=None)
    sp.add_argument("--bottom", type=_non_negative, default=None)
    sp.set_defaults(func=cmd_valuation)

    return parser


def main(argv: list[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(1_000_000)  # accept very large --z values
    ns = build_parser().parse_args(argv)
    try:
        return ns.func(ns)
    except PowerPermError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
