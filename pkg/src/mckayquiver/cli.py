"""Command-line front end: ``mckayquiver <subcommand> ...``.

Exit status is 2 for bad input, 1 when a verification fails and 0 otherwise.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from .characters import (
    DEFAULT_BOUND,
    OracleBoundError,
    character_table,
    verify_quiver_gr1n,
    verify_quiver_grpn,
)
from .clifford import fundamental_domain, irreps_grpn, parse_hirrep
from .cyclotomic import Cyclo
from .mckay import (
    ResSummand,
    ind_H_to_G,
    induce_from_product,
    mckay_grpn,
    res_G_to_H,
    restrict_to_product,
)
from .partitions import count_multipartitions, parse_multipartition

SCHEMA_VERSION = 1
VERTEX_LIMIT = 10**6


class UsageError(ValueError):
    """Bad command-line input; reported with exit status 2."""


def _dump(obj) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, **obj}, indent=2)


def _check_group(r: int, p: int, n: int) -> None:
    if r < 1 or p < 1 or n < 1:
        raise UsageError("r, p and n must be positive")
    if r % p:
        raise UsageError(f"p={p} does not divide r={r}")


def _guard(r: int, n: int, force: bool) -> None:
    count = count_multipartitions(r, n)
    if count > VERTEX_LIMIT and not force:
        raise UsageError(f"G({r},1,{n}) has {count} irreducibles (limit {VERTEX_LIMIT}); pass --force to proceed")


# -- subcommands -----------------------------------------------------------------

def cmd_quiver(args) -> int:
    _check_group(args.r, args.p, args.n)
    if args.p == 1 and args.r == 1 and args.n < 2:
        raise UsageError("the S_n quiver needs n >= 2")
    _guard(args.r, args.n, args.force)
    q = mckay_grpn(args.r, args.p, args.n)
    if args.format == "json":
        print(q.to_json())
    elif args.format == "dot":
        sys.stdout.write(q.to_dot())
    else:
        print(f"G({args.r},{args.p},{args.n}): {len(q.keys)} vertices, {sum(m for _, _, m in q.arrows)} arrows")
        for s, t, m in q.arrows:
            mult = f" x{m}" if m > 1 else ""
            print(f"  {q.labels[s]} -> {q.labels[t]}{mult}")
    return 0


def cmd_irreps(args) -> int:
    _check_group(args.r, args.p, args.n)
    _guard(args.r, args.n, args.force)
    rows = []
    for h in irreps_grpn(args.r, args.p, args.n):
        dom = fundamental_domain(h)
        rows.append({
            "label": h.text(), "dim": h.dim, "orbit": h.orbit.text(), "t": h.t,
            "u": h.orbit.u, "b": h.orbit.b, "domain": [dom.start, dom.stop - 1],
        })
    if args.format == "json":
        print(_dump({"r": args.r, "p": args.p, "n": args.n, "irreps": rows}))
    else:
        print(f"{'label':<24}{'dim':>6}{'u':>4}{'b':>4}  domain")
        for row in rows:
            lo, hi = row["domain"]
            print(f"{row['label']:<24}{row['dim']:>6}{row['u']:>4}{row['b']:>4}  {lo}..{hi}")
    return 0


def cmd_branch(args) -> int:
    if args.r < 1 or args.n < 1:
        raise UsageError("r and n must be positive")
    kind, _, param = args.direction.partition(":")
    if kind == "ind-H":
        p = _int(param, "p")
        _check_group(args.r, p, args.n)
        h = parse_hirrep(args.rep, p)
        _check_shape(h.orbit.rep, args.r, args.n)
        out = [lam.text() for lam in ind_H_to_G(h)]
    else:
        lam = parse_multipartition(args.rep)
        if kind == "res-product":
            _check_shape(lam, args.r, args.n)
            out = [s.text() for s in restrict_to_product(lam)]
        elif kind == "ind-product":
            _check_shape(lam, args.r, args.n - 1)
            color = _int(param, "color")
            if not 0 <= color < args.r:
                raise UsageError(f"color must lie in 0..{args.r - 1}")
            out = [mu.text() for mu in induce_from_product(ResSummand(lam, color), args.r)]
        elif kind == "res-H":
            p = _int(param, "p")
            _check_group(args.r, p, args.n)
            _check_shape(lam, args.r, args.n)
            out = [h.text() for h in res_G_to_H(lam, p)]
        else:
            raise UsageError(f"unknown direction {args.direction!r}")
    if args.format == "json":
        print(_dump({"rep": args.rep, "direction": args.direction, "summands": out}))
    else:
        print(" + ".join(out) if out else "0")
    return 0


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"expected an integer {what}, got {text!r}") from None


def _check_shape(lam, r: int, n: int) -> None:
    if len(lam) != r or lam.size != n:
        raise UsageError(f"{lam.text()} is not a multipartition of {n} with {r} components")


def cmd_verify(args) -> int:
    _check_group(args.r, args.p, args.n)
    if args.p == 1:
        if args.r == 1 and args.n < 2:
            raise UsageError("the S_n quiver needs n >= 2")
        report = verify_quiver_gr1n(args.r, args.n, args.bound)
    else:
        report = verify_quiver_grpn(args.r, args.p, args.n, args.bound)
    if args.format == "json":
        print(report.to_json())
    else:
        print(f"G({args.r},{args.p},{args.n}): {report.status} ({report.checked} entries checked)")
        for mm in report.mismatches:
            print("  " + json.dumps(mm))
    return 0 if report.ok else 1


def cmd_chartable(args) -> int:
    if args.r < 1 or args.n < 1:
        raise UsageError("r and n must be positive")
    _guard(args.r, args.n, args.force)
    table = character_table(args.r, args.n)
    if args.format == "json":
        print(table.to_json())
        return 0
    cells = [[str(v) for v in row] for row in table.values]
    heads = [c.text() for c in table.classes]
    labels = [lam.text() for lam in table.irreps]
    width = max(len(s) for s in heads + [x for row in cells for x in row])
    lw = max(len(s) for s in labels)
    print(" " * lw + " | " + " ".join(h.rjust(width) for h in heads))
    print(" " * lw + " | " + " ".join(str(c.class_size).rjust(width) for c in table.classes))
    for lab, row in zip(labels, cells):
        print(lab.ljust(lw) + " | " + " ".join(x.rjust(width) for x in row))
    return 0


_TERM = re.compile(r"([+-]?)([0-9/]*)\*?(?:z\^?(-?\d+)|(z))?")


def _parse_coeff(token: str, m: int) -> Cyclo:
    """Read a coefficient like ``3/2``, ``-z^2`` or ``1+2*z`` with z a primitive m-th root."""
    s = token.replace(" ", "")
    if not s:
        raise UsageError("empty coefficient")
    total, pos = Cyclo.rational(0, m), 0
    while pos < len(s):
        mt = _TERM.match(s, pos)
        if not mt or mt.end() == pos:
            raise UsageError(f"cannot read coefficient {token!r}")
        sign, num, exp, bare = mt.groups()
        if not num and exp is None and not bare:
            raise UsageError(f"cannot read coefficient {token!r}")
        try:
            q = Fraction(num) if num else Fraction(1)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad number in {token!r}") from None
        if sign == "-":
            q = -q
        k = int(exp) if exp is not None else (1 if bare else 0)
        total = total + Cyclo.zeta(m, k) * Cyclo.rational(q, m)
        pos = mt.end()
    return total


def _load_ideal(spec: str, model):
    from .lusztig.algebra import QuadraticIdeal

    n, m = model.dim, model.order_m
    if spec == "free":
        return QuadraticIdeal.free(n, m)
    if spec == "sym":
        return QuadraticIdeal.symmetric(n, m)
    if spec == "ext":
        return QuadraticIdeal.exterior(n, m)
    if spec.startswith("custom:"):
        path = Path(spec[len("custom:"):])
        try:
            lines = path.read_text().splitlines()
        except OSError as exc:
            raise UsageError(f"cannot read ideal file: {exc}") from None
        rows = []
        for line in lines:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = [t for t in re.split(r"[,\s]+", line) if t]
            if len(tokens) != n * n:
                raise UsageError(f"ideal line needs {n * n} coefficients, got {len(tokens)}")
            rows.append([_parse_coeff(t, m) for t in tokens])
        return QuadraticIdeal.from_rows(n, rows, m)
    raise UsageError(f"unknown ideal {spec!r}")


def _lusztig_dot(deg1, rels) -> str:
    names = deg1.model.irrep_names()
    lines = [f'digraph "{deg1.model.name}" {{']
    for i, nm in enumerate(names):
        lines.append(f'  v{i} [label="{nm}"];')
    for a in deg1.arrows:
        lines.append(f'  v{a.src} -> v{a.dst} [label="{a.name}"];')
    lines.append("}")
    out = "\n".join(lines) + "\n"
    if rels is not None:
        out += "".join(f"// {names[r.src]} -> {names[r.dst]}: {r.text()}\n" for r in rels.all())
    return out


def cmd_lusztig(args) -> int:
    from .lusztig.algebra import invariant_degree1, relations_degree2, to_json
    from .lusztig.groups import builtin_reps
    from .lusztig.lettered import D4_LETTERS, S3_LETTERS, lettered_degree1

    try:
        model = builtin_reps(args.group)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ideal = _load_ideal(args.ideal, model)
    # the two small examples get their customary letter names
    letters = {"d4": D4_LETTERS, "s3": S3_LETTERS}.get(args.group.strip().lower())
    deg1 = lettered_degree1(model, letters) if letters else invariant_degree1(model)
    try:
        rels = relations_degree2(deg1, ideal)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fmt = args.out
    if fmt == "json":
        print(to_json(deg1, rels))
    elif fmt == "dot":
        sys.stdout.write(_lusztig_dot(deg1, rels))
    else:
        names = model.irrep_names()
        print(f"{model.name}: |G| = {model.order}, {len(names)} vertices, {len(deg1.arrows)} arrows")
        for a in deg1.arrows:
            print(f"  arrow {a.name}: {names[a.src]} -> {names[a.dst]}")
        print(f"relations for ideal {ideal.tag}: {rels.total()}")
        for r in rels.all():
            print(f"  {names[r.src]} -> {names[r.dst]}: {r.text()}")
    return 0


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1, help="worker cap (computation runs in one thread)")

    parser = argparse.ArgumentParser(prog="mckayquiver", description="McKay quivers of G(r,p,n) and Lusztig algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def group_args(sp, with_p=True):
        sp.add_argument("--r", type=int, required=True)
        if with_p:
            sp.add_argument("--p", type=int, default=1)
        sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("quiver", parents=[common], help="McKay quiver of G(r,p,n)")
    group_args(sp)
    sp.add_argument("--format", choices=["text", "json", "dot"], default="text")
    sp.add_argument("--force", action="store_true", help="ignore the vertex-count limit")
    sp.set_defaults(func=cmd_quiver)

    sp = sub.add_parser("irreps", parents=[common], help="irreducibles of G(r,p,n)")
    group_args(sp)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.add_argument("--force", action="store_true")
    sp.set_defaults(func=cmd_irreps)

    sp = sub.add_parser("branch", parents=[common], help="restriction and induction")
    group_args(sp, with_p=False)
    sp.add_argument("--rep", required=True, help="multipartition such as [2,1|1|-]")
    sp.add_argument("--direction", required=True,
                    help="res-product | ind-product:<color> | res-H:<p> | ind-H:<p>")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_branch)

    sp = sub.add_parser("verify", parents=[common], help="check a quiver against characters")
    group_args(sp)
    sp.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="largest |G(r,1,n)| the oracle accepts")
    sp.add_argument("--format", choices=["text", "json"], default="json")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("chartable", parents=[common], help="character table of G(r,1,n)")
    group_args(sp, with_p=False)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.add_argument("--force", action="store_true")
    sp.set_defaults(func=cmd_chartable)

    sp = sub.add_parser("lusztig", parents=[common], help="quiver and relations of a Lusztig algebra")
    sp.add_argument("--group", required=True, help="d4 | s3 | s4 | sn(<n>) | abelian:<m>:<w;w> | grpn:<r>,<p>,<n>")
    sp.add_argument("--ideal", default="sym", help="free | sym | ext | custom:<file>")
    sp.add_argument("--out", "--format", dest="out", choices=["text", "json", "dot"], default="text")
    sp.set_defaults(func=cmd_lusztig)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be positive")
    try:
        return args.func(args)
    except (UsageError, OracleBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
