"""Command-line front end.

Exit status: 0 when the command produced its answer, 1 on a structured
mathematical failure (e.g. SolverFailed), 2 on usage or parse errors.
"""
import argparse
import sys

from . import hensel as H
from . import leading_terms as LT
from . import value_group as VG
from .errors import InvalidRhoSpec, MultvalError, ParseError, SolverFailed
from .hahn import HahnField
from .parsing import (
    format_gamma, format_rv, format_series, format_sigmapoly,
    load_config, parse_affine, parse_gamma, parse_linop, parse_residue, parse_rho,
    parse_rv, parse_sequence, parse_series, parse_sigmapoly,
)
from .rho_order import compare, sign
from .sigma_poly import make_generic

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Context:
    def __init__(self, args):
        cfg = load_config(args.config)
        self._rho_text = args.rho or cfg.get("rho")
        # validated eagerly so a bad name fails even for verbs that never build a field
        self._residue = parse_residue(args.residue or cfg.get("residue") or "rational-id")
        self.cfg = cfg
        self._rho = None
        self._field = None

    @property
    def rho(self):
        if self._rho is None:
            if not self._rho_text:
                raise UsageError("no rho given: use --rho, --config or $MULTVAL_CONFIG")
            self._rho = parse_rho(self._rho_text)
        return self._rho

    @property
    def field(self):
        if self._field is None:
            self._field = HahnField(self.rho, self._residue)
        return self._field

    def gamma(self, text):
        return parse_gamma(text, self.rho)

    def series(self, text):
        return parse_series(text, self.field)

    def poly(self, text):
        return parse_sigmapoly(text, self.field)


def _fmt_complexity_part(v):
    return "-inf" if v == float("-inf") else str(v)


def _fmt_index(idx):
    return "(" + ",".join(str(i) for i in idx) + ")"


def _parse_index(text, n):
    try:
        idx = tuple(int(p) for p in text.replace("(", "").replace(")", "").split(","))
    except ValueError:
        raise UsageError(f"bad multi-index {text!r}; write e.g. 1,0") from None
    if len(idx) != n + 1 or any(i < 0 for i in idx):
        raise UsageError(f"multi-index {text!r} must have {n + 1} nonnegative entries")
    return idx


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


# ---------------------------------------------------------------- verbs

def cmd_sign(ctx, a, out):
    out.append(str(sign(parse_linop(a.op), ctx.rho)))


def cmd_cmp(ctx, a, out):
    out.append(str(compare(parse_linop(a.left), parse_linop(a.right), ctx.rho)))


def cmd_gadd(ctx, a, out):
    out.append(format_gamma(ctx.gamma(a.left) + ctx.gamma(a.right)))


def cmd_gdiv(ctx, a, out):
    out.append(format_gamma(VG.divide(ctx.gamma(a.gamma), parse_linop(a.op))))


def cmd_veval(ctx, a, out):
    out.append(format_gamma(ctx.series(a.series).valuation()))


def cmd_peval(ctx, a, out):
    out.append(format_series(ctx.poly(a.poly).eval(ctx.series(a.point))))


def cmd_taylor(ctx, a, out):
    P = ctx.poly(a.poly)
    if a.index:
        out.append(format_sigmapoly(P.taylor_coeff(_parse_index(a.index, P.n))))
        return
    for J in P.taylor_indices():
        out.append(f"{_fmt_index(J)}: {format_sigmapoly(P.taylor_coeff(J))}")


def cmd_complexity(ctx, a, out):
    c = ctx.poly(a.poly).complexity()
    out.append("(" + ", ".join(_fmt_complexity_part(v) for v in c) + ")")


def _fmt_config(cfg):
    mins = ",".join(str(i) for i in sorted(cfg.minimizing_indices))
    kind = f"strict i={cfg.i_value}" if cfg.strict else "non-strict"
    return f"gamma={format_gamma(cfg.gamma)} {kind} minimizers={{{mins}}}"


def cmd_config(ctx, a, out):
    cfg = H.hensel_config(ctx.poly(a.poly), ctx.series(a.point))
    out.append("none" if cfg is None else _fmt_config(cfg))


def cmd_step(ctx, a, out):
    P, x = ctx.poly(a.poly), ctx.series(a.point)
    cfg = H.hensel_config(P, x)
    if cfg is None:
        out.append("NotInConfiguration")
        return FAILED
    try:
        b = H.hensel_step(P, x, cfg)
    except SolverFailed as exc:
        out.append(f"SolverFailed {exc.equation}")
        return FAILED
    out.append(f"b = {format_series(b)}")
    out.append(f"vP = {format_gamma(P.eval(b).valuation())}")
    return OK


def cmd_lift(ctx, a, out):
    P, x = ctx.poly(a.poly), ctx.series(a.point)
    target_text = a.target or ctx.cfg.get("target")
    target = ctx.gamma(target_text) if target_text else None
    max_iter = a.max_iter or int(ctx.cfg.get("max_iter", 32))
    rep = H.hensel_lift(P, x, target, max_iter)
    for k, (g, vp) in enumerate(rep.trace, 1):
        out.append(f"iter {k}: gamma={format_gamma(g)} vP={format_gamma(vp)}")
    line = f"{rep.status} b = {format_series(rep.final)}"
    if rep.failure is not None:
        line += f" ({rep.failure.equation})"
    out.append(line)
    good = rep.status in (H.LiftStatus.ROOT_FOUND, H.LiftStatus.PRECISION_REACHED)
    return OK if good else FAILED


def cmd_rv(ctx, a, out):
    out.append(format_rv(LT.rv(ctx.series(a.series))))


def cmd_rvsum(ctx, a, out):
    rs = [parse_rv(t, ctx.field) for t in a.rvs]
    r = LT.rv_sum(rs)
    out.append("undefined" if r is None else format_rv(r))


def cmd_pc_check(ctx, a, out):
    rep = H.pc_check(parse_sequence(_read(a.file), ctx.field), a.eta0)
    out.append("pc: yes" if rep.is_pc else "pc: no")
    out.append("gammas: " + ", ".join(format_gamma(g) for g in rep.gammas))
    for v in rep.violations:
        out.append(f"violation: {v}")


def cmd_pseudo_limit(ctx, a, out):
    seq = parse_sequence(_read(a.file), ctx.field)
    out.append("yes" if H.is_pseudo_limit(ctx.series(a.point), seq, a.eta0) else "no")


def cmd_eventual_order(ctx, a, out):
    fns = [parse_affine(t, ctx.rho) for t in a.fns]
    perm, threshold = H.eventual_order(fns, ctx.rho)
    out.append("order: " + " ".join(str(i) for i in perm))
    out.append(f"threshold: {format_gamma(threshold)}")


def cmd_generic(ctx, a, out):
    Ps = [ctx.poly(t) for t in a.polys]
    x = make_generic(Ps, ctx.gamma(a.gamma))
    if x is None:
        out.append("none")
        return FAILED
    out.append(format_series(x))
    return OK


def cmd_witness(ctx, a, out):
    w, status = LT.axiom4_witness(ctx.field, ctx.gamma(a.gamma))
    out.append(f"{format_series(w)} {status}")


# ---------------------------------------------------------------- parser

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rho", help='order type of rho, e.g. "algebraic [-2,0,1] in (1,2)"')
    common.add_argument("--residue", help="residue field: rational-id or rational-shift")
    common.add_argument("--config", help="key = value file (default: $MULTVAL_CONFIG)")

    p = argparse.ArgumentParser(prog="multval", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    sp = verb("sign", cmd_sign, "sign of a linear difference operator")
    sp.add_argument("op")
    sp = verb("cmp", cmd_cmp, "compare two operators")
    sp.add_argument("left")
    sp.add_argument("right")
    sp = verb("gadd", cmd_gadd, "add two value-group elements")
    sp.add_argument("left")
    sp.add_argument("right")
    sp = verb("gdiv", cmd_gdiv, "divide a value-group element by an operator")
    sp.add_argument("gamma")
    sp.add_argument("op")
    sp = verb("veval", cmd_veval, "valuation of a series")
    sp.add_argument("series")
    sp = verb("peval", cmd_peval, "evaluate a sigma-polynomial")
    sp.add_argument("poly")
    sp.add_argument("point")
    sp = verb("taylor", cmd_taylor, "Taylor coefficient P_(J), or all of them")
    sp.add_argument("poly")
    sp.add_argument("index", nargs="?", help="multi-index, e.g. 1,0")
    sp = verb("complexity", cmd_complexity, "complexity triple")
    sp.add_argument("poly")
    sp = verb("config", cmd_config, "sigma-Hensel configuration of (P, a)")
    sp.add_argument("poly")
    sp.add_argument("point")
    sp = verb("step", cmd_step, "one sigma-Hensel step")
    sp.add_argument("poly")
    sp.add_argument("point")
    sp = verb("lift", cmd_lift, "iterate sigma-Hensel steps")
    sp.add_argument("poly")
    sp.add_argument("point")
    sp.add_argument("--target", help="stop once v(P(b)) exceeds this value")
    sp.add_argument("--max-iter", type=int, dest="max_iter")
    sp = verb("rv", cmd_rv, "leading term of a series")
    sp.add_argument("series")
    sp = verb("rvsum", cmd_rvsum, "partial sum of leading terms")
    sp.add_argument("rvs", nargs="+")
    sp = verb("pc-check", cmd_pc_check, "pseudo-convergence of a sequence file")
    sp.add_argument("file")
    sp.add_argument("--eta0", type=int, default=0)
    sp = verb("pseudo-limit", cmd_pseudo_limit, "is a a pseudo-limit of the sequence")
    sp.add_argument("point")
    sp.add_argument("file")
    sp.add_argument("--eta0", type=int, default=0)
    sp = verb("eventual-order", cmd_eventual_order, 'eventual order of "gamma | L" functions')
    sp.add_argument("fns", nargs="+")
    sp = verb("generic", cmd_generic, "element of value gamma generic for the polynomials")
    sp.add_argument("polys", nargs="+")
    sp.add_argument("--gamma", required=True)
    sp = verb("witness", cmd_witness, "Axiom 4 witness t^gamma")
    sp.add_argument("gamma")
    return p


def run(argv):
    """Run one command; returns ``(status, lines, error)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else USAGE), [], None
    out = []
    try:
        ctx = Context(args)
        status = args.fn(ctx, args, out)
    except (ParseError, InvalidRhoSpec, UsageError, OSError) as exc:
        return USAGE, out, f"error: {exc}"
    except MultvalError as exc:
        return FAILED, out, f"{type(exc).__name__}: {exc}"
    return (OK if status is None else status), out, None


def main(argv=None):
    status, lines, error = run(sys.argv[1:] if argv is None else argv)
    for line in lines:
        print(line)
    if error:
        print(error, file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
