"""Command-line front end: ``mac-sdof {decompose,region,certify,cover,sweep}``.

Exit codes: 0 on success, 1 when a certificate verdict is false, 2 on
usage or input errors (with a diagnostic on standard error).
"""
import argparse
import json
import sys

from . import certifier, rate_eval, serialize
from .exceptions import MacSdofError
from .gsvd import gsvd
from .reduction import ParallelModel, to_parallel
from .region import sdof_region, validate_dims

EXIT_OK, EXIT_VERDICT, EXIT_INPUT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _positive_float(text):
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return v


def _nonneg_int(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {text}")
    return v


def _add_config_flags(p):
    g = p.add_argument_group("configuration (ranks override antenna counts)")
    for flag in ("--r0", "--r1", "--r2", "--nt1", "--nt2", "--nr"):
        g.add_argument(flag, type=_nonneg_int)
    g.add_argument("--ne", type=_nonneg_int, help="eavesdropper antennas N_E")


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--tol", type=_positive_float, default=1e-10,
                        help="relative rank tolerance (default 1e-10)")
    common.add_argument("--output", "-o", help="output file (default stdout)")
    parser = _Parser(prog="mac-sdof", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    add = lambda name, **kw: sub.add_parser(name, parents=[common], **kw)

    p = add("decompose", help="GSVD and parallel model of a channel pair")
    p.add_argument("--input", "-i", help='JSON {"h1": matrix, "h2": matrix} (default stdin)')
    p.add_argument("--ne", type=_nonneg_int, help="eavesdropper antennas (overrides input n_e)")

    p = add("region", help="exact s.d.o.f. region")
    _add_config_flags(p)
    p.add_argument("--csv", help="also write the vertices as CSV to this path")

    p = add("certify", help="converse certificate(s)")
    _add_config_flags(p)
    p.add_argument("--sweep-max", type=_nonneg_int,
                   help="certify every antenna tuple in [0, N]^4")
    p.add_argument("--input", "-i", help="channel-pair JSON to certify instead of ranks")

    p = add("cover", help="recursive eavesdropper cover table")
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = add("sweep", help="power sweep CSV of a parallel model")
    p.add_argument("--input", "-i", help="ParallelModel JSON (default stdin)")
    p.add_argument("--target", default="P3", help="P3, P4 or t1,t2")
    p.add_argument("--powers", help="comma-separated linear powers (default 2^20..2^40 x2^4)")
    p.add_argument("--eps", type=_positive_float, default=1.0)
    p.add_argument("--norm-bound", type=_positive_float, default=1.0)
    return parser


def _read_json(path, stdin):
    text = stdin.read() if path is None else open(path, encoding="utf-8").read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON input: {exc}") from exc


def _config(args):
    """Rank tuple from explicit ranks or generic-rank antenna counts."""
    if args.ne is None:
        raise ValueError("--ne is required")
    ranks = (args.r0, args.r1, args.r2)
    ants = (args.nt1, args.nt2, args.nr)
    if all(v is not None for v in ranks):
        config = ranks + (args.ne,)
    elif any(v is not None for v in ranks):
        raise ValueError("give all of --r0 --r1 --r2, or use --nt1 --nt2 --nr")
    elif all(v is not None for v in ants):
        config = certifier.generic_ranks(*ants) + (args.ne,)
    else:
        raise ValueError("give --r0 --r1 --r2 or --nt1 --nt2 --nr")
    validate_dims(*config)
    return config


def _cmd_decompose(args, stdin):
    doc = _read_json(args.input, stdin)
    try:
        h1, h2 = serialize.matrix_from_json(doc["h1"]), serialize.matrix_from_json(doc["h2"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f'input must hold "h1" and "h2" matrices: {exc}') from exc
    n_e = args.ne if args.ne is not None else int(doc.get("n_e", 0))
    g = gsvd(h1, h2, tol=args.tol)
    out = {"gsvd": serialize.gsvd_to_json(g), "parallel_model": to_parallel(g, n_e).to_json()}
    return serialize.dumps(out), EXIT_OK


def _cmd_region(args, stdin):
    region = sdof_region(*_config(args))
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(region.vertices_csv())
    return serialize.dumps(region.to_json()), EXIT_OK


def _cmd_certify(args, stdin):
    if args.sweep_max is not None:
        results = certifier.certify_grid(args.sweep_max)
        ok = all(c.verdict for _, c in results)
        out = {
            "sweep_max": args.sweep_max, "count": len(results), "all_verdicts": ok,
            "results": [{"antennas": dict(zip(("nt1", "nt2", "nr", "n_e"), key)),
                         "certificate": c.to_json()} for key, c in results],
        }
    elif args.input is not None:
        doc = _read_json(args.input, stdin)
        h1, h2 = serialize.matrix_from_json(doc["h1"]), serialize.matrix_from_json(doc["h2"])
        n_e = args.ne if args.ne is not None else int(doc.get("n_e", 0))
        cert = certifier.certify_from_channels(h1, h2, n_e, tol=args.tol)
        ok, out = cert.verdict, cert.to_json()
    else:
        cert = certifier.certify(*_config(args))
        ok, out = cert.verdict, cert.to_json()
    return serialize.dumps(out), EXIT_OK if ok else EXIT_VERDICT


def _fmt_set(xs):
    return "{" + ",".join(str(x) for x in xs) + "}"


def _cmd_cover(args, stdin):
    cover = certifier.build_cover(args.f, args.g)
    cover.verify()
    if args.format == "json":
        return serialize.dumps(cover.to_json()), EXIT_OK
    lines = [f"# recursive cover |F|={cover.f_size} |G|={cover.g_size}",
             "i\tcase\tF_i\tH_i\tV_i\tc_i"]
    for i, fi, hi, vi, ci, case in cover.rows():
        lines.append("\t".join([
            str(i), case or "-", _fmt_set(fi) if fi is not None else "-",
            _fmt_set(sorted(hi)) if hi is not None else "-", _fmt_set(sorted(vi)), str(ci)]))
    return "\n".join(lines) + "\n", EXIT_OK


def _parse_target(text):
    t = text.strip().upper()
    if t in ("P3", "P4"):
        return rate_eval.Target(t)
    try:
        t1, t2 = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"--target must be P3, P4 or t1,t2, got {text!r}") from exc
    return rate_eval.Custom(t1, t2)


def _cmd_sweep(args, stdin):
    doc = _read_json(args.input, stdin)
    try:
        model = ParallelModel.from_json(doc)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed ParallelModel JSON: {exc}") from exc
    scheme = rate_eval.allocate(model, _parse_target(args.target))
    powers = rate_eval.DEFAULT_POWERS
    if args.powers:
        powers = tuple(float(x) for x in args.powers.split(","))
    res = rate_eval.sweep(model, scheme, powers, norm_bound=args.norm_bound, eps=args.eps)
    return res.to_csv(), EXIT_OK


_COMMANDS = {
    "decompose": _cmd_decompose, "region": _cmd_region, "certify": _cmd_certify,
    "cover": _cmd_cover, "sweep": _cmd_sweep,
}


def run(args, stdin=None, stdout=None):
    """Dispatch parsed arguments; returns the exit code."""
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    try:
        text, code = _COMMANDS[args.subcommand](args, stdin)
    except (MacSdofError, ValueError, KeyError, OSError) as exc:
        print(f"mac-sdof {args.subcommand}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main(argv=None, stdin=None, stdout=None):
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    return run(args, stdin, stdout)


if __name__ == "__main__":
    sys.exit(main())
