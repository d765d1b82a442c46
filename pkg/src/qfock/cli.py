"""Command-line front end.

Every subcommand builds the same request model the HTTP service accepts and
dispatches it either in-process (default) or to a running service when
--url is given, so both paths produce byte-identical output.  Exit status:
0 success, 1 parse/usage error, 2 failing check suite.
"""

from __future__ import annotations

import argparse
import json
import sys

from .service import handlers
from .service import models as m
from .words import parse_word  # re-exported: the canonical word parser


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


OPS = {
    "straighten": (m.StraightenRequest, handlers.handle_straighten),
    "conjugate": (m.ConjugateRequest, handlers.handle_conjugate),
    "lr": (m.LrRequest, handlers.handle_lr),
    "pieri": (m.PieriRequest, handlers.handle_pieri),
    "jt": (m.JtRequest, handlers.handle_jt),
    "convert": (m.ConvertRequest, handlers.handle_convert),
    "mixed": (m.MixedRequest, handlers.handle_mixed),
    "x": (m.XRequest, handlers.handle_x),
    "divided": (m.DividedRequest, handlers.handle_divided),
    "apply": (m.ApplyRequest, handlers.handle_apply),
    "inner": (m.InnerRequest, handlers.handle_inner),
    "check": (m.CheckRequest, handlers.handle_check),
}

# the machine-readable projection of each response (the part that re-parses
# to the same value); everything else is presentation
PROJECTIONS = {
    "straighten": lambda d: {"sign": d["sign"], "partition": d["partition"]},
    "conjugate": lambda d: d["partition"],
    "lr": lambda d: d["terms"],
    "pieri": lambda d: d["terms"],
    "jt": lambda d: d["terms"],
    "convert": lambda d: d["terms"],
    "mixed": lambda d: {"sign": d["sign"], "partition": d["partition"]},
    "x": lambda d: d["vector"],
    "divided": lambda d: d["vector"],
    "apply": lambda d: d["vector"],
    "inner": lambda d: {"numerator": d["numerator"], "denominator": d["denominator"]},
    "check": lambda d: d["reports"],
}


def build_parser() -> Parser:
    parser = Parser(prog="qfock", description=__doc__)
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--url", help="dispatch to a running qfock service")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("straighten", help="normalize a Schur index tuple")
    p.add_argument("entries", help='comma-separated integers, e.g. "1,4,1"')

    p = sub.add_parser("conjugate", help="transpose a partition")
    p.add_argument("partition")

    p = sub.add_parser("lr", help="product of two Schur functions")
    p.add_argument("lam")
    p.add_argument("mu")

    p = sub.add_parser("pieri", help="h_n or e_n times a Schur function")
    p.add_argument("--kind", choices=("h", "e"), default="h")
    p.add_argument("n", type=int)
    p.add_argument("partition")

    p = sub.add_parser("jt", help="determinant expansion into h-monomials")
    p.add_argument("partition")

    p = sub.add_parser("convert", help="change basis for a single s or p term")
    p.add_argument("--to", choices=("power", "schur"), required=True)
    p.add_argument("partition")

    p = sub.add_parser("mixed", help="mixed plain/dual component product on the vacuum")
    p.add_argument("mu")
    p.add_argument("nu")

    p = sub.add_parser("x", help="apply one current component to a basis vector")
    p.add_argument("--sign", choices=("plus", "minus"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sector", type=int, choices=(0, 1), default=0)
    p.add_argument("--charge", type=int, default=0)
    p.add_argument("--mu", default="")

    p = sub.add_parser("divided", help="apply a divided power of a current component")
    p.add_argument("--sign", choices=("plus", "minus"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--sector", type=int, choices=(0, 1), default=0)
    p.add_argument("--charge", type=int, default=0)
    p.add_argument("--mu", default="")

    p = sub.add_parser("apply", help="apply a generator word, rightmost first")
    p.add_argument("--sector", type=int, choices=(0, 1), default=0)
    p.add_argument("--charge", type=int, default=0)
    p.add_argument("--mu", default="")
    p.add_argument("word")

    p = sub.add_parser("inner", help="Hall or deformed inner product of basis elements")
    p.add_argument("--kind", choices=("hall", "deformed"), default="hall")
    p.add_argument("lam")
    p.add_argument("mu")

    p = sub.add_parser("check", help="run verification suites")
    p.add_argument("--suite", action="append", dest="suites", metavar="NAME")
    p.add_argument("--max-weight", type=int)
    p.add_argument("--max-charge", type=int)
    p.add_argument("--index-window", type=int)
    p.add_argument("--max-total-weight", type=int)
    p.add_argument("--max-k", type=int)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _build_request(args) -> tuple[str, object]:
    cmd = args.command
    if cmd == "straighten":
        return cmd, m.StraightenRequest(entries=_ints(args.entries))
    if cmd == "conjugate":
        return cmd, m.ConjugateRequest(partition=_ints(args.partition))
    if cmd == "lr":
        return cmd, m.LrRequest(lam=_ints(args.lam), mu=_ints(args.mu))
    if cmd == "pieri":
        return cmd, m.PieriRequest(kind=args.kind, n=args.n, partition=_ints(args.partition))
    if cmd == "jt":
        return cmd, m.JtRequest(partition=_ints(args.partition))
    if cmd == "convert":
        return cmd, m.ConvertRequest(to=args.to, partition=_ints(args.partition))
    if cmd == "mixed":
        return cmd, m.MixedRequest(mu=_ints(args.mu), nu=_ints(args.nu))
    if cmd == "x":
        return cmd, m.XRequest(
            sign=args.sign, n=args.n, sector=args.sector, charge=args.charge, mu=_ints(args.mu)
        )
    if cmd == "divided":
        return cmd, m.DividedRequest(
            sign=args.sign,
            n=args.n,
            r=args.r,
            sector=args.sector,
            charge=args.charge,
            mu=_ints(args.mu),
        )
    if cmd == "apply":
        return cmd, m.ApplyRequest(
            word=args.word, sector=args.sector, charge=args.charge, mu=_ints(args.mu)
        )
    if cmd == "inner":
        return cmd, m.InnerRequest(kind=args.kind, lam=_ints(args.lam), mu=_ints(args.mu))
    if cmd == "check":
        overrides: dict[str, dict[str, int]] = {}
        bounds = {
            "max_weight": args.max_weight,
            "max_charge": args.max_charge,
            "index_window": args.index_window,
            "max_total_weight": args.max_total_weight,
            "max_k": args.max_k,
        }
        from .verify import SUITES
        import inspect

        for suite, fn in SUITES.items():
            accepted = inspect.signature(fn).parameters
            chosen = {k: v for k, v in bounds.items() if v is not None and k in accepted}
            if chosen:
                overrides[suite] = chosen
        return cmd, m.CheckRequest(suites=args.suites, overrides=overrides)
    raise UsageError(f"unknown command {cmd!r}")


def _dispatch(cmd: str, request, url: str | None) -> dict:
    if url is None:
        _, handler = OPS[cmd]
        response = handler(request)
        return response.model_dump(by_alias=True)
    import httpx

    reply = httpx.post(
        f"{url.rstrip('/')}/v1/{cmd}", json=request.model_dump(), timeout=600.0
    )
    if reply.status_code != 200:
        try:
            detail = reply.json().get("detail", reply.text)
        except Exception:
            detail = reply.text
        raise UsageError(f"service error ({reply.status_code}): {detail}")
    return reply.json()


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "serve":
            import uvicorn

            from .service.app import app

            uvicorn.run(app, host=args.host, port=args.port)
            return 0
        cmd, request = _build_request(args)
        data = _dispatch(cmd, request, args.url)
    except UsageError as exc:
        print(f"qfock: error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"qfock: error: {exc}", file=sys.stderr)
        return 1

    if args.json:
        print(json.dumps(PROJECTIONS[cmd](data), separators=(",", ":")))
    else:
        print(data["text"])
    if cmd == "check" and not data["passed"]:
        return 2
    return 0


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
