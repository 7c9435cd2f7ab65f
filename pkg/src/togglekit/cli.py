"""Command-line client for the togglekit service layer.

Runs in-process by default; with --remote URL it sends the same request
to a running API server.  Exit codes: 0 success, 1 verification failure,
2 bad configuration, 3 state space over the cap or large gate.
"""

from __future__ import annotations

import argparse
import json
import sys

from pydantic import BaseModel

from . import service
from .errors import StateSpaceTooLarge, TogglekitError
from .poset import DEFAULT_CAP

EXIT_VERIFY = 1
EXIT_CONFIG = 2
EXIT_RESOURCE = 3


def _common(parser: argparse.ArgumentParser, action_default: str = "row") -> None:
    parser.add_argument("--family", required=True, help="e.g. product:2,3,4 root:A,3 asm:5")
    parser.add_argument("--action", default=action_default,
                        choices=["row", "row-inverse", "pro", "gyration", "spro",
                                 "rotate", "psi", "syt-pro"])
    parser.add_argument("--format", default="json", choices=["json", "tsv"])
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP)
    parser.add_argument("--allow-large", action="store_true")
    parser.add_argument("--remote", default=None, help="base URL of a running API server")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="togglekit")
    sub = parser.add_subparsers(dest="command", required=True)

    _common(sub.add_parser("orbits", help="full orbit partition of an action"))
    _common(sub.add_parser("order", help="lcm of the orbit sizes"))
    p = sub.add_parser("csp", help="exact cyclic sieving check")
    _common(p)
    p.add_argument("--poly", default="qbinomial", choices=list(service.POLYS))
    p = sub.add_parser("witness", help="emit each ideal with its witness object")
    _common(p, action_default="")
    p.add_argument("--kind", default="word", choices=list(service.KINDS))
    _common(sub.add_parser("trajectory", help="iterate the action from the empty ideal"))

    p = sub.add_parser("serve", help="run the API server")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


def _config(args: argparse.Namespace):
    base = dict(
        family=args.family,
        action=args.action,
        format=args.format,
        threads=args.threads,
        cap=args.cap,
        allow_large=args.allow_large,
    )
    if args.command == "csp":
        return service.CspConfig(poly=args.poly, **base)
    if args.command == "witness":
        return service.WitnessConfig(kind=args.kind, **base)
    return service.RunConfig(**base)


HANDLERS = {
    "orbits": (service.run_orbits, service.OrbitsResponse, "/v1/orbits"),
    "order": (service.run_order, service.OrderResponse, "/v1/order"),
    "csp": (service.run_csp, service.CspResponse, "/v1/csp"),
    "witness": (service.run_witness, service.WitnessResponse, "/v1/witness"),
    "trajectory": (service.run_trajectory, service.TrajectoryResponse, "/v1/trajectory"),
}


def _call_remote(url: str, path: str, cfg: BaseModel, model):
    import httpx

    reply = httpx.post(url.rstrip("/") + path, json=cfg.model_dump(), timeout=600.0)
    if reply.status_code == 413:
        raise StateSpaceTooLarge(reply.json().get("detail", "state space too large"))
    if reply.status_code >= 400:
        raise TogglekitError(reply.json().get("detail", reply.text))
    return model.model_validate(reply.json())


def render_tsv(command: str, resp: BaseModel) -> str:
    data = resp.model_dump(by_alias=True)
    if command == "order":
        return f"{data['order']}\n"
    meta_keys = [k for k, v in data.items() if not isinstance(v, list)]
    meta = "# " + " ".join(f"{k}={data[k]}" for k in meta_keys)
    lines = [meta]
    if command == "orbits":
        lines += [f"{o['size']}\t{o['representative']}" for o in data["orbits"]]
    elif command == "csp":
        lines += [
            "orbit_sizes\t" + ",".join(map(str, data["orbit_sizes"])),
            "residues\t" + ",".join(map(str, data["residues"])),
            "expected\t" + ",".join(map(str, data["expected"])),
        ]
    elif command == "witness":
        lines += [f"{p['state']}\t{p['witness']}" for p in data["pairs"]]
    elif command == "trajectory":
        lines += [f"{i}\t{s}" for i, s in enumerate(data["states"])]
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        from .api import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    handler, model, path = HANDLERS[args.command]
    try:
        cfg = _config(args)
        resp = _call_remote(args.remote, path, cfg, model) if args.remote else handler(cfg)
    except StateSpaceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except TogglekitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    if args.format == "tsv":
        sys.stdout.write(render_tsv(args.command, resp))
    else:
        sys.stdout.write(json.dumps(resp.model_dump(by_alias=True), indent=2) + "\n")

    if args.command == "witness" and not resp.verified:
        print("error: witness equivariance failed", file=sys.stderr)
        return EXIT_VERIFY
    if args.command == "trajectory" and not resp.period_ok:
        print("error: trajectory period mismatch", file=sys.stderr)
        return EXIT_VERIFY
    return 0


if __name__ == "__main__":
    sys.exit(main())
