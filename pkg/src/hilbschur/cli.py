"""Thin command-line client for the algebra service.

Every subcommand builds an HTTP request; by default it is served by an
in-process instance of the FastAPI app (no network), while ``--server``
points the same requests at a running instance (see ``serve``).  Output is
deterministic: identical invocations print identical bytes.

Exit status: 0 on success, 1 on verification failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx


def _call(args, method: str, path: str, payload=None) -> httpx.Response:
    if args.server:
        with httpx.Client(base_url=args.server, timeout=3600.0) as client:
            return client.request(method, path, json=payload)

    from .service import create_app

    async def run():
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(transport=transport,
                                     base_url="http://hilbschur",
                                     timeout=3600.0) as client:
            return await client.request(method, path, json=payload)

    return asyncio.run(run())


def _fail_usage(message: str) -> int:
    print(message, file=sys.stderr)
    return 2


def _expect(resp: httpx.Response):
    if resp.status_code == 422:
        detail = resp.json().get("detail", resp.text)
        raise SystemExit(_fail_usage("invalid request: %s" % detail))
    if resp.status_code != 200:
        raise SystemExit(_fail_usage("service error %d: %s"
                                     % (resp.status_code, resp.text)))
    return resp.json()


def _load_kclass_arg(text: str) -> dict:
    text = text.strip()
    if text.startswith("{"):
        return json.loads(text)
    with open(text) as fh:
        return json.load(fh)


def cmd_dims(args) -> int:
    doc = _expect(_call(args, "POST", "/dims",
                        {"n": args.n, "target": args.target,
                         "source": args.source}))
    print(doc["dimension"])
    return 0


def cmd_basis(args) -> int:
    doc = _expect(_call(args, "POST", "/basis",
                        {"n": args.n, "target": args.target,
                         "source": args.source}))
    print("# basis of hom(%s -> %s), rank %d"
          % (doc["source"], doc["target"], doc["count"]))
    for idx in doc["indices"]:
        print("%s  %s" % (idx["rep"], "|".join(idx["label"])))
    return 0


def cmd_multiply(args) -> int:
    try:
        left = _load_kclass_arg(args.left)
        right = _load_kclass_arg(args.right)
    except (OSError, json.JSONDecodeError) as exc:
        return _fail_usage("cannot read operand: %s" % exc)
    doc = _expect(_call(args, "POST", "/multiply",
                        {"left": left, "right": right}))
    print(json.dumps(doc["product"], sort_keys=True, indent=2))
    return 0


def cmd_check(args) -> int:
    doc = _expect(_call(args, "POST", "/check",
                        {"suite": args.suite, "n": args.n,
                         "samples": args.samples, "seed": args.seed}))
    print(doc["output"])
    return 0 if doc["ok"] else 1


def cmd_quiver(args) -> int:
    if args.n != 3:
        return _fail_usage("the quiver presentation is emitted for n=3 only")
    doc = _expect(_call(args, "GET", "/quiver"))
    print("# quiver of the reduced algebra at n=3")
    print("vertices: %s" % "  ".join(doc["vertices"]))
    for name, desc in sorted(doc["generators"].items()):
        print("generator %s: %s" % (name, desc))
    for rel in doc["relations"]:
        status = "ok" if doc["verified"][rel] else "FAILED"
        print("relation %s   [%s]" % (rel, status))
    return 0 if all(doc["verified"].values()) else 1


def cmd_phi(args) -> int:
    doc = _expect(_call(args, "POST", "/phi", {"shape": args.shape}))
    print(json.dumps(doc, sort_keys=True, indent=2))
    return 0


def cmd_export(args) -> int:
    doc = _expect(_call(args, "POST", "/export",
                        {"n": args.n, "reduced": args.reduced,
                         "mod_p": args.mod_p}))
    with open(args.json, "w") as fh:
        fh.write(doc["document"])
    print("wrote %s" % args.json)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app
    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbschur",
        description="convolution algebra on symmetric-group double cosets")
    parser.add_argument("--server", default=None,
                        help="base URL of a running service "
                             "(default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="rank of one graded piece")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--target", required=True,
                   help='partition, e.g. "2,1" or "1 2|3"')
    p.add_argument("--source", required=True)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("basis", help="integral basis of one graded piece")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--source", required=True)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("multiply", help="product of two K-classes")
    p.add_argument("--left", required=True,
                   help="K-class JSON (inline or a file path)")
    p.add_argument("--right", required=True)
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("suite",
                   choices=["relations", "oracle", "assoc", "schur", "stalks"])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("quiver", help="emit the n=3 quiver presentation")
    p.add_argument("-n", type=int, default=3)
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("phi", help="concatenation operator matrices")
    p.add_argument("--lambda", dest="shape", required=True,
                   help='integer partition, e.g. "2,1"')
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("export", help="export basis and structure constants")
    p.add_argument("--json", required=True, help="output path")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--mod-p", type=int, default=None)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8437)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        raise exc
    except ValueError as exc:
        return _fail_usage(str(exc))


if __name__ == "__main__":
    sys.exit(main())
