"""Service entry points: serve, selftest, probe."""

from __future__ import annotations

import argparse
import sys

from .backends import build_backend
from .app import create_app


def _add_backend_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--backend", choices=["mock", "hf"], required=True)
    parser.add_argument("--table", help="mock transition table file: lines 'prev next prob'")
    parser.add_argument("--model", help="Hugging Face masked-LM identifier")


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    backend = build_backend(args.backend, table=args.table, model=args.model)
    uvicorn.run(create_app(backend), host=args.host, port=args.port, log_level="warning")
    return 0


def cmd_selftest(args: argparse.Namespace) -> int:
    """Score a fixed sentence twice; pass iff the responses are byte-identical."""
    from fastapi.testclient import TestClient

    backend = build_backend(args.backend, table=args.table, model=args.model)
    sentence = args.sentence
    if sentence is None:
        sentence = "a b a" if args.backend == "mock" else "The girls run fast."
    with TestClient(create_app(backend)) as client:
        first = client.post("/v1/score", json={"text": sentence, "mode": "sequential_score"})
        second = client.post("/v1/score", json={"text": sentence, "mode": "sequential_score"})
    ok = first.status_code == 200 and first.content == second.content
    print(f"selftest: {'PASS' if ok else 'FAIL'} "
          f"(status {first.status_code}, identical={first.content == second.content})")
    return 0 if ok else 1


def cmd_probe(args: argparse.Namespace) -> int:
    """Score a sentence and report the fill probabilities of candidate words
    at one position; the ordering is logged as an observation, not asserted."""
    from fastapi.testclient import TestClient

    backend = build_backend(args.backend, table=args.table, model=args.model)
    with TestClient(create_app(backend)) as client:
        scored = client.post("/v1/score", json={"text": args.sentence,
                                                "mode": "sequential_score"})
        if scored.status_code != 200:
            print(f"probe: scoring failed with {scored.status_code}: {scored.text}")
            return 1
        body = scored.json()
        print(f"model: {body['model_id']}")
        for token, bits in zip(body["tokens"], body["surprisal_bits"]):
            print(f"  {token['text']!r:>14}  {bits:8.4f} bits")

        if args.candidates:
            if args.backend == "mock":
                ids = backend.ids_of(args.candidates)
                prefix = backend.ids_of(
                    [t["text"] for t in body["tokens"][: args.position - 1]]
                )
                total = len(body["tokens"])
            else:
                ids = [backend.tokenizer.convert_tokens_to_ids(
                    backend.tokenizer.tokenize(" " + c)[0] if backend.tokenizer.tokenize(" " + c)
                    else backend.tokenizer.unk_token) for c in args.candidates]
                encoded = backend.tokenizer(args.sentence, add_special_tokens=False)
                prefix = encoded["input_ids"][: args.position - 1]
                total = len(encoded["input_ids"])
            filled = client.post("/v1/fill", json={
                "prefix_ids": prefix,
                "position": args.position,
                "candidate_ids": ids,
                "total_length": total,
            })
            if filled.status_code != 200:
                print(f"probe: fill failed with {filled.status_code}: {filled.text}")
                return 1
            probabilities = filled.json()["probabilities"]
            pairs = sorted(zip(args.candidates, probabilities), key=lambda cp: -cp[1])
            print(f"position {args.position} candidates:")
            for candidate, p in pairs:
                print(f"  p({candidate}) = {p:.6g}")
            best, runner = pairs[0][0], pairs[-1][0]
            print(f"observation: {best!r} is assigned higher probability than {runner!r}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="mlm-service")
    sub = parser.add_subparsers(dest="command", required=True)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    _add_backend_args(p_serve)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=cmd_serve)

    p_selftest = sub.add_parser("selftest", help="determinism check: identical scores twice")
    _add_backend_args(p_selftest)
    p_selftest.add_argument("--sentence")
    p_selftest.set_defaults(func=cmd_selftest)

    p_probe = sub.add_parser("probe", help="per-token surprisals plus candidate fill probabilities")
    _add_backend_args(p_probe)
    p_probe.add_argument("--sentence", default="The girls run fast.")
    p_probe.add_argument("--position", type=int, default=3)
    p_probe.add_argument("--candidates", nargs="*", default=[])
    p_probe.set_defaults(func=cmd_probe)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
