"""Command-line entry point: ``authorship analyze`` and ``authorship synth``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .corpus import FORMATS, guess_format, parse_corpus
from .errors import AuthorshipError
from .report import EXPORT_KINDS, analyze
from .synth import synth_jsonl

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DEGENERATE = 2

log = logging.getLogger("authorship")


def _export_list(text: str) -> tuple[str, ...]:
    kinds = tuple(k.strip() for k in text.split(",") if k.strip())
    unknown = set(kinds) - set(EXPORT_KINDS)
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown export kind(s): {', '.join(sorted(unknown))}")
    return kinds


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="authorship", description="Authorship-pattern analysis of a paper corpus.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="build the graphs and write the report bundle")
    p.add_argument("path", type=Path)
    p.add_argument("--format", choices=FORMATS, default=None, help="default: from file extension")
    p.add_argument("--out", type=Path, default=Path("report"))
    p.add_argument("--top-k", type=int, default=5)
    p.add_argument("--alpha", type=float, default=0.01)
    p.add_argument("--horizon", type=int, default=5)
    p.add_argument("--export", type=_export_list, default=EXPORT_KINDS, help="comma list of dot,graphml")

    s = sub.add_parser("synth", help="write a seeded synthetic JSONL corpus to stdout")
    s.add_argument("--seed", type=int, default=42)
    s.add_argument("--papers", type=int, default=5000)
    s.add_argument("--phi", type=float, default=-2.0)
    return parser


def run_analyze(args: argparse.Namespace) -> int:
    if args.top_k < 1 or not 0 < args.alpha < 1 or args.horizon < 0:
        print("error: need --top-k >= 1, 0 < --alpha < 1, --horizon >= 0", file=sys.stderr)
        return EXIT_INPUT
    try:
        data = args.path.read_bytes()
        corpus = parse_corpus(data, args.format or guess_format(args.path))
    except (OSError, AuthorshipError) as exc:
        print(f"error: {args.path}: {exc}", file=sys.stderr)
        return EXIT_INPUT

    bundle = analyze(corpus, top_k=args.top_k, alpha=args.alpha, horizon=args.horizon, exports=args.export)
    out: Path = args.out
    out.mkdir(parents=True, exist_ok=True)
    (out / "summary.json").write_text(bundle.summary_json(), encoding="utf-8")
    for name, text in sorted(bundle.artifacts.items()):
        (out / name).write_text(text, encoding="utf-8", newline="")
    log.info("wrote %d files to %s", len(bundle.artifacts) + 1, out)
    if bundle.problems:
        for problem in bundle.problems:
            print(f"warning: {problem}", file=sys.stderr)
        return EXIT_DEGENERATE
    return EXIT_OK


def run_synth(args: argparse.Namespace) -> int:
    try:
        text = synth_jsonl(args.seed, args.papers, args.phi)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(text)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    if args.command == "analyze":
        return run_analyze(args)
    return run_synth(args)


if __name__ == "__main__":
    sys.exit(main())
