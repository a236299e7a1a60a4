"""Command-line front end.

Subcommands: stats, normalize, overlap, split, attack, augment, score.
Paths given as ``-`` use the standard streams. Every run that writes an
output file also writes ``<output>.manifest.json`` recording the
subcommand, paths, seed, suffix-pool digest, toolkit version, and a UTC
timestamp, so produced artifacts stay traceable.

Exit codes: 0 success, 1 usage error, 2 data/schema error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Sequence

from . import __version__
from .corpus import (
    DataError,
    NLIExample,
    dataset_stats,
    parse_dataset,
    parse_predictions,
    read_dataset,
    read_predictions,
)
from .metrics import build_confusion, macro_report, render_report, subset_accuracy
from .overlap import annotate_overlap, split_entailments
from .perturb import (
    DEFAULT_ATTACK_SUFFIX,
    DEFAULT_NEUTRAL_POOL,
    Mode,
    NeutralSentencePool,
    PerturbationSpec,
    attack_dataset,
    augment_dataset,
)
from .textnorm import normalize

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_IO = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; the contract says 1
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load_dataset(path: str) -> list[NLIExample]:
    if path == "-":
        return parse_dataset(sys.stdin, "<stdin>")
    return read_dataset(path)


def _load_predictions(path: str):
    if path == "-":
        return parse_predictions(sys.stdin, "<stdin>")
    return read_predictions(path)


def _write_lines(path: str, lines: Sequence[str]) -> None:
    if path == "-":
        for line in lines:
            sys.stdout.write(line + "\n")
        return
    with Path(path).open("w", encoding="utf-8") as fh:
        for line in lines:
            fh.write(line + "\n")


def _pool_digest(pool: NeutralSentencePool) -> str:
    joined = "\n".join(pool.suffixes).encode("utf-8")
    return hashlib.sha256(joined).hexdigest()


def _write_manifest(
    subcommand: str,
    inputs: Sequence[str],
    outputs: Sequence[str],
    *,
    seed: int | None = None,
    pool: NeutralSentencePool | None = None,
    extra: dict | None = None,
) -> None:
    # Manifests only make sense next to a real file; stdout runs skip them.
    if not outputs or outputs[0] == "-":
        return
    manifest = {
        "subcommand": subcommand,
        "inputs": list(inputs),
        "outputs": list(outputs),
        "seed": seed,
        "pool_sha256": _pool_digest(pool) if pool is not None else None,
        "version": __version__,
        "created_utc": datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ"),
    }
    if extra:
        manifest.update(extra)
    path = Path(outputs[0] + ".manifest.json")
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", "utf-8")


def _cmd_stats(args: argparse.Namespace) -> int:
    stats = dataset_stats(_load_dataset(args.input))
    for label, count in stats.count_per_label.items():
        print(f"{label.display}\t{count}")
    print(f"Total\t{stats.total}")
    return EXIT_OK


def _cmd_normalize(args: argparse.Namespace) -> int:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        text = Path(args.input).read_text(encoding="utf-8")
    for token in normalize(text):
        print(token)
    return EXIT_OK


def _cmd_overlap(args: argparse.Namespace) -> int:
    records = annotate_overlap(_load_dataset(args.input))
    lines = [
        json.dumps(
            {
                "id": r.id,
                "wo": r.wo,
                "n_unique_hyp": r.n_unique_hyp,
                "n_matched": r.n_matched,
            },
            ensure_ascii=False,
        )
        for r in records
    ]
    _write_lines(args.output, lines)
    _write_manifest("overlap", [args.input], [args.output])
    return EXIT_OK


def _cmd_split(args: argparse.Namespace) -> int:
    if args.output == "-":
        print(
            "nlidiag split: --output must be a file base path, not -",
            file=sys.stderr,
        )
        return EXIT_USAGE
    result = split_entailments(_load_dataset(args.input), args.k)
    easy_path = args.output + ".easy.txt"
    tough_path = args.output + ".tough.txt"
    _write_lines(easy_path, list(result.easy))
    _write_lines(tough_path, list(result.tough))
    _write_manifest(
        "split",
        [args.input],
        [args.output, easy_path, tough_path],
        extra={"k": result.k, "tie_break": "wo descending, id ascending"},
    )
    return EXIT_OK


def _serialize(examples: Sequence[NLIExample]) -> list[str]:
    return [
        json.dumps(
            {
                "id": ex.id,
                "premise": ex.premise,
                "hypothesis": ex.hypothesis,
                "label": ex.gold.display,
            },
            ensure_ascii=False,
        )
        for ex in examples
    ]


def _cmd_attack(args: argparse.Namespace) -> int:
    pool = NeutralSentencePool((args.suffix,))
    spec = PerturbationSpec(pool=pool, mode=Mode.FIXED_SUFFIX)
    attacked = attack_dataset(_load_dataset(args.input), spec)
    _write_lines(args.output, _serialize(attacked))
    _write_manifest("attack", [args.input], [args.output], pool=pool)
    return EXIT_OK


def _cmd_augment(args: argparse.Namespace) -> int:
    if args.pool is not None:
        pool = NeutralSentencePool.from_file(args.pool)
    else:
        pool = DEFAULT_NEUTRAL_POOL
    spec = PerturbationSpec(pool=pool, seed=args.seed, mode=Mode.RANDOM_FROM_POOL)
    augmented = augment_dataset(_load_dataset(args.input), spec)
    _write_lines(args.output, _serialize(augmented))
    _write_manifest(
        "augment", [args.input], [args.output], seed=args.seed, pool=pool
    )
    return EXIT_OK


def _read_id_list(path: str) -> list[str]:
    if path == "-":
        lines = sys.stdin.read().splitlines()
    else:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    return [line.strip() for line in lines if line.strip()]


def _cmd_score(args: argparse.Namespace) -> int:
    examples = _load_dataset(args.input)
    preds = _load_predictions(args.predictions)
    gold_pairs = [(ex.id, ex.gold) for ex in examples]
    header = []
    if args.subset is not None:
        ids = _read_id_list(args.subset)
        gold_map = {ex.id: ex.gold for ex in examples}
        accuracy = subset_accuracy(ids, gold_map, preds)
        subset_ids = set(ids)
        gold_pairs = [pair for pair in gold_pairs if pair[0] in subset_ids]
        header.append(
            f"Subset accuracy: {accuracy * 100:.1f}% ({len(ids)} ids)"
        )
    report = macro_report(build_confusion(gold_pairs, preds))
    text = render_report(report, format=args.format)
    body = "\n".join(header + [text]) if header else text
    if args.output == "-":
        sys.stdout.write(body)
    else:
        Path(args.output).write_text(body, encoding="utf-8")
    _write_manifest("score", [args.input, args.predictions], [args.output])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="nlidiag",
        description="Corpus diagnostics for NLI datasets: word-overlap "
        "metrics, adversarial/augmented variants, and prediction scoring.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", metavar="SUBCOMMAND")

    p = sub.add_parser("stats", help="print per-label counts for a dataset")
    p.add_argument("--input", required=True, help="dataset file, or - for stdin")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("normalize", help="tokenize and stem text, one token per line")
    p.add_argument("--input", default="-", help="text file, or - for stdin (default)")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("overlap", help="annotate each example with its WO score")
    p.add_argument("--input", required=True, help="dataset file, or - for stdin")
    p.add_argument("--output", required=True, help="annotation file, or - for stdout")
    p.set_defaults(func=_cmd_overlap)

    p = sub.add_parser(
        "split", help="select the k highest/lowest-WO entailment examples"
    )
    p.add_argument("--input", required=True, help="dataset file, or - for stdin")
    p.add_argument(
        "--output",
        required=True,
        help="base path; writes <base>.easy.txt and <base>.tough.txt",
    )
    p.add_argument("--k", type=int, default=1000, help="ids per split (default 1000)")
    p.set_defaults(func=_cmd_split)

    p = sub.add_parser("attack", help="append a fixed suffix to every hypothesis")
    p.add_argument("--input", required=True, help="dataset file, or - for stdin")
    p.add_argument("--output", required=True, help="dataset file, or - for stdout")
    p.add_argument(
        "--suffix",
        default=DEFAULT_ATTACK_SUFFIX,
        help=f"suffix to append (default {DEFAULT_ATTACK_SUFFIX!r})",
    )
    p.set_defaults(func=_cmd_attack)

    p = sub.add_parser(
        "augment", help="append per-example random pool suffixes to hypotheses"
    )
    p.add_argument("--input", required=True, help="dataset file, or - for stdin")
    p.add_argument("--output", required=True, help="dataset file, or - for stdout")
    p.add_argument(
        "--pool",
        default=None,
        help="suffix pool file, one per line (default: built-in 5-sentence pool)",
    )
    p.add_argument("--seed", type=int, default=0, help="64-bit seed (default 0)")
    p.set_defaults(func=_cmd_augment)

    p = sub.add_parser("score", help="score a predictions file against gold labels")
    p.add_argument("--input", required=True, help="gold dataset file, or - for stdin")
    p.add_argument("--predictions", required=True, help="predictions file")
    p.add_argument(
        "--format",
        choices=("json", "markdown"),
        default="markdown",
        help="report format (default markdown)",
    )
    p.add_argument(
        "--subset",
        default=None,
        help="id-list file; restrict scoring to these ids and print their accuracy",
    )
    p.add_argument("--output", default="-", help="report file, or - for stdout")
    p.set_defaults(func=_cmd_score)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except DataError as exc:
        print(f"nlidiag: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"nlidiag: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"nlidiag: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
