"""Command-line front end mirroring BridgeConfig field for field."""

from __future__ import annotations

import argparse
import sys

from .bridge import BridgeConfig, ModelError, run_inference
from .records import CLASS_NAMES, DataError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_IO = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="nli-bridge",
        description=(
            "Run a pretrained 3-way sequence-classification model over a "
            "premise/hypothesis dataset file and write a predictions file."
        ),
    )
    parser.add_argument("--model", required=True, help="checkpoint id or local path")
    parser.add_argument("--input", required=True, help="dataset JSONL to classify")
    parser.add_argument("--output", required=True, help="predictions JSONL to write")
    parser.add_argument("--batch-size", type=int, default=32)
    parser.add_argument("--device", default="cpu")
    parser.add_argument("--max-seq-length", type=int, default=128)
    parser.add_argument(
        "--labels",
        default=",".join(CLASS_NAMES),
        help=(
            "comma-separated class names in the model's output-index order "
            f"(default: {','.join(CLASS_NAMES)})"
        ),
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    labels = tuple(name.strip() for name in args.labels.split(","))
    try:
        config = BridgeConfig(
            model=args.model,
            input_path=args.input,
            output_path=args.output,
            batch_size=args.batch_size,
            device=args.device,
            max_seq_length=args.max_seq_length,
            labels=labels,
        )
        out = run_inference(config)
    except (DataError, ModelError, ValueError) as exc:
        print(f"nli-bridge: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"nli-bridge: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote predictions to {out}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
