"""Command-line entry point: ``qrega run`` and ``qrega selftest``."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import qra
from .script import (
    DefinitionError,
    ScriptError,
    format_outputs,
    outputs_to_json,
    parse_definition,
    qra_definition,
    run_source,
)


@dataclass(frozen=True)
class RunConfig:
    script: Path
    definition: Path | None = None
    qubits: int | None = None
    format: str = "gaalop"
    tol: float = 0.0

    def __post_init__(self) -> None:
        if (self.definition is None) == (self.qubits is None):
            raise ValueError("give exactly one of a definition file or a qubit count")
        if self.format not in ("gaalop", "json"):
            raise ValueError(f"unknown output format {self.format!r}")
        if self.tol < 0:
            raise ValueError("tolerance must be non-negative")


def _read(path: Path, what: str) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise SystemExit(f"error: {what} not found: {path}") from None
    except OSError as exc:
        raise SystemExit(f"error: cannot read {what} {path}: {exc.strerror}") from None


def run(cfg: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        source = _read(cfg.script, "script")
        if cfg.definition is not None:
            definition = parse_definition(_read(cfg.definition, "definition file"))
        else:
            definition = qra_definition(cfg.qubits)
    except SystemExit as exc:
        print(exc.code, file=err)
        return 2
    except DefinitionError as exc:
        print(f"error: {cfg.definition}: {exc}", file=err)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return 2
    try:
        ev = run_source(source, definition)
    except ScriptError as exc:
        print(f"{cfg.script}:{exc.line}:{exc.column}: {exc}", file=err)
        return 1
    if cfg.format == "json":
        out.write(outputs_to_json(ev, cfg.tol))
    else:
        out.write(format_outputs(ev, cfg.tol))
    return 0


def selftest(max_qubits: int = 3, out=None) -> int:
    out = out or sys.stdout
    failed = 0
    for n in range(1, max_qubits + 1):
        ctx = qra.new_context(n)
        for label, ok in qra.identity_checks(ctx):
            failed += not ok
            print(f"{'PASS' if ok else 'FAIL'}  n={n}  {label}", file=out)
    print(f"{'all identities hold' if not failed else f'{failed} failures'}", file=out)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qrega", description="Evaluate GAALOP-style geometric algebra scripts."
    )
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="evaluate a script and print its outputs")
    r.add_argument("script", type=Path)
    src = r.add_mutually_exclusive_group(required=True)
    src.add_argument("--def", dest="definition", type=Path, help="Definition.csv file")
    src.add_argument("--qubits", type=int, help="use the register algebra for n qubits")
    r.add_argument("--format", choices=["gaalop", "json"], default="gaalop")
    r.add_argument("--tol", type=float, default=0.0,
                   help="hide coefficients with magnitude at or below this")

    s = sub.add_parser("selftest", help="check the Witt basis and projector identities")
    s.add_argument("--max-qubits", type=int, default=3)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "selftest":
        if not 1 <= args.max_qubits <= qra.MAX_QUBITS:
            print(f"error: --max-qubits must be in 1..{qra.MAX_QUBITS}", file=sys.stderr)
            return 2
        return selftest(args.max_qubits)
    try:
        cfg = RunConfig(args.script, args.definition, args.qubits, args.format, args.tol)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
