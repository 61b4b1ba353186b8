"""Command line entry point: ``ncpoisson {validate,classes,decompose,simple,report}``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Callable

from . import report as rep
from .algebra import GradedAlgebra, SpecError
from .document import corpus_paths, dumps, load_path

EXIT_OK, EXIT_MATH, EXIT_INPUT = 0, 1, 2


def _validate(A: GradedAlgebra, args) -> dict[str, Any]:
    return {"algebra": rep.algebra_fragment(A), "axioms": rep.axioms_fragment(A)}


def _guarded(build: Callable[[GradedAlgebra, Any], dict[str, Any]]):
    def run(A: GradedAlgebra, args) -> dict[str, Any]:
        out = _validate(A, args)
        if out["axioms"]["ok"]:
            out.update(build(A, args))
        return out

    return run


COMMANDS: dict[str, Callable[[GradedAlgebra, Any], dict[str, Any]]] = {
    "validate": _validate,
    "classes": _guarded(lambda A, a: {"classes": rep.classes_fragment(A, a.witness)}),
    "decompose": _guarded(lambda A, a: {"decomposition": rep.decomposition_fragment(A)}),
    "simple": _guarded(lambda A, a: {"flags": rep.flags_fragment(A), "simplicity": rep.simplicity_fragment(A)}),
    "report": lambda A, a: rep.full_report(A, a.witness),
}


def _summary(path: str, out: dict[str, Any]) -> list[str]:
    if "error" in out:
        return [f"{path}: input error: {out['error']}"]
    alg = out["algebra"]
    lines = [f"{path}: {alg['name']} labels={alg['labels']} dims={alg['dims']} zero={alg['zero_label']}"]
    for name, check in out["axioms"]["checks"].items():
        status = "ok" if check["ok"] else f"FAIL {check['violations'][:5]}"
        lines.append(f"  {name}: {status}")
    if "classes" in out:
        lines.append(f"  classes: {out['classes']['classes']}")
        for w in out["classes"].get("witnesses", []):
            if w["from"] != w["to"]:
                lines.append(f"    {w['from']} ~ {w['to']} via {w['family']} replays={w['replays']}")
    if "decomposition" in out:
        d = out["decomposition"]
        dims = [s["dim"] for s in d["summands"]]
        lines.append(f"  decomposition: U dim {d['U_dim']}, summands {dims}, direct={d['direct']} covers={d['covers']}")
        thm = d["direct_sum_theorem"]
        lines.append(f"  direct-sum theorem: {'checked ' + ('ok' if thm['ok'] else 'FAIL') if thm['applicable'] else 'hypotheses not met'}")
    if "flags" in out:
        f = out["flags"]
        lines.append(
            "  flags: "
            + " ".join(f"{k}={f[k]}" for k in ("centerless", "tight_zero", "maximal_length", "multiplicative"))
        )
    if "simplicity" in out:
        s = out["simplicity"]
        for route in ("criterion", "direct"):
            v = s[route]
            lines.append(f"  {route}: {v['verdict']} ({'; '.join(v['reasons'])})")
        lines.append(f"  routes agree: {s['agree']}")
    if "fine_decomposition" in out:
        fd = out["fine_decomposition"]
        if fd["applicable"]:
            verdicts = [p["direct"]["verdict"] for p in fd["summands"]]
            lines.append(f"  fine decomposition: {verdicts} ok={fd['ok']}")
        else:
            lines.append(f"  fine decomposition: {fd['reason']}")
    return lines


def _run_one(command: str, path: str, args) -> dict[str, Any]:
    try:
        A = load_path(path)
    except SpecError as exc:
        return {"error": str(exc)}
    return COMMANDS[command](A, args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncpoisson", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("path", nargs="?", help="algebra JSON document")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--corpus", action="store_true", help="run over the bundled corpus")
        p.add_argument("--witness", action="store_true", help="include connection families")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.corpus:
        paths = [str(p) for p in corpus_paths()]
    elif args.path:
        paths = [args.path]
    else:
        print("error: a path or --corpus is required", file=sys.stderr)
        return EXIT_INPUT
    results = {p: _run_one(args.command, p, args) for p in paths}
    codes = [rep.exit_code(r) for r in results.values()]
    if args.json:
        payload: Any = results[paths[0]] if not args.corpus else {Path(p).name: r for p, r in results.items()}
        sys.stdout.write(dumps(payload))
    else:
        for p, r in results.items():
            name = Path(p).name if args.corpus else p
            print("\n".join(_summary(name, r)))
    return max(codes)


if __name__ == "__main__":
    sys.exit(main())
