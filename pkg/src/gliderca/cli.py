"""Command-line front end: analyze, recode, build, simulate, verify, render, fixtures."""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from .configuration import TailConfiguration
from .presentation import PresentationError, parse_presentation
from .symbols import parse_word, show

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(obj, path: str | None) -> None:
    text = json.dumps(obj, indent=2, ensure_ascii=False, sort_keys=True) + "\n"
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_shift(path: str):
    try:
        return parse_presentation(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}") from e


def _load_system(path: str | None):
    from .glider import GliderSystem
    if path is None:
        raise UsageError("--system is required")
    try:
        d = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read system {path}: {e}") from e
    return GliderSystem.from_dict(d.get("system", d))


def _window(text: str | None, x: TailConfiguration, traj=None) -> tuple[int, int]:
    if text:
        try:
            a, b = (int(v) for v in text.split(":"))
        except ValueError as e:
            raise UsageError(f"bad window {text!r}, expected a:b") from e
        return a, b
    rows = traj.rows if traj is not None else [x]
    return min(r.start for r in rows) - 10, max(r.end for r in rows) + 10


def _manifest(args, outputs: dict) -> dict:
    params = {k: v for k, v in vars(args).items() if k not in ("func",)}
    return {"command": args.command, "parameters": params, "seed": getattr(args, "seed", None),
            "hashes": {k: hashlib.sha256(v.encode()).hexdigest() for k, v in outputs.items()}}


# ----------------------------------------------------------------------
# subcommands

def cmd_analyze(args) -> int:
    from .syntactic import (gap_alphabet, gap_length_gcd, is_deterministic, is_synchronizing,
                            relation_classes)
    P = _load_shift(args.shift)
    F = P.fischer
    report = {"states": len(P.states), "fischer_states": len(F.states),
              "right_resolving": P.right_resolving, "irreducible": P.irreducible,
              "classes": len(relation_classes(F))}
    if args.z:
        z = parse_word(args.z)
        report["z"] = show(z)
        report["in_language"] = F.language_contains(z)
        if report["in_language"]:
            try:
                report["deterministic"] = is_deterministic(F, z)
            except ValueError as e:
                report["deterministic"] = f"n/a ({e})"
            report["synchronizing"] = is_synchronizing(F, z)
            if report["synchronizing"]:
                report["B"] = [show(c) for c in gap_alphabet(F, z)]
                report["K"] = gap_length_gcd(F, z)
    if args.json:
        _dump(report, None)
    else:
        for k, v in report.items():
            print(f"{k}: {v}")
    return EXIT_OK


def cmd_recode(args) -> int:
    from .recode import describe, recode
    P = _load_shift(args.shift)
    pipe = recode(P, parse_word(args.z), args.k)
    if args.json or args.out:
        _dump(pipe.to_dict(), args.out)
    else:
        print(describe(pipe))
    return EXIT_OK


def cmd_build(args) -> int:
    from .glider import build_GX, build_GXn
    P = _load_shift(args.shift)
    z = parse_word(args.z)
    sysm = build_GXn(P, z, args.k, args.n) if args.sync else build_GX(P, z, args.k)
    _dump({"system": sysm.to_dict(), "summary": sysm.summary()}, args.out)
    return EXIT_OK


def _trajectory(args):
    from .analysis import simulate
    sysm = _load_system(args.system)
    try:
        x = TailConfiguration.parse(args.config)
    except ValueError as e:
        raise UsageError(str(e)) from e
    return sysm, simulate(sysm, x, args.steps)


def cmd_simulate(args) -> int:
    from .analysis import write_spacetime
    sysm, traj = _trajectory(args)
    if args.render:
        lo, hi = _window(args.window, traj[0], traj)
        write_spacetime(args.render, traj, lo, hi, args.style)
    if args.json:
        _dump({"rows": [str(r) for r in traj.rows]}, None)
    else:
        for t, r in enumerate(traj.rows):
            print(f"{t}\t{r}")
    return EXIT_OK


def cmd_render(args) -> int:
    from .analysis import render_spacetime
    _, traj = _trajectory(args)
    lo, hi = _window(args.window, traj[0], traj)
    data = render_spacetime(traj, lo, hi, args.style or "ascii", args.scale)
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .analysis.suites import run_suite
    t0 = time.time()
    sysm = _load_system(args.system) if args.suite != "sgap" else None
    kw = {}
    if args.samples is not None and args.suite in ("speed", "diffusion", "bounds", "ryan"):
        kw["samples"] = args.samples
    try:
        rep = run_suite(args.suite, sysm, args.seed, **kw)
    except ValueError as e:
        raise UsageError(str(e)) from e
    out = rep.to_dict()
    out["manifest"] = _manifest(args, {"report": json.dumps(rep.checks, sort_keys=True)})
    # timing stays off stdout so a replay is byte-identical
    print(f"elapsed {time.time() - t0:.3f}s", file=sys.stderr)
    if args.json:
        _dump(out, None)
    else:
        for name, ok in rep.checks.items():
            print(f"[{'PASS' if ok else 'FAIL'}] {name}")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_fixtures(args) -> int:
    from . import fixtures
    which = [k for k in ("intro", "even", "arrow") if getattr(args, k)] or ["intro", "even", "arrow"]
    out = {}
    for k in which:
        if k == "intro":
            out[k] = {"pipeline": fixtures.intro_pipeline().to_dict(),
                      "system": fixtures.fixture_intro().summary()}
        elif k == "even":
            out[k] = {"system": fixtures.fixture_even().to_dict(), "summary": fixtures.fixture_even().summary()}
        else:
            out[k] = fixtures.arrow_shift().to_dict()
    _dump(out[which[0]] if len(which) == 1 else out, args.out)
    return EXIT_OK


# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gliderca", description=__doc__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    a = sub.add_parser("analyze", help="determinism, synchronization, K and class counts")
    a.add_argument("--shift", required=True)
    a.add_argument("--z")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("recode", help="recode so that z and its companion word exist")
    r.add_argument("--shift", required=True)
    r.add_argument("--z", required=True)
    r.add_argument("--k", type=int, default=1)
    r.add_argument("--json", action="store_true")
    r.add_argument("--out")
    r.set_defaults(func=cmd_recode)

    b = sub.add_parser("build", help="build G_X (or G_X,n with --sync)")
    b.add_argument("--shift", required=True)
    b.add_argument("--z", required=True)
    b.add_argument("--k", type=int, default=1)
    mode = b.add_mutually_exclusive_group()
    mode.add_argument("--sofic", action="store_true", help="the default")
    mode.add_argument("--sync", action="store_true")
    b.add_argument("--n", type=int)
    b.add_argument("--out")
    b.set_defaults(func=cmd_build)

    for name, fn, helptext in (("simulate", cmd_simulate, "iterate a system"),
                               ("render", cmd_render, "space-time diagram")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--system", required=True)
        s.add_argument("--config", required=True)
        s.add_argument("--steps", type=int, default=20)
        s.add_argument("--window")
        s.add_argument("--style", choices=("pbm", "pbm-plain", "ppm", "ppm-plain", "ascii"))
        if name == "simulate":
            s.add_argument("--render")
            s.add_argument("--json", action="store_true")
        else:
            s.add_argument("--out")
            s.add_argument("--scale", type=int, default=1)
        s.set_defaults(func=fn)

    v = sub.add_parser("verify", help="run a randomized verification suite")
    v.add_argument("--suite", required=True, choices=("speed", "diffusion", "bounds", "ryan", "sgap", "sensitivity"))
    v.add_argument("--system")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("fixtures", help="emit the built-in fixtures as JSON")
    f.add_argument("--intro", action="store_true")
    f.add_argument("--even", action="store_true")
    f.add_argument("--arrow", action="store_true")
    f.add_argument("--out")
    f.set_defaults(func=cmd_fixtures)
    return p


def _glue_window(argv: list[str]) -> list[str]:
    """Let `--window -10:20` through although the value starts with a dash."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--window" and i + 1 < len(argv):
            out.append(f"--window={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _glue_window(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as e:
        print(f"gliderca: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (PresentationError, ValueError) as e:
        print(f"gliderca: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
