"""Command-line front end.

Exit codes: 0 success, 1 expectation or regression failure, 2 usage or
input error.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings

from .errors import ProjconfError
from .kernels import BACKEND

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _write(text: str, path: str | None):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


# --- verify -----------------------------------------------------------------

def _load_statements(path: str):
    from .verifier import TheoremStatement

    data = _load_json(path)
    items = data if isinstance(data, list) else data.get("statements", [data]) if isinstance(data, dict) else None
    if not items:
        raise UsageError(f"{path}: expected a statement object or a list of them")
    out = []
    for i, d in enumerate(items):
        try:
            st = TheoremStatement.from_dict(d)
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"{path}: statement {i}: {exc!r}") from None
        if not st.name:
            st = TheoremStatement(f"statement-{i}", st.n, st.hypothesis, st.word, st.conclusion,
                                  st.expected, st.labeling, st.starred)
        out.append(st)
    return out


def cmd_verify(args) -> int:
    from .verifier import builtin_suite, check_statement, classical_checks

    if args.statement:
        statements = _load_statements(args.statement)
    elif args.suite == "builtin":
        statements = builtin_suite()
    elif args.suite == "classical":
        statements = []
    else:
        raise UsageError(f"unknown suite {args.suite!r}")
    ok = True
    reports = []
    for st in statements:
        rep = check_statement(st, args.trials, args.seed, args.bound, args.workers)
        reports.append(rep.to_dict())
        ok &= rep.matches_expectation
        mark = "ok  " if rep.matches_expectation else "FAIL"
        print(f"{mark} {st.name}: {rep.passes}/{rep.trials} (expected {st.expected}), "
              f"error bound {float(rep.per_trial_error_bound):.3g}"
              + (f" [{'; '.join(rep.flags)}]" if rep.flags else ""), file=sys.stderr)
    out = {"backend": BACKEND, "seed": args.seed, "trials": args.trials, "reports": reports}
    if args.suite == "classical" and not args.statement:
        cr = classical_checks(args.seed, args.trials, args.bound)
        out["classical"] = cr.to_dict()
        ok &= cr.all_passed
        print(f"classical: {cr.to_dict()}", file=sys.stderr)
    _write(json.dumps(out, indent=2) + "\n", args.out)
    return EXIT_OK if ok else EXIT_FAIL


# --- search -----------------------------------------------------------------

def _csv(text: str) -> tuple[str, ...]:
    return tuple(x.strip() for x in text.split(",") if x.strip())


def cmd_search(args) -> int:
    from .search import SearchConfig, run_search

    try:
        cfg = SearchConfig(
            n_range=(args.n_min, args.n_max),
            max_letter=args.max_letter,
            max_word_length=args.max_word_length,
            hypotheses=_csv(args.hypotheses),
            conclusions=_csv(args.conclusions),
            screen_trials=args.screen_trials,
            confirm_trials=args.confirm_trials,
            seed=args.seed,
            workers=args.workers,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = run_search(cfg, quiet=args.quiet)
    _write(json.dumps(report.to_dict(args.include_screened), indent=1) + "\n", args.out)
    for c in report.novel:
        print(f"novel (needs review): {c.statement.name}", file=sys.stderr)
    missed = report.completeness["missed"]
    if missed:
        print(f"completeness regression: missed {', '.join(missed)}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# --- render -----------------------------------------------------------------

def cmd_render(args) -> int:
    from .render import FIGURES, RenderError, RenderScene, figure, render_svg

    if bool(args.figure) == bool(args.scene):
        raise UsageError("give exactly one of --figure or --scene")
    try:
        if args.figure:
            if args.figure not in FIGURES:
                raise UsageError(f"unknown figure {args.figure!r}; choose from {', '.join(FIGURES)}")
            scene = figure(args.figure, args.seed)
        else:
            scene = RenderScene.from_dict(_load_json(args.scene))
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            svg = render_svg(scene)
    except RenderError as exc:
        print(f"render: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad scene: {exc!r}") from None
    for w in scene.warnings:
        print(f"render: warning: {w}", file=sys.stderr)
    _write(svg, args.out)
    return EXIT_OK


# --- sample -----------------------------------------------------------------

def cmd_sample(args) -> int:
    from .sampling import DEFAULT_BOUND, sample

    try:
        P = sample(args.hypothesis, args.n, args.seed, args.bound or DEFAULT_BOUND)
    except (ValueError, ProjconfError) as exc:
        raise UsageError(f"cannot sample: {exc}") from None
    out = {
        "n": P.n,
        "space": P.space.value,
        "vertices": [[str(x) for x in v] for v in P.coords],
        "provenance": {"hypothesis": args.hypothesis, "seed": args.seed, "bound": args.bound or DEFAULT_BOUND},
    }
    _write(json.dumps(out, indent=2) + "\n", args.out)
    return EXIT_OK


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    from .sampling import DEFAULT_BOUND
    from .verifier import HYPOTHESES

    p = argparse.ArgumentParser(prog="projconf", description=__doc__.splitlines()[0])
    p.add_argument("--config", help="JSON file of flag values (keys as flag names); command-line flags win")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check statements by exact randomized trials")
    v.add_argument("--suite", default="builtin", choices=["builtin", "classical"])
    v.add_argument("--statement", help="JSON file with one statement or a list")
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="search words in diagonal maps for configuration statements")
    s.add_argument("--n-min", type=int, default=5)
    s.add_argument("--n-max", type=int, default=12)
    s.add_argument("--max-letter", type=int, default=4)
    s.add_argument("--max-word-length", type=int, default=7)
    s.add_argument("--hypotheses", default="inscribed,circumscribed")
    s.add_argument("--conclusions", default="equivalent,inscribed,circumscribed")
    s.add_argument("--screen-trials", type=int, default=3)
    s.add_argument("--confirm-trials", type=int, default=25)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--include-screened", action="store_true", help="also list screened-out candidates")
    s.add_argument("--quiet", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)

    r = sub.add_parser("render", help="draw a figure as SVG")
    r.add_argument("--figure")
    r.add_argument("--scene", help="JSON scene file")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--out")
    r.set_defaults(func=cmd_render)

    m = sub.add_parser("sample", help="sample a hypothesis polygon as JSON")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--hypothesis", required=True, choices=list(HYPOTHESES))
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--bound", type=int)
    m.add_argument("--out")
    m.set_defaults(func=cmd_sample)
    return p


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> argparse.Namespace:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, rest = pre.parse_known_args(argv)
    command = next((a for a in rest if not a.startswith("-")), None)
    subs = parser._subparsers._group_actions[0].choices
    if not known.config or command not in subs:
        return parser.parse_args(argv)
    cfg = _load_json(known.config)
    if not isinstance(cfg, dict):
        raise UsageError("config must be a JSON object")
    # config values become defaults, so explicit flags still win
    section = cfg.get(command, cfg)
    sub = subs[command]
    actions = {a.dest: a for a in sub._actions}
    defaults = {}
    for k, val in section.items():
        if k in subs or isinstance(val, dict):
            continue
        dest = k.replace("-", "_")
        if dest not in actions:
            raise UsageError(f"config key {k!r} is not a flag of {command}")
        if isinstance(val, list):
            val = ",".join(map(str, val))
        actions[dest].required = False
        defaults[dest] = val
    sub.set_defaults(**defaults)
    return parser.parse_args(argv)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = _apply_config(parser, argv)
        return args.func(args)
    except UsageError as exc:
        print(f"projconf: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
