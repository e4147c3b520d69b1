"""Command-line front end.

Exit codes: 0 success, 1 unreadable or malformed input, 2 invalid
instance, 3 internal contradiction (the input was not K5-minor-free with
a valid boundary), 4 oracle size guard exceeded, 5 colouring rejected by
``verify``.  ``selftest`` exits 5 when any property check fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .boundary import InvalidInstance, check_instance
from .choose import InternalContradiction, color, verify_coloring
from .generators import apollonian, random_instance, random_triangle_sum
from .minors import DEFAULT_SIZE_GUARD, OracleScaleExceeded, find_k5_model
from .rooted import extract_rooted_k3

EXIT_PARSE, EXIT_INVALID, EXIT_CONTRADICTION, EXIT_SCALE, EXIT_REJECTED = 1, 2, 3, 4, 5


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_color(args) -> int:
    inst = io.parse_instance(_read(args.file))
    col = color(inst, deep=args.deep_validate, size_guard=args.size_guard)
    sys.stdout.write(io.dump_coloring(col, as_json=args.json))
    return 0


def cmd_verify(args) -> int:
    inst = io.parse_instance(_read(args.file))
    col = io.parse_coloring(_read(args.coloring_file))
    if verify_coloring(inst.graph, inst.lists, col):
        print("valid")
        return 0
    print("invalid")
    return EXIT_REJECTED


def cmd_minor(args) -> int:
    g = io.parse_graph(_read(args.file))
    model = find_k5_model(g, args.size_guard)
    print(f"k5-minor: {'yes' if model else 'no'}")
    if model and args.witness:
        for i, s in enumerate(model.sets):
            print(f"set {i}: " + " ".join(map(str, sorted(s))))
    return 0


def cmd_rooted(args) -> int:
    g = io.parse_graph(_read(args.file))
    try:
        roots = [int(r) for r in args.roots.split(",")]
    except ValueError:
        raise io.DocumentError(f"--roots: expected x,y,z integers, got {args.roots!r}") from None
    if len(roots) != 3:
        raise io.DocumentError("--roots: expected exactly three ids")
    wit = extract_rooted_k3(g, *roots)
    print(f"rooted-k3: {'yes' if wit else 'no'}")
    if wit and args.witness:
        for name, part in zip("XYZ", wit.sets):
            print(f"{name}: " + " ".join(map(str, sorted(part))))
    return 0


def _graph_for(args):
    if args.graph == "apollonian":
        return apollonian(args.n, args.seed)
    return random_triangle_sum(args.pieces, args.n, args.seed)


def cmd_gen(args) -> int:
    if args.what == "apollonian":
        g = apollonian(args.n, args.seed)
        inst = random_instance(g, "empty", args.palette, args.seed)
    else:
        inst = random_instance(_graph_for(args), args.mode, args.palette, args.seed)
    sys.stdout.write(io.dump_instance(inst))
    return 0


def cmd_selftest(args) -> int:
    from .selftest import run_all

    failed = 0
    for name, ok, total in run_all(args.max_n, args.samples, args.seed):
        status = "PASS" if ok == total else "FAIL"
        failed += ok != total
        print(f"{status} {name}: {ok}/{total}")
    return EXIT_REJECTED if failed else 0


def cmd_check(args) -> int:
    inst = io.parse_instance(_read(args.file))
    problems = check_instance(inst, deep=args.deep_validate, size_guard=args.size_guard)
    for p in problems:
        print(p)
    if problems:
        return EXIT_INVALID
    print("valid")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="k5choose", description="List-colour K5-minor-free graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("color", help="colour an instance document")
    c.add_argument("file")
    c.add_argument("--deep-validate", action="store_true",
                   help="confirm K5-minor-freeness and the boundary with the exponential oracle")
    c.add_argument("--json", action="store_true")
    c.add_argument("--size-guard", type=int, default=DEFAULT_SIZE_GUARD)
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="check a colouring against an instance")
    v.add_argument("file")
    v.add_argument("coloring_file")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("check", help="validate an instance document")
    k.add_argument("file")
    k.add_argument("--deep-validate", action="store_true")
    k.add_argument("--size-guard", type=int, default=DEFAULT_SIZE_GUARD)
    k.set_defaults(func=cmd_check)

    m = sub.add_parser("minor", help="test for a K5 minor")
    m.add_argument("file")
    m.add_argument("--witness", action="store_true")
    m.add_argument("--size-guard", type=int, default=DEFAULT_SIZE_GUARD)
    m.set_defaults(func=cmd_minor)

    r = sub.add_parser("rooted-k3", help="test for a K3 minor rooted at three vertices")
    r.add_argument("file")
    r.add_argument("--roots", required=True, help="x,y,z")
    r.add_argument("--witness", action="store_true")
    r.set_defaults(func=cmd_rooted)

    g = sub.add_parser("gen", help="emit a generated instance document")
    g.add_argument("what", choices=["apollonian", "instance"])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--palette", type=int, default=5)
    g.add_argument("--graph", choices=["apollonian", "triangle-sum"], default="apollonian")
    g.add_argument("--pieces", type=int, default=2, help="pieces in a triangle sum")
    g.add_argument("--mode", choices=["empty", "vertex-neighborhood"], default="empty")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("selftest", help="run the property suites")
    s.add_argument("--max-n", type=int, default=6)
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except io.DocumentError as e:
        print(f"error: {args.command}: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidInstance as e:
        for v in e.violations:
            print(f"invalid: {v}", file=sys.stderr)
        return EXIT_INVALID
    except InternalContradiction as e:
        print(f"internal contradiction: {e}", file=sys.stderr)
        return EXIT_CONTRADICTION
    except OracleScaleExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SCALE
    except ValueError as e:
        # Structurally readable but semantically broken input, e.g. an edge to a missing vertex.
        print(f"invalid: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
