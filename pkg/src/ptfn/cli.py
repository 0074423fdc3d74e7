"""Command-line front end.

    ptfn solve --set 1,3,7,8 --n 21 --format csv
    ptfn two-pile --set-a 1,3,7,8 --n-a 15 --set-b 1,2,3,4 --n-b 15
    ptfn wythoff --n 10 --format json

Exit status: 0 on success, 1 on a domain error (the error class name is
printed to stderr), 2 on a usage error.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys

from .analysis import NoLegalMove, NoWinningMove, WinningMove, advise_move, bench_compare, detect_period
from .core import GameError, Label, PlayConvention, validate_set
from .grundy import grundy_table, labels_from_grundy, sum_grundy
from .multipile import GridTable, SumOfTwo, grid_cross_check, ptfn_two_pile, wythoff_sieve
from .oracle import BoundExceeded, minimax_label_1d, minimax_label_grid
from .sieve import PositionTable, ptfn_misere, ptfn_normal

FORMATS = ("ascii", "csv", "json")


class CheckFailed(GameError):
    def __init__(self, msg, output=""):
        super().__init__(msg)
        self.output = output


def _int_list(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _game(text: str) -> tuple[list[int], int]:
    moves, sep, n = text.rpartition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected SET:N, got {text!r}")
    try:
        return _int_list(moves), int(n)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid pile size in {text!r}") from None


def _pile(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"pile size must be non-negative, got {v}")
    return v


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj) + "\n"


def render_table(table: PositionTable, fmt: str) -> str:
    labels = [str(lab) for lab in table.labels]
    if fmt == "json":
        return _json(
            {
                "rule": "subtraction",
                "set": list(table.set.moves),
                "convention": str(table.convention),
                "n": table.n,
                "labels": labels,
            }
        )
    if fmt == "csv":
        return _csv(["index", "label"], enumerate(labels))
    width = len(str(table.n))
    head = f"set={table.set} convention={table.convention} n={table.n}\n"
    return head + "".join(f"{i:>{width}} {lab}\n" for i, lab in enumerate(labels))


def render_grid(grid: GridTable, fmt: str) -> str:
    labels = [[str(lab) for lab in row] for row in grid.labels]
    if fmt == "json":
        obj = {"rule": grid.rule.name}
        if isinstance(grid.rule, SumOfTwo):
            obj["setA"] = list(grid.rule.setA.moves)
            obj["setB"] = list(grid.rule.setB.moves)
        obj.update(convention=str(grid.convention), nA=grid.nA, nB=grid.nB, labels=labels)
        return _json(obj)
    if fmt == "csv":
        rows = ((a, b, lab) for a, row in enumerate(labels) for b, lab in enumerate(row))
        return _csv(["a", "b", "label"], rows)
    return "".join("".join("." if lab == "P" else "#" for lab in row) + "\n" for row in labels)


def cmd_solve(args, misere=False):
    s = validate_set(args.set)
    table = ptfn_misere(s, args.n) if misere else ptfn_normal(s, args.n)
    return render_table(table, args.format)


def cmd_grundy(args):
    s = validate_set(args.set)
    g = grundy_table(s, args.n)
    if args.format == "json":
        return _json({"rule": "subtraction", "set": list(s.moves), "convention": "normal", "n": g.n, "values": list(g.values)})
    if args.format == "csv":
        return _csv(["index", "value"], enumerate(g.values))
    return f"set={s} n={g.n}\n" + " ".join(map(str, g.values)) + "\n"


def cmd_sum(args):
    comps = [(validate_set(m), n) for m, n in args.game]
    values, total = sum_grundy(comps)
    label = Label.P if total == 0 else Label.N
    if args.format == "json":
        games = [{"set": list(s.moves), "n": n, "grundy": g} for (s, n), g in zip(comps, values)]
        return _json({"rule": "sum", "convention": "normal", "games": games, "xor": total, "label": str(label)})
    if args.format == "csv":
        rows = [(",".join(map(str, s.moves)), n, g) for (s, n), g in zip(comps, values)]
        return _csv(["set", "n", "grundy"], rows + [("xor", "", total), ("label", "", str(label))])
    lines = [f"G({s}, {n}) = {g}" for (s, n), g in zip(comps, values)]
    return "\n".join(lines) + f"\nxor = {total} -> {label}\n"


def cmd_two_pile(args):
    grid = ptfn_two_pile(validate_set(args.set_a), args.n_a, validate_set(args.set_b), args.n_b)
    return render_grid(grid, args.format)


def cmd_wythoff(args):
    na = args.n_a if args.n_a is not None else args.n
    nb = args.n_b if args.n_b is not None else args.n
    if na is None or nb is None:
        raise _Usage("wythoff needs --n or both --n-a and --n-b")
    return render_grid(wythoff_sieve(na, nb), args.format)


def cmd_advise(args):
    s = validate_set(args.set)
    table = ptfn_misere(s, args.position) if args.misere else ptfn_normal(s, args.position)
    advice = advise_move(table, args.position)
    amount = advice.amount if isinstance(advice, WinningMove) else None
    label = str(table[args.position])
    if args.format == "json":
        return _json(
            {"set": list(s.moves), "convention": str(table.convention), "position": args.position,
             "label": label, "outcome": advice.kind, "amount": amount}
        )
    if args.format == "csv":
        return _csv(["position", "label", "outcome", "amount"], [(args.position, label, advice.kind, "" if amount is None else amount)])
    if isinstance(advice, WinningMove):
        return f"position {args.position} is N: take {amount} to reach P-position {args.position - amount}\n"
    if isinstance(advice, NoLegalMove):
        return f"position {args.position} has no legal move\n"
    assert isinstance(advice, NoWinningMove)
    return f"position {args.position} is P: no winning move\n"


def cmd_period(args):
    s = validate_set(args.set)
    rep = detect_period(grundy_table(s, args.n))
    if args.format == "json":
        return _json({"set": list(s.moves), "n": args.n, **rep.to_dict()})
    if args.format == "csv":
        return _csv(["preperiod", "period", "verified"], [(rep.preperiod, rep.period, str(rep.verified).lower())])
    status = "verified" if rep.verified else "unverified"
    return f"set={s} preperiod={rep.preperiod} period={rep.period} ({status})\n"


def cmd_bench(args):
    rep = bench_compare(validate_set(args.set), args.n, args.repetitions)
    d = rep.to_dict()
    if args.format == "json":
        return _json(d)
    if args.format == "csv":
        d["set"] = ",".join(map(str, d["set"]))
        return _csv(list(d), [list(d.values())])
    return (
        f"set={rep.set} n={rep.n} repetitions={rep.repetitions}\n"
        f"ptfn: {rep.ptfn_marks} marks, {rep.ptfn_time * 1e3:.3f} ms\n"
        f"sg:   {rep.sg_mex_evals} mex evaluations, {rep.sg_time * 1e3:.3f} ms\n"
        f"agreement: {rep.agreement}\n"
    )


def _check_pile(s, n):
    cases = []
    for conv, table in ((PlayConvention.NORMAL, ptfn_normal(s, n)), (PlayConvention.MISERE, ptfn_misere(s, n))):
        memo = {}
        bad = [i for i in range(n + 1) if minimax_label_1d(s, i, conv, memo) is not table[i]]
        cases.append({"name": f"ptfn-{conv}-vs-oracle", "mismatches": bad})
    sg = labels_from_grundy(grundy_table(s, n))
    normal = ptfn_normal(s, n)
    cases.append({"name": "ptfn-vs-grundy", "mismatches": [i for i in range(n + 1) if sg[i] is not normal[i]]})
    return cases


def _check_grid(grid):
    cases = [{"name": f"{grid.rule.name}-cross-check", "mismatches": [list(c) for c in grid_cross_check(grid)]}]
    memo = {}
    try:
        bad = [
            [a, b]
            for a in range(grid.nA + 1)
            for b in range(grid.nB + 1)
            if minimax_label_grid(grid.rule, a, b, memo) is not grid[a, b]
        ]
        cases.append({"name": f"{grid.rule.name}-vs-oracle", "mismatches": bad})
    except BoundExceeded:
        pass
    return cases


def cmd_check(args):
    if args.wythoff:
        n = args.n if args.n is not None else 50
        cases = _check_grid(wythoff_sieve(n, n))
    elif args.set_a is not None or args.set_b is not None:
        if args.set_a is None or args.set_b is None:
            raise _Usage("two-pile check needs both --set-a and --set-b")
        grid = ptfn_two_pile(validate_set(args.set_a), args.n_a, validate_set(args.set_b), args.n_b)
        cases = _check_grid(grid)
    else:
        if args.set is None or args.n is None:
            raise _Usage("check needs --set and --n, --set-a/--set-b, or --wythoff")
        cases = _check_pile(validate_set(args.set), args.n)
    ok = all(not c["mismatches"] for c in cases)
    if args.format == "json":
        out = _json({"ok": ok, "cases": cases})
    elif args.format == "csv":
        out = _csv(["case", "mismatches"], [(c["name"], len(c["mismatches"])) for c in cases])
    else:
        out = "".join(f"{c['name']}: {'ok' if not c['mismatches'] else str(len(c['mismatches'])) + ' mismatches'}\n" for c in cases)
    if not ok:
        raise CheckFailed("cross-check found mismatches", out)
    return out


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ptfn", description="Solve subtraction games with the PTFN sieve.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=FORMATS, default="ascii")
        p.set_defaults(func=func)
        return p

    for name, func, help in (
        ("solve", cmd_solve, "P/N labels by the PTFN sieve, normal play"),
        ("misere", lambda a: cmd_solve(a, misere=True), "P/N labels by the PTFN sieve, misere play"),
        ("grundy", cmd_grundy, "Sprague-Grundy values"),
        ("period", cmd_period, "detect the period of the Grundy sequence"),
    ):
        p = add(name, func, help)
        p.add_argument("--set", type=_int_list, required=True, help="moves, e.g. 1,3,7,8")
        p.add_argument("--n", type=_pile, required=True, help="pile size")

    p = add("sum", cmd_sum, "outcome of a sum of games by the XOR rule")
    p.add_argument("--game", type=_game, action="append", required=True, metavar="SET:N")

    p = add("two-pile", cmd_two_pile, "PTFN grid for a sum of two subtraction games")
    p.add_argument("--set-a", type=_int_list, required=True)
    p.add_argument("--n-a", type=_pile, required=True)
    p.add_argument("--set-b", type=_int_list, required=True)
    p.add_argument("--n-b", type=_pile, required=True)

    p = add("wythoff", cmd_wythoff, "PTFN grid for Wythoff's game")
    p.add_argument("--n", type=_pile)
    p.add_argument("--n-a", type=_pile)
    p.add_argument("--n-b", type=_pile)

    p = add("advise", cmd_advise, "winning move from a position")
    p.add_argument("--set", type=_int_list, required=True)
    p.add_argument("--position", type=_pile, required=True)
    p.add_argument("--misere", action="store_true")

    p = add("bench", cmd_bench, "compare PTFN with Sprague-Grundy")
    p.add_argument("--set", type=_int_list, required=True)
    p.add_argument("--n", type=_pile, required=True)
    p.add_argument("--repetitions", type=int, default=5)

    p = add("check", cmd_check, "cross-check solvers against the brute-force oracle")
    p.add_argument("--set", type=_int_list)
    p.add_argument("--n", type=_pile)
    p.add_argument("--set-a", type=_int_list)
    p.add_argument("--n-a", type=_pile, default=15)
    p.add_argument("--set-b", type=_int_list)
    p.add_argument("--n-b", type=_pile, default=15)
    p.add_argument("--wythoff", action="store_true")
    return parser


def run_cli(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        stdout.write(args.func(args))
    except _Usage as exc:
        parser.print_usage(stderr)
        stderr.write(f"ptfn {args.command}: error: {exc}\n")
        return 2
    except (GameError, ValueError, OverflowError) as exc:
        stdout.write(getattr(exc, "output", ""))
        stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 1
    return 0


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
