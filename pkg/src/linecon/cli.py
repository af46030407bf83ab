"""Command-line interface.

Exit codes: 0 on success, 1 when a verification suite finds a
counterexample, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from collections import Counter
from pathlib import Path

from .congruence import FOLDED, IDENTITY, TOTAL, Congruence, enumerate_congruences, parse
from .errors import DomainError, EnumerationCapExceeded, UndefinedOperation
from .lattice import (
    classify_catalog,
    common_extremes,
    criterion,
    join,
    leq,
    meet,
    rest_profile,
    step_of_join,
)
from .oracle import build_lattice
from .render import (
    render_folding_ascii,
    render_folding_svg,
    render_trajectory_ascii,
    render_trajectory_svg,
)
from .trajectory import build_trajectory, crossing_counts, folding
from . import verify

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


def to_record(c: Congruence) -> dict:
    rec = {"n": c.n, "kind": c.kind}
    if c.kind == FOLDED:
        rec["k"] = c.k
        rec["rests"] = list(c.rests)
    rec["step"] = c.step
    if not c.is_total:
        rec["frequency"] = c.frequency
    return rec


def from_record(rec: dict) -> Congruence:
    kind = rec["kind"]
    if kind == TOTAL:
        return Congruence.total(rec["n"])
    if kind == IDENTITY:
        return Congruence.identity(rec["n"])
    return Congruence.folded(rec["n"], rec["k"], tuple(rec.get("rests", ())))


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _yes(v) -> str:
    return "true" if v else "false"


def cmd_enumerate(args, out):
    cs = enumerate_congruences(args.n)
    if args.format == "json":
        out.write(_dump([to_record(c) for c in cs]))
        return EXIT_OK
    rows = [("congruence", "step", "rests", "frequency", "extremes")]
    for c in cs:
        if c.is_total:
            rows.append((c.text(), str(c.step), "-", "-", "-"))
        else:
            rows.append((
                c.text(),
                str(c.step),
                ",".join(map(str, c.rests)) or "-",
                str(c.frequency),
                ",".join(map(str, sorted(c.extremes))),
            ))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        out.write("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() + "\n")
    return EXIT_OK


def _lattice(n):
    cs = enumerate_congruences(n)
    lat = build_lattice(n, [c.to_partition() for c in cs])
    pos = {c.to_partition(): i for i, c in enumerate(cs)}
    remap = [pos[p] for p in lat.elements]
    covers = sorted((remap[a], remap[b]) for a, b in lat.covers)
    m = len(cs)
    meet_t = [[0] * m for _ in range(m)]
    join_t = [[0] * m for _ in range(m)]
    for a in range(m):
        for b in range(m):
            meet_t[remap[a]][remap[b]] = remap[lat.meet(a, b)]
            join_t[remap[a]][remap[b]] = remap[lat.join(a, b)]
    return cs, covers, meet_t, join_t


def cmd_lattice(args, out):
    cs, covers, meet_t, join_t = _lattice(args.n)
    if args.format == "json":
        out.write(_dump({
            "n": args.n,
            "elements": [to_record(c) for c in cs],
            "covers": [list(e) for e in covers],
            "meet": meet_t,
            "join": join_t,
        }))
        return EXIT_OK
    out.write(f"digraph con_L{args.n} {{\n  rankdir=BT;\n  node [shape=plaintext];\n")
    for c in cs:
        out.write(f'  "{c.text()}";\n')
    for a, b in covers:
        out.write(f'  "{cs[a].text()}" -> "{cs[b].text()}";\n')
    out.write("}\n")
    return EXIT_OK


def _pair_report(a: Congruence, b: Congruence) -> dict:
    rep = {"a": a.text(), "b": b.text()}
    j = join(a, b)
    rep["join"] = j.text()
    rep["nontrivial"] = not j.is_total
    if a.is_total or b.is_total:
        return rep
    eta = common_extremes(a, b).eta
    rep["common extremes"] = list(eta)
    rep["profiles"] = [rest_profile(a).value, rest_profile(b).value]
    crit = criterion(a, b)
    rep["criterion"] = {name: val for name, val in crit.lines()}
    if not j.is_total:
        rep["step of join"] = step_of_join(a, b)
        rep["frequency of join"] = j.frequency
        if eta == (0, a.n):
            case = classify_catalog(a, b)
            rep["catalog case"] = case.value if case else None
    return rep


def _write_pair_report(rep: dict, out, head: str | None = None):
    if head is not None:
        out.write(head + "\n")
    for key, val in rep.items():
        if key == "criterion":
            out.write("criterion:\n")
            for name, ok in val.items():
                mark = "not evaluated" if ok is None else ("yes" if ok else "no")
                out.write(f"  {name}: {mark}\n")
        elif isinstance(val, bool):
            out.write(f"{key}: {_yes(val)}\n")
        elif isinstance(val, list):
            out.write(f"{key}: {', '.join(map(str, val))}\n")
        else:
            out.write(f"{key}: {val}\n")


def cmd_pair(args, out):
    a, b = parse(args.a, args.n), parse(args.b, args.n)
    if args.command == "leq":
        ans = leq(a, b)
        out.write(_dump({"leq": ans}) if args.format == "json" else _yes(ans) + "\n")
        return EXIT_OK
    rep = _pair_report(a, b)
    if args.command == "classify":
        head = None
    else:
        res = meet(a, b) if args.command == "meet" else join(a, b)
        head = res.text()
        rep = {args.command: res.text(), "step": res.step,
               "frequency": None if res.is_total else res.frequency, **rep}
        if args.format == "json":
            rep["result"] = to_record(res)
    if args.format == "json":
        out.write(_dump(rep))
    else:
        _write_pair_report(rep, out, head)
    return EXIT_OK


def _diagram_text(args):
    a = parse(args.a, args.n)
    if args.kind == "folding":
        f = folding(a)
        return f, (render_folding_ascii(f) if args.format == "ascii" else render_folding_svg(f))
    if args.b is None:
        raise DomainError("a trajectory needs --b")
    b = parse(args.b, args.n)
    th, dl = (a, b) if a.step <= b.step else (b, a)
    d = build_trajectory(th, dl)
    return d, (render_trajectory_ascii(d) if args.format == "ascii" else render_trajectory_svg(d))


def cmd_diagram(args, out):
    if args.format == "png":
        if not args.out:
            raise DomainError("png output needs --out")
        from . import plots

        a = parse(args.a, args.n)
        if args.kind == "folding":
            plots.plot_folding(folding(a), args.out, title=f"<{a}> on L_{args.n}")
        else:
            if args.b is None:
                raise DomainError("a trajectory needs --b")
            b = parse(args.b, args.n)
            th, dl = (a, b) if a.step <= b.step else (b, a)
            plots.plot_trajectory(build_trajectory(th, dl), args.out, title=f"<{th}> and <{dl}> on L_{args.n}")
        return EXIT_OK
    _, text = _diagram_text(args)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return EXIT_OK


def cmd_verify(args, out):
    results = verify.run(args.suite, args.max_n)
    for r in results:
        out.write(r.line() + "\n")
    return EXIT_OK if all(r.ok for r in results) else EXIT_COUNTEREXAMPLE


def _write_csv(path: Path, header, rows):
    with path.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def cmd_report(args, out):
    from . import plots

    dest = Path(args.out)
    dest.mkdir(parents=True, exist_ok=True)

    counts = []
    for n in range(0, args.max_n + 1):
        nt = verify.nontrivial(n)
        pairs = nontrivial_pairs = zero_n = 0
        for i, a in enumerate(nt):
            for b in nt[i:]:
                pairs += 1
                if not verify.closure_join(a, b).is_total:
                    nontrivial_pairs += 1
                    if common_extremes(a, b).eta == (0, n):
                        zero_n += 1
        counts.append((n, len(verify.congruences(n)), pairs, nontrivial_pairs, zero_n))
    _write_csv(dest / "counts.csv",
               ["n", "congruences", "pairs", "nontrivial_joins", "nontrivial_joins_extremes_0_n"], counts)
    plots.plot_counts([r[0] for r in counts], [r[1] for r in counts], dest / "counts.png")

    rows = []
    for n, sa, sb, _ in verify.CATALOG_EXAMPLES:
        a, b = parse(sa, n), parse(sb, n)
        th, dl = (a, b) if a.step <= b.step else (b, a)
        cc = crossing_counts(build_trajectory(th, dl))
        j = join(a, b)
        case = classify_catalog(a, b)
        rows.append((n, th.text(), dl.text(), th.frequency, dl.frequency, case.value if case else "",
                     j.text(), j.frequency, cc.i, cc.h))
    _write_csv(dest / "catalog.csv",
               ["n", "theta", "delta", "f_theta", "f_delta", "case", "join", "f_join", "crossings_integral",
                "crossings_half"], rows)

    freq = Counter(c.frequency for c in verify.nontrivial(args.max_n))
    _write_csv(dest / "frequencies.csv", ["frequency", "congruences"], sorted(freq.items()))
    if freq:
        plots.plot_frequency_histogram(freq, dest / "frequencies.png", args.max_n)

    th, dl = parse("4;4,13", 18), parse("6", 18)
    plots.plot_trajectory(build_trajectory(th, dl), dest / "trajectory.png", title="<4;4,13> and <6> on L_18")
    plots.plot_folding(folding(parse("2;2", 5)), dest / "folding.png", title="<2;2> on L_5")

    results = verify.run("all", args.max_n)
    _write_csv(dest / "verify.csv", ["suite", "status", "checks", "counterexample"],
               [(r.name, "pass" if r.ok else "fail", r.checked, r.counterexample or "") for r in results])
    for name in sorted(p.name for p in dest.iterdir()):
        out.write(f"{dest / name}\n")
    return EXIT_OK if all(r.ok for r in results) else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="linecon", description="Congruence lattices of finite lines.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", help="list all congruences of L_n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=["table", "json"], default="table")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("lattice", help="Hasse diagram (DOT) or full lattice (JSON)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=["dot", "json"], default="dot")
    s.set_defaults(func=cmd_lattice)

    for name, text in (("meet", "greatest lower bound"), ("join", "least upper bound"),
                       ("leq", "order test"), ("classify", "pair report")):
        s = sub.add_parser(name, help=text)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--a", required=True, help='congruence: "id", "total", "k" or "k;r1,r2,..."')
        s.add_argument("--b", required=True)
        s.add_argument("--format", choices=["text", "json"], default="text")
        s.set_defaults(func=cmd_pair)

    s = sub.add_parser("diagram", help="draw a folding or a trajectory diagram")
    s.add_argument("kind", choices=["folding", "trajectory"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--a", required=True)
    s.add_argument("--b")
    s.add_argument("--format", choices=["ascii", "svg", "png"], default="ascii")
    s.add_argument("--out", help="output file (stdout if omitted)")
    s.set_defaults(func=cmd_diagram)

    s = sub.add_parser("verify", help="run exhaustive verification suites")
    s.add_argument("--suite", choices=["all", *verify.SUITES], default="all")
    s.add_argument("--max-n", type=int, default=8)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("report", help="write CSV tables and PNG figures")
    s.add_argument("--max-n", type=int, default=10)
    s.add_argument("--out", default="report")
    s.set_defaults(func=cmd_report)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (DomainError, UndefinedOperation, EnumerationCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
