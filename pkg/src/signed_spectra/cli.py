"""Command-line front end: ``signed-spectra {spectrum,verify,sweep}``.

Exit codes: 0 success, 1 a verification or sweep check failed, 2 bad
arguments or I/O error, 3 spectrum routes disagree beyond tolerance.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import networkx as nx
import numpy as np

from .closedform import NoClosedFormError
from .oracle import AGREE_TOL, verify
from .sgraph import (
    Arbitrary,
    Biclique,
    BicliqueUnion,
    PathEven,
    PathOddU,
    PathOddV,
    Regular,
    build_from_pattern,
    random_signing,
)
from .suites import SWEEP_PATTERNS, golden_suite, properties_suite, sweep

SEED_ENV = "SIGNED_SPECTRA_SEED"
PATTERNS = ("biclique", "bicliques", "path-even", "path-odd-u", "path-odd-v", "regular", "random")
SWEEP_COLUMNS = ["p", "q", "pattern", "params", "mu_max", "nullity", "bound", "pass"]


class UsageError(Exception):
    pass


def resolve_seed(seed):
    if seed is not None:
        return seed
    env = os.environ.get(SEED_ENV)
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"{SEED_ENV}={env!r} is not an integer")


def parse_parts(text: str) -> tuple[tuple[int, int], ...]:
    try:
        parts = tuple(tuple(int(x) for x in item.split(":")) for item in text.split(",") if item.strip())
    except ValueError:
        raise UsageError(f"cannot parse --parts {text!r}; expected 'r1:s1,r2:s2,...'")
    if not parts or any(len(x) != 2 for x in parts):
        raise UsageError(f"cannot parse --parts {text!r}; expected 'r1:s1,r2:s2,...'")
    return parts


def load_h_file(path: str) -> Regular:
    """Read an edge list ``u v`` on labels 1..2k into a Regular pattern.

    The two colour classes of H become the U and V sides; H must be
    bipartite and regular with equal sides.
    """
    edges = []
    try:
        fh = open(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")
    with fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            if len(tokens) != 2:
                raise UsageError(f"{path}:{lineno}: expected 'u v', got {line!r}")
            try:
                edges.append((int(tokens[0]), int(tokens[1])))
            except ValueError:
                raise UsageError(f"{path}:{lineno}: vertex labels must be integers")
    if not edges:
        raise UsageError(f"{path}: no edges")
    n = max(max(e) for e in edges)
    if min(min(e) for e in edges) < 1 or n % 2:
        raise UsageError(f"{path}: labels must run over 1..2k")
    h = nx.Graph()
    h.add_nodes_from(range(1, n + 1))
    h.add_edges_from(edges)
    if not nx.is_bipartite(h):
        raise UsageError(f"{path}: H is not bipartite")
    colour = nx.bipartite.color(h)
    order = sorted(h.nodes, key=lambda v: (colour[v], v))
    k = n // 2
    if sum(1 for v in order if colour[v] == 0) != k:
        raise UsageError(f"{path}: H does not split into two sides of size {k}")
    adj = nx.to_numpy_array(h, nodelist=order, dtype=int)
    try:
        pattern = Regular(k, adj)
        pattern.regularity  # validates
        return pattern
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}")


def build_instance(args):
    p, q = args.p, args.q
    if p < 1 or q < 1:
        raise UsageError("--p and --q must be positive")
    kind = args.pattern

    def need(name):
        val = getattr(args, name)
        if val is None:
            raise UsageError(f"--pattern {kind} requires --{name.replace('_', '-')}")
        return val

    if kind == "biclique":
        pattern = Biclique(need("r"), need("s"))
    elif kind == "bicliques":
        pattern = BicliqueUnion(parse_parts(need("parts")))
    elif kind in ("path-even", "path-odd-u", "path-odd-v"):
        cls = {"path-even": PathEven, "path-odd-u": PathOddU, "path-odd-v": PathOddV}[kind]
        pattern = cls(need("path_r"))
    elif kind == "regular":
        pattern = load_h_file(need("h_file"))
    else:
        rng = np.random.default_rng(resolve_seed(args.seed))
        g = random_signing(p, q, rng)
        return Arbitrary(g.signs.tolist()), g
    if p > q:
        raise UsageError("the closed forms assume --p <= --q")
    try:
        return pattern, build_from_pattern(p, q, pattern)
    except ValueError as exc:
        raise UsageError(str(exc))


def _fmt(v: float) -> str:
    return f"{v:.12g}"


def render_spectrum(report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["method", "value", "multiplicity"])
        for name, spec in report.methods.items():
            for v, m in spec.pairs:
                w.writerow([name, _fmt(v), m])
        return buf.getvalue().rstrip("\n")
    lines = [f"K_{{{report.instance['p']},{report.instance['q']}}}"]
    for name, spec in report.methods.items():
        lines.append(f"[{name}]")
        lines.append(f"  {'eigenvalue':>10}  mult")
        for v, m in spec.pairs:
            lines.append(f"  {round(v, 2) + 0.0:>10.2f}  {m}")
    if len(report.methods) > 1:
        lines.append(f"max deviation: {report.max_deviation:.3e}")
    return "\n".join(lines)


def cmd_spectrum(args) -> int:
    pattern, g = build_instance(args)
    if args.method == "all":
        methods = ["oracle", "reduction"]
        if not isinstance(pattern, Arbitrary):
            methods.append("closedform")
    else:
        methods = [args.method]
    try:
        report = verify(g, methods, pattern=pattern, seed=resolve_seed(args.seed))
    except (NoClosedFormError, ValueError) as exc:
        raise UsageError(str(exc))
    print(render_spectrum(report, args.format))
    return 0 if report.max_deviation < AGREE_TOL else 3


def cmd_verify(args) -> int:
    seed = resolve_seed(args.seed)
    results = []
    if args.suite in ("golden", "all"):
        results += golden_suite()
    if args.suite in ("properties", "all"):
        results += properties_suite(args.trials, seed)
    for res in results:
        print(res.line())
    ok = all(r.passed for r in results)
    print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return 0 if ok else 1


def cmd_sweep(args) -> int:
    patterns = [x.strip() for x in args.patterns.split(",") if x.strip()]
    bad = [x for x in patterns if x not in SWEEP_PATTERNS]
    if bad or not patterns:
        raise UsageError(f"unknown sweep pattern(s) {bad}; choose from {', '.join(SWEEP_PATTERNS)}")
    rows = sweep(args.p_max, args.q_max, patterns, seed=resolve_seed(args.seed))
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow({**row, "mu_max": _fmt(row["mu_max"]), "pass": str(row["pass"]).lower()})
    if args.out:
        try:
            with open(args.out, "w", newline="") as fh:
                fh.write(buf.getvalue())
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}")
        print(f"wrote {len(rows)} rows to {args.out}")
    else:
        sys.stdout.write(buf.getvalue())
    return 0 if all(r["pass"] for r in rows) else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="signed-spectra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="spectrum of one instance")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--pattern", choices=PATTERNS, required=True)
    sp.add_argument("--r", type=int)
    sp.add_argument("--s", type=int)
    sp.add_argument("--parts", help="disjoint bicliques, e.g. '2:2,2:3'")
    sp.add_argument("--path-r", type=int, dest="path_r")
    sp.add_argument("--h-file", dest="h_file", help="edge list 'u v' per line, labels 1..2k")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--method", choices=("oracle", "reduction", "closedform", "all"), default="all")
    sp.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    sp.set_defaults(func=cmd_spectrum)

    vp = sub.add_parser("verify", help="run the golden and/or property suites")
    vp.add_argument("--suite", choices=("golden", "properties", "all"), default="all")
    vp.add_argument("--trials", type=int, default=200)
    vp.add_argument("--seed", type=int)
    vp.set_defaults(func=cmd_verify)

    wp = sub.add_parser("sweep", help="enumerate a parameter grid into CSV")
    wp.add_argument("--p-max", type=int, required=True, dest="p_max")
    wp.add_argument("--q-max", type=int, required=True, dest="q_max")
    wp.add_argument("--patterns", default="biclique", help=f"comma list from {','.join(SWEEP_PATTERNS)}")
    wp.add_argument("--out", help="CSV path (stdout if omitted)")
    wp.add_argument("--seed", type=int)
    wp.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
