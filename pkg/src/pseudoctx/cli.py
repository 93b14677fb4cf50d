"""``pseudoctx`` command line.

Exit codes: 0 success, 1 negative verdict (no certificate, labeling not
faithful, degenerate angle), 2 bad input.  Every command accepts a fixture
name wherever it accepts a file path.  Floats are printed with 17
significant digits so reports are reproducible byte for byte; wall-clock
timings are only added with ``--timings``.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path


from . import fixtures
from .geometry import (
    ALPHA_MAX,
    DegenerateConstructionError,
    LabelingError,
    VectorLabeling,
    aperture_of_alpha,
    beta_of_alpha,
    construct_combo_for,
    construct_small_for,
    default_eps,
    eigen_sym3,
    find_degenerate_alpha,
    infer_hypergraph_from_labels,
    pairwise_overlaps,
    projector_sum,
    verify_for,
)
from .hypergraph import Hypergraph, HypergraphError, parse_hypergraph, parse_hypergraph_json, serialize
from .hypergraph import to_json as graph_to_json
from .pseudocontext import (
    PreconditionError,
    certificate_from_coverings,
    classical_bounds,
    classify_gadget,
    find_coverings,
    find_pseudocontext_pairs,
    verify_pseudocontext_pair,
)
from .states import enumerate_two_valued_states, is_separating, partition_representation

OK, NEGATIVE, BAD_INPUT = 0, 1, 2

_GRAPH_FOR_LABELS = {
    "small-for-heuristic": "small-graph",
    "combo-for-alpha-pi3": "combo-graph",
    "combo-for-alpha-pi2": "combo-graph",
}


class InputError(Exception):
    pass


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def _num(x):
    """JSON-ready float that keeps the 17-digit text form."""
    return json.loads(fmt(x))


_integrity_checked = False


def _ensure_fixtures() -> None:
    global _integrity_checked
    if not _integrity_checked:
        try:
            fixtures.check_fixture_integrity()
        except fixtures.FixtureError as exc:
            raise InputError(f"fixture integrity check failed: {exc}") from exc
        _integrity_checked = True


def load_graph(ref: str) -> Hypergraph:
    if ref in fixtures.FIXTURE_NAMES:
        _ensure_fixtures()
        g = fixtures.load_fixture(ref)
        if not isinstance(g, Hypergraph):
            raise InputError(f"fixture {ref!r} is not a hypergraph")
        return g
    path = Path(ref)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {ref}: {exc.strerror or exc}") from exc
    try:
        return parse_hypergraph_json(text) if path.suffix == ".json" else parse_hypergraph(text)
    except HypergraphError as exc:
        raise InputError(f"{ref}: {exc}") from exc


def load_labels(ref: str, eps: float) -> VectorLabeling:
    if ref in fixtures.FIXTURE_NAMES:
        _ensure_fixtures()
        lab = fixtures.load_fixture(ref)
        if not isinstance(lab, VectorLabeling):
            raise InputError(f"fixture {ref!r} is not a vector labeling")
        return lab.with_eps(eps)
    try:
        return VectorLabeling.from_json(Path(ref).read_text(encoding="utf-8"), eps)
    except OSError as exc:
        raise InputError(f"cannot read {ref}: {exc.strerror or exc}") from exc
    except LabelingError as exc:
        raise InputError(f"{ref}: {exc}") from exc


def parse_set(text: str) -> list[int]:
    try:
        vs = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise InputError(f"bad vertex list {text!r}; expected e.g. 1,6,11") from None
    if not vs:
        raise InputError("empty vertex list")
    return vs


def _set_str(s) -> str:
    return ",".join(str(v) for v in sorted(s))


class Out:
    """Collects text lines and a JSON result; emits one of them at the end."""

    def __init__(self, args, command: str, inputs: dict):
        self.json = args.json
        self.timings = args.timings
        self.report = {"command": command, "inputs": inputs, "results": {}}
        self.lines: list[str] = []
        self._t0 = time.perf_counter()

    def text(self, line: str = "") -> None:
        self.lines.append(line)

    def __setitem__(self, key, value) -> None:
        self.report["results"][key] = value

    def emit(self) -> None:
        elapsed = time.perf_counter() - self._t0
        if self.json:
            if self.timings:
                self.report["timings"] = {"total_s": elapsed}
            sys.stdout.write(json.dumps(self.report, indent=2) + "\n")
        else:
            if self.lines:
                sys.stdout.write("\n".join(self.lines) + "\n")
            if self.timings:
                sys.stderr.write(f"elapsed {elapsed:.3f} s\n")


# -- states -------------------------------------------------------------------

def cmd_states(args) -> int:
    h = load_graph(args.graph)
    out = Out(args, "states", {"graph": args.graph})
    s = enumerate_two_valued_states(h)
    out["count"] = len(s)
    out.text(str(len(s)))
    if args.dump:
        rows = ["".join(map(str, st)) for st in s]
        out["states"] = rows
        out.lines.extend(rows)
    verdict = OK
    if args.separating:
        ok, pair = is_separating(s, h)
        out["separating"] = ok
        out["unseparated_pair"] = list(pair) if pair else None
        out.text("separating: yes" if ok else f"separating: no (vertices {pair[0]} and {pair[1]})")
    if args.partition:
        if not len(s):
            raise InputError("no two-valued states, so no partition representation")
        p = partition_representation(s)
        out["partition"] = {str(v): sorted(p[v]) for v in p.vertices}
        out.text(p.to_json().rstrip("\n"))
    out.emit()
    return verdict


# -- pseudo -------------------------------------------------------------------

def cmd_pseudo(args) -> int:
    h = load_graph(args.graph)
    inputs = {"graph": args.graph, "k": args.k}
    if args.pair is None:
        if args.coverings or args.bounds or args.gadget:
            raise InputError("--coverings, --bounds and --gadget need --pair A B")
        out = Out(args, "pseudo", inputs)
        pairs = find_pseudocontext_pairs(h, args.k)
        out["pairs"] = [[sorted(a), sorted(b)] for a, b in pairs]
        out.text(f"{len(pairs)} pseudocontext pair(s) of size {args.k}")
        for a, b in pairs:
            out.text(f"{_set_str(a)} | {_set_str(b)}")
        out.emit()
        return OK

    A, B = (parse_set(x) for x in args.pair)
    inputs["pair"] = [sorted(A), sorted(B)]
    out = Out(args, "pseudo", inputs)
    try:
        cert = verify_pseudocontext_pair(h, A, B)
    except PreconditionError as exc:
        raise InputError(str(exc)) from exc
    if cert is None:
        out["certificate"] = None
        out.text(f"no certificate: {_set_str(A)} and {_set_str(B)} are not a pseudocontext pair")
        out.emit()
        return NEGATIVE

    covers = None
    if args.coverings:
        cov_a = find_coverings(h, A, limit=args.limit)
        cov_b = find_coverings(h, B, limit=args.limit)
        covers = (cov_a, cov_b)
        out["coverings"] = {
            "excluding_A": [[list(e) for e in c.edges] for c in cov_a],
            "excluding_B": [[list(e) for e in c.edges] for c in cov_b],
            "limit": args.limit,
        }
        if cov_a and cov_b:
            # a unit-coefficient certificate is easier to read than the solver's
            cert = certificate_from_coverings(cov_a[0], cov_b[0])
    out["certificate"] = cert.to_dict()
    out.text(f"certificate for {_set_str(A)} | {_set_str(B)}")
    for e, c in cert.support().items():
        out.text(f"  lambda{list(e)} = {c}")
    out.text(cert.to_json())
    if covers is not None:
        for label, S, cov in (("A", A, covers[0]), ("B", B, covers[1])):
            out.text(f"coverings excluding {label}={{{_set_str(S)}}}: {len(cov)}" + (" (capped)" if len(cov) == args.limit else ""))
            for c in cov:
                out.text(f"  {len(c)} edges: {c.to_json()}")
    if args.bounds or args.gadget:
        s = enumerate_two_valued_states(h)
        if args.bounds:
            ba, bb = classical_bounds(s, A), classical_bounds(s, B)
            out["classical_bounds"] = {"A": [ba.lo, ba.hi], "B": [bb.lo, bb.hi]}
            out.text(f"classical bounds A: [{ba.lo}, {ba.hi}]  B: [{bb.lo}, {bb.hi}]")
        if args.gadget:
            g = classify_gadget(s, A, B)
            out["gadget"] = {
                "joint": [[a, b, n] for (a, b), n in g.joint.items()],
                "fif": g.fif,
                "tit_levels": list(g.tit_levels),
                "symmetric": g.symmetric,
            }
            out.text(f"gadget: FIF={'yes' if g.fif else 'no'} TIT levels={list(g.tit_levels)} symmetric={'yes' if g.symmetric else 'no'}")
            out.text("  joint (sum_A, sum_B): count  " + "  ".join(f"({a},{b}):{n}" for (a, b), n in g.joint.items()))
    out.emit()
    return OK


# -- for ----------------------------------------------------------------------

def _vectors_payload(lab: VectorLabeling) -> list[list[float]]:
    return [[_num(x) for x in row] for row in lab.vectors]


def cmd_for(args) -> int:
    eps = args.eps if args.eps is not None else default_eps()
    return {"construct": _for_construct, "verify": _for_verify, "infer": _for_infer, "bounds": _for_bounds}[args.action](args, eps)


def _for_construct(args, eps: float) -> int:
    _ensure_fixtures()
    out = Out(args, "for construct", {"variant": args.variant, "alpha": _num(args.alpha), "handedness": args.handedness})
    try:
        if args.variant == "small":
            lab = construct_small_for(args.alpha, eps)
        else:
            lab = construct_combo_for(args.alpha, args.handedness, eps)
    except DegenerateConstructionError as exc:
        err = {"kind": exc.kind, "pairs": [list(p) for p in exc.pairs]}
        if exc.cube is not None:
            err["cube"] = [[_num(x) for x in r] for r in exc.cube]
        out["error"] = err
        out.text(str(exc))
        out.emit()
        return NEGATIVE
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    out.text(f"alpha = {fmt(args.alpha)}")
    if args.variant == "combo":
        beta, ap = beta_of_alpha(args.alpha), aperture_of_alpha(args.alpha)
        out["beta"], out["aperture"] = _num(beta), _num(ap)
        out.text(f"beta = {fmt(beta)}")
        out.text(f"aperture = {fmt(ap)}")
    out["vectors"] = _vectors_payload(lab)
    if args.out:
        Path(args.out).write_text(lab.to_json(), encoding="utf-8")
        out.text(f"wrote {lab.n} vectors to {args.out}")
    else:
        out.text(lab.to_json().rstrip("\n"))
    out.emit()
    return OK


def _for_verify(args, eps: float) -> int:
    lab = load_labels(args.labels, eps)
    graph_ref = args.graph or _GRAPH_FOR_LABELS.get(args.labels)
    if graph_ref is None:
        raise InputError("--graph is required for a labeling read from a file")
    h = load_graph(graph_ref)
    out = Out(args, "for verify", {"labels": args.labels, "graph": graph_ref, "eps": _num(eps)})
    try:
        rep = verify_for(h, lab)
    except LabelingError as exc:
        raise InputError(str(exc)) from exc
    out.report["results"].update(rep.to_dict())
    out.text("faithful: yes" if rep.ok else "faithful: no")
    for name, pairs in (("missing orthogonality", rep.missing), ("extra orthogonality", rep.extra), ("duplicate labels", rep.duplicates)):
        if pairs:
            out.text(f"{name}: {' '.join(f'({i},{j})' for i, j in pairs)}")
    out.emit()
    return OK if rep.ok else NEGATIVE


def _for_infer(args, eps: float) -> int:
    lab = load_labels(args.labels, eps)
    out = Out(args, "for infer", {"labels": args.labels, "eps": _num(eps)})
    try:
        h = infer_hypergraph_from_labels(lab)
    except LabelingError as exc:
        out["error"] = str(exc)
        out.text(f"not conformal: {exc}")
        out.emit()
        return NEGATIVE
    out.report["results"].update(json.loads(graph_to_json(h)))
    out.text(serialize(h).rstrip("\n"))
    out.emit()
    return OK


def _for_bounds(args, eps: float) -> int:
    lab = load_labels(args.labels, eps)
    A = parse_set(args.set)
    bad = [v for v in A if not 1 <= v <= lab.n]
    if bad:
        raise InputError(f"vertices {bad} not in 1..{lab.n}")
    out = Out(args, "for bounds", {"labels": args.labels, "set": sorted(A)})
    m = projector_sum(lab, A)
    dec = eigen_sym3(m)
    lo, hi = dec.eigenvalues[0], dec.eigenvalues[-1]
    ov = pairwise_overlaps(lab, A)
    out["projector_sum"] = [[_num(x) for x in r] for r in m]
    out["eigenvalues"] = [_num(x) for x in dec.eigenvalues]
    out["eigenvectors"] = [[_num(x) for x in col] for col in dec.eigenvectors.T]
    out["quantum_interval"] = [_num(lo), _num(hi)]
    out["pairwise_overlaps"] = [_num(x) for x in ov]
    out.text("projector sum:")
    for r in m:
        out.text("  " + " ".join(fmt(x) for x in r))
    out.text("eigenvalues: " + " ".join(fmt(x) for x in dec.eigenvalues))
    for lam, col in zip(dec.eigenvalues, dec.eigenvectors.T):
        out.text(f"  {fmt(lam)}: " + " ".join(fmt(x) for x in col))
    out.text(f"quantum interval: [{fmt(lo)}, {fmt(hi)}]")
    out.text("pairwise overlaps: " + " ".join(fmt(x) for x in ov))
    out.emit()
    return OK


# -- table --------------------------------------------------------------------

def cmd_table(args) -> int:
    if args.what == "alpha0":
        a0 = find_degenerate_alpha()
        out = Out(args, "table alpha0", {})
        out["alpha0"] = _num(a0)
        out.text(fmt(a0))
        out.emit()
        return OK
    if args.steps < 1:
        raise InputError("--steps must be at least 1")
    out = Out(args, "table beta-curve", {"steps": args.steps})
    rows = []
    for k in range(args.steps + 1):
        a = ALPHA_MAX if k == args.steps else k * ALPHA_MAX / args.steps
        rows.append([a, beta_of_alpha(a), aperture_of_alpha(a)])
    out["columns"] = ["alpha", "beta", "aperture"]
    out["rows"] = [[_num(x) for x in r] for r in rows]
    out.text("alpha,beta,aperture")
    out.lines.extend(",".join(fmt(x) for x in r) for r in rows)
    out.emit()
    return OK


# -- entry point --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    def global_flags(suppress: bool) -> argparse.ArgumentParser:
        # subcommands repeat the flags with suppressed defaults so they do not
        # overwrite values given before the subcommand name
        g = argparse.ArgumentParser(add_help=False)
        d = (lambda x: argparse.SUPPRESS) if suppress else (lambda x: x)
        g.add_argument("--json", action="store_true", default=d(False), help="emit a JSON report only")
        g.add_argument("--timings", action="store_true", default=d(False), help="add wall-clock time (breaks byte reproducibility)")
        g.add_argument("--eps", type=float, default=d(None), help="orthogonality tolerance (default $PSEUDOCTX_EPS or 1e-10)")
        return g

    common = global_flags(True)
    p = argparse.ArgumentParser(prog="pseudoctx", description=__doc__.splitlines()[0], parents=[global_flags(False)])
    sub = p.add_subparsers(dest="cmd", required=True)
    graph_help = "hypergraph file (text or .json) or fixture name: " + ", ".join(fixtures.FIXTURE_NAMES[:2])

    s = sub.add_parser("states", parents=[common], help="enumerate two-valued states")
    s.add_argument("graph", help=graph_help)
    s.add_argument("--dump", action="store_true", help="print every state as a 0/1 string")
    s.add_argument("--separating", action="store_true", help="check that the states separate all vertices")
    s.add_argument("--partition", action="store_true", help="print the Boolean set representation")
    s.set_defaults(func=cmd_states)

    q = sub.add_parser("pseudo", parents=[common], help="find or certify pseudocontext pairs")
    q.add_argument("graph", help=graph_help)
    q.add_argument("--k", type=int, default=3, help="set size for the search (default 3)")
    q.add_argument("--pair", nargs=2, metavar=("A", "B"), help="comma-separated vertex sets to certify")
    q.add_argument("--coverings", action="store_true", help="list exact coverings leaving out A and B")
    q.add_argument("--limit", type=int, default=100, help="cap on coverings listed per set (default 100)")
    q.add_argument("--bounds", action="store_true", help="classical bounds from the two-valued states")
    q.add_argument("--gadget", action="store_true", help="false-implies-false / true-implies-true flags")
    q.set_defaults(func=cmd_pseudo)

    f = sub.add_parser("for", parents=[common], help="orthogonal representations in R^3")
    fsub = f.add_subparsers(dest="action", required=True)
    c = fsub.add_parser("construct", parents=[common], help="analytic FOR for a given alpha")
    c.add_argument("--variant", choices=("small", "combo"), default="small")
    c.add_argument("--alpha", type=float, required=True, help="rotation angle in radians")
    c.add_argument("--handedness", type=int, choices=(1, -1), default=1, help="sense of the beta rotation (combo)")
    c.add_argument("--out", help="write the vectors to this JSON file")
    v = fsub.add_parser("verify", parents=[common], help="check a labeling against a hypergraph")
    v.add_argument("labels", help="vector JSON file or labeling fixture")
    v.add_argument("--graph", help="hypergraph (defaults to the fixture's own graph)")
    i = fsub.add_parser("infer", parents=[common], help="hypergraph of maximal orthogonal triples")
    i.add_argument("labels")
    b = fsub.add_parser("bounds", parents=[common], help="projector sum, eigenvalues and quantum interval")
    b.add_argument("labels")
    b.add_argument("--set", required=True, help="comma-separated vertices, e.g. 4,16,28")
    f.set_defaults(func=cmd_for)

    t = sub.add_parser("table", parents=[common], help="beta(alpha) curve or the degenerate root alpha0")
    t.add_argument("what", choices=("beta-curve", "alpha0"))
    t.add_argument("--steps", type=int, default=50, help="intervals for beta-curve (default 50)")
    t.set_defaults(func=cmd_table)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return BAD_INPUT
    finally:
        sys.stdout.flush()


if __name__ == "__main__":
    sys.exit(main())
