"""``arrlab`` command line.

Exit codes: 0 success, 1 verification failure (or no witness where one was
asked for), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
from collections import Counter
from pathlib import Path

from . import central
from .cases import CaseError, CaseFile, parse_case, write_case
from .geometry import harness, regions
from .geometry.arrangement import Arrangement, arrangement_to_json, graph_of_arrangement
from .graph import GraphError, SimpleAcyclicDigraph, inverse_permutation, normalize_increasing
from .parking import format_label, g_parking_set
from .sampling import random_arrangement
from .selftest import run_selftest

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

log = logging.getLogger("arrlab")


class InputError(Exception):
    pass


def max_hyperplanes() -> int:
    raw = os.environ.get("ARRLAB_MAX_HYPERPLANES", "12")
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"ARRLAB_MAX_HYPERPLANES must be an integer, got {raw!r}") from None


def _frac(x) -> str:
    return str(x)


def _emit(args, human: str, machine) -> None:
    if args.json:
        print(json.dumps(machine, indent=2))
    else:
        print(human)


def _load(path) -> CaseFile:
    try:
        return parse_case(Path(path))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except CaseError as exc:
        raise InputError(f"{path}: {exc}") from None


def _simple_digraph(case: CaseFile) -> SimpleAcyclicDigraph:
    if case.kind != "digraph":
        raise InputError("this command needs a digraph case")
    try:
        return SimpleAcyclicDigraph.from_multidigraph(case.payload)
    except GraphError as exc:
        raise InputError(f"digraph must be simple and acyclic: {exc}") from None


def _arrangement(case: CaseFile) -> tuple[Arrangement, str]:
    """Arrangement of the case; a digraph becomes the central arrangement of its normalization."""
    if case.kind == "arrangement":
        arr, note = case.payload, ""
    else:
        g = _simple_digraph(case)
        h, perm = normalize_increasing(g)
        arr = central.central_arrangement(h)
        note = "" if h == g else f"vertices renamed old->new {list(perm)} to make edges increasing\n"
    limit = max_hyperplanes()
    if len(arr) > limit:
        raise InputError(f"{len(arr)} hyperplanes exceeds ARRLAB_MAX_HYPERPLANES={limit}")
    return arr, note


def cmd_injective(args) -> int:
    g = _simple_digraph(_load(args.case))
    h, perm = normalize_increasing(g)
    triples = central.find_condition_triples(h)
    inj = not triples
    lines = [f"injective: {'yes' if inj else 'no'}"]
    if h != g:
        lines.append(f"normalized with old->new vertex map {list(perm)}")
    for t in triples:
        lines.append(f"  condition triple (k,i,j) = ({t.k},{t.i},{t.j})  [normalized names]")
    _emit(args, "\n".join(lines), {
        "injective": inj,
        "permutation": list(perm),
        "triples": [t.as_list() for t in triples],
    })
    return EXIT_OK


def cmd_labels(args) -> int:
    g = _simple_digraph(_load(args.case))
    pairs = central.labels_with_reorientations(g)
    counts = Counter(lam for _, lam in pairs)
    lines = [f"{len(pairs)} acyclic reorientations, {len(counts)} distinct labels"]
    for r, lam in pairs:
        mark = f"  (x{counts[lam]})" if counts[lam] > 1 else ""
        sw = ", ".join(f"{i}->{j}" for i, j in r.sorted_switched()) or "-"
        lines.append(f"  {format_label(lam)}  switched: {sw}{mark}")
    dups = sorted(lam for lam, c in counts.items() if c > 1)
    lines.append("duplicated: " + (" ".join(format_label(lam) for lam in dups) or "none"))
    _emit(args, "\n".join(lines), {
        "labels": [{"label": list(lam), "switched": [list(e) for e in r.sorted_switched()],
                    "multiplicity": counts[lam]} for r, lam in pairs],
        "duplicated": [list(lam) for lam in dups],
    })
    return EXIT_OK


def _witness_in_original(w: central.DuplicateWitness, perm) -> dict:
    inv = inverse_permutation(perm)
    back = lambda v: inv[v - 1]  # noqa: E731
    body = w.to_json()
    if w.triple is not None:
        body["triple"] = [back(v) for v in w.triple.as_list()]
    body["first_switched"] = sorted([back(i), back(j)] for i, j in w.first.switched)
    body["second_switched"] = sorted([back(i), back(j)] for i, j in w.second.switched)
    body["tau"] = [w.tau[perm[v] - 1] for v in range(len(perm))]
    body["permutation"] = list(perm)
    return body


def cmd_witness(args) -> int:
    g = _simple_digraph(_load(args.case))
    h, perm = normalize_increasing(g)
    triples = central.find_condition_triples(h)
    if args.triple:
        k, i, j = (perm[v - 1] for v in args.triple) if h != g else args.triple
        t = central.ConditionTriple(k, i, j)
        if t not in triples:
            raise InputError(f"{tuple(args.triple)} is not a condition triple of this graph")
    elif triples:
        t = triples[0]
    else:
        _emit(args, "labeling is injective: no duplicate witness exists", {"triple": None, "injective": True})
        return EXIT_FAIL
    w = central.duplicate_witness(h, t)
    body = w.to_json() if h == g else _witness_in_original(w, perm)
    lines = [
        f"triple (k,i,j) = {tuple(body['triple'])}",
        "first switches:  " + ", ".join(f"{a}->{b}" for a, b in body["first_switched"]),
        "second switches: " + ", ".join(f"{a}->{b}" for a, b in body["second_switched"]),
        f"shared label tau = {format_label(body['tau'])}",
        "built by the explicit construction" if w.constructed else "found by exhaustive search (construction failed)",
    ]
    _emit(args, "\n".join(lines), body)
    return EXIT_OK


def cmd_parking(args) -> int:
    case = _load(args.case)
    g = case.payload if case.kind == "digraph" else graph_of_arrangement(case.payload)
    ps = g_parking_set(g)
    _emit(args, f"{len(ps)} G-parking functions\n" + "\n".join("  " + format_label(p) for p in ps),
          {"parking": [list(p) for p in ps]})
    return EXIT_OK


def _region_json(r) -> dict:
    return {
        "signs": [s.value for s in r.signs],
        "label": list(regions.region_label(r)),
        "point": [_frac(v) for v in r.point],
    }


def cmd_regions(args) -> int:
    arr, note = _arrangement(_load(args.case))
    rs = regions.enumerate_regions(arr)
    lines = [f"{note}{len(rs)} regions"]
    for r in rs:
        signs = "".join("F" if s.value == "far" else "N" for s in r.signs)
        lines.append(f"  {signs}  {format_label(regions.region_label(r))}")
    _emit(args, "\n".join(lines), {"arrangement": arrangement_to_json(arr), "regions": [_region_json(r) for r in rs]})
    return EXIT_OK


def _parking_json(rep: harness.ParkingReport) -> dict:
    return {
        "ok": rep.ok,
        "labels_are_parking": not rep.non_parking,
        "every_parking_attained": not rep.unattained,
        "non_parking_labels": [list(x) for x in rep.non_parking],
        "unattained_parking": [list(x) for x in rep.unattained],
        "label_count": len(rep.labels),
        "parking_count": len(rep.parking),
    }


def cmd_verify(args) -> int:
    arr, note = _arrangement(_load(args.case))
    rep = harness.verify_parking_theorems(arr)
    lines = [
        f"{note}region labels: {len(rep.labels)} distinct; G-parking functions: {len(rep.parking)}",
        "every label is G-parking: " + ("pass" if not rep.non_parking else
                                        "FAIL " + " ".join(map(format_label, rep.non_parking))),
        "every G-parking function attained: " + ("pass" if not rep.unattained else
                                                 "FAIL " + " ".join(map(format_label, rep.unattained))),
    ]
    _emit(args, "\n".join(lines), _parking_json(rep))
    return EXIT_OK if rep.ok else EXIT_FAIL


def evidence_json(ev: harness.ConjectureEvidence) -> dict:
    return {
        "duplicated_labels": [
            {"label": list(c.label), "regions": c.regions, "connected": c.connected,
             "touching_pairs": [list(p) for p in c.touching_pairs]}
            for c in ev.closure.classes
        ],
        "non_injective_flats": [
            {"hyperplanes": list(f.flat.hyperplanes), "dim": f.flat.dim,
             "point": [_frac(v) for v in f.flat.point],
             "triples": [t.as_list() for t in f.triples], "permutation": list(f.permutation)}
            for f in ev.scan.non_injective
        ],
        "flat_count": len(ev.scan.flats),
        "local_global_confirmed": ev.local_global_ok,
        "connected_confirmed": ev.connected_ok,
        "formulations_agree": ev.formulations_agree,
        "counterexample": ev.counterexample,
    }


def _evidence_text(ev: harness.ConjectureEvidence) -> str:
    lines = []
    if not ev.closure.classes:
        lines.append("no duplicated labels")
    for c in ev.closure.classes:
        lines.append(f"  {format_label(c.label)} on {len(c.regions)} regions: "
                     f"{'connected' if c.connected else 'DISCONNECTED'}")
    lines.append(f"{len(ev.scan.flats)} flats, {len(ev.scan.non_injective)} with non-injective local labeling")
    lines.append("global duplicates imply a non-injective flat: " + ("confirmed" if ev.local_global_ok else "COUNTEREXAMPLE"))
    lines.append("duplicate-label closures connected: " + ("confirmed" if ev.connected_ok else "COUNTEREXAMPLE"))
    if ev.counterexample:
        lines.append("counterexample found")
    return "\n".join(lines)


def _dump(arr: Arrangement, out_dir, name: str, why: str) -> Path:
    return write_case(CaseFile("arrangement", arr, why), Path(out_dir) / f"{name}.json")


def cmd_conjectures(args) -> int:
    arr, note = _arrangement(_load(args.case))
    ev = harness.conjecture_evidence(arr)
    text = note + _evidence_text(ev)
    body = evidence_json(ev)
    if ev.counterexample and args.dump_dir:
        path = _dump(arr, args.dump_dir, Path(args.case).stem + "-counterexample", "conjecture counterexample")
        text += f"\ncase written to {path}"
        body["case_file"] = str(path)
    _emit(args, text, body)
    return EXIT_OK


def cmd_scan_random(args) -> int:
    if args.n < 2 and args.hyperplanes > 0:
        raise InputError("--n must be at least 2 when hyperplanes are requested")
    limit = max_hyperplanes()
    if args.hyperplanes > limit:
        raise InputError(f"{args.hyperplanes} hyperplanes exceeds ARRLAB_MAX_HYPERPLANES={limit}")
    rng = random.Random(args.seed)
    summary = {"count": args.count, "with_duplicates": 0, "counterexamples": [], "parking_failures": []}
    for idx in range(args.count):
        try:
            arr = random_arrangement(args.n, args.hyperplanes, rng)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        rs = regions.enumerate_regions(arr)
        rep = harness.verify_parking_theorems(arr, rs)
        ev = harness.conjecture_evidence(arr, rs)
        summary["with_duplicates"] += ev.has_duplicates
        name = f"scan-n{args.n}-m{args.hyperplanes}-s{args.seed}-{idx}"
        if not rep.ok:
            path = _dump(arr, args.out_dir, name + "-parking", "parking theorem failure")
            summary["parking_failures"].append(str(path))
        if ev.counterexample:
            path = _dump(arr, args.out_dir, name, "conjecture counterexample")
            summary["counterexamples"].append(str(path))
    lines = [
        f"{args.count} random arrangements (n={args.n}, {args.hyperplanes} hyperplanes, seed {args.seed})",
        f"  with duplicated labels: {summary['with_duplicates']}",
        f"  parking theorem failures: {len(summary['parking_failures'])}",
        f"  conjecture counterexamples: {len(summary['counterexamples'])}",
    ]
    if summary["counterexamples"]:
        lines.append("counterexample found: " + ", ".join(summary["counterexamples"]))
    _emit(args, "\n".join(lines), summary)
    return EXIT_FAIL if summary["parking_failures"] else EXIT_OK


def cmd_selftest(args) -> int:
    results = run_selftest()
    ok = all(r.ok for r in results)
    lines = [f"{'PASS' if r.ok else 'FAIL'}  {r.case_id}  {r.detail}" for r in results]
    lines.append(f"{sum(r.ok for r in results)}/{len(results)} cases passed")
    _emit(args, "\n".join(lines), {
        "ok": ok,
        "cases": [{"id": r.case_id, "ok": r.ok, "detail": r.detail} for r in results],
    })
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    p = argparse.ArgumentParser(prog="arrlab", description="Pak-Stanley labelings of multigraphical arrangements")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, case=True):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if case:
            sp.add_argument("case", help="JSON case file")
        sp.set_defaults(fn=fn)
        return sp

    add("injective", cmd_injective, "decide injectivity of the central labeling of a digraph")
    add("labels", cmd_labels, "labels of all acyclic reorientations, duplicates marked")
    w = add("witness", cmd_witness, "two reorientations sharing a label")
    w.add_argument("--triple", nargs=3, type=int, metavar=("K", "I", "J"))
    add("parking", cmd_parking, "list the G-parking functions")
    add("regions", cmd_regions, "enumerate regions and their labels")
    add("verify", cmd_verify, "check labels are G-parking and cover all G-parking functions")
    c = add("conjectures", cmd_conjectures, "evidence for the duplicate-label conjectures")
    c.add_argument("--dump-dir", help="write a counterexample case file here")
    s = add("scan-random", cmd_scan_random, "randomized conjecture sweep", case=False)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--hyperplanes", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--out-dir", default="counterexamples")
    add("selftest", cmd_selftest, "replay golden cases and invariants", case=False)
    return p


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
