"""Command line interface: ``nbc-bij om ...`` and ``nbc-bij arr ...``.

Exit status: 0 success, 1 validation or contract failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Sequence

from .arrangement import (
    ArrContractViolation,
    RegionError,
    cone,
    enumerate_affine_nbc,
    enumerate_regions,
    fmt_hset,
    format_signs,
    parse_signs,
    permute_arrangement,
    phi_backward_trace,
    phi_forward,
    phi_trace,
    region_from_signs,
)
from .arrangement.core import affine_circuits
from .bijection import (
    ContractViolation,
    enumerate_acyclic_reorientations,
    psi_backward,
    psi_backward_trace,
    psi_forward,
    psi_trace,
)
from .io import AxiomViolation, DocumentError, parse_arrangement, parse_om, serialize_arrangement
from .nbc import enumerate_nbc
from .om import MalformedInputError, fmt_set, relabel_om, validate_om_axioms
from .plot import plot_svg


class UsageError(Exception):
    pass


class Failure(Exception):
    """A validation or contract failure (exit 1)."""


def _parse_set(text: str, prefix: str, m: int) -> frozenset[int]:
    out = set()
    for tok in text.replace(" ", "").split(","):
        if not tok or tok == "∅":
            continue
        t = tok[len(prefix):] if tok.lower().startswith(prefix.lower()) else tok
        if not t.isdigit():
            raise UsageError(f"bad element {tok!r}; expected {prefix}<k>")
        i = int(t)
        if not 1 <= i <= m:
            raise UsageError(f"{tok} is outside {prefix}1..{prefix}{m}")
        out.add(i)
    return frozenset(out)


def _parse_order(text: str | None, m: int) -> list[int] | None:
    if text is None:
        return None
    try:
        order = [int(t.strip().lstrip("eEhH")) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"--order must be a comma-separated permutation of 1..{m}") from None
    if sorted(order) != list(range(1, m + 1)):
        raise UsageError(f"--order must be a permutation of 1..{m}, got {text}")
    return order


class _Relabel:
    """Translate between user indices and positions in the chosen order."""

    def __init__(self, order: list[int] | None, m: int):
        self.order = order or list(range(1, m + 1))
        self.to_new = {old: new for new, old in enumerate(self.order, 1)}

    def new(self, s):
        return frozenset(self.to_new[e] for e in s)

    def old(self, s):
        return frozenset(self.order[e - 1] for e in s)

    def signs_new(self, signs):
        return tuple(signs[old - 1] for old in self.order)

    def signs_old(self, signs):
        out = [None] * len(signs)
        for new, old in enumerate(self.order, 1):
            out[old - 1] = signs[new - 1]
        return tuple(out)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_om(path: str):
    text = _read(path)
    try:
        return parse_om(text)
    except (DocumentError, MalformedInputError) as exc:
        raise Failure(f"{path}: {exc}") from None
    except AxiomViolation as exc:
        raise Failure(f"{path}: {exc}") from None


def _load_arr(path: str):
    text = _read(path)
    try:
        return parse_arrangement(text)
    except (DocumentError, MalformedInputError) as exc:
        raise Failure(f"{path}: {exc}") from None


class _Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines: list[str] = []

    def line(self, s: str = "") -> None:
        self.lines.append(s)

    def emit(self, payload) -> None:
        if self.as_json:
            print(json.dumps(payload, ensure_ascii=False, sort_keys=True))
        else:
            for s in self.lines:
                print(s)


# ---------------------------------------------------------------- om commands


def om_validate(args, out: _Out):
    text = _read(args.file)
    try:
        om = parse_om(text)
    except AxiomViolation as exc:
        out.line(str(exc.report))
        out.emit({"ok": False, "axiom": exc.report.axiom, "message": exc.report.message})
        return 1
    except (DocumentError, MalformedInputError) as exc:
        raise Failure(f"{args.file}: {exc}") from None
    report = validate_om_axioms(om.circuits, om.size)
    out.line(f"ok: {om.size} elements, {len(om.circuits)} signed circuits")
    out.emit({"ok": bool(report), "elements": om.size, "signed_circuits": len(om.circuits)})
    return 0


def _om_context(args):
    om = _load_om(args.file)
    rl = _Relabel(_parse_order(args.order, om.size), om.size)
    return relabel_om(om, rl.to_new), rl


def om_acyclic(args, out: _Out):
    om, rl = _om_context(args)
    sets = [rl.old(a) for a in enumerate_acyclic_reorientations(om)]
    for a in sets:
        out.line(fmt_set(a))
    out.emit({"acyclic_reorientations": [sorted(a) for a in sets]})
    return 0


def om_nbc(args, out: _Out):
    om, rl = _om_context(args)
    sets = [rl.old(n) for n in enumerate_nbc(om.underlying)]
    for n in sets:
        out.line(fmt_set(n))
    out.emit({"nbc": [sorted(n) for n in sets]})
    return 0


def _om_trace_rows(trace, rl):
    rows = []
    for s in trace:
        rows.append({"k": s.k, "N": sorted(rl.old(s.nbc_part)), "A": sorted(rl.old(s.reorient_part))})
    return rows


def om_map(args, out: _Out):
    om, rl = _om_context(args)
    a0 = rl.new(_parse_set(args.set, "e", om.size))
    try:
        trace = psi_trace(om, a0)
    except ContractViolation as exc:
        raise Failure(str(exc)) from None
    rows = _om_trace_rows(trace, rl)
    if args.trace:
        for r in rows:
            out.line(f"{r['k']} | {fmt_set(r['N'])} | {fmt_set(r['A'])}")
    result = rl.old(trace[-1].nbc_part)
    out.line(fmt_set(result))
    out.emit({"input": sorted(rl.old(a0)), "nbc": sorted(result), "trace": rows if args.trace else None})
    return 0


def om_unmap(args, out: _Out):
    om, rl = _om_context(args)
    n = rl.new(_parse_set(args.set, "e", om.size))
    try:
        trace = psi_backward_trace(om, n)
    except ContractViolation as exc:
        raise Failure(str(exc)) from None
    rows = _om_trace_rows(trace, rl)
    if args.trace:
        for r in rows:
            out.line(f"{r['k']} | {fmt_set(r['N'])} | {fmt_set(r['A'])}")
    result = rl.old(trace[0].reorient_part)
    out.line(fmt_set(result))
    out.emit({"input": sorted(rl.old(n)), "reorientation": sorted(result), "trace": rows if args.trace else None})
    return 0


def om_check(args, out: _Out):
    om, rl = _om_context(args)
    acyclic = enumerate_acyclic_reorientations(om)
    nbc = enumerate_nbc(om.underlying)
    images = [psi_forward(om, a) for a in acyclic]
    injective = len(set(images)) == len(images)
    onto = set(images) == set(nbc)
    inverse = all(psi_backward(om, n) == a for a, n in zip(acyclic, images))
    ok = len(acyclic) == len(nbc) and injective and onto and inverse
    verdict = "bijection OK" if ok else "bijection FAILED"
    out.line(f"|A(M)| = {len(acyclic)}, |NBC| = {len(nbc)}, {verdict}")
    out.emit({
        "acyclic_reorientations": len(acyclic), "nbc": len(nbc),
        "injective": injective, "onto": onto, "inverse": inverse, "ok": ok,
    })
    return 0 if ok else 1


# ---------------------------------------------------------- arrangement commands


def _arr_context(args):
    arr = _load_arr(args.file)
    rl = _Relabel(_parse_order(args.order, arr.size), arr.size)
    return permute_arrangement(arr, rl.order), rl


def _witness(cell):
    from .io import fraction_str

    return [fraction_str(v) for v in cell.witness]


def arr_validate(args, out: _Out):
    arr = _load_arr(args.file)
    kind = "linear" if arr.is_linear() else "affine"
    out.line(f"ok: {arr.size} hyperplanes in dimension {arr.dim} ({kind})")
    out.emit({"ok": True, "hyperplanes": arr.size, "dim": arr.dim, "linear": arr.is_linear()})
    return 0


def arr_regions(args, out: _Out):
    arr, rl = _arr_context(args)
    cells = enumerate_regions(arr)
    rows = []
    for c in cells:
        signs = rl.signs_old(c.signs)
        rows.append({"signs": format_signs(signs), "witness": _witness(c)})
    rows.sort(key=lambda r: r["signs"].replace("+", "0").replace("-", "1"))
    for r in rows:
        out.line(f"{r['signs']}  ({', '.join(r['witness'])})")
    out.emit({"regions": rows})
    return 0


def arr_nbc(args, out: _Out):
    arr, rl = _arr_context(args)
    sets = [rl.old(b) for b in enumerate_affine_nbc(arr)]
    for b in sets:
        out.line(fmt_hset(b))
    out.emit({"nbc": [sorted(b) for b in sets]})
    return 0


def _arr_rows(states, rl):
    return [
        {"k": s.k, "B": sorted(rl.old(s.nbc_part)), "signs": format_signs(rl.signs_old(s.region.signs)),
         "witness": _witness(s.region)}
        for s in states
    ]


def arr_map(args, out: _Out):
    arr, rl = _arr_context(args)
    try:
        signs = parse_signs(args.region_signs)
        if len(signs) != arr.size:
            raise Failure(f"expected {arr.size} signs, got {len(signs)}")
        region = region_from_signs(arr, rl.signs_new(signs))
        states, cases = phi_trace(arr, region)
    except (RegionError, ArrContractViolation) as exc:
        raise Failure(str(exc)) from None
    rows = _arr_rows(states, rl)
    if args.trace:
        for r in rows:
            out.line(f"{r['k']} | {fmt_hset(r['B'])} | {r['signs']}")
    result = rl.old(states[-1].nbc_part)
    out.line(fmt_hset(result))
    out.emit({"nbc": sorted(result), "cases": cases, "trace": rows if args.trace else None})
    return 0


def arr_unmap(args, out: _Out):
    arr, rl = _arr_context(args)
    b = rl.new(_parse_set(args.set, "H", arr.size))
    try:
        states = phi_backward_trace(arr, b)
    except ArrContractViolation as exc:
        raise Failure(str(exc)) from None
    rows = _arr_rows(states, rl)
    if args.trace:
        for r in rows:
            out.line(f"{r['k']} | {fmt_hset(r['B'])} | {r['signs']}")
    region = states[0].region
    signs = format_signs(rl.signs_old(region.signs))
    out.line(signs)
    out.emit({"signs": signs, "witness": _witness(region), "trace": rows if args.trace else None})
    return 0


def arr_check(args, out: _Out):
    from .arrangement.regions import count_regions

    arr, rl = _arr_context(args)
    regions = enumerate_regions(arr)
    nbc = enumerate_affine_nbc(arr)
    images = [phi_forward(arr, r) for r in regions]
    injective = len(set(images)) == len(images)
    onto = set(images) == set(nbc)
    ok = len(regions) == len(nbc) and injective and onto
    out.line(f"|R(A)| = {len(regions)}, |NBC(A)| = {len(nbc)}, bijection {'OK' if ok else 'FAILED'}")
    sums = None
    if args.all_k:
        sums = []
        for k in range(arr.size + 1):
            later = range(k + 1, arr.size + 1)
            total = sum(count_regions(arr, b, later) for b in nbc if all(i <= k for i in b))
            sums.append(total)
            out.line(f"k={k}: sum = {total}{'' if total == len(regions) else '  MISMATCH'}")
        ok = ok and all(t == len(regions) for t in sums)
    out.emit({
        "regions": len(regions), "nbc": len(nbc), "injective": injective, "onto": onto,
        "intermediate_sums": sums, "ok": ok,
    })
    return 0 if ok else 1


def arr_cone(args, out: _Out):
    arr = _load_arr(args.file)
    c = cone(arr)
    text = serialize_arrangement(c)
    out.lines.extend(text.rstrip("\n").split("\n"))
    out.emit(json.loads(text))
    return 0


def arr_plot(args, out: _Out):
    arr, rl = _arr_context(args)
    if arr.dim != 2:
        raise Failure(f"plot needs a planar arrangement, got dimension {arr.dim}")
    by_signs = {r.signs: phi_forward(arr, r) for r in enumerate_regions(arr)}
    # draw in the user's numbering
    original = permute_arrangement(arr, [rl.to_new[i] for i in range(1, arr.size + 1)])
    relabelled = {r: rl.old(by_signs[rl.signs_new(r.signs)]) for r in enumerate_regions(original)}
    svg = plot_svg(original, relabelled)
    Path(args.out).write_text(svg, encoding="utf-8")
    out.line(f"wrote {args.out} ({len(relabelled)} regions)")
    out.emit({"out": args.out, "regions": len(relabelled)})
    return 0


# -------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="nbc-bij",
        description="Bijections from acyclic reorientations and arrangement regions to NBC subsets.",
    )
    p.add_argument("--order", help="comma-separated permutation of 1..m giving the total order")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    top = p.add_subparsers(dest="kind", required=True)

    om = top.add_parser("om", help="oriented matroid commands").add_subparsers(dest="cmd", required=True)
    arr = top.add_parser("arr", help="hyperplane arrangement commands").add_subparsers(dest="cmd", required=True)

    def add(sub, name, func: Callable, help_: str):
        q = sub.add_parser(name, help=help_)
        q.add_argument("file")
        q.set_defaults(func=func)
        return q

    add(om, "validate", om_validate, "check the signed-circuit axioms")
    add(om, "acyclic", om_acyclic, "list acyclic reorientations")
    add(om, "nbc", om_nbc, "list NBC subsets of the underlying matroid")
    q = add(om, "map", om_map, "acyclic reorientation -> NBC set")
    q.add_argument("--set", required=True, help="e.g. e2,e4 (empty string for ∅)")
    q.add_argument("--trace", action="store_true")
    q = add(om, "unmap", om_unmap, "NBC set -> acyclic reorientation")
    q.add_argument("--set", required=True)
    q.add_argument("--trace", action="store_true")
    add(om, "check", om_check, "verify |A(M)| = |NBC| and the bijection")

    add(arr, "validate", arr_validate, "parse and check an arrangement")
    add(arr, "regions", arr_regions, "list regions with witness points")
    add(arr, "nbc", arr_nbc, "list affine NBC subsets")
    q = add(arr, "map", arr_map, "region -> affine NBC set")
    q.add_argument("--region-signs", required=True, help="e.g. -,+,+,+")
    q.add_argument("--trace", action="store_true")
    q = add(arr, "unmap", arr_unmap, "affine NBC set -> region")
    q.add_argument("--set", required=True, help="e.g. H2,H4")
    q.add_argument("--trace", action="store_true")
    q = add(arr, "check", arr_check, "verify |R(A)| = |NBC(A)| and the bijection")
    q.add_argument("--all-k", action="store_true", help="also check the intermediate sums for every k")
    add(arr, "cone", arr_cone, "print the coned arrangement")
    q = add(arr, "plot", arr_plot, "draw a planar arrangement as SVG")
    q.add_argument("--out", required=True)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # sign vectors such as "-,+,+" look like options to argparse
    for i, tok in enumerate(argv[:-1]):
        if tok == "--region-signs" and argv[i + 1].startswith("-"):
            argv[i : i + 2] = [f"--region-signs={argv[i + 1]}"]
            break
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Out(args.json)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Failure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
