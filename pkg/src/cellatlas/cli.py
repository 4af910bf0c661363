"""Command-line front end: ``cell-atlas {classical,family,gram,exceptional,list}``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import exceptional
from .atlas import AtlasReport, analyze_family, build_report, det_exact
from .errors import CellAtlasError, InconsistencyError, ValidationError
from .symbols import Family, Partition, embed, lusztig_pair
from .tl import enumerate_patterns, gram_matrix


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ValidationError(f"expected comma-separated integers, got {text!r}") from None


def render_json(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


# ---------- report -> plain data


def family_data(f: Family, dims: dict | None = None) -> dict:
    out: dict[str, Any] = {"type": f.weyl_type, "z1": list(f.z1), "z2": list(f.z2), "m": f.m}
    if dims is not None:
        rows = []
        for s, d in dims.items():
            x, chi = lusztig_pair(s, f)
            rows.append({"symbol": str(s), "dim": d, "embedding": embed(s, f).label(),
                         "x": x.label(), "chi": chi.label()})
        out["symbols"] = rows
    return out


def report_data(r: AtlasReport, input_echo: dict) -> dict:
    return {
        "input": input_echo,
        "family": family_data(r.family, r.family_dims),
        "special_symbol": str(r.special_symbol),
        "abar": {"dim": r.abar_dim, "basis": r.abar.labels()},
        "cell_types": [
            {
                "pattern": c.pattern.serialize(),
                "module": [str(s) for s in c.module_symbols],
                "dims": list(c.module_dims),
                "h_basis": c.h.labels(),
                "count": c.count,
                "orbit_size": c.orbit_size,
            }
            for c in r.cell_types
        ],
        "springer": [
            {"character": e.character.label(), "symbol": str(e.symbol), "dim": e.dim}
            for e in r.springer.entries
        ],
        "y_total": r.y_total,
        "y_fixed": r.y_fixed,
    }


def _table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> list[str]:
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    return ["  " + "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]


def _coset(basis: list[str], abar_dim: int) -> str:
    if not basis:
        return "Ā"
    if len(basis) == abar_dim:
        return "Ā/Ā"
    return "Ā/⟨" + ", ".join(basis) + "⟩"


def render_report_table(data: dict) -> str:
    inp, fam = data["input"], data["family"]
    lines = []
    if "partition" in inp:
        lines.append(f"orbit: type {inp['type']}{inp['rank']}, partition "
                     f"{','.join(map(str, inp['partition']))}")
    lines.append(f"family: type {fam['type']}, Z1={{{','.join(map(str, fam['z1']))}}}, "
                 f"Z2={{{','.join(map(str, fam['z2']))}}}, m={fam['m']}")
    lines.append(f"special symbol: {data['special_symbol']}")
    ab = data["abar"]
    lines.append(f"Ā = ⟨{', '.join(ab['basis'])}⟩, dim {ab['dim']}")
    lines.append("")
    lines.append("family symbols:")
    lines += _table(["symbol", "dim", "embedding", "x", "chi"],
                    [[s["symbol"], s["dim"], s["embedding"], s["x"], s["chi"]] for s in fam["symbols"]])
    lines.append("")
    lines.append("cell types:")
    rows = []
    for c in data["cell_types"]:
        rows.append([c["pattern"], "⟨" + ", ".join(c["h_basis"]) + "⟩", c["count"], c["orbit_size"],
                     " + ".join(f"{s}[{d}]" for s, d in zip(c["module"], c["dims"]))])
    lines += _table(["pattern", "H", "count", "|Ā/H|", "module [dim]"], rows)
    lines.append("")
    lines.append("springer block:")
    lines += _table(["character", "symbol", "dim"],
                    [[e["character"], e["symbol"], e["dim"]] for e in data["springer"]])
    lines.append("")
    terms = []
    for c in data["cell_types"]:
        if c["count"] == 0:
            continue
        base = _coset(c["h_basis"], ab["dim"])
        if c["count"] == 1:
            terms.append(base)
        else:
            terms.append(f"({base})^{c['count']}" if "/" in base else f"{base}^{c['count']}")
    lines.append("Y' = " + (" ⊔ ".join(terms) or "∅"))
    lines.append(f"Ā-fixed points = {data['y_fixed']}")
    lines.append(f"total |Y'| = {data['y_total']}")
    return "\n".join(lines) + "\n"


def exceptional_data(rec: exceptional.ExceptionalRecord) -> dict:
    return {
        "group_type": rec.group_type,
        "orbit": rec.orbit_label,
        "abar": rec.abar,
        "exceptional_cell": rec.is_exceptional_cell,
        "cell_types": [{"subgroup": h, "multiplicity": n} for h, n in rec.cell_types],
        "y_prime": rec.y_prime_text,
        "y_total": rec.y_total,
    }


def render_exceptional_table(d: dict) -> str:
    lines = [f"type {d['group_type']}, orbit {d['orbit']}: Ā = {d['abar']}"]
    if d["exceptional_cell"]:
        lines.append("exceptional two-sided cell: one cell module, all subgroups trivial")
    lines += _table(["subgroup H", "|Ā/H|", "multiplicity"],
                    [[c["subgroup"], exceptional.GROUP_ORDER[d["abar"]] // exceptional.GROUP_ORDER[c["subgroup"]],
                      "unknown" if c["multiplicity"] is None else c["multiplicity"]]
                     for c in d["cell_types"]])
    lines.append(f"Y' = {d['y_prime']}")
    lines.append(f"total |Y'| = {'unknown' if d['y_total'] is None else d['y_total']}")
    return "\n".join(lines) + "\n"


# ---------- commands


def cmd_classical(args) -> str:
    p = Partition.parse(args.partition)
    r = build_report(args.type, args.rank, p)
    data = report_data(r, {"type": args.type, "rank": args.rank, "partition": list(p.parts)})
    return render_json(data) if args.format == "json" else render_report_table(data)


def cmd_family(args) -> str:
    f = Family(_int_list(args.z1), _int_list(args.z2), args.type)
    r = analyze_family(f)
    data = report_data(r, {"type": f.weyl_type, "z1": list(f.z1), "z2": list(f.z2)})
    return render_json(data) if args.format == "json" else render_report_table(data)


def cmd_gram(args) -> str:
    f = Family(_int_list(args.z1), _int_list(args.z2), args.type)
    if f.is_degenerate:
        analyze_family(f)  # raises the degenerate-family rejection
    patterns = enumerate_patterns(f.m, f.shape)
    mat = gram_matrix(patterns)
    det = det_exact(mat)
    if det.denominator != 1:
        raise InconsistencyError("integer matrix with non-integer determinant")
    data = {"family": family_data(f), "patterns": [t.serialize() for t in patterns],
            "matrix": mat, "determinant": int(det)}
    if args.format == "json":
        return render_json(data)
    lines = [f"Gram matrix of cell modules, type {f.weyl_type}, m={f.m}"]
    lines += [f"  T{i + 1} = {t}  {t.render()}" for i, t in enumerate(patterns)]
    lines += _table([""] + [f"T{i + 1}" for i in range(len(patterns))],
                    [[f"T{i + 1}"] + row for i, row in enumerate(mat)])
    lines.append(f"determinant = {int(det)}")
    return "\n".join(lines) + "\n"


def cmd_exceptional(args) -> str:
    d = exceptional_data(exceptional.lookup(args.type, args.orbit))
    return render_json(d) if args.format == "json" else render_exceptional_table(d)


def cmd_list(args) -> str:
    recs = [exceptional.lookup(args.type, lab) for lab in exceptional.list_orbits(args.type, args.abar)]
    if args.format == "json":
        return render_json([{"orbit": r.orbit_label, "abar": r.abar,
                             "exceptional_cell": r.is_exceptional_cell} for r in recs])
    rows = [[r.orbit_label, r.abar, "exceptional cell" if r.is_exceptional_cell else ""] for r in recs]
    return "\n".join(_table(["orbit", "Ā", ""], rows)) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cell-atlas",
        description="Left-cell data, Lusztig subgroups and the set Y' for special nilpotent orbits.")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("classical", help="report for a special orbit of type B, C or D")
    p.add_argument("--type", required=True, choices=("B", "C", "D"))
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--partition", required=True, help="comma-separated parts, e.g. 7,3,3,1,1")
    fmt(p)
    p.set_defaults(func=cmd_classical)

    for name, func, help_ in (("family", cmd_family, "analysis of a family Fam(Z1, Z2)"),
                              ("gram", cmd_gram, "Gram matrix of the cell modules of a family")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--z1", required=True)
        p.add_argument("--z2", default="")
        p.add_argument("--type", required=True, choices=("B", "C", "D"))
        fmt(p)
        p.set_defaults(func=func)

    p = sub.add_parser("exceptional", help="tabulated record for an exceptional orbit")
    p.add_argument("--type", required=True, choices=exceptional.GROUP_TYPES)
    p.add_argument("--orbit", required=True)
    fmt(p)
    p.set_defaults(func=cmd_exceptional)

    p = sub.add_parser("list", help="list tabulated exceptional orbits")
    p.add_argument("--type", required=True, choices=exceptional.GROUP_TYPES)
    p.add_argument("--abar", choices=exceptional.ABAR_GROUPS)
    fmt(p)
    p.set_defaults(func=cmd_list)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except CellAtlasError as exc:
        print(f"cell-atlas: {exc}", file=sys.stderr)
        return exc.exit_code
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
