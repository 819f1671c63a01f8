"""Command line front end: gen, classify, table, hilbert.

Exit codes: 0 success, 2 argument or validation problems, 3 violated
mathematical preconditions (non-homogeneous generators, non-artinian
quotients, ideals with a degree-1 minimal generator).  Identical invocations
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .errors import PreconditionError
from .fields import DEFAULT_CHAR, field_of_characteristic
from .ideals import Ideal, trim
from .koszul import KoszulComplex, report_dict
from .pfaffians import (
    PfaffianFamily,
    TrimChoice,
    family_hilbert,
    gorenstein_ideal,
    selector_labels,
    trimmed_ideal,
)
from .poly import ORDER_NAMES


class CliError(Exception):
    """Bad arguments detected after parsing; mapped to exit code 2."""


@dataclass(frozen=True)
class RunConfig:
    characteristic: int
    order: str
    output_format: str
    out: str | None

    def field(self):
        try:
            return field_of_characteristic(self.characteristic)
        except ValueError as exc:
            raise CliError(str(exc))


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"m must be >= 1, got {value}")
    return value


def _m_range(text: str) -> tuple:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; expected N or A..B")
    if a < 2 or b < a:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; need 2 <= A <= B")
    return (a, b)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=int, default=DEFAULT_CHAR,
                        help="coefficient field characteristic; 0 means the rationals "
                             f"(default {DEFAULT_CHAR})")
    common.add_argument("--order", choices=ORDER_NAMES, default="grevlex",
                        help="monomial order with x > y > z (default grevlex)")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json",
                        dest="output_format", help="output format (default json)")
    common.add_argument("--out", help="write output to this path instead of stdout")

    parser = argparse.ArgumentParser(
        prog="gtrim",
        description="Pfaffian families of Gorenstein ideals in k[x,y,z], their trims, "
                    "Koszul homology and Tor-algebra classification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", parents=[common],
                           help="emit the m-th family instance (matrices, Pfaffians, generators)")
    p_gen.add_argument("--m", type=_positive_int, required=True)

    p_cls = sub.add_parser("classify", parents=[common],
                           help="classify a quotient: the family ideal, one of its trims, "
                                "or an ideal loaded from JSON")
    p_cls.add_argument("--m", type=_positive_int)
    p_cls.add_argument("--trim", metavar="SEL",
                       help="trim selector: x0 (x^m), y0 (y^m), d (d_m), xI or yI")
    p_cls.add_argument("--ideal", metavar="PATH",
                       help="JSON file bearing a \"generators\" list")

    p_tab = sub.add_parser("table", parents=[common],
                           help="classification table over every trim selector")
    p_tab.add_argument("--m", type=_m_range, required=True, metavar="A..B")

    p_hil = sub.add_parser("hilbert", parents=[common],
                           help="Hilbert function of the m-th family quotient")
    p_hil.add_argument("--m", type=_positive_int, required=True)

    return parser


def _config(args) -> RunConfig:
    return RunConfig(characteristic=args.char, order=args.order,
                     output_format=args.output_format, out=args.out)


def _selector_index(label: str, m: int) -> int:
    """Canonical generator index for a selector, for any odd generator count."""
    if label == "d":
        return m
    if len(label) < 2 or label[0] not in "xy" or not label[1:].isdigit():
        raise CliError(f"bad trim selector {label!r}; expected x0, y0, d, xI or yI")
    i = int(label[1:])
    if i > m - 1:
        raise CliError(f"selector {label!r} needs 0 <= I <= {m - 1} for m={m}")
    if label[0] == "x":
        return i
    return 2 * m - i if i else 2 * m


def _json_block(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _kv_text(pairs) -> str:
    return "".join(f"{k} = {v}\n" for k, v in pairs)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_gen(args) -> str:
    cfg = _config(args)
    fam = PfaffianFamily.build(args.m, cfg.field())
    data = fam.to_json_dict()
    if cfg.output_format == "json":
        return _json_block(data)
    if cfg.output_format == "text":
        lines = [f"m = {data['m']}", f"d = {data['d']}", "U:"]
        lines += ["  " + "  ".join(row) for row in data["U"]]
        lines.append("V:")
        lines += ["  " + "  ".join(row) for row in data["V"]]
        lines.append("pfaffians: " + ", ".join(data["pfaffians"]))
        lines.append("generators: " + ", ".join(data["generators"]))
        return "\n".join(lines) + "\n"
    raise CliError("gen emits matrices; use --format json or text")


def _load_ideal(path: str, cfg: RunConfig) -> Ideal:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise CliError(f"bad JSON in {path}: {exc}")
    if not isinstance(data, dict) or "generators" not in data:
        raise CliError(f"{path} has no \"generators\" list")
    explicit_char = data.get("field", {}).get("char")
    field = field_of_characteristic(explicit_char) if explicit_char is not None else cfg.field()
    order = data.get("order", cfg.order)
    try:
        return Ideal.from_json_dict({"generators": data["generators"]}, field, order)
    except PreconditionError:
        raise
    except ValueError as exc:
        raise CliError(f"bad generators in {path}: {exc}")


def _classify_target(args, cfg: RunConfig) -> Ideal:
    if (args.ideal is None) == (args.m is None):
        raise CliError("classify needs exactly one of --m or --ideal")
    if args.ideal is not None:
        ideal = _load_ideal(args.ideal, cfg)
        if args.trim is None:
            return ideal
        count = len(ideal.generators)
        if count < 3 or count % 2 == 0:
            raise CliError(f"--trim needs an odd generator count >= 3, found {count}")
        return trim(list(ideal.generators), _selector_index(args.trim, (count - 1) // 2),
                    ideal.order)
    if args.trim is None:
        return gorenstein_ideal(args.m, cfg.field(), cfg.order)
    try:
        choice = TrimChoice(args.m, args.trim)
    except ValueError as exc:
        raise CliError(str(exc))
    return trimmed_ideal(choice, cfg.field(), cfg.order)


def cmd_classify(args) -> str:
    cfg = _config(args)
    ideal = _classify_target(args, cfg)
    kz = KoszulComplex(ideal.quotient_ring())
    report = report_dict(kz)
    hilbert = list(ideal.hilbert_function().coefficients)
    ordered = {"mu": report["mu"], "type": report["type"], "hilbert": hilbert}
    for key in ("ranks", "p", "q", "r", "class", "class_params", "gorenstein"):
        ordered[key] = report[key]
    if cfg.output_format == "json":
        return _json_block(ordered)
    display = kz.classify().display()
    if cfg.output_format == "text":
        pairs = []
        for k, v in ordered.items():
            if k == "class_params":
                continue
            if k == "class":
                v = display
            elif isinstance(v, list):
                v = " ".join(str(c) for c in v)
            pairs.append((k, v))
        return _kv_text(pairs)
    header = ["mu", "type", "hilbert", "ranks", "p", "q", "r", "class", "gorenstein"]
    row = [ordered["mu"], ordered["type"], " ".join(map(str, hilbert)),
           " ".join(map(str, ordered["ranks"])), ordered["p"], ordered["q"],
           ordered["r"], display, ordered["gorenstein"]]
    return _csv_text(header, [row])


def cmd_table(args) -> str:
    cfg = _config(args)
    lo, hi = args.m
    field = cfg.field()
    rows = []
    for m in range(lo, hi + 1):
        for label in selector_labels(m):
            choice = TrimChoice(m, label)
            ideal = trimmed_ideal(choice, field, cfg.order)
            kz = KoszulComplex(ideal.quotient_ring())
            inv = kz.invariants()
            rows.append({
                "m": m,
                "g": choice.generator(field).to_text(),
                "mu": inv.mu,
                "type": inv.type_rank,
                "p": inv.p,
                "q": inv.q,
                "r": inv.r,
                "class": kz.classify().display(),
            })
    if cfg.output_format == "json":
        return _json_block(rows)
    header = ["m", "g", "mu", "type", "p", "q", "r", "class"]
    if cfg.output_format == "csv":
        return _csv_text(header, [[row[k] for k in header] for row in rows])
    cells = [header] + [[str(row[k]) for k in header] for row in rows]
    widths = [max(len(r[c]) for r in cells) for c in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
             for row in cells]
    return "\n".join(lines) + "\n"


def cmd_hilbert(args) -> str:
    cfg = _config(args)
    ideal = gorenstein_ideal(args.m, cfg.field(), cfg.order)
    computed = list(ideal.hilbert_function().coefficients)
    closed = family_hilbert(args.m)
    data = {"m": args.m, "coefficients": computed, "closed_form": closed,
            "match": computed == closed}
    if cfg.output_format == "json":
        return _json_block(data)
    if cfg.output_format == "text":
        return _kv_text([("m", args.m),
                         ("coefficients", " ".join(map(str, computed))),
                         ("closed_form", " ".join(map(str, closed))),
                         ("match", data["match"])])
    rows = [[d, computed[d], closed[d]] for d in range(len(computed))]
    return _csv_text(["degree", "computed", "closed_form"], rows)


_COMMANDS = {"gen": cmd_gen, "classify": cmd_classify,
             "table": cmd_table, "hilbert": cmd_hilbert}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = _COMMANDS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
