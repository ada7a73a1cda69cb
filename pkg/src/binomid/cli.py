"""Command-line surface: sequence-spec parsing, file ingestion, output
formatting, and the subcommands that bind the library together.

Exit codes: 0 when the command succeeds (and every requested check holds),
1 when a classification or verification fails (the witness is printed),
2 on usage, parse, or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import classify as cls
from . import verify as ver
from .core import Pyramid, Triangle, col_seq, pyramid, row_seq, triangle
from .errors import (NonIntegralEntryError, UndefinedTermError, ZeroTermError)
from .sequences import (Sequence, compose_power, const_seq, divisor_product_of,
                        double_terms, factorial_seq, fibonacci, from_list,
                        g_ab, h_m, identity_seq, interleave_ones, lucas,
                        pascal_column, pascal_row, power_seq, prepend_one,
                        product, scalar, triangular_seq)

__all__ = ["SeqSpec", "SpecParseError", "ingest_bfile", "main", "parse_seqspec"]


class SpecParseError(ValueError):
    """Syntax error in a sequence expression, with a byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(message)
        self.offset = offset


_BARE_ATOMS = {"I", "fact", "T", "fib"}
_INT_ATOMS = {"const": 1, "cpow": 1, "gq": 1, "gab": 2, "lucas": 2}
_UINT_ATOMS = {"pcol": 1, "prow": 1, "hm": 1}
_PATH_ATOMS = {"file", "bfile"}
_COMBINATORS = {
    "product": ("spec", "spec"),
    "scalar": ("int", "spec"),
    "pow": ("uint", "spec"),
    "P": ("spec",),
    "col": ("uint", "spec"),
    "row": ("uint", "spec"),
    "prepend1": ("spec",),
    "interleave1": ("spec",),
    "double": ("spec",),
}


@dataclass(frozen=True)
class SeqSpec:
    """Parsed sequence expression; printing it again gives a canonical form."""

    kind: str
    args: tuple = ()

    def canonical(self) -> str:
        if self.kind in _BARE_ATOMS:
            return self.kind
        if self.kind in _COMBINATORS:
            parts = [a.canonical() if isinstance(a, SeqSpec) else str(a)
                     for a in self.args]
            return f"{self.kind}({','.join(parts)})"
        return f"{self.kind}:{','.join(str(a) for a in self.args)}"

    def build(self, bfile_offset: int = 0) -> Sequence:
        k, a = self.kind, self.args
        if k == "I":
            return identity_seq()
        if k == "fact":
            return factorial_seq()
        if k == "T":
            return triangular_seq()
        if k == "fib":
            return fibonacci()
        if k == "const":
            return const_seq(a[0])
        if k == "cpow":
            return power_seq(a[0])
        if k == "pcol":
            return pascal_column(a[0])
        if k == "prow":
            return pascal_row(a[0])
        if k == "gq":
            return g_ab(a[0], 1)
        if k == "gab":
            return g_ab(a[0], a[1])
        if k == "lucas":
            return lucas(a[0], a[1])
        if k == "hm":
            return h_m(a[0])
        if k == "list":
            return from_list(list(a))
        if k == "file":
            return _ingest_plain_file(a[0])
        if k == "bfile":
            return ingest_bfile(a[0], skip=bfile_offset)
        if k == "product":
            return product(a[0].build(bfile_offset), a[1].build(bfile_offset))
        if k == "scalar":
            return scalar(a[0], a[1].build(bfile_offset))
        if k == "pow":
            return compose_power(a[0], a[1].build(bfile_offset))
        if k == "P":
            return divisor_product_of(a[0].build(bfile_offset))
        if k == "col":
            return col_seq(a[1].build(bfile_offset), a[0])
        if k == "row":
            return row_seq(a[1].build(bfile_offset), a[0])
        if k == "prepend1":
            return prepend_one(a[0].build(bfile_offset))
        if k == "interleave1":
            return interleave_ones(a[0].build(bfile_offset))
        if k == "double":
            return double_terms(a[0].build(bfile_offset))
        raise SpecParseError(f"unknown spec kind {k!r}", 0)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, offset: int | None = None):
        raise SpecParseError(message, self.pos if offset is None else offset)

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expect(self, ch: str) -> None:
        self._skip_ws()
        if self._peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def _ident(self) -> tuple[str, int]:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum()
                                             or self.text[self.pos] == "_"):
            self.pos += 1
        if start == self.pos:
            self.error("expected a sequence expression")
        return self.text[start:self.pos], start

    def _int(self) -> int:
        self._skip_ws()
        start = self.pos
        if self._peek() in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.error("expected an integer", start)
        return int(self.text[start:self.pos])

    def _uint(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected a nonnegative integer", start)
        return int(self.text[start:self.pos])

    def _path(self) -> str:
        self._skip_ws()
        start = self.pos
        while (self.pos < len(self.text)
               and self.text[self.pos] not in ",()"
               and not self.text[self.pos].isspace()):
            self.pos += 1
        if start == self.pos:
            self.error("expected a file path")
        return self.text[start:self.pos]

    def _int_follows(self) -> bool:
        # lookahead for the greedy list: a comma continues the list only
        # when an integer comes next
        save = self.pos
        self.pos += 1
        self._skip_ws()
        ch = self._peek()
        ok = ch.isdigit() or (ch in "+-" and self.pos + 1 < len(self.text)
                              and self.text[self.pos + 1].isdigit())
        self.pos = save
        return ok

    def spec(self) -> SeqSpec:
        name, start = self._ident()
        self._skip_ws()
        nxt = self._peek()
        if name in _COMBINATORS and nxt == "(":
            self.pos += 1
            parts = []
            for i, kind in enumerate(_COMBINATORS[name]):
                if i:
                    self._expect(",")
                if kind == "spec":
                    parts.append(self.spec())
                elif kind == "int":
                    parts.append(self._int())
                else:
                    parts.append(self._uint())
            self._expect(")")
            return SeqSpec(name, tuple(parts))
        if nxt == ":":
            if name in _INT_ATOMS:
                self.pos += 1
                args = [self._int()]
                for _ in range(_INT_ATOMS[name] - 1):
                    self._expect(",")
                    args.append(self._int())
                return SeqSpec(name, tuple(args))
            if name in _UINT_ATOMS:
                self.pos += 1
                return SeqSpec(name, (self._uint(),))
            if name == "list":
                self.pos += 1
                args = [self._int()]
                self._skip_ws()
                while self._peek() == "," and self._int_follows():
                    self.pos += 1
                    args.append(self._int())
                    self._skip_ws()
                return SeqSpec(name, tuple(args))
            if name in _PATH_ATOMS:
                self.pos += 1
                return SeqSpec(name, (self._path(),))
        if name in _BARE_ATOMS:
            return SeqSpec(name)
        self.error(f"unknown name {name!r}", start)


def parse_seqspec(text: str) -> SeqSpec:
    """Parse a sequence expression; syntax errors carry a byte offset."""
    if not text or not text.strip():
        raise SpecParseError("empty sequence expression", 0)
    parser = _Parser(text)
    node = parser.spec()
    parser._skip_ws()
    if parser.pos != len(text):
        parser.error("unexpected trailing input")
    return node


def ingest_bfile(path: str, skip: int = 0) -> Sequence:
    """Read an "index value" table into a finite sequence.

    Lines starting with '#' and blank lines are ignored; indices must step
    by exactly 1. The first data line (after skipping `skip` leading lines)
    is re-based to index 1. Gaps, non-integer tokens, and zero values are
    rejected with their line number.
    """
    values = []
    prev_index = None
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise ValueError(f"{path}: {exc}") from exc
    for lineno, line in enumerate(lines, start=1):
        if lineno <= skip:
            continue
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise ValueError(f"{path}: expected 'index value' at line {lineno}")
        try:
            index, value = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ValueError(f"{path}: non-integer token at line {lineno}") from None
        if prev_index is not None and index != prev_index + 1:
            raise ValueError(f"{path}: index gap at line {lineno}: "
                             f"expected {prev_index + 1}, found {index}")
        if value == 0:
            raise ValueError(f"{path}: zero value at line {lineno}")
        prev_index = index
        values.append(value)
    if not values:
        raise ValueError(f"{path}: no data lines")
    return from_list(values, name=f"bfile:{path}")


def _ingest_plain_file(path: str) -> Sequence:
    try:
        tokens = Path(path).read_text().split()
    except OSError as exc:
        raise ValueError(f"{path}: {exc}") from exc
    if not tokens:
        raise ValueError(f"{path}: no terms")
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise ValueError(f"{path}: non-integer token") from None
    return from_list(values, name=f"file:{path}")


# ---------------------------------------------------------------------------
# formatting

def _fmt_exact(q) -> str:
    if isinstance(q, Fraction):
        if q.denominator != 1:
            return f"{q.numerator}/{q.denominator}"
        return str(q.numerator)
    return str(q)


def _frac_pair(q) -> dict:
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def format_triangle_text(tri: Triangle) -> str:
    table = [["n\\k"] + [str(k) for k in range(tri.depth + 1)]]
    for n in range(tri.depth + 1):
        table.append([str(n)] + [_fmt_exact(v) for v in tri.row(n)])
    widths = [0] * (tri.depth + 2)
    for row in table:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = []
    for row in table:
        lines.append("  ".join(cell.ljust(widths[i])
                               for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines)


def format_triangle_csv(tri: Triangle) -> str:
    return "\n".join(",".join(_fmt_exact(v) for v in tri.row(n))
                     for n in range(tri.depth + 1))


def triangle_to_json(tri: Triangle, source: str) -> dict:
    return {"source": source, "depth": tri.depth,
            "rows": [[_frac_pair(v) for v in row] for row in tri.rows]}


def format_pyramid_text(pyr: Pyramid) -> str:
    blocks = [f"slice {m}\n{format_triangle_text(sl)}"
              for m, sl in enumerate(pyr.slices)]
    return "\n\n".join(blocks)


def format_pyramid_csv(pyr: Pyramid) -> str:
    lines = []
    for m, sl in enumerate(pyr.slices):
        for n in range(sl.depth + 1):
            lines.append(f"{m},{n}," + ",".join(_fmt_exact(v) for v in sl.row(n)))
    return "\n".join(lines)


def pyramid_to_json(pyr: Pyramid, source: str) -> dict:
    return {"source": source, "depth": pyr.depth,
            "slices": [triangle_to_json(sl, f"row({m},{source})")
                       for m, sl in enumerate(pyr.slices)]}


_INDEX_KEYS = {"m", "n", "k", "a", "b", "j", "level", "slice", "c", "r"}


def _witness_text(witness: dict) -> str:
    w = dict(witness)
    parts = []
    if "level" in w:
        parts.append(f"level {w.pop('level')}")
    if "slice" in w:
        parts.append(f"slice {w.pop('slice')}")
    if "n" in w and "k" in w and "value" in w:
        parts.append(f"[{w.pop('n')} {w.pop('k')}] = {_fmt_exact(w.pop('value'))}")
    parts.extend(f"{key}={_fmt_exact(v)}" for key, v in w.items())
    return ", ".join(parts)


def _witness_json(witness: dict) -> dict:
    out = {}
    for key, v in witness.items():
        if isinstance(v, Fraction):
            out[key] = _frac_pair(v)
        elif isinstance(v, int) and key in _INDEX_KEYS:
            out[key] = v
        elif isinstance(v, int):
            out[key] = str(v)
        else:
            out[key] = v
    return out


def report_to_json(rep: cls.ClassificationReport) -> dict:
    return {"property": rep.property,
            "bound": rep.scanned_bound(),
            "verdict": rep.verdict,
            "witness": None if rep.witness is None else _witness_json(rep.witness)}


def _report_line(rep: cls.ClassificationReport) -> str:
    status = "PASS" if rep.holds() else "FAIL"
    line = f"{status} {rep.property} (bound {rep.scanned_bound()})"
    if rep.witness is not None:
        line += f": {_witness_text(rep.witness)}"
    if rep.note:
        line += f" [{rep.note}]"
    return line


def _monomial_text(vec: ver.ExponentVector) -> str:
    items = vec.items()
    if not items:
        return "1"
    return "*".join(f"x{r}" if e == 1 else f"x{r}^{e}" for r, e in items)


# ---------------------------------------------------------------------------
# subcommands

def _build_sequence(args) -> tuple[SeqSpec, Sequence]:
    spec = parse_seqspec(args.spec)
    return spec, spec.build(getattr(args, "bfile_offset", 0))


def _cmd_triangle(args) -> int:
    spec, seq = _build_sequence(args)
    tri = triangle(seq, args.rows)
    if args.format == "text":
        print(format_triangle_text(tri))
    elif args.format == "csv":
        print(format_triangle_csv(tri))
    else:
        print(json.dumps(triangle_to_json(tri, spec.canonical()), indent=2))
    return 0


def _cmd_pyramid(args) -> int:
    spec, seq = _build_sequence(args)
    pyr = pyramid(seq, args.depth)
    if args.format == "text":
        print(format_pyramid_text(pyr))
    elif args.format == "csv":
        print(format_pyramid_csv(pyr))
    else:
        print(json.dumps(pyramid_to_json(pyr, spec.canonical()), indent=2))
    return 0


_BATTERY = ("binomid", "divisor_chain", "divisible", "dual_gcd",
            "gcd_sequence", "divisor_product", "multiplicative", "homomorphic")


def _cmd_classify(args) -> int:
    spec, seq = _build_sequence(args)
    selected = None
    if args.only:
        selected = [name.strip() for name in args.only.split(",") if name.strip()]
        known = set(_BATTERY) | {"binomid_every_level"}
        for name in selected:
            if name not in known:
                raise ValueError(f"unknown property {name!r}; choose from "
                                 + ", ".join(sorted(known)))
        if "binomid_every_level" in selected and args.levels is None:
            raise ValueError("binomid_every_level requires --levels")
    checks = {
        "binomid": lambda: cls.is_binomid(seq, args.bound),
        "divisor_chain": lambda: cls.is_divisor_chain(seq, args.bound),
        "divisible": lambda: cls.is_divisible(seq, args.bound),
        "dual_gcd": lambda: cls.is_dual_gcd(seq, args.bound),
        "gcd_sequence": lambda: cls.is_gcd_sequence(seq, args.bound),
        "divisor_product": lambda: cls.is_divisor_product(seq, args.bound),
        "multiplicative": lambda: cls.is_multiplicative(seq, args.bound),
        "homomorphic": lambda: cls.is_homomorphic(seq, args.bound),
    }
    order = list(_BATTERY)
    if args.levels is not None:
        checks["binomid_every_level"] = lambda: cls.is_binomid_every_level(
            seq, args.levels, args.bound)
        order.append("binomid_every_level")
    reports = [checks[name]() for name in order
               if selected is None or name in selected]
    if args.format == "json":
        print(json.dumps([report_to_json(r) for r in reports], indent=2))
    else:
        for rep in reports:
            print(_report_line(rep))
        if args.per_prime is not None:
            decomp = cls.per_prime_decomposition(seq, args.bound, args.per_prime)
            for p, rep in decomp.reports:
                print(f"per-prime {p}: {rep.verdict}")
            for idx, cofactor in decomp.undecided:
                print(f"per-prime undecided: term {idx} has cofactor {cofactor} "
                      f"beyond prime bound {args.per_prime}")
        if args.profile:
            profile = cls.divisor_product_profile(seq, args.bound)
            if not profile.precondition_ok:
                print(f"profile unavailable: {_witness_text(profile.precondition_witness)}")
            else:
                for crit in (profile.multiplicative, profile.homomorphic, profile.gcd):
                    agree = "agrees" if crit.agrees else "DISAGREES"
                    print(f"profile {crit.name}: {crit.verdict} "
                          f"({agree} with direct classifier)")
    return 0 if all(rep.holds() for rep in reports) else 1


def _cmd_invert(args) -> int:
    spec, seq = _build_sequence(args)
    inverted = cls.mobius_invert(seq, args.terms)
    if args.format == "json":
        print(json.dumps({"source": spec.canonical(),
                          "terms": [_frac_pair(q) for q in inverted]}, indent=2))
    else:
        print(" ".join(_fmt_exact(q) for q in inverted))
    return 0


def _print_check(result: ver.CheckResult) -> int:
    if result.ok:
        line = f"PASS {result.check}"
        if result.witness:
            line += ": " + ", ".join(f"{k}={_fmt_exact(v)}"
                                     for k, v in result.witness.items())
        print(line)
        return 0
    line = f"FAIL {result.check} ({result.status})"
    if result.witness:
        line += ": " + ", ".join(f"{k}={_fmt_exact(v)}"
                                 for k, v in result.witness.items())
    print(line)
    return 1


def _cmd_verify_symmetry(args) -> int:
    _, seq = _build_sequence(args)
    return _print_check(ver.check_symmetry(seq))


def _cmd_verify_slice(args) -> int:
    _, seq = _build_sequence(args)
    return _print_check(ver.check_slice_identity(seq, args.n_max, args.m_max,
                                                 args.k_max))


def _cmd_verify_determinant(args) -> int:
    return _print_check(ver.check_determinant_identity(args.n, args.m, args.k))


def _cmd_verify_recurrence(args) -> int:
    _, seq = _build_sequence(args)
    return _print_check(ver.check_recurrence_step(seq, args.n, args.k,
                                                  args.u, args.v))


def _cmd_verify_hm(args) -> int:
    return _print_check(ver.check_hm_identity(args.m, args.n, args.k))


def _cmd_verify_delta(args) -> int:
    return _print_check(ver.check_delta_pattern(args.m, args.r, args.length))


def _cmd_verify_window(args) -> int:
    return _print_check(ver.check_window_minimality(args.m, args.r,
                                                    args.n_max, args.a_max))


def _cmd_verify_pyramid_entry(args) -> int:
    vec = ver.generic_pyramid_entry(args.m, args.n, args.k)
    print(_monomial_text(vec))
    return 0


def _cmd_verify_factorial_exponents(args) -> int:
    print(_monomial_text(ver.generic_factorial_exponents(args.n)))
    return 0


def _add_spec_argument(parser) -> None:
    parser.add_argument("spec", help="sequence expression, e.g. gq:2 or col(2,T)")
    parser.add_argument("--bfile-offset", type=int, default=0, metavar="K",
                        help="skip K leading lines of every bfile atom")


def _build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binomid",
        description="Exact generalized binomial triangles, pyramids, "
                    "sequence classification, and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangle", help="print the triangle of a sequence")
    _add_spec_argument(p)
    p.add_argument("--rows", type=int, required=True, metavar="N")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(handler=_cmd_triangle)

    p = sub.add_parser("pyramid", help="print the stacked row triangles")
    _add_spec_argument(p)
    p.add_argument("--depth", type=int, required=True, metavar="D")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(handler=_cmd_pyramid)

    p = sub.add_parser("classify", help="run the property battery")
    _add_spec_argument(p)
    p.add_argument("--bound", type=int, required=True, metavar="B")
    p.add_argument("--levels", type=int, default=None, metavar="D",
                   help="also check binomid at every level to depth D")
    p.add_argument("--only", default=None, metavar="PROPS",
                   help="comma-separated property names to run")
    p.add_argument("--per-prime", type=int, default=None, metavar="P",
                   help="also report the per-prime decomposition")
    p.add_argument("--profile", action="store_true",
                   help="also profile the inverted sequence")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("invert", help="multiplicative Mobius inversion")
    _add_spec_argument(p)
    p.add_argument("--terms", type=int, required=True, metavar="N")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_invert)

    p = sub.add_parser("verify", help="run one identity checker")
    vsub = p.add_subparsers(dest="check", required=True)

    v = vsub.add_parser("symmetry", help="3-fold rotation of a palindromic triangle")
    _add_spec_argument(v)
    v.set_defaults(handler=_cmd_verify_symmetry)

    v = vsub.add_parser("slice-identity", help="columns appear as pyramid slices")
    _add_spec_argument(v)
    v.add_argument("--n-max", type=int, default=6)
    v.add_argument("--m-max", type=int, default=4)
    v.add_argument("--k-max", type=int, default=6)
    v.set_defaults(handler=_cmd_verify_slice)

    v = vsub.add_parser("determinant", help="binomial determinant identity")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--k", type=int, required=True)
    v.set_defaults(handler=_cmd_verify_determinant)

    v = vsub.add_parser("recurrence", help="two-term recurrence step identity")
    _add_spec_argument(v)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--u", type=int, default=None)
    v.add_argument("--v", type=int, default=None)
    v.set_defaults(handler=_cmd_verify_recurrence)

    v = vsub.add_parser("hm", help="factorial and binomial identity for comb(mx, m)")
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--k", type=int, required=True)
    v.set_defaults(handler=_cmd_verify_hm)

    v = vsub.add_parser("delta-pattern", help="zeros-then-ones pattern of delta")
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--r", type=int, required=True)
    v.add_argument("--length", type=int, required=True)
    v.set_defaults(handler=_cmd_verify_delta)

    v = vsub.add_parser("window-minimality", help="initial window is minimal")
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--r", type=int, required=True)
    v.add_argument("--n-max", type=int, default=18)
    v.add_argument("--a-max", type=int, default=18)
    v.set_defaults(handler=_cmd_verify_window)

    v = vsub.add_parser("pyramid-entry", help="generic column-entry exponents")
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--k", type=int, required=True)
    v.set_defaults(handler=_cmd_verify_pyramid_entry)

    v = vsub.add_parser("factorial-exponents", help="generic factorial exponents")
    v.add_argument("--n", type=int, required=True)
    v.set_defaults(handler=_cmd_verify_factorial_exponents)

    return parser


def main(argv=None) -> int:
    parser = _build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except SpecParseError as exc:
        print(f"error: {exc} (byte offset {exc.offset})", file=sys.stderr)
        return 2
    except NonIntegralEntryError as exc:
        print(f"error: non-integral entry [{exc.n} {exc.k}] = {exc.value}",
              file=sys.stderr)
        return 1
    except (UndefinedTermError, ZeroTermError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
