"""The flat text format for algebras and presentations.

Line-oriented: one `kind` line, then `basis <name> <degree>` lines, then
differential and product/bracket entries with exact rational
coefficients rendered as p/q.  Printing is canonical (entries sorted),
so parse-print round trips are byte-identical.

    kind dga                      kind dgla            kind formal
    basis a 0                     basis x 1            flavor tensor
    d a c 1                       bracket x x y 2      completed true
    product a a a 1               d x y -1             basis v' 1
    unit a 1                                           d v' v'*v' -1
    aug a 1

Element expressions on the command line are rational-linear
combinations of basis names and tensor pairs: "3/2*x + y@eps - z".
Both the tensor glyph and "@" are accepted in pairs.
"""

from __future__ import annotations

from fractions import Fraction

from .assoc import DgAlgebra
from .duality import LIE, SYMMETRIC, TENSOR, Presentation
from .graded import TENSOR_SEP, GradedMap, GradedSpace, Vec
from .lie import DgLieAlgebra


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _parse_fraction(token: str, line_no: int, field: str) -> Fraction:
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(line_no, f"malformed rational {token!r} in {field}") from None
    return value


def _parse_int(token: str, line_no: int, field: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line_no, f"malformed integer {token!r} in {field}") from None


_KIND_KEYWORDS = {
    "dga": {"basis", "d", "product", "unit", "aug"},
    "dgla": {"basis", "d", "bracket"},
    "formal": {"flavor", "completed", "basis", "d"},
}


def parse(text: str):
    """Parse an algebra file into a DgAlgebra, DgLieAlgebra, or
    Presentation.  Errors carry line numbers."""
    lines = text.splitlines()
    kind = None
    basis: list[tuple[str, int]] = []
    seen: set[str] = set()
    d_entries: list[tuple[int, list[str]]] = []
    prod_entries: list[tuple[int, list[str]]] = []
    unit_entries: list[tuple[int, str, Fraction]] = []
    aug_entries: list[tuple[int, str, Fraction]] = []
    flavor = None
    completed = None

    for i, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        key = parts[0]
        if key == "kind":
            if kind is not None:
                raise ParseError(i, "duplicate kind line")
            if len(parts) != 2 or parts[1] not in _KIND_KEYWORDS:
                raise ParseError(i, "kind must be one of dga, dgla, formal")
            kind = parts[1]
            continue
        if kind is None:
            raise ParseError(i, "the first entry must be a kind line")
        if key not in _KIND_KEYWORDS[kind]:
            raise ParseError(i, f"unknown field {key!r} for kind {kind}")
        if key == "basis":
            if len(parts) != 3:
                raise ParseError(i, "basis lines are: basis <name> <degree>")
            name = parts[1]
            if name in seen:
                raise ParseError(i, f"duplicate basis name {name!r}")
            seen.add(name)
            basis.append((name, _parse_int(parts[2], i, "basis degree")))
        elif key == "d":
            if len(parts) != 4:
                raise ParseError(i, "d lines are: d <source> <target> <coeff>")
            d_entries.append((i, parts[1:]))
        elif key in ("product", "bracket"):
            if len(parts) != 5:
                raise ParseError(i, f"{key} lines are: {key} <left> <right> <target> <coeff>")
            prod_entries.append((i, parts[1:]))
        elif key == "unit":
            if len(parts) != 3:
                raise ParseError(i, "unit lines are: unit <name> <coeff>")
            unit_entries.append((i, parts[1], _parse_fraction(parts[2], i, "unit")))
        elif key == "aug":
            if len(parts) != 3:
                raise ParseError(i, "aug lines are: aug <name> <coeff>")
            aug_entries.append((i, parts[1], _parse_fraction(parts[2], i, "aug")))
        elif key == "flavor":
            if len(parts) != 2 or parts[1] not in (SYMMETRIC, TENSOR, LIE):
                raise ParseError(i, "flavor must be symmetric, tensor or lie")
            flavor = parts[1]
        elif key == "completed":
            if len(parts) != 2 or parts[1] not in ("true", "false"):
                raise ParseError(i, "completed must be true or false")
            completed = parts[1] == "true"

    if kind is None:
        raise ParseError(len(lines) or 1, "missing kind line")

    degrees: dict[int, list[str]] = {}
    for name, deg in basis:
        degrees.setdefault(deg, []).append(name)
    space = GradedSpace(degrees)

    def check_label(label: str, i: int) -> None:
        if not space.has_label(label):
            raise ParseError(i, f"unknown basis name {label!r}")

    if kind == "formal":
        if flavor is None:
            raise ParseError(1, "formal files need a flavor line")
        d_linear: dict[str, Vec] = {}
        d_quadratic: dict[str, Vec] = {}
        for i, (src, tgt, coeff) in d_entries:
            check_label(src, i)
            c = _parse_fraction(coeff, i, "d")
            letters = tgt.split("*")
            for letter in letters:
                check_label(letter, i)
            if len(letters) == 1:
                d_linear[src] = d_linear.get(src, Vec()) + Vec({tgt: c})
            elif len(letters) == 2:
                d_quadratic[src] = d_quadratic.get(src, Vec()) + Vec({tgt: c})
            else:
                raise ParseError(i, "formal differentials are quadratic-linear")
        try:
            return Presentation(flavor, bool(completed), space, d_linear, d_quadratic)
        except ValueError as exc:
            raise ParseError(1, str(exc)) from None

    entries: dict[str, Vec] = {}
    for i, (src, tgt, coeff) in d_entries:
        check_label(src, i)
        check_label(tgt, i)
        c = _parse_fraction(coeff, i, "d")
        if space.degree_of(tgt) != space.degree_of(src) + 1:
            raise ParseError(i, f"d entry {src} -> {tgt} does not raise degree by 1")
        entries[src] = entries.get(src, Vec()) + Vec({tgt: c})
    diff = GradedMap(space, space, 1, entries)

    table: dict[tuple[str, str], Vec] = {}
    for i, (left, right, tgt, coeff) in prod_entries:
        check_label(left, i)
        check_label(right, i)
        check_label(tgt, i)
        c = _parse_fraction(coeff, i, "product")
        want = space.degree_of(left) + space.degree_of(right)
        if space.degree_of(tgt) != want:
            raise ParseError(
                i, f"entry ({left},{right}) -> {tgt}: degree {space.degree_of(tgt)}"
                f" does not match {want}")
        key = (left, right)
        table[key] = table.get(key, Vec()) + Vec({tgt: c})

    if kind == "dgla":
        return DgLieAlgebra(space, diff, table)

    unit = None
    if unit_entries:
        unit = Vec()
        for i, name, c in unit_entries:
            check_label(name, i)
            unit = unit + Vec({name: c})
    augmentation = None
    if aug_entries:
        augmentation = {}
        for i, name, c in aug_entries:
            check_label(name, i)
            augmentation[name] = c
    return DgAlgebra(space, diff, table, unit=unit, augmentation=augmentation)


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------

def _basis_lines(space: GradedSpace) -> list[str]:
    return [f"basis {l} {space.degree_of(l)}" for l in space.labels()]


def _fraction_str(c: Fraction) -> str:
    return str(c)


def print_algebra(obj) -> str:
    """Render an algebra or presentation in the canonical file form."""
    lines: list[str] = []
    if isinstance(obj, Presentation):
        lines.append("kind formal")
        lines.append(f"flavor {obj.flavor}")
        lines.append(f"completed {'true' if obj.completed else 'false'}")
        lines.extend(_basis_lines(obj.generators))
        entries = []
        for gen in obj.generators.labels():
            for tgt in sorted(obj.d_linear.get(gen, Vec()).labels()):
                entries.append(f"d {gen} {tgt} {_fraction_str(obj.d_linear[gen].get(tgt))}")
            for word in sorted(obj.d_quadratic.get(gen, Vec()).labels()):
                entries.append(f"d {gen} {word} {_fraction_str(obj.d_quadratic[gen].get(word))}")
        lines.extend(entries)
    elif isinstance(obj, DgLieAlgebra):
        lines.append("kind dgla")
        lines.extend(_basis_lines(obj.space))
        for src in obj.space.labels():
            img = obj.differential.entries.get(src)
            if img:
                for tgt in sorted(img.labels()):
                    lines.append(f"d {src} {tgt} {_fraction_str(img.get(tgt))}")
        for (a, b) in sorted(obj.brackets):
            val = obj.brackets[(a, b)]
            for tgt in sorted(val.labels()):
                lines.append(f"bracket {a} {b} {tgt} {_fraction_str(val.get(tgt))}")
    elif isinstance(obj, DgAlgebra):
        lines.append("kind dga")
        lines.extend(_basis_lines(obj.space))
        for src in obj.space.labels():
            img = obj.differential.entries.get(src)
            if img:
                for tgt in sorted(img.labels()):
                    lines.append(f"d {src} {tgt} {_fraction_str(img.get(tgt))}")
        for (a, b) in sorted(obj.products):
            val = obj.products[(a, b)]
            for tgt in sorted(val.labels()):
                lines.append(f"product {a} {b} {tgt} {_fraction_str(val.get(tgt))}")
        if obj.unit is not None:
            for l in sorted(obj.unit.labels()):
                lines.append(f"unit {l} {_fraction_str(obj.unit.get(l))}")
        if obj.augmentation is not None:
            for l in sorted(obj.augmentation):
                if obj.augmentation[l] != 0:
                    lines.append(f"aug {l} {_fraction_str(obj.augmentation[l])}")
    else:
        raise TypeError(f"cannot print {type(obj).__name__}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# element expressions
# ---------------------------------------------------------------------------

class ElementSyntaxError(ValueError):
    pass


def parse_element(expr: str, space: GradedSpace) -> Vec:
    """Parse "3/2*x + y@eps - z" against the basis of a space.

    Terms are coefficient-times-atom with atoms either basis names or
    tensor pairs written with "@" (or the tensor glyph); no general
    arithmetic."""
    text = expr.replace("@", TENSOR_SEP).replace(" ", "")
    if not text:
        raise ElementSyntaxError("empty element expression")
    text = text.replace("-", "+-")
    out = Vec()
    for term in text.split("+"):
        if not term:
            continue
        sign = Fraction(1)
        if term.startswith("-"):
            sign = Fraction(-1)
            term = term[1:]
        if not term:
            raise ElementSyntaxError("dangling sign in element expression")
        if "*" in term:
            coeff_txt, _, atom = term.partition("*")
            try:
                coeff = Fraction(coeff_txt)
            except (ValueError, ZeroDivisionError):
                raise ElementSyntaxError(f"malformed coefficient {coeff_txt!r}") from None
        else:
            first = term[0]
            if first.isdigit():
                # a bare rational times nothing is not an element
                raise ElementSyntaxError(
                    f"term {term!r} needs the form coeff*name or name")
            coeff, atom = Fraction(1), term
        if not space.has_label(atom):
            raise ElementSyntaxError(f"unknown basis element {atom!r}")
        out = out + Vec({atom: sign * coeff})
    return out
