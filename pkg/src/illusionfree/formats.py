"""Text formats: instances, solutions, Hitting Set inputs and formulas.

Instance files are line oriented::

    difr 1
    n 4
    p 1/2
    colors BRRB
    kind directed_cycle        (optional)
    edges 4
    0 1                        (one "tail head" pair per line, ascending)
    ...
    coords                     (optional, then n lines "row col")
    layers 0 0 1 1             (optional)
    demand 2 0 3               (optional, count then ascending ids)

Blank lines and lines starting with ``#`` are ignored when parsing.
``emit_instance`` produces the canonical form, and parsing it back yields
an equal instance.
"""
from __future__ import annotations

from fractions import Fraction

from .graph import Instance, InstanceError, Recoloring
from .reductions import Clause, HittingSetInstance, RectilinearFormula

VERSION = "1"


class FormatError(InstanceError):
    """Malformed text, with the 1-based line (and column) of the problem."""

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


def format_fraction(p: Fraction) -> str:
    return f"{p.numerator}/{p.denominator}"


def parse_fraction(text: str, line=None) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/")
            value = Fraction(int(num), int(den))
        else:
            value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"bad rational {text!r}", line) from None
    if not 0 <= value <= 1:
        raise FormatError(f"p must lie in [0, 1], got {text}", line)
    return value


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def _ints(parts, number, first_column=1):
    values = []
    column = first_column
    for part in parts:
        try:
            values.append(int(part))
        except ValueError:
            raise FormatError(f"expected an integer, got {part!r}", number, column) from None
        column += len(part) + 1
    return values


def emit_instance(instance: Instance) -> str:
    out = [
        f"difr {VERSION}",
        f"n {instance.n}",
        f"p {format_fraction(instance.p)}",
        f"colors {instance.colors}".rstrip(),
    ]
    if instance.kind is not None:
        out.append(f"kind {instance.kind}")
    out.append(f"edges {len(instance.edges)}")
    out.extend(f"{a} {b}" for a, b in instance.edges)
    if instance.coords is not None:
        out.append("coords")
        out.extend(f"{r} {c}" for r, c in instance.coords)
    if instance.layers is not None:
        out.append(" ".join(["layers"] + [str(x) for x in instance.layers]))
    if instance.demand is not None:
        ids = sorted(instance.demand)
        out.append(" ".join(["demand", str(len(ids))] + [str(v) for v in ids]))
    return "\n".join(out) + "\n"


def parse_instance(text: str) -> Instance:
    lines = list(_lines(text))
    pos = 0

    def take(keyword):
        nonlocal pos
        if pos >= len(lines):
            raise FormatError(f"missing {keyword!r} line")
        number, line = lines[pos]
        parts = line.split()
        if parts[0] != keyword:
            raise FormatError(f"expected {keyword!r}, got {parts[0]!r}", number, 1)
        pos += 1
        return number, parts[1:]

    number, rest = take("difr")
    if rest != [VERSION]:
        raise FormatError(f"unsupported version {' '.join(rest)!r}", number)
    number, rest = take("n")
    if len(rest) != 1:
        raise FormatError("expected 'n <count>'", number)
    (n,) = _ints(rest, number, 3)
    number, rest = take("p")
    if len(rest) != 1:
        raise FormatError("expected 'p <num>/<den>'", number)
    p = parse_fraction(rest[0], number)
    number, rest = take("colors")
    colors = "".join(rest)
    if len(colors) != n:
        raise FormatError(f"expected {n} colors, got {len(colors)}", number)
    for k, ch in enumerate(colors):
        if ch not in "BR":
            raise FormatError(f"bad color character {ch!r}", number, 8 + k)
    kind = None
    if pos < len(lines) and lines[pos][1].split()[0] == "kind":
        number, rest = take("kind")
        if len(rest) != 1:
            raise FormatError("expected 'kind <tag>'", number)
        kind = rest[0]
    number, rest = take("edges")
    (m,) = _ints(rest, number, 7) if len(rest) == 1 else (None,)
    if m is None or m < 0:
        raise FormatError("expected 'edges <count>'", number)
    edges = []
    seen = set()
    for _ in range(m):
        if pos >= len(lines):
            raise FormatError(f"expected {m} edge lines, got {len(edges)}")
        number, line = lines[pos]
        pos += 1
        parts = line.split()
        if len(parts) != 2:
            raise FormatError("expected 'tail head'", number)
        a, b = _ints(parts, number)
        for value, column in ((a, 1), (b, len(parts[0]) + 2)):
            if not 0 <= value < n:
                raise FormatError(f"vertex {value} out of range", number, column)
        if a == b:
            raise FormatError(f"self-loop at vertex {a}", number)
        if (a, b) in seen:
            raise FormatError(f"duplicate edge ({a}, {b})", number)
        seen.add((a, b))
        edges.append((a, b))
    coords = layers = demand = None
    while pos < len(lines):
        number, line = lines[pos]
        parts = line.split()
        pos += 1
        if parts[0] == "coords" and coords is None:
            coords = []
            for _ in range(n):
                if pos >= len(lines):
                    raise FormatError(f"expected {n} coordinate lines, got {len(coords)}")
                cnum, cline = lines[pos]
                pos += 1
                pair = cline.split()
                if len(pair) != 2:
                    raise FormatError("expected 'row col'", cnum)
                coords.append(tuple(_ints(pair, cnum)))
        elif parts[0] == "layers" and layers is None:
            layers = _ints(parts[1:], number, 8)
            if len(layers) != n:
                raise FormatError(f"expected {n} layer indices, got {len(layers)}", number)
        elif parts[0] == "demand" and demand is None:
            values = _ints(parts[1:], number, 8)
            if not values or values[0] != len(values) - 1:
                raise FormatError("demand count does not match the listed ids", number)
            demand = values[1:]
        else:
            raise FormatError(f"unexpected {parts[0]!r}", number, 1)
    try:
        return Instance(n, edges, colors, p, coords=coords, layers=layers, kind=kind, demand=demand)
    except FormatError:
        raise
    except InstanceError as exc:
        raise FormatError(str(exc)) from None


def read_instance(path) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def write_instance(instance: Instance, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(emit_instance(instance))


def emit_id_list(ids) -> str:
    return "".join(f"{v}\n" for v in sorted(ids))


def parse_id_list(text: str) -> list:
    """One vertex id per line; used for solutions and demand sets."""
    ids = []
    for number, line in _lines(text):
        parts = line.split()
        if len(parts) != 1:
            raise FormatError("expected one id per line", number)
        ids.extend(_ints(parts, number))
    return ids


def emit_solution(recoloring: Recoloring) -> str:
    return emit_id_list(recoloring.flipped)


def parse_solution(text: str) -> Recoloring:
    ids = parse_id_list(text)
    if len(set(ids)) != len(ids):
        raise FormatError("a vertex is listed twice")
    return Recoloring(ids)


def parse_hitting_set(text: str) -> HittingSetInstance:
    """``n m [k]`` followed by one set of 0-based element ids per line."""
    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty Hitting Set input")
    number, head = lines[0]
    values = _ints(head.split(), number)
    if len(values) not in (2, 3):
        raise FormatError("expected 'n m [k]'", number)
    n, m = values[:2]
    k = values[2] if len(values) == 3 else None
    if len(lines) - 1 != m:
        raise FormatError(f"expected {m} set lines, got {len(lines) - 1}")
    family = []
    for number, line in lines[1:]:
        members = _ints(line.split(), number)
        if any(not 0 <= u < n for u in members):
            raise FormatError("element outside the universe", number)
        family.append(members)
    return HittingSetInstance(n, family, k)


def emit_hitting_set(hs: HittingSetInstance) -> str:
    head = [hs.n, len(hs.family)] + ([] if hs.k is None else [hs.k])
    out = [" ".join(map(str, head))]
    out.extend(" ".join(map(str, sorted(a))) for a in hs.family)
    return "\n".join(out) + "\n"


def parse_formula(text: str) -> RectilinearFormula:
    """Grammar::

        formula := "vars" NAME* NEWLINE clause*
        clause  := ("+" | "-") NAME NAME NAME NEWLINE

    Variables appear on the axis in the listed order; ``+`` clauses are
    positive, ``-`` clauses negative.  Nesting is derived from the order.
    """
    lines = list(_lines(text))
    if not lines or lines[0][1].split()[0] != "vars":
        raise FormatError("formula must start with a 'vars' line", lines[0][0] if lines else None)
    variables = lines[0][1].split()[1:]
    clauses = []
    for number, line in lines[1:]:
        parts = line.split()
        if parts[0] not in "+-" or len(parts) != 4:
            raise FormatError("expected '+ a b c' or '- a b c'", number)
        clauses.append(Clause(parts[0] == "+", tuple(parts[1:])))
    try:
        return RectilinearFormula(tuple(variables), tuple(clauses))
    except InstanceError as exc:
        raise FormatError(str(exc)) from None


def emit_formula(formula: RectilinearFormula) -> str:
    out = [" ".join(["vars"] + list(formula.variables))]
    out.extend(
        " ".join(["+" if c.positive else "-"] + list(c.variables)) for c in formula.clauses
    )
    return "\n".join(out) + "\n"
