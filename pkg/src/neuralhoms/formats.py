"""Text file formats used by the command line.

All formats are line oriented; ``#`` starts a comment line and blank lines
are ignored. Parse failures raise :class:`ParseError` carrying the 1-based
line number.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .codes import Code, word_from_str
from .errors import AmbientMismatch, NeuralError, ParseError
from .homs import NipHom, hom_validate, parse_image
from .ideals import GeneratorSet
from .pseudo import Pseudomonomial, parse_pm
from .realize import Cover, IntervalCover


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def parse_code_text(text: str, default_n: int | None = None) -> tuple[Code, list[tuple[int, str]]]:
    """Returns the code and the ``(line, word)`` duplicates that were dropped.

    The bit count comes from the codewords; ``default_n`` is used only when
    the file holds no codewords at all.
    """
    words: dict[str, int] = {}
    dups = []
    width = None
    for lineno, line in _content_lines(text):
        if set(line) - {"0", "1"}:
            raise ParseError(f"codeword {line!r} is not a 0/1 string", lineno)
        if width is None:
            width = len(line)
        elif len(line) != width:
            raise ParseError(f"codeword {line!r} has length {len(line)}, expected {width}", lineno)
        if line in words:
            dups.append((lineno, line))
        else:
            words[line] = lineno
    if width is None:
        width = default_n
    if width is None:
        raise ParseError("empty code file: give the bit count with --n")
    if width < 1:
        raise ParseError("codewords need at least one bit")
    return Code(width, frozenset(word_from_str(w) for w in words)), dups


def format_code(C: Code) -> str:
    return "".join(s + "\n" for s in C.strings())


_N_HEADER = re.compile(r"n\s*=\s*(\d+)")


def parse_generator_text(text: str) -> GeneratorSet:
    lines = list(_content_lines(text))
    if not lines or not _N_HEADER.fullmatch(lines[0][1]):
        raise ParseError("generator file must start with a header n=<int>", lines[0][0] if lines else None)
    n = int(_N_HEADER.fullmatch(lines[0][1]).group(1))
    if n < 1:
        raise ParseError("n must be positive", lines[0][0])
    gens = []
    for lineno, line in lines[1:]:
        if "".join(line.split()) == "0":
            raise ParseError("0 is not a pseudomonomial", lineno)
        gens.append(parse_pm(line, n, lineno))
    return GeneratorSet(n, tuple(gens))


def format_generators(G: GeneratorSet) -> str:
    return f"n={G.n}\n" + "".join(f"{g}\n" for g in G)


def parse_pm_text(text: str, n: int | None) -> Pseudomonomial:
    """A single pseudomonomial, optionally preceded by an ``n=<int>`` header."""
    lines = list(_content_lines(text))
    if lines and _N_HEADER.fullmatch(lines[0][1]):
        header_n = int(_N_HEADER.fullmatch(lines[0][1]).group(1))
        if n is not None and header_n != n:
            raise AmbientMismatch(f"pseudomonomial file says n={header_n}, code has {n} bits")
        n = header_n
        lines = lines[1:]
    if len(lines) != 1:
        raise ParseError(f"expected exactly one pseudomonomial, found {len(lines)}")
    if n is None:
        raise ParseError("ambient size unknown: add an n=<int> header or pass --n")
    return parse_pm(lines[0][1], n, lines[0][0])


_HOM_HEADER = re.compile(r"n\s*=\s*(\d+)\s+m\s*=\s*(\d+)")
_HOM_LINE = re.compile(r"x(\d+)\s*->\s*(.+)")


def parse_hom_text(text: str) -> NipHom:
    """Parse and validate; validation errors propagate unchanged."""
    lines = list(_content_lines(text))
    if not lines or not _HOM_HEADER.fullmatch(lines[0][1]):
        raise ParseError("hom file must start with a header n=<int> m=<int>", lines[0][0] if lines else None)
    hdr = _HOM_HEADER.fullmatch(lines[0][1])
    n, m = int(hdr.group(1)), int(hdr.group(2))
    if n < 1 or m < 1:
        raise ParseError("n and m must be positive", lines[0][0])
    raw: dict[int, tuple[int, str]] = {}
    for lineno, line in lines[1:]:
        mt = _HOM_LINE.fullmatch(line)
        if mt is None:
            raise ParseError(f"expected 'x<i> -> <image>', got {line!r}", lineno)
        i = int(mt.group(1))
        if not 1 <= i <= n:
            raise ParseError(f"source variable x{i} outside 1..{n}", lineno)
        if i in raw:
            raise ParseError(f"x{i} assigned twice", lineno)
        raw[i] = (lineno, mt.group(2))
    missing = [i for i in range(1, n + 1) if i not in raw]
    if missing:
        raise ParseError("no image given for " + ", ".join(f"x{i}" for i in missing))
    for lineno, expr in raw.values():
        try:
            parse_image(expr, m)
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from exc
        except NeuralError:
            pass  # reported by hom_validate with full context
    return hom_validate(n, m, [raw[i][1] for i in range(1, n + 1)])


def format_hom(phi: NipHom) -> str:
    return phi.to_text()


_POINT_HEADER = re.compile(r"points\s*=\s*(\d+)\s+sets\s*=\s*(\d+)")
_NUM = r"-?\d+(?:/\d+)?"
_INTERVAL = re.compile(rf"\[\s*({_NUM})\s*,\s*({_NUM})\s*\)")
_INTERVAL_HEADER = re.compile(r"intervals\s+sets\s*=\s*(\d+)\s+universe\s*=\s*(\[.*\))")
_SET_LINE = re.compile(r"set\s+(\d+)\s*:(.*)")


def _intervals(text: str, lineno: int) -> list:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        mt = _INTERVAL.match(text, pos)
        if mt is None:
            raise ParseError(f"bad interval list {text!r}", lineno)
        try:
            a, b = Fraction(mt.group(1)), Fraction(mt.group(2))
        except ZeroDivisionError as exc:
            raise ParseError("zero denominator", lineno) from exc
        if a > b:
            raise ParseError(f"reversed interval [{a},{b})", lineno)
        out.append((a, b))
        pos = mt.end()
        while pos < len(text) and text[pos] in " \t,":
            pos += 1
    return out


def parse_realization_text(text: str) -> Cover | IntervalCover:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty realization file")
    head_no, head = lines[0]
    if mt := _POINT_HEADER.fullmatch(head):
        npts, nsets = int(mt.group(1)), int(mt.group(2))
        if nsets < 1:
            raise ParseError("sets must be positive", head_no)
        rows = lines[1:]
        if len(rows) != npts:
            raise ParseError(f"header promises {npts} points, found {len(rows)} rows", head_no)
        members = [set() for _ in range(nsets)]
        for r, (lineno, row) in enumerate(rows, start=1):
            bits = "".join(row.split())
            if len(bits) != nsets or set(bits) - {"0", "1"}:
                raise ParseError(f"row {row!r} is not {nsets} bits", lineno)
            for k, ch in enumerate(bits):
                if ch == "1":
                    members[k].add(r)
        return Cover(tuple(range(1, npts + 1)), members)
    if mt := _INTERVAL_HEADER.fullmatch(head):
        nsets = int(mt.group(1))
        if nsets < 1:
            raise ParseError("sets must be positive", head_no)
        uni = _intervals(mt.group(2), head_no)
        if len(uni) != 1:
            raise ParseError("universe must be a single interval", head_no)
        sets: dict[int, list] = {}
        for lineno, line in lines[1:]:
            sm = _SET_LINE.fullmatch(line)
            if sm is None:
                raise ParseError(f"expected 'set <i>: [a,b) ...', got {line!r}", lineno)
            i = int(sm.group(1))
            if not 1 <= i <= nsets:
                raise ParseError(f"set index {i} outside 1..{nsets}", lineno)
            if i in sets:
                raise ParseError(f"set {i} given twice", lineno)
            sets[i] = _intervals(sm.group(2), lineno)
        missing = [i for i in range(1, nsets + 1) if i not in sets]
        if missing:
            raise ParseError("missing set lines for " + ", ".join(map(str, missing)))
        return IntervalCover(uni[0], [sets[i] for i in range(1, nsets + 1)])
    raise ParseError("unknown realization header; expected 'points=N sets=n' or 'intervals sets=n universe=[a,b)'", head_no)


def _num(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _iv(a: Fraction, b: Fraction) -> str:
    return f"[{_num(a)},{_num(b)})"


def format_realization(U: Cover | IntervalCover) -> str:
    if isinstance(U, IntervalCover):
        lines = [f"intervals sets={U.n} universe={_iv(*U.universe)}"]
        for i, pieces in enumerate(U.sets, start=1):
            body = " ".join(_iv(a, b) for a, b in pieces)
            lines.append(f"set {i}: {body}".rstrip())
        return "\n".join(lines) + "\n"
    lines = [f"points={len(U.universe)} sets={U.n}"]
    for p in U.universe:
        lines.append("".join("1" if p in u else "0" for u in U.members))
    return "\n".join(lines) + "\n"
