"""Line-oriented workspace format: reading and canonical writing.

A workspace is a sequence of sections::

    [algebra g]
    basis x y
    bracket x y = x

    [rmatrix r on g]
    r = y ^ x

    [task pipeline]
    run classify r
    expect fail frobenius g

Tokens are separated by whitespace or punctuation; ``#`` starts a comment.
Coefficients are integers or ``p/q`` rationals, never decimals.
Brackets and form entries not mentioned are zero, and the reversed pair is
filled in by antisymmetry.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .bialgebra import Cobracket, RMatrix
from .double import DoubleAlgebra
from .errors import (AntisymmetryConflict, DuplicateName, ParseError, UnresolvedReference)
from .exact import Matrix, Tensor3
from .frobenius import SkewForm
from .lie import LieAlgebra, Representation

KINDS = ("algebra", "form", "cobracket", "rmatrix", "rep", "morphism", "task")
COMMANDS = ("validate", "frobenius", "cocycle", "bialgebra", "double", "classify",
            "induce", "assemble", "report")
BODY_KEYWORDS = {
    "algebra": ("basis", "bracket"),
    "form": ("entry",),
    "cobracket": ("gamma",),
    "rmatrix": ("r",),
    "rep": ("act",),
    "morphism": ("map",),
    "task": ("run", "expect"),
}
# Which reference keywords each kind takes, and which kinds they may name.
HEADER_REFS = {
    "algebra": (),
    "form": (("on", ("algebra",)),),
    "cobracket": (("on", ("algebra",)),),
    "rmatrix": (("on", ("algebra",)),),
    "rep": (("of", ("algebra",)), ("on", ("algebra", "form"))),
    "morphism": (("of", ("algebra", "form")), ("on", ("algebra", "form"))),
    "task": (),
}

_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<decimal>\d*\.\d+|\d+\.\d*|\d+[eE][+-]?\d+)
  | (?P<rational>\d+(?:/\d+)?)
  | (?P<arrow>->)
  | (?P<punct>[\[\]=+\-^*:])
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<bad>\S)
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str       # 'rational', 'punct', 'ident', 'end'
    text: str
    line: int
    column: int


def tokenize_line(text: str, line: int) -> list[Token]:
    """Tokens of one line (comment stripped), ending with an 'end' token."""
    text = text.split("#", 1)[0]
    out = []
    for m in _TOKEN_RE.finditer(text):
        kind = m.lastgroup
        col = m.start() + 1
        if kind == "ws":
            continue
        if kind == "decimal":
            raise ParseError("decimal literals are not allowed; write p/q", line, col, m.group(),
                             {"integer", "p/q"})
        if kind == "bad":
            raise ParseError("unexpected character", line, col, m.group())
        if kind == "arrow":
            kind = "punct"
        out.append(Token(kind, m.group(), line, col))
    out.append(Token("end", "", line, len(text.rstrip()) + 1))
    return out


class _Cursor:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "end":
            self.pos += 1
        return tok

    def fail(self, message: str, expected: Iterable[str] = ()) -> ParseError:
        tok = self.peek()
        return ParseError(message, tok.line, tok.column, tok.text or "<end of line>", set(expected))

    def punct(self, text: str) -> Token:
        tok = self.peek()
        if tok.kind != "punct" or tok.text != text:
            raise self.fail(f"expected {text!r}", {repr(text)})
        return self.next()

    def accept(self, text: str) -> bool:
        tok = self.peek()
        if tok.kind == "punct" and tok.text == text:
            self.next()
            return True
        return False

    def ident(self, what: str = "name") -> Token:
        tok = self.peek()
        if tok.kind != "ident":
            raise self.fail(f"expected a {what}", {what})
        return self.next()

    def end(self) -> None:
        if self.peek().kind != "end":
            raise self.fail("unexpected trailing input", {"end of line"})


def _rational(tok: Token) -> Fraction:
    num, _, den = tok.text.partition("/")
    if den and int(den) == 0:
        raise ParseError("zero denominator", tok.line, tok.column, tok.text)
    return Fraction(int(num), int(den) if den else 1)


def _parse_combo(cur: _Cursor, arity: int, allow_wedge: bool = True):
    """[sign] [rational] label (op label)* joined by '+' or '-'.

    Returns a list of (coefficient, labels, is_wedge, first_token). For
    arity 2 a term is ``a ^ b`` (wedge) or ``a * b`` (tensor).
    """
    terms = []
    sign = 1
    while True:
        if cur.accept("-"):
            sign = -sign
        coef = Fraction(sign)
        first = cur.peek()
        if first.kind == "rational":
            coef *= _rational(cur.next())
        labels = [cur.ident("label")]
        wedge = False
        if arity == 2:
            ops = {"^", "*"} if allow_wedge else {"*"}
            op = cur.peek()
            if op.kind != "punct" or op.text not in ops:
                raise cur.fail("expected a tensor operator", {repr(o) for o in ops})
            wedge = cur.next().text == "^"
            labels.append(cur.ident("label"))
        terms.append((coef, labels, wedge, first))
        if cur.accept("+"):
            sign = 1
        elif cur.accept("-"):
            sign = -1
        else:
            return terms


@dataclass(frozen=True)
class Step:
    """One ``run``/``expect`` line of a task: command, arguments, expected verdict."""

    command: str
    args: tuple[str, ...]
    expect_pass: bool = True
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Task:
    name: str
    steps: tuple[Step, ...]


@dataclass(frozen=True)
class Section:
    kind: str
    name: str
    refs: tuple[tuple[str, str], ...]
    value: object
    line: int = field(default=0, compare=False)

    def ref(self, keyword: str) -> str | None:
        return next((n for k, n in self.refs if k == keyword), None)


@dataclass(frozen=True)
class WorkspaceDocument:
    sections: tuple[Section, ...] = ()

    @property
    def symbols(self) -> dict[str, object]:
        return {s.name: s.value for s in self.sections}

    def section(self, name: str) -> Section:
        for s in self.sections:
            if s.name == name:
                return s
        raise KeyError(name)

    def get(self, name: str) -> object:
        return self.section(name).value

    def of_kind(self, kind: str) -> list[Section]:
        return [s for s in self.sections if s.kind == kind]

    def algebra_of(self, name: str) -> LieAlgebra:
        """The algebra behind an algebra or form section."""
        v = self.get(name)
        return v.algebra if isinstance(v, SkewForm) else v

    def canonical(self) -> WorkspaceDocument:
        return WorkspaceDocument(tuple(sorted(self.sections, key=_section_key)))


def _section_key(s: Section):
    return (KINDS.index(s.kind), s.name)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

class _Builder:
    """Accumulates the body lines of one section."""

    def __init__(self, doc: dict, kind: str, name: str, refs, header: Token):
        self.doc = doc
        self.kind = kind
        self.name = name
        self.refs = tuple(refs)
        self.header = header
        self.values: dict = {}
        self.seen: dict = {}
        self.basis: tuple[str, ...] | None = None
        self.steps: list[Step] = []
        ref = dict(self.refs)
        if kind in ("form", "cobracket", "rmatrix"):
            self.algebra = doc[ref["on"]][1]
        if kind == "rep":
            self.source = doc[ref["of"]][1]
            self.target = _algebra(doc[ref["on"]][1])
        if kind == "morphism":
            self.source = _algebra(doc[ref["of"]][1])
            self.target = _algebra(doc[ref["on"]][1])

    # -- helpers ----------------------------------------------------------
    @staticmethod
    def _index(alg: LieAlgebra, tok: Token) -> int:
        try:
            return alg.index(tok.text)
        except ValueError:
            raise UnresolvedReference(f"{tok.text!r} is not a basis label of {alg.name}",
                                      tok.line, tok.column, tok.text) from None

    def _once(self, key, tok: Token, what: str) -> None:
        if key in self.seen:
            raise DuplicateName(f"{what} already given on line {self.seen[key]}",
                                tok.line, tok.column, tok.text)
        self.seen[key] = tok.line

    def _skew_put(self, i: int, j: int, k, v: Fraction, tok: Token, what: str) -> None:
        """Store v at (i, j[, k]) and -v at the swapped position, rejecting conflicts."""
        if i == j:
            if v:
                raise AntisymmetryConflict(f"{what} of an element with itself must vanish",
                                           tok.line, tok.column, tok.text)
            return
        for key, val in ((i, j, k), v), ((j, i, k), -v):
            old = self.values.get(key)
            if old is not None and old != val:
                raise AntisymmetryConflict(f"{what} contradicts the reversed pair given earlier",
                                           tok.line, tok.column, tok.text)
            self.values[key] = val

    # -- body lines -------------------------------------------------------
    def line(self, cur: _Cursor) -> None:
        kw = cur.peek()
        allowed = BODY_KEYWORDS[self.kind]
        if kw.kind != "ident" or kw.text not in allowed:
            raise cur.fail(f"not a valid line in a {self.kind} section", set(allowed))
        cur.next()
        getattr(self, f"_{kw.text}")(cur, kw)
        cur.end()

    def _basis(self, cur: _Cursor, kw: Token) -> None:
        if self.basis is not None:
            raise DuplicateName("basis already declared", kw.line, kw.column, kw.text)
        labels = []
        while cur.peek().kind == "ident":
            tok = cur.next()
            if tok.text in labels:
                raise DuplicateName(f"basis label {tok.text!r} repeated", tok.line, tok.column, tok.text)
            labels.append(tok.text)
        if not labels:
            raise cur.fail("basis needs at least one label", {"label"})
        self.basis = tuple(labels)
        self.algebra = LieAlgebra(self.name, self.basis, Tensor3.zeros(len(labels)))

    def _bracket(self, cur: _Cursor, kw: Token) -> None:
        if self.basis is None:
            raise ParseError("bracket before basis", kw.line, kw.column, kw.text, {"basis"})
        a, b = cur.ident("label"), cur.ident("label")
        i, j = self._index(self.algebra, a), self._index(self.algebra, b)
        self._once(("bracket", i, j), a, f"bracket [{a.text}, {b.text}]")
        cur.punct("=")
        combo = [0] * self.algebra.dim
        for coef, (lab,), _, _ in _parse_combo(cur, 1):
            combo[self._index(self.algebra, lab)] += coef
        for k, v in enumerate(combo):
            self._skew_put(i, j, k, Fraction(v), a, f"bracket [{a.text}, {b.text}]")

    def _entry(self, cur: _Cursor, kw: Token) -> None:
        a, b = cur.ident("label"), cur.ident("label")
        i, j = self._index(self.algebra, a), self._index(self.algebra, b)
        self._once(("entry", i, j), a, f"entry ({a.text}, {b.text})")
        cur.punct("=")
        neg = cur.accept("-")
        tok = cur.peek()
        if tok.kind != "rational":
            raise cur.fail("expected a rational", {"rational"})
        v = _rational(cur.next())
        self._skew_put(i, j, None, -v if neg else v, a, f"entry ({a.text}, {b.text})")

    def _gamma(self, cur: _Cursor, kw: Token) -> None:
        x = cur.ident("label")
        i = self._index(self.algebra, x)
        self._once(("gamma", i), x, f"gamma({x.text})")
        cur.punct("=")
        for coef, (la, lb), wedge, _ in _parse_combo(cur, 2):
            j, k = self._index(self.algebra, la), self._index(self.algebra, lb)
            self.values[i, j, k] = self.values.get((i, j, k), 0) + coef
            if wedge:
                self.values[i, k, j] = self.values.get((i, k, j), 0) - coef

    def _r(self, cur: _Cursor, kw: Token) -> None:
        self._once("r", kw, "r")
        cur.punct("=")
        for coef, (la, lb), wedge, _ in _parse_combo(cur, 2):
            j, k = self._index(self.algebra, la), self._index(self.algebra, lb)
            self.values[j, k] = self.values.get((j, k), 0) + coef
            if wedge:
                self.values[k, j] = self.values.get((k, j), 0) - coef

    def _act(self, cur: _Cursor, kw: Token) -> None:
        x = cur.ident("label")
        i = self._index(self.source, x)
        cur.punct(":")
        u = cur.ident("label")
        j = self._index(self.target, u)
        self._once(("act", i, j), x, f"action of {x.text} on {u.text}")
        cur.punct("->")
        for coef, (lab,), _, _ in _parse_combo(cur, 1):
            k = self._index(self.target, lab)
            self.values[i, k, j] = self.values.get((i, k, j), 0) + coef

    def _map(self, cur: _Cursor, kw: Token) -> None:
        u = cur.ident("label")
        j = self._index(self.source, u)
        self._once(("map", j), u, f"image of {u.text}")
        cur.punct("->")
        for coef, (lab,), _, _ in _parse_combo(cur, 1):
            k = self._index(self.target, lab)
            self.values[k, j] = self.values.get((k, j), 0) + coef

    def _run(self, cur: _Cursor, kw: Token, expect_pass: bool = True) -> None:
        cmd = cur.peek()
        if cmd.kind != "ident" or cmd.text not in COMMANDS:
            raise cur.fail("unknown command", set(COMMANDS))
        cur.next()
        args = []
        while cur.peek().kind == "ident":
            tok = cur.next()
            if tok.text not in self.doc:
                raise UnresolvedReference(f"no section named {tok.text!r}",
                                          tok.line, tok.column, tok.text)
            args.append(tok.text)
        self.steps.append(Step(cmd.text, tuple(args), expect_pass, kw.line))

    def _expect(self, cur: _Cursor, kw: Token) -> None:
        tok = cur.peek()
        if tok.kind != "ident" or tok.text not in ("pass", "fail"):
            raise cur.fail("expected a verdict", {"pass", "fail"})
        cur.next()
        self._run(cur, kw, tok.text == "pass")

    # -- finishing --------------------------------------------------------
    def finish(self) -> Section:
        value = getattr(self, f"_finish_{self.kind}")()
        return Section(self.kind, self.name, self.refs, value, self.header.line)

    def _finish_algebra(self):
        if self.basis is None:
            h = self.header
            raise ParseError(f"algebra {self.name!r} has no basis line", h.line, h.column,
                             h.text, {"basis"})
        n = self.algebra.dim
        return LieAlgebra(self.name, self.basis, Tensor3.from_dict((n, n, n), self.values))

    def _matrix(self, rows: int, cols: int) -> Matrix:
        return Matrix.from_function(rows, cols, lambda i, j: self.values.get((i, j), 0))

    def _finish_form(self):
        values = {(i, j): v for (i, j, _), v in self.values.items()}
        n = self.algebra.dim
        return SkewForm(self.algebra, Matrix.from_function(n, n, lambda i, j: values.get((i, j), 0)))

    def _finish_cobracket(self):
        n = self.algebra.dim
        return Cobracket(self.algebra, Tensor3.from_dict((n, n, n), self.values))

    def _finish_rmatrix(self):
        n = self.algebra.dim
        return RMatrix(self.algebra, self._matrix(n, n))

    def _finish_rep(self):
        n, m = self.source.dim, self.target.dim
        return Representation(self.source, m, tuple(
            Matrix.from_function(m, m, lambda k, j, i=i: self.values.get((i, k, j), 0))
            for i in range(n)))

    def _finish_morphism(self):
        return self._matrix(self.target.dim, self.source.dim)

    def _finish_task(self):
        return Task(self.name, tuple(self.steps))


def _algebra(value) -> LieAlgebra:
    return value.algebra if isinstance(value, SkewForm) else value


def _parse_header(cur: _Cursor, doc: dict) -> tuple[str, str, list, Token]:
    cur.punct("[")
    kind_tok = cur.peek()
    if kind_tok.kind != "ident" or kind_tok.text not in KINDS:
        raise cur.fail("unknown section kind", set(KINDS))
    kind = cur.next().text
    name_tok = cur.ident("name")
    if name_tok.text in doc:
        raise DuplicateName(f"name {name_tok.text!r} already used on line {doc[name_tok.text][2]}",
                            name_tok.line, name_tok.column, name_tok.text)
    wanted = HEADER_REFS[kind]
    refs = []
    for keyword, kinds in wanted:
        kw = cur.peek()
        if kw.kind != "ident" or kw.text != keyword:
            raise cur.fail(f"{kind} section needs '{keyword} <name>'", {keyword})
        cur.next()
        target = cur.ident("name")
        if target.text not in doc:
            raise UnresolvedReference(f"no earlier section named {target.text!r}",
                                      target.line, target.column, target.text)
        if doc[target.text][0] not in kinds:
            raise UnresolvedReference(
                f"{target.text!r} is a {doc[target.text][0]}, expected {' or '.join(kinds)}",
                target.line, target.column, target.text)
        refs.append((keyword, target.text))
    cur.punct("]")
    cur.end()
    return kind, name_tok.text, refs, name_tok


def parse_workspace(text: str) -> WorkspaceDocument:
    """Parse and fully resolve a workspace; raises a WorkspaceError subclass on bad input."""
    doc: dict[str, tuple] = {}          # name -> (kind, value, line)
    sections: list[Section] = []
    builder: _Builder | None = None

    def close():
        if builder is not None:
            s = builder.finish()
            sections.append(s)
            doc[s.name] = (s.kind, s.value, s.line)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = tokenize_line(raw, lineno)
        if tokens[0].kind == "end":
            continue
        cur = _Cursor(tokens)
        if tokens[0].kind == "punct" and tokens[0].text == "[":
            close()
            builder = None
            kind, name, refs, tok = _parse_header(cur, doc)
            builder = _Builder(doc, kind, name, refs, tok)
        elif builder is None:
            raise cur.fail("content before the first section header", {"'['"})
        else:
            builder.line(cur)
    close()
    return WorkspaceDocument(tuple(sections))


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_combo(terms: Iterable[tuple[Fraction, str]]) -> str:
    """Terms (coefficient, rendered label) sorted by label; unit coefficients omitted."""
    parts = []
    for coef, label in sorted(((c, l) for c, l in terms if c), key=lambda t: t[1]):
        mag = abs(coef)
        body = label if mag == 1 else f"{format_rational(mag)} {label}"
        if not parts:
            parts.append(body if coef > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if coef > 0 else '-'} {body}")
    return " ".join(parts)


def _header(kind: str, name: str, refs=()) -> str:
    return "[" + " ".join([kind, name] + [f"{k} {n}" for k, n in refs]) + "]"


def _algebra_lines(g: LieAlgebra) -> list[str]:
    lines = [_header("algebra", g.name), "basis " + " ".join(g.basis)]
    for i, j, v in g.relations():
        combo = format_combo((c, g.basis[k]) for k, c in enumerate(v))
        lines.append(f"bracket {g.basis[i]} {g.basis[j]} = {combo}")
    return lines


def _form_lines(name: str, beta: SkewForm, on: str | None = None) -> list[str]:
    g = beta.algebra
    lines = [_header("form", name, [("on", on or g.name)])]
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            v = beta.gram[i, j]
            if v:
                lines.append(f"entry {g.basis[i]} {g.basis[j]} = {format_rational(v)}")
    return lines


def _tensor_combo(basis, m: Matrix) -> str:
    """A 2-tensor as wedges if it is skew, otherwise as elementary tensors."""
    n = m.rows
    if m.T == -m:
        return format_combo((m[j, k], f"{basis[j]} ^ {basis[k]}")
                            for j in range(n) for k in range(j + 1, n))
    return format_combo((m[j, k], f"{basis[j]} * {basis[k]}") for j in range(n) for k in range(n))


def _cobracket_lines(name: str, gamma: Cobracket, on: str | None = None) -> list[str]:
    g = gamma.algebra
    lines = [_header("cobracket", name, [("on", on or g.name)])]
    for i in range(g.dim):
        img = gamma.image(i)
        if not img.is_zero():
            lines.append(f"gamma {g.basis[i]} = {_tensor_combo(g.basis, img)}")
    return lines


def _rmatrix_lines(name: str, r: RMatrix, on: str | None = None) -> list[str]:
    g = r.algebra
    lines = [_header("rmatrix", name, [("on", on or g.name)])]
    if not r.r.is_zero():
        lines.append(f"r = {_tensor_combo(g.basis, r.r)}")
    return lines


def _rep_lines(name: str, rho: Representation, source: str, target: str,
               target_basis: tuple[str, ...]) -> list[str]:
    g = rho.source
    lines = [_header("rep", name, [("of", source), ("on", target)])]
    for i, m in enumerate(rho.matrices):
        for j in range(rho.dim):
            col = m.column(j)
            if any(col):
                combo = format_combo((c, target_basis[k]) for k, c in enumerate(col))
                lines.append(f"act {g.basis[i]} : {target_basis[j]} -> {combo}")
    return lines


def _morphism_lines(name: str, phi: Matrix, source: str, target: str,
                    source_basis, target_basis) -> list[str]:
    lines = [_header("morphism", name, [("of", source), ("on", target)])]
    for j in range(phi.cols):
        col = phi.column(j)
        if any(col):
            combo = format_combo((c, target_basis[k]) for k, c in enumerate(col))
            lines.append(f"map {source_basis[j]} -> {combo}")
    return lines


def _task_lines(task: Task) -> list[str]:
    lines = [_header("task", task.name)]
    for s in task.steps:
        head = "run" if s.expect_pass else "expect fail"
        lines.append(" ".join([head, s.command, *s.args]))
    return lines


def _section_lines(s: Section, doc: WorkspaceDocument) -> list[str]:
    v = s.value
    if s.kind == "algebra":
        return _algebra_lines(v)
    if s.kind == "form":
        return _form_lines(s.name, v, s.ref("on"))
    if s.kind == "cobracket":
        return _cobracket_lines(s.name, v, s.ref("on"))
    if s.kind == "rmatrix":
        return _rmatrix_lines(s.name, v, s.ref("on"))
    if s.kind == "rep":
        target = s.ref("on")
        return _rep_lines(s.name, v, s.ref("of"), target, doc.algebra_of(target).basis)
    if s.kind == "morphism":
        src, dst = s.ref("of"), s.ref("on")
        return _morphism_lines(s.name, v, src, dst, doc.algebra_of(src).basis,
                               doc.algebra_of(dst).basis)
    return _task_lines(v)


def _join(blocks: Iterable[list[str]]) -> str:
    return "\n\n".join("\n".join(b) for b in blocks) + "\n"


def _iter_blocks(doc: WorkspaceDocument) -> Iterator[list[str]]:
    for s in sorted(doc.sections, key=_section_key):
        yield _section_lines(s, doc)


def serialize(obj, name: str | None = None) -> str:
    """Canonical text for a document or a single structure.

    Documents are written with sections ordered by kind, then name.
    A double is written as its total algebra, its cobracket and its
    canonical r-matrix. Output of ``serialize(doc)`` parses back to the
    same objects.
    """
    if isinstance(obj, WorkspaceDocument):
        return _join(_iter_blocks(obj)) if obj.sections else ""
    if isinstance(obj, LieAlgebra):
        return _join([_algebra_lines(obj)])
    if isinstance(obj, SkewForm):
        return _join([_form_lines(name or "beta", obj)])
    if isinstance(obj, Cobracket):
        return _join([_cobracket_lines(name or "gamma", obj)])
    if isinstance(obj, RMatrix):
        return _join([_rmatrix_lines(name or "r", obj)])
    if isinstance(obj, Task):
        return _join([_task_lines(obj)])
    if isinstance(obj, DoubleAlgebra):
        total = obj.total
        return _join([_algebra_lines(total),
                      _cobracket_lines(f"gamma_{total.name}", obj.cobracket),
                      _rmatrix_lines(f"r_{total.name}", obj.canonical_r)])
    raise TypeError(f"cannot serialize {type(obj).__name__} on its own")


def document(*sections: tuple) -> WorkspaceDocument:
    """Assemble a document from (kind, name, refs, value) tuples."""
    return WorkspaceDocument(tuple(Section(k, n, tuple(r), v) for k, n, r, v in sections))
