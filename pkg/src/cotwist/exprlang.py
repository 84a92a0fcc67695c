"""A small language for wiring expressions.

    expr := term ("o" term)*        composition, rightmost factor applied first
    term := atom ("x" atom)*        tensor product
    atom := NAME | "(" expr ")"

Names look like ``H.delta``, ``tau^-1``, ``sigma'`` or ``swap[C,H]``;
bracketed arguments are space names.  Expressions elaborate to LinMaps against an Env, so an
identity such as coassociativity is written

    (C.delta x id[C]) o C.delta == (id[C] x C.delta) o C.delta
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .errors import FormatError, ParseError, SNotBijective, SpaceMismatch, UnknownName
from .linmap import LinMap, Space, chain, ground, identity, kronecker, swap_map, tensor_space
from .report import CheckReport

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_.]*(?:\^-?[0-9]+)?'*(?:\[[^\]\[]*\])?)"
                    r"|(?P<punct>[()])|(?P<bad>\S))")
_OPS = {"o", "x"}


@dataclass(frozen=True)
class Generator:
    name: str

    @property
    def base(self) -> str:
        return self.name.split("[", 1)[0]

    @property
    def args(self) -> tuple[str, ...]:
        if "[" not in self.name:
            return ()
        inner = self.name[self.name.index("[") + 1:-1]
        return tuple(a.strip() for a in inner.split(",") if a.strip())


@dataclass(frozen=True)
class Compose:
    parts: tuple


@dataclass(frozen=True)
class Tensor:
    parts: tuple


Expr = Generator | Compose | Tensor


def _tokens(src: str):
    """Yield (kind, text, byte offset); kind is 'name', 'o', 'x', '(' or ')'."""
    pos = 0
    raw = src.encode("utf-8")
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            break
        if m.group("bad") is not None:
            start = m.start("bad")
            raise ParseError(f"unexpected character {m.group('bad')!r}",
                             len(src[:start].encode("utf-8")))
        kind = m.lastgroup
        text = m.group(kind)
        start = m.start(kind)
        offset = len(src[:start].encode("utf-8"))
        if kind == "name" and text in _OPS:
            yield text, text, offset
        elif kind == "name":
            # normalize whitespace inside brackets
            yield "name", re.sub(r"\s+", "", text), offset
        else:
            yield text, text, offset
        pos = m.end()
    yield "end", "", len(raw)


class _Parser:
    def __init__(self, src: str):
        self.toks = list(_tokens(src))
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind: str):
        tok = self.peek()
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            want = "end of input" if kind == "end" else repr(kind)
            raise ParseError(f"expected {want}, found {what}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> Expr:
        parts = [self.term()]
        while self.peek()[0] == "o":
            self.i += 1
            parts.append(self.term())
        return parts[0] if len(parts) == 1 else Compose(tuple(parts))

    def term(self) -> Expr:
        parts = [self.atom()]
        while self.peek()[0] == "x":
            self.i += 1
            parts.append(self.atom())
        return parts[0] if len(parts) == 1 else Tensor(tuple(parts))

    def atom(self) -> Expr:
        kind, text, offset = self.peek()
        if kind == "name":
            self.i += 1
            return Generator(text)
        if kind == "(":
            self.i += 1
            e = self.expr()
            self.take(")")
            return e
        what = "end of input" if kind == "end" else repr(text)
        raise ParseError(f"expected a name or '(', found {what}", offset)


def parse(src: str) -> Expr:
    p = _Parser(src)
    e = p.expr()
    p.take("end")
    return e


def pretty(e: Expr) -> str:
    if isinstance(e, Generator):
        return e.name
    if isinstance(e, Tensor):
        return " x ".join(f"({pretty(p)})" if isinstance(p, Compose) else pretty(p)
                          for p in e.parts)
    return " o ".join(f"({pretty(p)})" if isinstance(p, Compose) else pretty(p)
                      for p in e.parts)


# ---------------------------------------------------------------- environments


class Env:
    """Generator names -> maps, plus named spaces for id[..], swap[..,..], unit/eps[..]."""

    def __init__(self, maps: dict[str, LinMap] | None = None,
                 spaces: dict[str, Space] | None = None):
        self.maps = dict(maps or {})
        self.spaces = dict(spaces or {})
        fields = {m.dom.field for m in self.maps.values()} | {s.field for s in self.spaces.values()}
        if len(fields) > 1:
            raise SpaceMismatch("environment mixes fields")
        if fields and "k" not in self.spaces:
            self.spaces["k"] = ground(fields.pop())

    def bind(self, name: str, m: LinMap) -> Env:
        out = Env(self.maps, self.spaces)
        out.maps[name] = m
        return out

    def merged(self, other: Env, prefix: str = "") -> Env:
        """Add the maps and spaces of ``other``, renamed to ``prefix.name`` if a prefix is given."""
        rename = (lambda n: f"{prefix}.{n}") if prefix else (lambda n: n)  # noqa: E731
        maps = dict(self.maps)
        spaces = dict(self.spaces)
        for n, m in other.maps.items():
            key = rename(n)
            if key in maps and maps[key] != m:
                raise SpaceMismatch(f"generator {key} bound twice with different maps")
            maps[key] = m
        for n, sp in other.spaces.items():
            if n != "k":
                spaces[rename(n)] = sp
        return Env(maps, spaces)

    def space(self, spec: str) -> Space:
        # "C*H" style products are written with "*" inside brackets
        names = spec.split("*")
        try:
            return tensor_space(*(self.spaces[n] for n in names))
        except KeyError as exc:
            raise UnknownName(f"unknown space {exc.args[0]!r}; known: "
                              f"{', '.join(sorted(self.spaces))}") from None

    def lookup(self, g: Generator) -> LinMap:
        if g.name in self.maps:
            return self.maps[g.name]
        args = g.args
        if g.base == "id" and len(args) == 1:
            return identity(self.space(args[0]))
        if g.base == "swap" and len(args) == 2:
            return swap_map(self.space(args[0]), self.space(args[1]))
        if g.base in ("unit", "eps") and len(args) == 1 and f"{args[0]}.{g.base}" in self.maps:
            return self.maps[f"{args[0]}.{g.base}"]
        raise UnknownName(f"unknown generator {g.name!r}")

    @classmethod
    def for_module_coalgebra(cls, mc, **extra: LinMap) -> Env:
        """H.*, C.* and any extra maps (tau, v, ...) for a module coalgebra."""
        h = mc.hopf
        maps = {"H.mult": h.mult, "H.unit": h.unit, "H.delta": h.delta, "H.eps": h.eps,
                "H.S": h.S, "C.delta": mc.delta, "C.eps": mc.eps, "C.act": mc.act}
        try:
            maps["H.Sbar"] = h.Sbar
        except SNotBijective:
            pass
        maps.update(extra)
        return cls(maps, {"H": h.space, "C": mc.space})


def elaborate(e: Expr, env: Env) -> LinMap:
    if isinstance(e, Generator):
        return env.lookup(e)
    parts = [elaborate(p, env) for p in e.parts]
    if isinstance(e, Tensor):
        return kronecker(*parts)
    out = parts[-1]
    for sub, f in zip(reversed(e.parts[:-1]), reversed(parts[:-1])):
        if f.dom != out.cod:
            raise SpaceMismatch(f"cannot compose {pretty(sub)} (domain {f.dom.name}) after a map "
                                f"into {out.cod.name}")
        out = chain(f, out)
    return out


def check_equation(lhs: str, rhs: str, env: Env, name: str | None = None) -> CheckReport:
    left, right = elaborate(parse(lhs), env), elaborate(parse(rhs), env)
    rep = CheckReport()
    label = name or f"{lhs.strip()} == {rhs.strip()}"
    if left.dom != right.dom or left.cod != right.cod:
        rep.record(label, False, f"sides have different types: {left.dom.name} -> "
                   f"{left.cod.name} vs {right.dom.name} -> {right.cod.name}")
        return rep
    rep.equal(label, left, right)
    return rep


def read_equations(text: str) -> list[tuple[int, str, str]]:
    """Parse an equation file into (line number, lhs, rhs) triples."""
    out = []
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.count("==") != 1:
            raise FormatError(f"line {n}: expected exactly one '=='")
        lhs, rhs = line.split("==")
        out.append((n, lhs.strip(), rhs.strip()))
    return out


def _column(raw: str, side: str, before: int, offset: int) -> int:
    """1-based byte column in ``raw`` of byte ``offset`` within ``side``."""
    start = raw.index(side, before) if side else before
    return len(raw[:start].encode("utf-8")) + offset + 1


def check_equation_file(path: str | Path, env: Env) -> CheckReport:
    text = Path(path).read_text(encoding="utf-8")
    lines = text.splitlines()
    rep = CheckReport(f"equations in {Path(path).name}")
    for n, lhs, rhs in read_equations(text):
        raw = lines[n - 1]
        for side, before in ((lhs, 0), (rhs, raw.index("==") + 2)):
            try:
                parse(side)
            except ParseError as exc:
                col = _column(raw, side, before, exc.offset)
                raise FormatError(f"line {n}, column {col}: {exc.message}") from exc
        rep.extend(check_equation(lhs, rhs, env), f"line {n}: ")
    return rep
