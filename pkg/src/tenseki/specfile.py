"""The line-oriented ``.alg`` format.

::

    # comments run to end of line
    algebra B2
    profile heyting
    elements 0 1
    leq 0<=1
    const c 0
    op1 neg 1 0
    op2 imp
    1 1
    0 1

``op2`` is followed by one row per element (row = left argument, in
``elements`` order).  The inline form ``op2 imp: 1 1 ; 0 1`` is also
accepted.  Emission is canonical: fixed section order, single spaces, LF.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import KI_PROFILES, PROFILES, AlgebraInstance
from .errors import ParseError, ResolveError, ShapeError
from .lattice import build_lattice

KEYWORDS = ("algebra", "profile", "elements", "leq", "const", "op1", "op2")


@dataclass(frozen=True)
class SpecDocument:
    name: str
    profile: str
    elements: tuple
    leq: tuple = ()
    consts: tuple = ()   # (symbol, element)
    unary: tuple = ()    # (symbol, (element, ...))
    binary: tuple = ()   # (symbol, ((element, ...), ...))


def _tokens(line):
    """(column, token) pairs; columns are 1-based."""
    out, i = [], 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        start = i
        while i < len(line) and not line[i].isspace():
            i += 1
        out.append((start + 1, line[start:i]))
    return out


def parse_spec(text: str) -> SpecDocument:
    name = profile = None
    elements = None
    known = set()
    leq, consts, unary, binary = [], [], [], []
    pending = None  # (symbol, rows collected, line number of the op2 header)

    def resolve(tok, lineno, col):
        if elements is None:
            raise ParseError("elements must be declared before use", lineno, col, {"elements"})
        if tok not in known:
            raise ResolveError(tok, lineno, col)
        return tok

    def row(toks, lineno):
        if len(toks) != len(elements):
            col = toks[0][0] if toks else 1
            raise ShapeError(
                f"row {len(pending[1]) + 1} of {pending[0]!r} has {len(toks)} entries, expected {len(elements)}",
                lineno, col)
        pending[1].append(tuple(resolve(t, lineno, c) for c, t in toks))

    def flush(lineno):
        nonlocal pending
        if pending is None:
            return
        sym, rows, start = pending
        if len(rows) != len(elements):
            raise ShapeError(f"{sym!r} has {len(rows)} rows, expected {len(elements)}", lineno, 1)
        binary.append((sym, tuple(rows)))
        pending = None

    lines = text.split("\n")
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].rstrip("\r")
        toks = _tokens(line)
        if not toks:
            continue
        col, head = toks[0]
        if head not in KEYWORDS:
            if pending is not None:
                row(toks, lineno)
                if len(pending[1]) == len(elements):
                    flush(lineno)
                continue
            raise ParseError(f"unexpected token {head!r}", lineno, col, KEYWORDS)
        flush(lineno)
        args = toks[1:]
        if head == "algebra":
            if name is not None:
                raise ParseError("duplicate algebra line", lineno, col)
            if len(args) != 1:
                raise ParseError("algebra takes exactly one name", lineno, col, {"<name>"})
            name = args[0][1]
        elif head == "profile":
            if len(args) != 1 or args[0][1] not in PROFILES:
                c = args[0][0] if args else col
                raise ParseError("unknown or missing profile", lineno, c, PROFILES)
            profile = args[0][1]
        elif head == "elements":
            if elements is not None:
                raise ParseError("duplicate elements line", lineno, col)
            elements = tuple(t for _, t in args)
            if not elements:
                raise ParseError("no elements declared", lineno, col, {"<element>"})
            if len(set(elements)) != len(elements):
                raise ParseError("duplicate element name", lineno, col)
            known = set(elements)
        elif head == "leq":
            for c, t in args:
                if "<=" not in t:
                    raise ParseError(f"malformed order pair {t!r}", lineno, c, {"<a><=<b>"})
                a, b = t.split("<=", 1)
                leq.append((resolve(a, lineno, c), resolve(b, lineno, c + len(a) + 2)))
        elif head == "const":
            if len(args) != 2:
                raise ParseError("const takes a symbol and an element", lineno, col, {"<symbol> <element>"})
            consts.append((args[0][1], resolve(args[1][1], lineno, args[1][0])))
        elif head in ("op1", "op2"):
            if not args:
                raise ParseError(f"{head} needs a symbol", lineno, col, {"<symbol>"})
            sym = args[0][1].rstrip(":")
            rest = args[1:]
            if args[0][1].endswith(":") is False and rest and rest[0][1] == ":":
                rest = rest[1:]
            if not sym:
                raise ParseError("empty operation symbol", lineno, args[0][0], {"<symbol>"})
            if head == "op1":
                if elements is None:
                    raise ParseError("elements must be declared before use", lineno, col, {"elements"})
                if len(rest) != len(elements):
                    raise ShapeError(f"{sym!r} has {len(rest)} entries, expected {len(elements)}", lineno, col)
                unary.append((sym, tuple(resolve(t, lineno, c) for c, t in rest)))
            else:
                if elements is None:
                    raise ParseError("elements must be declared before use", lineno, col, {"elements"})
                pending = (sym, [], lineno)
                if rest:
                    chunk = []
                    for c, t in rest + [(None, ";")]:
                        if t == ";":
                            row(chunk, lineno)
                            chunk = []
                        else:
                            chunk.append((c, t))
                    flush(lineno)
    if pending is not None:
        flush(len(lines))
    if name is None:
        raise ParseError("missing algebra line", 1, 1, {"algebra"})
    if elements is None:
        raise ParseError("missing elements line", 1, 1, {"elements"})
    return SpecDocument(name, profile or "dl", elements, tuple(leq), tuple(consts), tuple(unary), tuple(binary))


def emit_spec(doc: SpecDocument) -> str:
    out = [f"algebra {doc.name}", f"profile {doc.profile}", "elements " + " ".join(doc.elements)]
    if doc.leq:
        out.append("leq " + " ".join(f"{a}<={b}" for a, b in doc.leq))
    for sym, e in doc.consts:
        out.append(f"const {sym} {e}")
    for sym, row in doc.unary:
        out.append(f"op1 {sym} " + " ".join(row))
    for sym, rows in doc.binary:
        out.append(f"op2 {sym}")
        out.extend(" ".join(r) for r in rows)
    return "\n".join(out) + "\n"


def to_instance(doc: SpecDocument) -> AlgebraInstance:
    if doc.profile in KI_PROFILES:
        derived = [s for s, _ in doc.unary if s in ("F", "P")]
        if derived:
            raise ParseError(f"{derived} are derived on KI profiles and may not be given")
    lattice = build_lattice(doc.elements, doc.leq)
    idx = {e: i for i, e in enumerate(doc.elements)}
    ops = {}
    for sym, e in doc.consts:
        ops[sym] = idx[e]
    for sym, row in doc.unary:
        ops[sym] = [idx[e] for e in row]
    for sym, rows in doc.binary:
        ops[sym] = [[idx[e] for e in r] for r in rows]
    return AlgebraInstance(lattice, ops, doc.profile, doc.name)


def from_instance(alg: AlgebraInstance) -> SpecDocument:
    names = alg.names
    leq = tuple((names[a], names[b]) for a, b in alg.lattice.covers())
    consts, unary, binary = [], [], []
    for sym, t in alg.ops.items():
        if t.ndim == 0:
            consts.append((sym, names[int(t)]))
        elif t.ndim == 1:
            unary.append((sym, tuple(names[v] for v in t)))
        else:
            binary.append((sym, tuple(tuple(names[v] for v in r) for r in np.asarray(t))))
    name = "".join(ch for ch in alg.name if not ch.isspace() and ch != "#") or "A"
    return SpecDocument(name, alg.profile, tuple(names), leq, tuple(consts), tuple(unary), tuple(binary))


def load(path) -> AlgebraInstance:
    with open(path, encoding="utf-8") as fh:
        return to_instance(parse_spec(fh.read()))


def dump(alg: AlgebraInstance) -> str:
    return emit_spec(from_instance(alg))
