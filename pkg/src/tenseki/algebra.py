"""Algebra instances, axiom reports, homomorphisms, isomorphism search and
Galois adjoints on finite lattices."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import MissingOperation, SignatureMismatch
from .lattice import FiniteLattice

# Profile identifiers and the operation symbols each one requires.
_DLI = ("imp",)
_TDLI = ("imp", "G", "H", "F", "P")
_KI = ("imp", "neg", "c")
_TKI = ("imp", "neg", "c", "G", "H")

PROFILE_SYMBOLS: dict[str, tuple[str, ...]] = {
    "dl": (),
    "dli": _DLI,
    "dli+": _DLI,
    "dli1+": _DLI,
    "heyting": _DLI,
    "tdli": _TDLI,
    "tdli0": _TDLI,
    "tdli01": _TDLI,
    "theyting": _TDLI,
    "kleene": ("neg",),
    "ckleene": ("neg", "c"),
    "ki": _KI,
    "nelson-itkic1": _KI,
    "tki": _TKI,
    "tkic": _TKI,
    "itkic1": _TKI,
    "tnelson": _TKI,
}
PROFILES = tuple(PROFILE_SYMBOLS)
KI_PROFILES = frozenset(
    ["kleene", "ckleene", "ki", "nelson-itkic1", "tki", "tkic", "itkic1", "tnelson"]
)

# Arity of the reserved symbols; anything else takes the arity of its table.
SYMBOL_ARITY = {"imp": 2, "imp_ki": 2, "imp_fv": 2, "neg": 1, "c": 0, "G": 1, "H": 1, "F": 1, "P": 1}


def _table(entries, n, arity, symbol):
    t = np.array(entries, dtype=np.int64)
    if t.shape != (n,) * arity:
        raise ValueError(f"table for {symbol!r} has shape {t.shape}, expected {(n,) * arity}")
    if t.size and (t.min() < 0 or t.max() >= n):
        raise ValueError(f"table for {symbol!r} has an entry out of range 0..{n - 1}")
    t.setflags(write=False)
    return t


class AlgebraInstance:
    """A finite lattice with named operation tables and a declared profile.

    Tables are integer arrays whose number of dimensions is the arity of the
    operation: a 0-d array for a constant, a vector for a unary operation and
    an ``n x n`` matrix (row = left argument) for a binary one.
    """

    def __init__(self, lattice: FiniteLattice, ops: Mapping[str, object] | None = None,
                 profile: str = "dl", name: str = "A"):
        if profile not in PROFILE_SYMBOLS:
            raise ValueError(f"unknown profile {profile!r}")
        n = lattice.size
        tables = {}
        for sym, entries in (ops or {}).items():
            arity = SYMBOL_ARITY.get(sym, np.ndim(entries))
            tables[sym] = _table(entries, n, arity, sym)
        for sym in PROFILE_SYMBOLS[profile]:
            if sym not in tables:
                raise MissingOperation(sym, f"profile {profile!r} requires operation {sym!r}")
        if profile in KI_PROFILES:
            derived = sorted({"F", "P"} & set(tables))
            if derived:
                raise ValueError(f"{derived} are derived on profile {profile!r} and may not be given")
        self.lattice = lattice
        self.ops = tables
        self.profile = profile
        self.name = name

    @property
    def size(self):
        return self.lattice.size

    @property
    def names(self):
        return self.lattice.names

    def op(self, symbol):
        try:
            return self.ops[symbol]
        except KeyError:
            raise MissingOperation(symbol) from None

    def has(self, *symbols):
        return all(s in self.ops for s in symbols)

    def const(self, symbol):
        return int(self.op(symbol))

    def signature(self):
        return {s: t.ndim for s, t in self.ops.items()}

    def replace(self, ops=None, profile=None, name=None, drop=()):
        """Copy with some tables added/replaced or dropped."""
        new = {k: v for k, v in self.ops.items() if k not in drop}
        new.update(ops or {})
        return AlgebraInstance(self.lattice, new, profile or self.profile, name or self.name)

    def __eq__(self, other):
        if not isinstance(other, AlgebraInstance):
            return NotImplemented
        return (
            self.lattice == other.lattice
            and self.profile == other.profile
            and self.ops.keys() == other.ops.keys()
            and all(np.array_equal(self.ops[k], other.ops[k]) for k in self.ops)
        )

    def __hash__(self):
        return hash((self.lattice, self.profile, tuple(sorted(self.ops))))

    def __repr__(self):
        return f"AlgebraInstance({self.name!r}, size={self.size}, profile={self.profile!r}, ops={sorted(self.ops)})"


# -- axiom reports ---------------------------------------------------------


@dataclass(frozen=True)
class AxiomResult:
    id: str
    holds: bool
    witness: tuple | None = None


@dataclass
class AxiomReport:
    results: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def holds(self):
        return all(r.holds for r in self.results)

    @property
    def failed(self):
        return [r for r in self.results if not r.holds]

    @property
    def ids(self):
        return [r.id for r in self.results]

    def add(self, result):
        self.results.append(result)
        return result

    def extend(self, other):
        self.results.extend(other.results if isinstance(other, AxiomReport) else other)
        return self

    def __getitem__(self, axiom_id):
        for r in self.results:
            if r.id == axiom_id:
                return r
        raise KeyError(axiom_id)

    def __contains__(self, axiom_id):
        return any(r.id == axiom_id for r in self.results)

    def __iter__(self):
        return iter(self.results)

    def __len__(self):
        return len(self.results)

    def to_json(self, algebra: AlgebraInstance | None = None, profile=None):
        names = algebra.names if algebra is not None else None

        def render(w):
            if w is None:
                return None
            return [names[i] if names is not None and isinstance(i, (int, np.integer)) else i for i in w]

        return {
            "algebra": algebra.name if algebra is not None else None,
            "profile": profile or (algebra.profile if algebra is not None else None),
            "axioms": [{"id": r.id, "holds": r.holds, "witness": render(r.witness)} for r in self.results],
            "summary": {"checked": len(self.results), "failed": len(self.failed)},
        }


def check_grid(axiom_id, ok):
    """Turn a boolean array over an argument grid into an AxiomResult.

    The witness is the first failing argument tuple in lexicographic index
    order (numpy C order).
    """
    ok = np.asarray(ok, dtype=bool)
    if ok.all():
        return AxiomResult(axiom_id, True)
    if ok.ndim == 0:
        return AxiomResult(axiom_id, False, ())
    first = np.argwhere(~ok)[0]
    return AxiomResult(axiom_id, False, tuple(int(i) for i in first))


def grid(n, k):
    """Index arrays ``x0..x{k-1}`` broadcasting to an ``(n,)*k`` grid."""
    return np.ix_(*([np.arange(n)] * k)) if k > 1 else (np.arange(n),)


# -- morphisms -------------------------------------------------------------


@dataclass(frozen=True)
class Morphism:
    source: AlgebraInstance
    target: AlgebraInstance
    map: tuple
    preserved: tuple
    injective: bool
    surjective: bool

    def __call__(self, x):
        return self.map[x]

    @property
    def bijective(self):
        return self.injective and self.surjective


@dataclass(frozen=True)
class HomViolation:
    symbol: str
    args: tuple

    def __bool__(self):
        return False


def _check_signature(a, b):
    if a.signature() != b.signature():
        raise SignatureMismatch(f"signatures differ: {sorted(a.signature())} vs {sorted(b.signature())}")


def is_homomorphism(f: Sequence[int], a: AlgebraInstance, b: AlgebraInstance):
    """Return a certified :class:`Morphism` or the first :class:`HomViolation`.

    Lattice structure is checked first (``0``, ``1``, ``meet``, ``join``),
    then each named operation in the order the source stores them.
    """
    _check_signature(a, b)
    f = np.asarray(f, dtype=np.int64)
    if f.shape != (a.size,) or (f.size and (f.min() < 0 or f.max() >= b.size)):
        raise ValueError("element map must be total on the source and land in the target")
    la, lb = a.lattice, b.lattice
    if f[la.bot] != lb.bot:
        return HomViolation("0", ())
    if f[la.top] != lb.top:
        return HomViolation("1", ())
    checked = ["0", "1"]
    binaries = [("meet", la.meet, lb.meet), ("join", la.join, lb.join)]
    binaries += [(s, t, b.ops[s]) for s, t in a.ops.items() if t.ndim == 2]
    for sym, ta, tb in binaries:
        bad = np.argwhere(f[ta] != tb[f[:, None], f[None, :]])
        if len(bad):
            return HomViolation(sym, tuple(int(i) for i in bad[0]))
        checked.append(sym)
    for sym, ta in a.ops.items():
        tb = b.ops[sym]
        if ta.ndim == 1:
            bad = np.argwhere(f[ta] != tb[f])
            if len(bad):
                return HomViolation(sym, (int(bad[0][0]),))
        elif ta.ndim == 0:
            if f[int(ta)] != int(tb):
                return HomViolation(sym, ())
        else:
            continue
        checked.append(sym)
    image = set(f.tolist())
    return Morphism(
        a, b, tuple(int(x) for x in f), tuple(checked),
        injective=len(image) == a.size, surjective=len(image) == b.size,
    )


def identity_morphism(a: AlgebraInstance):
    return is_homomorphism(range(a.size), a, a)


def compose(g: Morphism, f: Morphism):
    """``g ∘ f``; recertified against f.source and g.target."""
    m = is_homomorphism([g.map[x] for x in f.map], f.source, g.target)
    if not m:
        raise ValueError(f"composite is not a homomorphism: {m}")
    return m


def find_isomorphism(a: AlgebraInstance, b: AlgebraInstance):
    """Lexicographically least isomorphism ``a -> b``, or None."""
    _check_signature(a, b)
    n = a.size
    if n != b.size:
        return None
    la, lb = np.asarray(a.lattice.leq), np.asarray(b.lattice.leq)
    # cheap invariants: sizes of principal down- and up-sets
    key_a = list(zip(la.sum(0), la.sum(1)))
    key_b = list(zip(lb.sum(0), lb.sum(1)))
    if sorted(key_a) != sorted(key_b):
        return None
    una = [(a.ops[s], b.ops[s]) for s in a.ops if a.ops[s].ndim == 1]
    bina = [(a.ops[s], b.ops[s]) for s in a.ops if a.ops[s].ndim == 2]
    consts = [(int(a.ops[s]), int(b.ops[s])) for s in a.ops if a.ops[s].ndim == 0]
    consts += [(a.lattice.bot, b.lattice.bot), (a.lattice.top, b.lattice.top)]
    fmap = [-1] * n
    used = [False] * n

    def consistent(i):
        y = fmap[i]
        for x, z in consts:
            if x <= i and fmap[x] != z:
                return False
            if x > i and y == z:  # z is reserved for x
                return False
        for k in range(i + 1):
            if la[i, k] != lb[y, fmap[k]] or la[k, i] != lb[fmap[k], y]:
                return False
        for ta, tb in una:
            for x in range(i + 1):
                r = ta[x]
                if r <= i and fmap[r] != tb[fmap[x]]:
                    return False
        for ta, tb in bina:
            # only new argument tuples involving i
            for x in range(i + 1):
                for u, v in ((i, x), (x, i)):
                    r = ta[u, v]
                    if r <= i and fmap[r] != tb[fmap[u], fmap[v]]:
                        return False
            # results equal to i whose arguments are already assigned
            for u, v in np.argwhere(ta[: i + 1, : i + 1] == i):
                if tb[fmap[u], fmap[v]] != y:
                    return False
        return True

    def search(i):
        if i == n:
            return True
        for y in range(n):
            if used[y] or key_a[i] != key_b[y]:
                continue
            fmap[i] = y
            used[y] = True
            if consistent(i) and search(i + 1):
                return True
            used[y] = False
            fmap[i] = -1
        return False

    if not search(0):
        return None
    m = is_homomorphism(fmap, a, b)
    assert m and m.bijective, "backtracking produced a non-isomorphism"
    return m


# -- Galois adjoints -------------------------------------------------------


def adjoint_of(lattice: FiniteLattice, f: Iterable[int], side: str = "right"):
    """Adjoint of a unary map, or None when it does not exist.

    ``side="right"``: g with ``f(x) <= y  iff  x <= g(y)``.
    ``side="left"``:  g with ``g(x) <= y  iff  x <= f(y)``.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    f = np.asarray(list(f), dtype=np.int64)
    leq = np.asarray(lattice.leq)
    n = lattice.size
    g = np.empty(n, dtype=np.int64)
    for y in range(n):
        if side == "right":
            cand = np.flatnonzero(leq[f, y])            # {x : f(x) <= y}
            best = [x for x in cand if leq[cand, x].all()]   # its maximum
        else:
            cand = np.flatnonzero(leq[y, f])            # {x : y <= f(x)}
            best = [x for x in cand if leq[x, cand].all()]   # its minimum
        if not best:
            return None
        g[y] = best[0]
    if side == "right":
        ok = leq[f[:, None], np.arange(n)[None, :]] == leq[np.arange(n)[:, None], g[None, :]]
    else:
        ok = leq[g[:, None], np.arange(n)[None, :]] == leq[np.arange(n)[:, None], f[None, :]]
    if not ok.all():
        return None
    return tuple(int(v) for v in g)
