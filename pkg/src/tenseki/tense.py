"""Tense operators G, H, F, P on DLI+-algebras.

All four operators are primitive here: F and P are independent tables tied
to H and G only through the adjunctions (T1) P ⊣ G and (T2) F ⊣ H.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraInstance, AxiomReport, adjoint_of, check_grid, grid
from .dli import implication_report
from .errors import PreconditionUnverified
from .lattice import FiniteLattice

TENSE_SYMBOLS = ("G", "H", "F", "P")


@dataclass(frozen=True)
class TenseQuadruple:
    G: tuple
    H: tuple
    F: tuple
    P: tuple

    def __post_init__(self):
        for s in TENSE_SYMBOLS:
            object.__setattr__(self, s, tuple(int(v) for v in getattr(self, s)))

    @classmethod
    def identity(cls, n):
        r = tuple(range(n))
        return cls(r, r, r, r)

    @classmethod
    def of(cls, alg: AlgebraInstance):
        return cls(*(alg.op(s) for s in TENSE_SYMBOLS))

    def tables(self):
        return {s: np.asarray(getattr(self, s), dtype=np.int64) for s in TENSE_SYMBOLS}


def with_tense(alg: AlgebraInstance, q: TenseQuadruple, profile=None, name=None):
    if profile is None:
        profile = "tdli" if alg.profile in ("dl", "dli", "dli+", "dli1+", "heyting") else alg.profile
    return alg.replace(ops=q.tables(), profile=profile, name=name)


def _tables(alg, q):
    q = q if q is not None else TenseQuadruple.of(alg)
    return (np.asarray(q.G), np.asarray(q.H), np.asarray(q.F), np.asarray(q.P))


def tense_report(lattice: FiniteLattice, imp, G, H, F, P, with_T0=False):
    """(T0)-(T6) for raw tables; each id covers both the G and H halves."""
    m, j, leq = lattice.meet, lattice.join, lattice.leq
    T = np.asarray(imp)
    x, y = grid(lattice.size, 2)
    bot = lattice.bot
    rep = AxiomReport()
    if with_T0:
        rep.add(check_grid("T0", (G[bot] == bot) & (H[bot] == bot)))
    rep.add(check_grid("T1", leq[P[x], y] == leq[x, G[y]]))
    rep.add(check_grid("T2", leq[F[x], y] == leq[x, H[y]]))
    rep.add(check_grid("T3", leq[m[G[x], F[y]], F[m[x, y]]] & leq[m[H[x], P[y]], P[m[x, y]]]))
    rep.add(check_grid("T4", leq[G[j[x, y]], j[G[x], F[y]]] & leq[H[j[x, y]], j[H[x], P[y]]]))
    rep.add(check_grid("T5", leq[G[T[x, y]], T[G[x], G[y]]] & leq[H[T[x, y]], T[H[x], H[y]]]))
    rep.add(check_grid("T6", leq[G[T[x, y]], T[F[x], F[y]]] & leq[H[T[x, y]], T[P[x], P[y]]]))
    return rep


def check_tense_axioms(alg: AlgebraInstance, q: TenseQuadruple | None = None, with_T0=False):
    base = implication_report(alg.lattice, alg.op("imp"), "dli_plus")
    if not base.holds:
        raise PreconditionUnverified(f"{alg.name} is not a DLI+-algebra", base)
    return tense_report(alg.lattice, alg.op("imp"), *_tables(alg, q), with_T0=with_T0)


def derived_report(lattice: FiniteLattice, G, H, F, P):
    m, j, leq = lattice.meet, lattice.join, lattice.leq
    x, y = grid(lattice.size, 2)
    bot, top = lattice.bot, lattice.top
    rep = AxiomReport()
    rep.add(check_grid("T7", (G[top] == top) & (H[top] == top)))
    rep.add(check_grid("T8", (G[m[x, y]] == m[G[x], G[y]]) & (H[m[x, y]] == m[H[x], H[y]])))
    rep.add(check_grid("T9", leq[x, G[P[x]]] & leq[x, H[F[x]]]))
    rep.add(check_grid("T10", (F[bot] == bot) & (P[bot] == bot)))
    rep.add(check_grid("T11", (F[j[x, y]] == j[F[x], F[y]]) & (P[j[x, y]] == j[P[x], P[y]])))
    rep.add(check_grid("T12", leq[F[H[x]], x] & leq[P[G[x]], x]))
    rep.add(check_grid("T13", ~leq[x, y] | (leq[G[x], G[y]] & leq[H[x], H[y]])))
    rep.add(check_grid("T14", ~leq[x, y] | (leq[F[x], F[y]] & leq[P[x], P[y]])))
    rep.add(check_grid("T15", leq[m[x, F[y]], F[m[P[x], y]]] & leq[m[x, P[y]], P[m[F[x], y]]]))
    rep.add(check_grid("T16", (m[F[x], y] == bot) == (m[x, P[y]] == bot)))
    rep.add(check_grid("T17", leq[G[j[x, H[y]]], j[G[x], y]] & leq[H[j[x, G[y]]], j[H[x], y]]))
    rep.add(check_grid("T18", (j[x, H[y]] == top) == (j[G[x], y] == top)))
    return rep


def verify_tense_derived(alg: AlgebraInstance, q: TenseQuadruple | None = None):
    """(T7)-(T18); raises PreconditionUnverified unless (T1)-(T6) hold."""
    base = check_tense_axioms(alg, q)
    if not base.holds:
        raise PreconditionUnverified("tense axioms T1-T6 do not hold", base)
    return derived_report(alg.lattice, *_tables(alg, q))


def meet_preserving_maps(lattice: FiniteLattice):
    """All maps preserving binary meets and the top, in lexicographic order.

    Such a map is fixed by its (monotone) values on the meet-irreducibles:
    ``g(x) = ⋀ {g(b) : b meet-irreducible, b ≥ x}``.
    """
    n, leq, meet, top = lattice.size, np.asarray(lattice.leq), lattice.meet, lattice.top
    irr = lattice.meet_irreducibles()
    above = [[b for b in irr if leq[x, b]] for x in range(n)]
    out = []
    values = {}

    def extend():
        g = []
        for x in range(n):
            v = top
            for b in above[x]:
                v = meet[v, values[b]]
            g.append(int(v))
        out.append(tuple(g))

    def dfs(k):
        if k == len(irr):
            extend()
            return
        b = irr[k]
        for v in range(n):
            if all(leq[values[b2], v] for b2 in irr[:k] if leq[b2, b]) and \
               all(leq[v, values[b2]] for b2 in irr[:k] if leq[b, b2]):
                values[b] = v
                dfs(k + 1)
        values.pop(b, None)

    dfs(0)
    return sorted(set(out))


def enumerate_tense_structures(alg: AlgebraInstance, with_T0=True, limit=None):
    """Every tense quadruple on ``alg`` in lexicographic (G, H) order.

    G and H range over meet- and top-preserving maps; P and F are then forced
    as their left adjoints, and the remaining axioms filter the pairs.
    """
    base = implication_report(alg.lattice, alg.op("imp"), "dli_plus")
    if not base.holds:
        raise PreconditionUnverified(f"{alg.name} is not a DLI+-algebra", base)
    if limit is not None and limit <= 0:
        return []
    lat = alg.lattice
    m, j, leq, bot = lat.meet, lat.join, lat.leq, lat.bot
    T = alg.op("imp")
    x, y = grid(lat.size, 2)
    cands = []
    for g in meet_preserving_maps(lat):
        g = np.asarray(g)
        if with_T0 and g[bot] != bot:
            continue
        if not np.all(leq[g[T[x, y]], T[g[x], g[y]]]):  # T5, one half
            continue
        left = adjoint_of(lat, g, "left")
        cands.append((g, np.asarray(left)))
    if not cands:
        return []
    Hs = np.stack([c[0] for c in cands])
    Fs = np.stack([c[1] for c in cands])
    xs, ys = x[None], y[None]
    out = []
    for G, P in cands:
        ok = np.all(leq[m[G[xs], Fs[:, None, :]], Fs[:, m[x, y]]], axis=(1, 2))
        ok &= np.all(leq[m[Hs[:, :, None], P[ys]], P[m[x, y]][None]], axis=(1, 2))
        ok &= np.all(leq[G[j[x, y]][None], j[G[xs], Fs[:, None, :]]], axis=(1, 2))
        ok &= np.all(leq[Hs[:, j[x, y]], j[Hs[:, :, None], P[ys]]], axis=(1, 2))
        ok &= np.all(leq[G[T[x, y]][None], T[Fs[:, :, None], Fs[:, None, :]]], axis=(1, 2))
        ok &= np.all(leq[Hs[:, T[x, y]], T[P[x], P[y]][None]], axis=(1, 2))
        for k in np.flatnonzero(ok):
            out.append(TenseQuadruple(G, Hs[k], Fs[k], P))
            if limit is not None and len(out) >= limit:
                return out
    return out
