"""Kleene algebras with implication and their tense expansions.

On this side only G and H are stored; F and P are always recomputed as
``F = ∼G∼`` and ``P = ∼H∼``.
"""

from __future__ import annotations

import numpy as np

from .algebra import AlgebraInstance, AxiomReport, AxiomResult, check_grid, grid
from .dli import implication_report
from .errors import PreconditionUnverified

KI_LEVELS = ("kleene", "ckleene", "ki", "tki", "tkic", "itkic1")


def derived_F(u: AlgebraInstance):
    N = u.op("neg")
    return N[u.op("G")[N]]


def derived_P(u: AlgebraInstance):
    N = u.op("neg")
    return N[u.op("H")[N]]


def center_elements(u: AlgebraInstance):
    """Indices ``x ≥ c`` in increasing index order."""
    return u.lattice.up_set(u.const("c"))


def check_kleene_ki_profile(u: AlgebraInstance, level="ki") -> AxiomReport:
    if level not in KI_LEVELS:
        raise ValueError(f"unknown Kleene/KI level {level!r}")
    depth = KI_LEVELS.index(level)
    lat = u.lattice
    m, j, leq, bot, top = lat.meet, lat.join, lat.leq, lat.bot, lat.top
    n = lat.size
    N = u.op("neg")
    x, y = grid(n, 2)
    rep = AxiomReport()
    rep.add(check_grid("DM1", N[N] == np.arange(n)))
    rep.add(check_grid("DM2", N[j[x, y]] == m[N[x], N[y]]))
    rep.add(check_grid("Kleene", leq[m[x, N[x]], j[y, N[y]]]))
    if depth < 1:
        return rep
    c = u.const("c")
    rep.add(check_grid("center", N[c] == c))
    fixed = [int(v) for v in np.flatnonzero(N == np.arange(n)) if v != c]
    rep.add(AxiomResult("center-unique", not fixed, (fixed[0],) if fixed else None))
    if depth < 2:
        return rep
    T = u.op("imp")
    rep.extend(implication_report(lat, T, "dli", prefix="KI1:"))
    rep.add(check_grid("KI2", leq[j[m[x, T[x, y]], c], j[y, c]]))
    rep.add(check_grid("KI3", T[c, c] == top))
    rep.add(check_grid("KI4", m[T[x, y], c] == m[j[N[x], y], c]))
    rep.add(check_grid("KI5", j[T[x, N[y]], c] == m[T[x, j[N[y], c]], T[y, j[N[x], c]]]))
    if depth < 3:
        return rep
    G, H = u.op("G"), u.op("H")
    F, P = derived_F(u), derived_P(u)
    rep.add(check_grid("t1", (G[top] == top) & (H[top] == top)))
    rep.add(check_grid("t2", (G[m[x, y]] == m[G[x], G[y]]) & (H[m[x, y]] == m[H[x], H[y]])))
    rep.add(check_grid("t3", leq[x, G[P[x]]] & leq[x, H[F[x]]]))
    rep.add(check_grid("t4", leq[G[j[x, y]], j[G[x], F[y]]] & leq[H[j[x, y]], j[H[x], P[y]]]))
    rep.add(check_grid("t5", leq[G[T[x, y]], T[G[x], G[y]]] & leq[H[T[x, y]], T[H[x], H[y]]]))
    rep.add(check_grid("t6", leq[G[T[x, y]], T[F[x], F[y]]] & leq[H[T[x, y]], T[P[x], P[y]]]))
    if depth < 4:
        return rep
    rep.add(check_grid("G(c)=c=H(c)", (G[c] == c) & (H[c] == c)))
    if depth < 5:
        return rep
    ok, w = check_CK(u)
    rep.add(AxiomResult("CK", ok, w))
    rep.add(check_grid("x=>x=1", np.diag(T) == top))
    return rep


def check_CK(u: AlgebraInstance):
    """``(True, None)`` or ``(False, (x, y))`` for the first unrealised pair.

    For x, y ≥ c with x ∧ y ≤ c some z must satisfy z∨c = x and ∼z∨c = y.
    """
    lat = u.lattice
    m, j, leq = lat.meet, lat.join, lat.leq
    N, c = u.op("neg"), u.const("c")
    realised = set(zip(j[:, c].tolist(), j[N, c].tolist()))
    for x in center_elements(u):
        for y in center_elements(u):
            if leq[m[x, y], c] and (x, y) not in realised:
                return False, (x, y)
    return True, None


def verify_ki_derived(u: AlgebraInstance) -> AxiomReport:
    """(t7)-(t16), plus (c1)-(c3) when G(c)=c=H(c)."""
    base = check_kleene_ki_profile(u, "tki")
    if not base.holds:
        raise PreconditionUnverified(f"{u.name} is not a tense KI-algebra", base)
    lat = u.lattice
    m, j, leq, bot, top = lat.meet, lat.join, lat.leq, lat.bot, lat.top
    x, y = grid(lat.size, 2)
    G, H = u.op("G"), u.op("H")
    F, P = derived_F(u), derived_P(u)
    rep = AxiomReport()
    rep.add(check_grid("t7", (F[bot] == bot) & (P[bot] == bot)))
    rep.add(check_grid("t8", (F[j[x, y]] == j[F[x], F[y]]) & (P[j[x, y]] == j[P[x], P[y]])))
    rep.add(check_grid("t9", leq[P[G[x]], x] & leq[F[H[x]], x]))
    rep.add(check_grid("t10", ~leq[x, y] | (leq[G[x], G[y]] & leq[H[x], H[y]])))
    rep.add(check_grid("t11", ~leq[x, y] | (leq[F[x], F[y]] & leq[P[x], P[y]])))
    rep.add(check_grid("t12", leq[m[G[x], F[y]], F[m[x, y]]] & leq[m[H[x], P[y]], P[m[x, y]]]))
    rep.add(check_grid("t13", leq[m[x, F[y]], F[m[P[x], y]]] & leq[m[x, P[y]], P[m[F[x], y]]]))
    rep.add(check_grid("t14", (m[F[x], y] == bot) == (m[x, P[y]] == bot)))
    rep.add(check_grid("t15", leq[G[j[x, H[y]]], j[G[x], y]] & leq[H[j[x, G[y]]], j[H[x], y]]))
    rep.add(check_grid("t16", (j[x, H[y]] == top) == (j[G[x], y] == top)))
    c = u.const("c")
    if G[c] == c and H[c] == c:
        xs = np.arange(lat.size)
        rep.add(check_grid("c1", (F[c] == c) & (P[c] == c)))
        rep.add(check_grid("c2", (G[j[xs, c]] == j[G, c]) & (H[j[xs, c]] == j[H, c])))
        rep.add(check_grid("c3", (F[m[xs, c]] == m[F, c]) & (P[m[xs, c]] == m[P, c])))
    else:
        rep.notes.append("not centered: c1-c3 skipped")
    return rep
