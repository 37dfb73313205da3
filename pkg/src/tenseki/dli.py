"""Implication axioms for distributive lattices with implication.

Levels are cumulative::

    dli        I1-I4
    dli_plus   + I5   (a ∧ (a→b) ≤ b)
    dli1_plus  + x→x = 1
    i6         + I6   (x ≤ y→x)
    heyting    + residuation  (x∧y ≤ z  iff  x ≤ y→z)
"""

import numpy as np

from .algebra import AlgebraInstance, AxiomReport, check_grid, grid
from .lattice import FiniteLattice

LEVELS = ("dli", "dli_plus", "dli1_plus", "i6", "heyting")
_ALIASES = {"dli+": "dli_plus", "dli1+": "dli1_plus"}


def implication_report(lattice: FiniteLattice, imp, level="heyting", prefix=""):
    """Axiom report for a raw implication table over ``lattice``."""
    level = _ALIASES.get(level, level)
    if level not in LEVELS:
        raise ValueError(f"unknown implication level {level!r}")
    depth = LEVELS.index(level)
    T = np.asarray(imp)
    m, j, leq = lattice.meet, lattice.join, lattice.leq
    n, bot, top = lattice.size, lattice.bot, lattice.top
    a, b, d = grid(n, 3)
    x, y = grid(n, 2)
    rep = AxiomReport()
    rep.add(check_grid(prefix + "I1", m[T[a, b], T[a, d]] == T[a, m[b, d]]))
    rep.add(check_grid(prefix + "I2", m[T[a, d], T[b, d]] == T[j[a, b], d]))
    rep.add(check_grid(prefix + "I3", T[bot, :] == top))
    rep.add(check_grid(prefix + "I4", T[:, top] == top))
    if depth >= 1:
        rep.add(check_grid(prefix + "I5", leq[m[x, T[x, y]], y]))
    if depth >= 2:
        rep.add(check_grid(prefix + "x->x=1", np.diag(T) == top))
    if depth >= 3:
        rep.add(check_grid(prefix + "I6", leq[x, T[y, x]]))
    if depth >= 4:
        rep.add(check_grid(prefix + "residuation", leq[m[a, b], d] == leq[a, T[b, d]]))
    return rep


def check_implication_profile(alg: AlgebraInstance, level="dli", symbol="imp"):
    return implication_report(alg.lattice, alg.op(symbol), level)


def heyting_residual(lattice: FiniteLattice):
    """Relative pseudocomplement ``y→z = max{x : x∧y ≤ z}`` as a table."""
    n = lattice.size
    leq, m = np.asarray(lattice.leq), lattice.meet
    table = np.empty((n, n), dtype=np.int64)
    for y in range(n):
        for z in range(n):
            cand = np.flatnonzero(leq[m[:, y], z])
            best = [x for x in cand if leq[cand, x].all()]
            if not best:
                return None
            table[y, z] = best[0]
    return table


def check_monotonicity_laws(alg: AlgebraInstance, symbol="imp"):
    """x ≤ y implies y→z ≤ x→z and z→x ≤ z→y; witnesses are (x, y, z)."""
    T = alg.op(symbol)
    leq = alg.lattice.leq
    x, y, z = grid(alg.size, 3)
    below = leq[x, y]
    rep = AxiomReport()
    rep.add(check_grid("antitone-first", ~below | leq[T[y, z], T[x, z]]))
    rep.add(check_grid("monotone-second", ~below | leq[T[z, x], T[z, y]]))
    if not implication_report(alg.lattice, T, "dli").holds:
        rep.notes.append("input is not a DLI-algebra; monotonicity is not guaranteed")
    return rep


def check_heyting_characterization(alg: AlgebraInstance, symbol="imp"):
    """``(is_dli1_plus, satisfies x ≤ y→x, is_heyting)``."""
    T = alg.op(symbol)
    lat = alg.lattice
    is_dli1 = implication_report(lat, T, "dli1_plus").holds
    x, y = grid(lat.size, 2)
    i6 = bool(np.all(lat.leq[x, T[y, x]]))
    a, b, d = grid(lat.size, 3)
    heyting = bool(np.all(lat.leq[lat.meet[a, b], d] == lat.leq[a, T[b, d]]))
    return is_dli1, i6, heyting
