"""Slow, obviously-correct reference implementations used to cross-check
the fast paths: plain loops over everything, no pruning."""

from __future__ import annotations

from itertools import combinations, permutations, product

import numpy as np

from .algebra import AlgebraInstance
from .congruence import Congruence
from .lattice import FiniteLattice
from .tense import TenseQuadruple


def set_partitions(n):
    """Every partition of range(n) as a restricted-growth label tuple."""
    def rec(i, labels, k):
        if i == n:
            yield tuple(labels)
            return
        for b in range(k + 1):
            labels.append(b)
            yield from rec(i + 1, labels, max(k, b + 1))
            labels.pop()
    yield from rec(0, [], 0)


def congruences_by_partitions(alg: AlgebraInstance):
    """Con(A) by testing every partition against every operation entry."""
    n = alg.size
    lat = alg.lattice
    binary = [lat.meet, lat.join] + [t for t in alg.ops.values() if t.ndim == 2]
    unary = [t for t in alg.ops.values() if t.ndim == 1]
    out = []
    for labels in set_partitions(n):
        ok = True
        for a, b in product(range(n), repeat=2):
            if labels[a] != labels[b]:
                continue
            if any(labels[t[a]] != labels[t[b]] for t in unary):
                ok = False
                break
            for t in binary:
                for c in range(n):
                    if labels[t[a, c]] != labels[t[b, c]] or labels[t[c, a]] != labels[t[c, b]]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(Congruence(labels))
    return sorted(out, key=Congruence.sort_key)


def _is_distributive_lattice(leq):
    n = len(leq)
    meet = np.empty((n, n), dtype=int)
    join = np.empty((n, n), dtype=int)
    for a, b in product(range(n), repeat=2):
        lower = [x for x in range(n) if leq[x, a] and leq[x, b]]
        glb = [x for x in lower if all(leq[y, x] for y in lower)]
        upper = [x for x in range(n) if leq[a, x] and leq[b, x]]
        lub = [x for x in upper if all(leq[x, y] for y in upper)]
        if len(glb) != 1 or len(lub) != 1:
            return False
        meet[a, b], join[a, b] = glb[0], lub[0]
    return all(meet[a, join[b, c]] == join[meet[a, b], meet[a, c]]
               for a, b, c in product(range(n), repeat=3))


def _iso_key(leq):
    n = len(leq)
    return min(leq[np.ix_(p, p)].tobytes() for p in permutations(range(n)))


def distributive_lattice_count(n):
    """Isomorphism classes of distributive lattices of size n, by scanning
    every order with 0 least and n-1 greatest."""
    if n <= 2:
        return 1
    inner = range(1, n - 1)
    pairs = [(a, b) for a in inner for b in inner if a != b]
    classes = set()
    for bits in product((False, True), repeat=len(pairs)):
        leq = np.eye(n, dtype=bool)
        leq[0, :] = True
        leq[:, n - 1] = True
        for (a, b), on in zip(pairs, bits):
            leq[a, b] |= on
        if np.any(leq & leq.T & ~np.eye(n, dtype=bool)):
            continue
        if not np.array_equal(leq, leq | (leq.astype(int) @ leq.astype(int) > 0)):
            continue
        if _is_distributive_lattice(leq):
            classes.add(_iso_key(leq))
    return len(classes)


def max_scan_residual(lat: FiniteLattice):
    """y→z as the unique greatest x with x∧y ≤ z, by explicit loops."""
    n = lat.size
    out = np.empty((n, n), dtype=np.int64)
    for y, z in product(range(n), repeat=2):
        cand = [x for x in range(n) if lat.leq[lat.meet[x, y], z]]
        out[y, z] = next(x for x in cand if all(lat.leq[w, x] for w in cand))
    return out


def dli_plus_tables(lat: FiniteLattice):
    """Every table satisfying (I1)-(I5), by scanning all n^(n*n) tables.
    Only sensible for n ≤ 3."""
    n, m, j, leq = lat.size, lat.meet, lat.join, lat.leq
    bot, top = lat.bot, lat.top
    out = []
    for flat in product(range(n), repeat=n * n):
        T = np.array(flat).reshape(n, n)
        if not (np.all(T[bot] == top) and np.all(T[:, top] == top)):
            continue
        if all(m[T[a, b], T[a, d]] == T[a, m[b, d]] and m[T[a, d], T[b, d]] == T[j[a, b], d]
               for a, b, d in product(range(n), repeat=3)) and \
           all(leq[m[x, T[x, y]], y] for x, y in product(range(n), repeat=2)):
            out.append(T)
    return out


def naive_tense_structures(alg: AlgebraInstance, with_T0=True):
    """Tense quadruples from all n^n maps: adjoint pairs (G, P) and (H, F)
    first, then the remaining axioms on every combination."""
    lat = alg.lattice
    n, m, j, leq, bot = lat.size, lat.meet, lat.join, lat.leq, lat.bot
    T = alg.op("imp")
    maps = np.array(list(product(range(n), repeat=n)))
    xs = range(n)

    # (right, left) with left(x) ≤ y  iff  x ≤ right(y): match the two
    # n×n truth tables of every map against each other
    left_rel = {}
    for p in maps:
        left_rel.setdefault(leq[p].tobytes(), []).append(p)
    pairs = []
    for g in maps:
        for p in left_rel.get(leq[:, g].tobytes(), []):
            pairs.append((g, p))

    def holds(G, H, F, P):
        for x in xs:
            for y in xs:
                if not (leq[m[G[x], F[y]], F[m[x, y]]] and leq[m[H[x], P[y]], P[m[x, y]]]):
                    return False
                if not (leq[G[j[x, y]], j[G[x], F[y]]] and leq[H[j[x, y]], j[H[x], P[y]]]):
                    return False
                if not (leq[G[T[x, y]], T[G[x], G[y]]] and leq[H[T[x, y]], T[H[x], H[y]]]):
                    return False
                if not (leq[G[T[x, y]], T[F[x], F[y]]] and leq[H[T[x, y]], T[P[x], P[y]]]):
                    return False
        return True

    out = []
    for G, P in pairs:
        if with_T0 and G[bot] != bot:
            continue
        for H, F in pairs:
            if with_T0 and H[bot] != bot:
                continue
            if holds(G, H, F, P):
                out.append(TenseQuadruple(G, H, F, P))
    return sorted(out, key=lambda q: (q.G, q.H))


def subset_scan(alg: AlgebraInstance, predicate):
    """Every subset satisfying ``predicate``, sorted by size then members."""
    n = alg.size
    out = []
    for r in range(n + 1):
        for s in combinations(range(n), r):
            if predicate(alg, frozenset(s)):
                out.append(frozenset(s))
    return out
