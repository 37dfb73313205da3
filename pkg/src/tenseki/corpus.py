"""Generated test corpus: small distributive lattices, their DLI+
implications and tense quadruples, hand-written fixtures, and K-images.

Everything is deterministic; sampling uses a seeded generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

import numpy as np

from .algebra import AlgebraInstance
from .dli import heyting_residual, implication_report
from .kalman import kalman_K
from .lattice import FiniteLattice, build_lattice, chain, product_lattice
from .tense import TenseQuadruple, enumerate_tense_structures, with_tense

EXPECTED_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 5}


# -- lattices ---------------------------------------------------------------


def _posets(k):
    """Strict orders on 0..k-1 compatible with the natural order, as
    boolean matrices; every finite poset appears at least once."""
    pairs = list(combinations(range(k), 2))
    for bits in product((False, True), repeat=len(pairs)):
        rel = np.zeros((k, k), dtype=bool)
        for (a, b), on in zip(pairs, bits):
            rel[a, b] = on
        closed = rel | (rel.astype(int) @ rel.astype(int) > 0)
        if np.array_equal(closed, rel):
            yield rel


def _down_set_lattice(rel):
    """Birkhoff: the lattice of down-sets of a poset, ordered by inclusion."""
    k = len(rel)
    downs = []
    for mask in range(1 << k):
        members = [i for i in range(k) if mask >> i & 1]
        if all(mask >> a & 1 for b in members for a in range(k) if rel[a, b]):
            downs.append(mask)
    downs.sort(key=lambda d: (bin(d).count("1"), d))
    n = len(downs)
    leq = np.array([[downs[a] & ~downs[b] == 0 for b in range(n)] for a in range(n)])
    return leq


def canonical_form(leq):
    """Lexicographically least order matrix over all relabellings that keep
    a linear extension (rows sorted by down-set size first)."""
    leq = np.asarray(leq, dtype=bool)
    n = len(leq)
    height = leq.sum(axis=0)
    best = None
    for perm in permutations(range(n)):
        if any(height[perm[i]] > height[perm[i + 1]] for i in range(n - 1)):
            continue
        key = leq[np.ix_(perm, perm)].tobytes()
        if best is None or key < best:
            best = key
    return best


def _names(n):
    if n == 1:
        return ["0"]
    inner = [chr(ord("a") + i) for i in range(n - 2)]
    return ["0", *inner, "1"]


def distributive_lattices(max_size=6):
    """All distributive lattices with at most ``max_size`` elements, one per
    isomorphism class, sorted by size then canonical form."""
    found = {}
    for k in range(0, max_size):
        for rel in _posets(k):
            leq = _down_set_lattice(rel)
            n = len(leq)
            if n > max_size:
                continue
            found.setdefault(canonical_form(leq), leq)
    out = []
    for key, leq in sorted(found.items(), key=lambda kv: (len(kv[1]), kv[0])):
        n = len(leq)
        out.append(FiniteLattice(_names(n), leq))
    return out


# -- implications -------------------------------------------------------------


def implication_from_cells(lat: FiniteLattice, cells: dict):
    """Extend values on (join-irreducible, meet-irreducible) cells to a full
    table: a→b = ⋀ {f(j, m) : j ≤ a, m ≥ b}."""
    n, leq, meet, top = lat.size, lat.leq, lat.meet, lat.top
    J, M = lat.join_irreducibles(), lat.meet_irreducibles()
    table = np.full((n, n), top, dtype=np.int64)
    for a in range(n):
        js = [j for j in J if leq[j, a]]
        for b in range(n):
            v = top
            for j in js:
                for m in M:
                    if leq[b, m]:
                        v = meet[v, cells[(j, m)]]
            table[a, b] = v
    return table


def dli_plus_implications(lat: FiniteLattice, limit=None, seed=None):
    """DLI+ implication tables on ``lat``.

    A DLI-implication is fixed by its values f(j, m) on join-irreducibles j
    and meet-irreducibles m, with f antitone in j and monotone in m; (I5)
    holds iff ``j ∧ f(j, m) ≤ m`` on every cell.  Without ``seed`` the
    tables come out in lexicographic cell order; with a seed, value orders
    are shuffled so a bounded ``limit`` still samples widely.
    """
    leq, meet = lat.leq, lat.meet
    J, M = lat.join_irreducibles(), lat.meet_irreducibles()
    cells = [(j, m) for j in J for m in M]
    allowed = {(j, m): [v for v in range(lat.size) if leq[meet[j, v], m]] for j, m in cells}
    rng = np.random.default_rng(seed) if seed is not None else None
    values, out = {}, []

    def consistent(cell, v):
        j, m = cell
        for (j2, m2), w in values.items():
            # f(j, m) ≤ f(j2, m2) whenever j2 ≤ j and m ≤ m2
            if leq[j2, j] and leq[m, m2] and not leq[v, w]:
                return False
            if leq[j, j2] and leq[m2, m] and not leq[w, v]:
                return False
        return True

    def dfs(k):
        if limit is not None and len(out) >= limit:
            return
        if k == len(cells):
            out.append(implication_from_cells(lat, values))
            return
        cell = cells[k]
        order = list(allowed[cell])
        if rng is not None:
            rng.shuffle(order)
        for v in order:
            if consistent(cell, v):
                values[cell] = v
                dfs(k + 1)
                del values[cell]
                if limit is not None and len(out) >= limit:
                    return

    dfs(0)
    return out


# -- corpus -------------------------------------------------------------------


@dataclass(frozen=True)
class CorpusMember:
    alg: AlgebraInstance
    heyting: bool
    t0: bool
    refl: bool

    @property
    def profile(self):
        if self.t0 and self.refl:
            return "tdli01"
        return "tdli0" if self.t0 else "tdli"


def _member(base, q, name):
    lat = base.lattice
    T = base.op("imp")
    t0 = q.G[lat.bot] == lat.bot and q.H[lat.bot] == lat.bot
    refl = bool(np.all(np.diag(T) == lat.top))
    heyting = implication_report(lat, T, "heyting").holds
    member = CorpusMember(with_tense(base, q, name=name), heyting, t0, refl)
    return CorpusMember(member.alg.replace(profile=member.profile), heyting, t0, refl)


def fixtures():
    """Hand-written tense algebras with identity tense operators."""
    b2 = chain(2)
    c3 = build_lattice(["0", "m", "1"], [("0", "m"), ("m", "1")])
    sq = product_lattice(b2, b2)
    out = []
    for name, lat in (("B2", b2), ("C3", c3), ("B2xB2", sq)):
        base = AlgebraInstance(lat, {"imp": heyting_residual(lat)}, "heyting", name)
        out.append(with_tense(base, TenseQuadruple.identity(lat.size), profile="theyting", name=name))
    return out


def strict_chain_fixture():
    """3-chain with x→y = 1 if x ≤ y else 0: DLI+_1 but not Heyting, so its
    Kalman image violates (I6)."""
    c3 = build_lattice(["0", "m", "1"], [("0", "m"), ("m", "1")])
    imp = np.where(c3.leq, c3.top, c3.bot)
    return AlgebraInstance(c3, {"imp": imp, **TenseQuadruple.identity(3).tables()}, "tdli01", "C3strict")


@dataclass(frozen=True)
class CorpusLimits:
    max_size: int = 6
    implications: int = 4       # sampled per lattice, besides the residual
    quadruples: int = 4         # per (lattice, implication)
    seed: int = 20240611


def dli_corpus(limits: CorpusLimits = CorpusLimits()):
    """Tense DLI+-algebras: for each lattice, the Heyting residual and a
    sample of other DLI+ implications, each with its first tense quadruples
    (with and without T0)."""
    members = []
    for li, lat in enumerate(distributive_lattices(limits.max_size)):
        tag = f"L{lat.size}.{li}"
        imps = [heyting_residual(lat)]
        seen = {imps[0].tobytes()}
        for t in dli_plus_implications(lat, limit=limits.implications + 1, seed=limits.seed + li):
            if t.tobytes() not in seen and len(imps) <= limits.implications:
                seen.add(t.tobytes())
                imps.append(t)
        for ii, imp in enumerate(imps):
            base = AlgebraInstance(lat, {"imp": imp}, "dli+", f"{tag}i{ii}")
            quads = enumerate_tense_structures(base, with_T0=True, limit=limits.quadruples)
            extra = [q for q in enumerate_tense_structures(base, with_T0=False, limit=limits.quadruples)
                     if q not in quads]
            for qi, q in enumerate(quads + extra[:1]):
                members.append(_member(base, q, f"{tag}i{ii}q{qi}"))
    for f in fixtures():
        members.append(CorpusMember(f, True, True, True))
    return members


def closed_subsets(u: AlgebraInstance, max_size=None):
    """Subuniverses of ``u`` (closed under every operation and the lattice
    bounds), as sorted index tuples."""
    n = u.size
    lat = u.lattice
    tables = [lat.meet, lat.join] + [t for t in u.ops.values() if t.ndim >= 1]
    forced = {lat.bot, lat.top} | {int(t) for t in u.ops.values() if t.ndim == 0}
    free = [x for x in range(n) if x not in forced]
    out = []
    for r in range(len(free) + 1):
        for extra in combinations(free, r):
            s = forced | set(extra)
            if max_size is not None and len(s) > max_size:
                continue
            idx = np.array(sorted(s))
            ok = True
            for t in tables:
                vals = t[idx] if t.ndim == 1 else t[np.ix_(idx, idx)]
                if not set(np.unique(vals).tolist()) <= s:
                    ok = False
                    break
            if ok:
                out.append(tuple(idx.tolist()))
    return out


def subalgebra(u: AlgebraInstance, subset, name=None):
    idx = np.array(subset)
    local = {int(e): i for i, e in enumerate(idx)}
    relabel = np.vectorize(lambda v: local[int(v)], otypes=[np.int64])
    lat = FiniteLattice([u.names[e] for e in idx], u.lattice.leq[np.ix_(idx, idx)])
    ops = {}
    for s, t in u.ops.items():
        if t.ndim == 0:
            ops[s] = local[int(t)]
        elif t.ndim == 1:
            ops[s] = relabel(t[idx])
        else:
            ops[s] = relabel(t[np.ix_(idx, idx)])
    # (CK) need not survive passing to a subalgebra
    profile = "tkic" if u.profile == "itkic1" else u.profile
    return AlgebraInstance(lat, ops, profile, name or f"{u.name}|{len(idx)}")


def ki_corpus(dli_members, sub_from_size=4):
    """K-images of every tdli0 member, plus the proper subalgebras of K-images
    of small members (these need not satisfy (CK))."""
    out = []
    for mem in dli_members:
        if not mem.t0:
            continue
        k = kalman_K(mem.alg)
        out.append(k)
        if mem.alg.size <= sub_from_size and mem.alg.name.endswith("q0"):
            for i, s in enumerate(closed_subsets(k)):
                if len(s) < k.size:
                    out.append(subalgebra(k, s, f"{k.name}|s{i}"))
    return out


@dataclass(frozen=True)
class Corpus:
    dli: tuple      # CorpusMember
    ki: tuple       # AlgebraInstance

    def dli_where(self, profile):
        """Members at or above ``profile`` in tdli ⊇ tdli0 ⊇ tdli01."""
        rank = {"tdli": 0, "tdli0": 1, "tdli01": 2}
        return [m for m in self.dli if rank[profile] <= rank[m.profile]]


def build_corpus(limits: CorpusLimits = CorpusLimits()) -> Corpus:
    dli = dli_corpus(limits)
    return Corpus(tuple(dli), tuple(ki_corpus(dli)))
