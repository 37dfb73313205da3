"""Congruences, (tense) 1-filters and centered tense deductive systems.

A congruence is stored as a canonical label vector: ``labels[x]`` is the
block number of ``x``, blocks numbered in order of first appearance.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .algebra import AlgebraInstance
from .dli import implication_report
from .errors import PreconditionUnverified
from .kalman import beta_map, center_C, dli_report, kalman_K, kalman_pairs
from .kleene import center_elements, check_kleene_ki_profile

KINDS = ("one_filter", "tense_one_filter", "tense_ds", "centered_tense_ds")


def _canonical(labels):
    seen = {}
    return tuple(seen.setdefault(int(v), len(seen)) for v in labels)


@dataclass(frozen=True)
class Congruence:
    labels: tuple

    @classmethod
    def from_labels(cls, labels):
        return cls(_canonical(labels))

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    @classmethod
    def total(cls, n):
        return cls((0,) * n)

    @property
    def size(self):
        return len(self.labels)

    @property
    def num_blocks(self):
        return max(self.labels, default=-1) + 1

    def blocks(self):
        out = [[] for _ in range(self.num_blocks)]
        for x, b in enumerate(self.labels):
            out[b].append(x)
        return out

    def related(self, a, b):
        return self.labels[a] == self.labels[b]

    def __le__(self, other):
        """Containment as relations."""
        mine, theirs = np.array(self.labels), np.array(other.labels)
        same = mine[:, None] == mine[None, :]
        return bool(np.all(~same | (theirs[:, None] == theirs[None, :])))

    def sort_key(self):
        return (self.num_blocks, self.labels)


@dataclass(frozen=True)
class SubsetWitness:
    members: frozenset
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown subset kind {self.kind!r}")
        object.__setattr__(self, "members", frozenset(int(m) for m in self.members))

    def sort_key(self):
        return (len(self.members), tuple(sorted(self.members)))


# -- congruence machinery ---------------------------------------------------


def _operations(alg):
    lat = alg.lattice
    ops = [lat.meet, lat.join]
    ops += [t for t in alg.ops.values() if t.ndim >= 1]
    return ops


def _components(n, src, dst):
    g = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))
    return connected_components(g, directed=False)[1]


def _close(alg, labels):
    """Smallest congruence containing the equivalence given by ``labels``."""
    n = alg.size
    ops = _operations(alg)
    labels = np.asarray(labels)
    count = len(set(labels.tolist()))
    while True:
        rep = _reps(labels)
        src, dst = [np.arange(n)], [rep]
        for t in ops:
            if t.ndim == 1:
                src.append(t)
                dst.append(t[rep])
            else:
                src += [t.ravel(), t.ravel()]
                dst += [t[rep, :].ravel(), t[:, rep].ravel()]
        labels = _components(n, np.concatenate(src), np.concatenate(dst))
        new = len(set(labels.tolist()))
        if new == count:
            return Congruence.from_labels(labels)
        count = new


def _reps(labels):
    first = {}
    for x, b in enumerate(labels.tolist()):
        first.setdefault(b, x)
    return np.array([first[b] for b in labels.tolist()])


def is_congruence(alg: AlgebraInstance, theta: Congruence):
    lab = np.asarray(theta.labels)
    if lab.shape != (alg.size,):
        return False
    rep = _reps(lab)
    for t in _operations(alg):
        if t.ndim == 1:
            if np.any(lab[t] != lab[t[rep]]):
                return False
        elif np.any(lab[t] != lab[t[rep, :]]) or np.any(lab[t] != lab[t[:, rep]]):
            return False
    return True


def principal_congruence(alg: AlgebraInstance, a, b):
    labels = np.arange(alg.size)
    labels[max(a, b)] = min(a, b)
    return _close(alg, labels)


def join_congruences(alg, first: Congruence, second: Congruence):
    n = alg.size
    src = np.concatenate([np.arange(n), np.arange(n)])
    dst = np.concatenate([_reps(np.array(first.labels)), _reps(np.array(second.labels))])
    return _close(alg, _components(n, src, dst))


def enumerate_congruences(alg: AlgebraInstance):
    """Con(A): principal congruences closed under joins, sorted by block count
    and then by label vector."""
    n = alg.size
    found = {Congruence.identity(n)}
    principal = {principal_congruence(alg, a, b) for a, b in combinations(range(n), 2)}
    found |= principal
    frontier = set(principal)
    while frontier:
        new = set()
        for t in frontier:
            for p in principal:
                jn = join_congruences(alg, t, p)
                if jn not in found:
                    new.add(jn)
        found |= new
        frontier = new
    return sorted(found, key=Congruence.sort_key)


# -- filters -----------------------------------------------------------------


def _mask(n, members):
    m = np.zeros(n, dtype=bool)
    m[list(members)] = True
    return m


def is_lattice_filter(lattice, members):
    s = _mask(lattice.size, members)
    if not s[lattice.top]:
        return False
    up = np.asarray(lattice.leq)[s].any(axis=0)
    return bool(np.all(up <= s) and np.all(s[lattice.meet[np.ix_(s, s)]]))


def is_one_filter(alg: AlgebraInstance, members):
    """Lattice filter with ((a∧f)→b)→(a→b) ∈ S for all a, b and all f ∈ S."""
    lat = alg.lattice
    if not is_lattice_filter(lat, members):
        return False
    s = _mask(lat.size, members)
    T, m = alg.op("imp"), lat.meet
    f = np.flatnonzero(s)[:, None, None]
    a = np.arange(lat.size)[None, :, None]
    b = np.arange(lat.size)[None, None, :]
    return bool(np.all(s[T[T[m[a, f], b], T[a, b]]]))


def _closed_under(alg, members, symbols):
    s = _mask(alg.size, members)
    return all(np.all(s[alg.op(sym)[s]]) for sym in symbols)


def is_tense_one_filter(alg, members):
    return is_one_filter(alg, members) and _closed_under(alg, members, ("G", "H"))


def is_tense_ds(u: AlgebraInstance, members):
    s = _mask(u.size, members)
    top = u.lattice.top
    if not s[top]:
        return False
    T = u.op("imp")
    # (tD2): u, u⇒v ∈ D  implies  v ∈ D
    mp = s[:, None] & s[T]
    if np.any(mp & ~s[None, :]):
        return False
    return _closed_under(u, members, ("G", "H"))


def _center_filter(u, members):
    """S_D = D ∩ C(T) as indices of center_C(u)."""
    return frozenset(i for i, e in enumerate(center_elements(u)) if e in members)


def is_centered_tense_ds(u, members, center=None):
    if not is_tense_ds(u, members):
        return False
    center = center if center is not None else center_C(u)
    if not is_tense_one_filter(center, _center_filter(u, members)):
        return False
    s = _mask(u.size, members)
    T, N, j = u.op("imp"), u.op("neg"), u.lattice.join
    c, top = u.const("c"), u.lattice.top
    # (ctD2)
    premise = s[T[N, c]] & s[T[top, j[:, c]]]
    return bool(np.all(~premise | s))


def _upsets_with_top(lattice):
    """All up-closed subsets containing the top, in no particular order."""
    leq = np.asarray(lattice.leq)
    order = sorted(range(lattice.size), key=lambda x: -leq[:, x].sum())  # top first
    out = []

    def rec(k, chosen):
        if k == len(order):
            out.append(frozenset(chosen))
            return
        x = order[k]
        above = [y for y in np.flatnonzero(leq[x]) if y != x]
        if all(y in chosen for y in above):
            chosen.add(x)
            rec(k + 1, chosen)
            chosen.discard(x)
        if x != lattice.top:
            rec(k + 1, chosen)

    rec(0, set())
    return out


def _require(report, what):
    if not report.holds:
        raise PreconditionUnverified(what, report)


def _require_tdli01(alg):
    rep = implication_report(alg.lattice, alg.op("imp"), "dli1_plus")
    rep.extend(dli_report(alg, with_T0=True))
    _require(rep, f"{alg.name} is not a tDLI+_01-algebra")


def enumerate_filters(alg: AlgebraInstance, kind: str):
    """Every subset of the given kind, sorted by size then members."""
    if kind == "one_filter":
        _require(implication_report(alg.lattice, alg.op("imp"), "dli1_plus"),
                 f"{alg.name} is not a DLI+_1-algebra")
        cands = [frozenset(alg.lattice.up_set(a)) for a in range(alg.size)]
        keep = [s for s in cands if is_one_filter(alg, s)]
    elif kind == "tense_one_filter":
        _require_tdli01(alg)
        cands = [frozenset(alg.lattice.up_set(a)) for a in range(alg.size)]
        keep = [s for s in cands if is_tense_one_filter(alg, s)]
    elif kind in ("tense_ds", "centered_tense_ds"):
        _require(check_kleene_ki_profile(alg, "itkic1"), f"{alg.name} is not an itKI_c1-algebra")
        cands = _upsets_with_top(alg.lattice)
        if kind == "tense_ds":
            keep = [s for s in cands if is_tense_ds(alg, s)]
        else:
            center = center_C(alg)
            keep = [s for s in cands if is_centered_tense_ds(alg, s, center)]
    else:
        raise ValueError(f"unknown subset kind {kind!r}")
    out = {SubsetWitness(s, kind) for s in keep}
    return sorted(out, key=SubsetWitness.sort_key)


# -- filter <-> congruence --------------------------------------------------


def _relation_to_congruence(alg, rel, what):
    rel = np.asarray(rel, dtype=bool)
    if not (np.all(np.diag(rel)) and np.array_equal(rel, rel.T)
            and np.array_equal(rel, (rel.astype(int) @ rel.astype(int)) > 0)):
        raise AssertionError(f"{what} is not an equivalence relation")
    src, dst = np.nonzero(rel)
    theta = Congruence.from_labels(_components(alg.size, src, dst))
    if not is_congruence(alg, theta):
        raise AssertionError(f"{what} is not compatible with the operations")
    return theta


def theta_of_filter(alg: AlgebraInstance, s: SubsetWitness) -> Congruence:
    """Θ(S) = {(a, b) : a→b, b→a ∈ S}."""
    _require_tdli01(alg)
    if not is_tense_one_filter(alg, s.members):
        raise PreconditionUnverified("input is not a tense 1-filter")
    inside = _mask(alg.size, s.members)
    T = alg.op("imp")
    return _relation_to_congruence(alg, inside[T] & inside[T.T], "Θ(S)")


def one_class_filter(alg: AlgebraInstance, theta: Congruence) -> SubsetWitness:
    """1/θ as a tense 1-filter."""
    if not is_congruence(alg, theta):
        raise PreconditionUnverified("input is not a congruence")
    top = alg.lattice.top
    return SubsetWitness({x for x in range(alg.size) if theta.related(x, top)}, "tense_one_filter")


def congruence_transport(alg: AlgebraInstance, theta: Congruence, direction: str,
                         k_alg: AlgebraInstance | None = None) -> Congruence:
    """θ ↦ γ_θ on K(L) (``to_K``) or γ ↦ θ^γ on L (``from_K``)."""
    k_alg = k_alg if k_alg is not None else kalman_K(alg)
    pairs = kalman_pairs(alg.lattice)
    if direction == "to_K":
        if not is_congruence(alg, theta):
            raise PreconditionUnverified("input is not a congruence of L")
        lab = theta.labels
        return Congruence.from_labels([lab[a] * alg.size + lab[b] for a, b in pairs])
    if direction == "from_K":
        if not is_congruence(k_alg, theta):
            raise PreconditionUnverified("input is not a congruence of K(L)")
        index = {p: i for i, p in enumerate(pairs)}
        bot = alg.lattice.bot
        return Congruence.from_labels([theta.labels[index[(a, bot)]] for a in range(alg.size)])
    raise ValueError("direction must be 'to_K' or 'from_K'")


def restrict_to_center(u: AlgebraInstance, eps: Congruence) -> Congruence:
    """ε ∩ C(T)² as a partition of the center's elements."""
    return Congruence.from_labels([eps.labels[e] for e in center_elements(u)])


def _require_itkic1(u):
    _require(check_kleene_ki_profile(u, "itkic1"), f"{u.name} is not an itKI_c1-algebra")


def _center_members(u, s):
    elems = center_elements(u)
    return _mask(u.size, [elems[i] for i in s.members])


def _require_center_filter(u, s, center):
    if s.kind != "tense_one_filter" or not is_tense_one_filter(center, s.members):
        raise PreconditionUnverified("input is not a tense 1-filter of the center")


def theta_S_direct(u: AlgebraInstance, s: SubsetWitness) -> Congruence:
    """θ_S from the four-membership test; S is given in center indices."""
    _require_itkic1(u)
    _require_center_filter(u, s, center_C(u))
    inside = _center_members(u, s)
    T, N, j, c = u.op("imp"), u.op("neg"), u.lattice.join, u.const("c")
    x = np.arange(u.size)[:, None]
    y = np.arange(u.size)[None, :]
    rel = (inside[T[x, j[y, c]]] & inside[T[y, j[x, c]]]
           & inside[T[N[x], j[N[y], c]]] & inside[T[N[y], j[N[x], c]]])
    return _relation_to_congruence(u, rel, "θ_S")


def transport_composite(u: AlgebraInstance, s: SubsetWitness) -> Congruence:
    """The same congruence reached by going round: Θ on C(U), then to
    K(C(U)), then pulled back along beta."""
    _require_itkic1(u)
    center = center_C(u)
    theta = theta_of_filter(center, s)
    gamma = congruence_transport(center, theta, "to_K")
    beta = beta_map(u)
    if not beta.bijective:
        raise PreconditionUnverified("beta is not an isomorphism")
    return Congruence.from_labels([gamma.labels[beta.map[x]] for x in range(u.size)])


def eval_t_term(u: AlgebraInstance, x, y, z):
    """t(x, y, z) = ((x ∧ z) ⇒ y) ⇒ (x ⇒ y)."""
    T, m = u.op("imp"), u.lattice.meet
    return int(T[T[m[x, z], y], T[x, y]])


def ds_filter_bijection(u: AlgebraInstance, w: SubsetWitness) -> SubsetWitness:
    """S ↦ D_S for a tense 1-filter of C(U); D ↦ D ∩ C(T) for a centered
    tense deductive system of U."""
    _require_itkic1(u)
    center = center_C(u)
    if w.kind == "tense_one_filter":
        _require_center_filter(u, w, center)
        inside = _center_members(u, w)
        T, N, j = u.op("imp"), u.op("neg"), u.lattice.join
        c, top = u.const("c"), u.lattice.top
        keep = inside[T[N, c]] & inside[T[top, j[:, c]]]
        return SubsetWitness(np.flatnonzero(keep).tolist(), "centered_tense_ds")
    if w.kind == "centered_tense_ds":
        if not is_centered_tense_ds(u, w.members, center):
            raise PreconditionUnverified("input is not a centered tense deductive system")
        return SubsetWitness(_center_filter(u, w.members), "tense_one_filter")
    raise PreconditionUnverified(f"cannot map a subset of kind {w.kind!r}")
