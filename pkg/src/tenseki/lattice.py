"""Finite bounded distributive lattices stored as index tables.

Elements are the integers ``0..n-1`` in declaration order; names are only
used for presentation.  ``leq``, ``meet`` and ``join`` are read-only numpy
arrays so that axiom checks can be evaluated on whole grids at once.
"""

from __future__ import annotations

from itertools import product

import numpy as np

from .errors import NotALattice, NotAPoset, NotBounded, NotDistributive


def _frozen(a):
    a = np.array(a)
    a.setflags(write=False)
    return a


def transitive_closure(rel):
    """Reflexive-transitive closure of a square boolean matrix (Warshall)."""
    r = np.array(rel, dtype=bool)
    np.fill_diagonal(r, True)
    for k in range(len(r)):
        r |= r[:, k:k + 1] & r[k:k + 1, :]
    return r


class FiniteLattice:
    """A bounded distributive lattice given by its order relation.

    The constructor validates everything and raises one of the
    :class:`~tenseki.errors.LatticeError` subclasses with a witness when the
    relation is not a bounded distributive lattice order.
    """

    def __init__(self, names, leq):
        names = tuple(str(x) for x in names)
        leq = np.array(leq, dtype=bool)
        n = len(names)
        if n == 0:
            raise NotBounded("the empty poset has no bounds")
        if leq.shape != (n, n):
            raise ValueError(f"leq must be {n}x{n}, got {leq.shape}")
        if len(set(names)) != n:
            raise ValueError("element names must be distinct")
        self.names = names
        self.size = n
        self._index = {x: i for i, x in enumerate(names)}
        self._check_poset(leq)
        self.leq = _frozen(leq)
        self.bot, self.top = self._find_bounds()
        self.meet = _frozen(self._bound_table(leq.T, "greatest lower bound"))
        self.join = _frozen(self._bound_table(leq, "least upper bound"))
        self._check_distributive()

    # -- construction checks ------------------------------------------------

    def _check_poset(self, leq):
        names = self.names
        bad = np.argwhere(~np.diag(leq))
        if len(bad):
            i = bad[0][0]
            raise NotAPoset(f"{names[i]} <= {names[i]} missing", (names[i],) * 3)
        sym = leq & leq.T & ~np.eye(self.size, dtype=bool)
        bad = np.argwhere(sym)
        if len(bad):
            i, j = bad[0]
            raise NotAPoset(
                f"antisymmetry fails: {names[i]} <= {names[j]} <= {names[i]}",
                (names[i], names[j], names[i]),
            )
        # i<=k and k<=j but not i<=j
        trans = leq[:, :, None] & leq[None, :, :] & ~leq[:, None, :]
        bad = np.argwhere(trans)
        if len(bad):
            i, k, j = bad[0]
            raise NotAPoset(
                f"transitivity fails: {names[i]} <= {names[k]} <= {names[j]}",
                (names[i], names[k], names[j]),
            )

    def _find_bounds(self):
        leq = np.asarray(self.leq)
        mins = [i for i in range(self.size) if not (leq[:, i].sum() > 1)]
        maxs = [i for i in range(self.size) if not (leq[i, :].sum() > 1)]
        if len(mins) != 1:
            w = tuple(self.names[i] for i in mins[:3])
            raise NotBounded(f"no least element; minimal elements {list(w)}", w)
        if len(maxs) != 1:
            w = tuple(self.names[i] for i in maxs[:3])
            raise NotBounded(f"no greatest element; maximal elements {list(w)}", w)
        return mins[0], maxs[0]

    def _bound_table(self, up, what):
        # up[x, y] means "x is below y" in the direction we are bounding.
        # bounds[i, j, k]: k is an upper bound of i and j
        n = self.size
        bounds = up[:, None, :] & up[None, :, :]
        table = np.empty((n, n), dtype=np.int64)
        for i, j in product(range(n), repeat=2):
            cand = np.flatnonzero(bounds[i, j])
            # the least one is below every other candidate
            best = [k for k in cand if up[k, cand].all()]
            if not best:
                raise NotALattice(
                    f"{self.names[i]} and {self.names[j]} have no {what}",
                    (self.names[i], self.names[j], None),
                )
            table[i, j] = best[0]
        return table

    def _check_distributive(self):
        m, j = self.meet, self.join
        lhs = m[:, j][:, :, :]  # lhs[i, a, b] = i ∧ (a ∨ b)
        rhs = j[m[:, :, None], m[:, None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            i, a, b = bad[0]
            w = (self.names[i], self.names[a], self.names[b])
            raise NotDistributive(f"{w[0]} ∧ ({w[1]} ∨ {w[2]}) differs from the distributed form", w)

    # -- accessors ----------------------------------------------------------

    def index(self, name):
        return self._index[str(name)]

    def le(self, i, j):
        return bool(self.leq[i, j])

    def covers(self):
        """Cover pairs ``(i, j)`` with ``i < j`` and nothing strictly between."""
        lt = np.asarray(self.leq) & ~np.eye(self.size, dtype=bool)
        between = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        return [tuple(map(int, p)) for p in np.argwhere(lt & ~between)]

    def join_irreducibles(self):
        lower = {i: 0 for i in range(self.size)}
        for _a, b in self.covers():
            lower[b] += 1
        return [i for i in range(self.size) if lower[i] == 1]

    def meet_irreducibles(self):
        upper = {i: 0 for i in range(self.size)}
        for a, _b in self.covers():
            upper[a] += 1
        return [i for i in range(self.size) if upper[i] == 1]

    def up_set(self, x):
        return [int(i) for i in np.flatnonzero(self.leq[x])]

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.names == other.names and np.array_equal(self.leq, other.leq)

    def __hash__(self):
        return hash((self.names, self.leq.tobytes()))

    def __repr__(self):
        return f"FiniteLattice({list(self.names)}, covers={self.covers()})"


def build_lattice(names, order_pairs):
    """Build a lattice from element names and (not necessarily cover) pairs.

    The reflexive-transitive closure of ``order_pairs`` is taken first.
    """
    names = [str(x) for x in names]
    if len(set(names)) != len(names):
        raise ValueError("element names must be distinct")
    index = {x: i for i, x in enumerate(names)}
    rel = np.zeros((len(names), len(names)), dtype=bool)
    for a, b in order_pairs:
        try:
            rel[index[str(a)], index[str(b)]] = True
        except KeyError as exc:
            raise KeyError(f"order pair references undeclared element {exc.args[0]!r}") from None
    return FiniteLattice(names, transitive_closure(rel))


def chain(n, names=None):
    names = list(names) if names is not None else [str(i) for i in range(n)]
    return build_lattice(names, list(zip(names, names[1:])))


def product_lattice(a: FiniteLattice, b: FiniteLattice):
    """Cartesian product with componentwise order, elements ordered (i, j)."""
    pairs = list(product(range(a.size), range(b.size)))
    names = [f"{a.names[i]}{b.names[j]}" for i, j in pairs]
    if len(set(names)) != len(names):
        names = [f"({a.names[i]},{b.names[j]})" for i, j in pairs]
    leq = np.array([[a.leq[i, k] and b.leq[j, l] for k, l in pairs] for i, j in pairs])
    return FiniteLattice(names, leq)
