"""Kalman's pair construction K, the center construction C, the natural
maps alpha and beta, and the action of K and C on morphisms."""

from __future__ import annotations

import numpy as np

from .algebra import (AlgebraInstance, AxiomReport, AxiomResult, Morphism,
                      is_homomorphism)
from .dli import implication_report
from .errors import CenterNotClosed, PreconditionUnverified
from .kleene import (center_elements, check_CK, check_kleene_ki_profile,
                     derived_F, derived_P)
from .lattice import FiniteLattice
from .tense import TENSE_SYMBOLS, tense_report


def _is_tense_dli(alg):
    return alg.has(*TENSE_SYMBOLS)


def _is_tense_ki(alg):
    return alg.has("G", "H")


def _require(report, what):
    if not report.holds:
        raise PreconditionUnverified(what, report)


def dli_report(alg: AlgebraInstance, with_T0=True):
    """DLI+ axioms, plus (T0)-(T6) when the instance carries tense operators."""
    rep = implication_report(alg.lattice, alg.op("imp"), "dli_plus")
    if _is_tense_dli(alg):
        rep.extend(tense_report(alg.lattice, alg.op("imp"),
                                *(alg.op(s) for s in TENSE_SYMBOLS), with_T0=with_T0))
    return rep


def kalman_pairs(lattice: FiniteLattice):
    """Disjoint pairs ``(a, b)``, ordered by ``a`` ascending then ``b`` descending."""
    m, bot = lattice.meet, lattice.bot
    pairs = [(a, b) for a in range(lattice.size) for b in range(lattice.size) if m[a, b] == bot]
    return sorted(pairs, key=lambda p: (p[0], -p[1]))


def kalman_K(alg: AlgebraInstance, name=None) -> AlgebraInstance:
    """K(L): the KI-algebra on disjoint pairs of a (tense) DLI+-algebra."""
    _require(dli_report(alg, with_T0=False), f"{alg.name} is not a (tense) DLI+-algebra")
    lat = alg.lattice
    m, j, leq, bot, top = lat.meet, lat.join, lat.leq, lat.bot, lat.top
    pairs = kalman_pairs(lat)
    index = {p: i for i, p in enumerate(pairs)}
    names = [f"({lat.names[a]},{lat.names[b]})" for a, b in pairs]
    A = np.array([p[0] for p in pairs])
    B = np.array([p[1] for p in pairs])
    order = leq[A[:, None], A[None, :]] & leq[B[None, :], B[:, None]]
    klat = FiniteLattice(names, order)

    def lookup(first, second):
        return np.vectorize(lambda a, b: index[(int(a), int(b))], otypes=[np.int64])(first, second)

    T = alg.op("imp")
    a, b = A[:, None], B[:, None]
    x, y = A[None, :], B[None, :]
    ops = {
        "imp": lookup(m[T[a, x], T[y, b]], m[a, y]),
        "neg": lookup(B, A),
        "c": index[(bot, bot)],
    }
    tense = _is_tense_dli(alg)
    if tense:
        G, H, F, P = (alg.op(s) for s in TENSE_SYMBOLS)
        ops["G"] = lookup(G[A], F[B])
        ops["H"] = lookup(H[A], P[B])
    if not tense:
        profile = "ki"
    else:
        t0 = alg.op("G")[bot] == bot and alg.op("H")[bot] == bot
        refl = bool(np.all(np.diag(T) == top))
        profile = "itkic1" if t0 and refl else ("tkic" if t0 else "tki")
    return AlgebraInstance(klat, ops, profile, name or f"K({alg.name})")


def center_C(u: AlgebraInstance, name=None) -> AlgebraInstance:
    """C(U): the elements above c with the restricted implication and, when
    present, G, H and the derived F, P."""
    tense = _is_tense_ki(u)
    level = "tkic" if tense else "ki"
    _require(check_kleene_ki_profile(u, level), f"{u.name} does not satisfy {level}")
    lat = u.lattice
    elems = center_elements(u)
    local = {e: i for i, e in enumerate(elems)}
    E = np.array(elems)
    clat = FiniteLattice([lat.names[e] for e in elems], np.asarray(lat.leq)[E[:, None], E[None, :]])

    def restrict(sym, table):
        out = np.empty(table.shape, dtype=np.int64)
        for idx in np.ndindex(table.shape):
            v = int(table[idx])
            if v not in local:
                raise CenterNotClosed(sym, tuple(int(E[i]) for i in idx))
            out[idx] = local[v]
        return out

    ops = {"imp": restrict("imp", u.op("imp")[E[:, None], E[None, :]])}
    if tense:
        ops["G"] = restrict("G", u.op("G")[E])
        ops["H"] = restrict("H", u.op("H")[E])
        ops["F"] = restrict("F", derived_F(u)[E])
        ops["P"] = restrict("P", derived_P(u)[E])
    return AlgebraInstance(clat, ops, "tdli0" if tense else "dli+", name or f"C({u.name})")


def _certified(fmap, src, dst, what):
    m = is_homomorphism(fmap, src, dst)
    if not m:
        raise AssertionError(f"{what} fails to preserve {m.symbol} at {m.args}")
    return m


def alpha_map(alg: AlgebraInstance) -> Morphism:
    """x ↦ (x, 0), from L to C(K(L))."""
    _require(dli_report(alg, with_T0=True), f"{alg.name} is not a tense DLI+_0-algebra")
    k = kalman_K(alg)
    ck = center_C(k)
    pairs = kalman_pairs(alg.lattice)
    local = {e: i for i, e in enumerate(center_elements(k))}
    bot = alg.lattice.bot
    fmap = [local[pairs.index((x, bot))] for x in range(alg.size)]
    return _certified(fmap, alg, ck, "alpha")


def beta_map(u: AlgebraInstance) -> Morphism:
    """x ↦ (x∨c, ∼x∨c), from U to K(C(U)); ``surjective`` reports (CK)."""
    c_alg = center_C(u)
    kc = kalman_K(c_alg)
    j, N, c = u.lattice.join, u.op("neg"), u.const("c")
    local = {e: i for i, e in enumerate(center_elements(u))}
    index = {p: i for i, p in enumerate(kalman_pairs(c_alg.lattice))}
    fmap = [index[(local[int(j[x, c])], local[int(j[N[x], c])])] for x in range(u.size)]
    return _certified(fmap, u, kc, "beta")


def lift_morphism(f: Morphism, direction: str) -> Morphism:
    """K(f)(a, b) = (f(a), f(b))  or  C(f)(x) = f(x)."""
    if not is_homomorphism(f.map, f.source, f.target):
        raise PreconditionUnverified("input map is not a homomorphism")
    if direction == "K":
        for alg in (f.source, f.target):
            _require(dli_report(alg, with_T0=True), f"{alg.name} is not a tense DLI+_0-algebra")
        src, dst = kalman_K(f.source), kalman_K(f.target)
        tgt_index = {p: i for i, p in enumerate(kalman_pairs(f.target.lattice))}
        fmap = [tgt_index[(f.map[a], f.map[b])] for a, b in kalman_pairs(f.source.lattice)]
    elif direction == "C":
        src, dst = center_C(f.source), center_C(f.target)
        local = {e: i for i, e in enumerate(center_elements(f.target))}
        fmap = [local[f.map[x]] for x in center_elements(f.source)]
    else:
        raise ValueError("direction must be 'K' or 'C'")
    return _certified(fmap, src, dst, f"{direction}(f)")


def _compose_maps(*maps):
    """Right-to-left composite of plain index maps."""
    out = list(range(len(maps[-1])))
    for m in reversed(maps):
        out = [m[x] for x in out]
    return tuple(out)


def equivalence_report(x: AlgebraInstance, side: str, morphisms=()) -> AxiomReport:
    """Round-trip check on one object of either category.

    ``side="dli"``: alpha is an isomorphism L ≅ C(K(L)).
    ``side="ki"``: beta is an isomorphism U ≅ K(C(U)) (requires (CK)).
    Each morphism in ``morphisms`` (with source ``x``) adds a naturality
    square check.
    """
    rep = AxiomReport()
    if side == "dli":
        _require(dli_report(x, with_T0=True), f"{x.name} is not a tense DLI+_0-algebra")
        nat = alpha_map(x)
        rep.add(AxiomResult("alpha-homomorphism", True))
        rep.add(AxiomResult("alpha-bijective", nat.bijective))
        for i, f in enumerate(morphisms):
            lifted = lift_morphism(lift_morphism(f, "K"), "C")
            lhs = _compose_maps(alpha_map(f.target).map, f.map)
            rhs = _compose_maps(lifted.map, nat.map)
            bad = [v for v in range(x.size) if lhs[v] != rhs[v]]
            rep.add(AxiomResult(f"naturality[{i}]", not bad, (bad[0],) if bad else None))
    elif side == "ki":
        level = "tkic" if _is_tense_ki(x) else "ki"
        pre = check_kleene_ki_profile(x, level)
        ok, w = check_CK(x)
        pre.add(AxiomResult("CK", ok, w))
        _require(pre, f"{x.name} does not satisfy {level} + CK")
        nat = beta_map(x)
        rep.add(AxiomResult("beta-homomorphism", True))
        rep.add(AxiomResult("beta-injective", nat.injective))
        rep.add(AxiomResult("beta-surjective", nat.surjective))
        for i, g in enumerate(morphisms):
            lifted = lift_morphism(lift_morphism(g, "C"), "K")
            lhs = _compose_maps(beta_map(g.target).map, g.map)
            rhs = _compose_maps(lifted.map, nat.map)
            bad = [v for v in range(x.size) if lhs[v] != rhs[v]]
            rep.add(AxiomResult(f"naturality[{i}]", not bad, (bad[0],) if bad else None))
    else:
        raise ValueError("side must be 'dli' or 'ki'")
    return rep
