"""Tense Heyting algebras, the Fidel-Vakarelov implication on K(A), and
centered Nelson checks."""

from __future__ import annotations

import numpy as np

from .algebra import AlgebraInstance, AxiomReport, AxiomResult, check_grid, grid
from .dli import heyting_residual, implication_report
from .errors import NoResidual, PreconditionUnverified
from .kalman import center_C, kalman_K, kalman_pairs
from .kleene import check_kleene_ki_profile
from .tense import TENSE_SYMBOLS, tense_report


def _require(report, what):
    if not report.holds:
        raise PreconditionUnverified(what, report)


def check_tense_heyting(alg: AlgebraInstance) -> AxiomReport:
    """(T0)-(T4) on a Heyting algebra; (T5) and (T6) are then re-derived and
    reported as ``T5 (derived)`` / ``T6 (derived)``."""
    _require(implication_report(alg.lattice, alg.op("imp"), "heyting"),
             f"{alg.name} is not a Heyting algebra")
    full = tense_report(alg.lattice, alg.op("imp"), *(alg.op(s) for s in TENSE_SYMBOLS), with_T0=True)
    rep = AxiomReport([r for r in full if r.id in ("T0", "T1", "T2", "T3", "T4")])
    if rep.holds:
        for r in full:
            if r.id in ("T5", "T6"):
                rep.add(AxiomResult(f"{r.id} (derived)", r.holds, r.witness))
    else:
        rep.notes.append("T0-T4 fail: T5/T6 not derived")
    return rep


def fv_kalman(alg: AlgebraInstance, name=None) -> AlgebraInstance:
    """K(A) for Heyting A with ``(a,b) ⇒ (d,e) = (a→d, a∧e)`` as ``imp``.

    The general KI implication is kept alongside as ``imp_ki``.
    """
    _require(implication_report(alg.lattice, alg.op("imp"), "heyting"),
             f"{alg.name} is not a Heyting algebra")
    if alg.has(*TENSE_SYMBOLS):
        _require(check_tense_heyting(alg), f"{alg.name} is not a tense Heyting algebra")
    k = kalman_K(alg)
    pairs = kalman_pairs(alg.lattice)
    index = {p: i for i, p in enumerate(pairs)}
    T, m = alg.op("imp"), alg.lattice.meet
    fv = np.array([[index[(int(T[a, d]), int(m[a, e]))] for d, e in pairs] for a, b in pairs])
    ops = dict(k.ops)
    ops["imp_ki"] = ops["imp"]
    ops["imp"] = fv
    return AlgebraInstance(k.lattice, ops, k.profile, name or f"Kfv({alg.name})")


def check_centered_nelson(n_alg: AlgebraInstance) -> AxiomReport:
    """Centered Kleene reduct, ``x ⇒ y = x → (∼x ∨ y)`` for the lattice's own
    Heyting implication, and ``(x∧y) ⇒ z = x ⇒ (y ⇒ z)``."""
    lat = n_alg.lattice
    rep = check_kleene_ki_profile(n_alg, "ckleene")
    residual = heyting_residual(lat)
    if residual is None:
        raise NoResidual(f"{n_alg.name}: lattice has no relative pseudocomplement")
    T, N, m, j = n_alg.op("imp"), n_alg.op("neg"), lat.meet, lat.join
    x, y, z = grid(lat.size, 3)
    a, b = grid(lat.size, 2)
    rep.add(check_grid("quasi-Nelson", T[a, b] == residual[a, j[N[a], b]]))
    rep.add(check_grid("Nelson", T[m[x, y], z] == T[x, T[y, z]]))
    return rep


def check_nelson_itkic1(u: AlgebraInstance) -> AxiomReport:
    """(I6) for ⇒; when it holds, also that C(U) is a Heyting algebra."""
    tense = u.has("G", "H")
    if tense:
        pre = check_kleene_ki_profile(u, "itkic1")
    else:
        from .profiles import check_profile
        pre = check_profile(u, "nelson-itkic1", include_i6=False)
    _require(pre, f"{u.name} is not an itKI_c1-algebra")
    T, leq = u.op("imp"), u.lattice.leq
    x, y = grid(u.size, 2)
    rep = AxiomReport()
    rep.add(check_grid("I6", leq[x, T[y, x]]))
    if rep.holds:
        center = center_C(u)
        heyting = implication_report(center.lattice, center.op("imp"), "heyting")
        # witnesses would be center indices, so none is attached
        rep.add(AxiomResult("center-heyting", heyting.holds))
    return rep
