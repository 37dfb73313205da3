"""One entry point checking an instance against any named profile."""

from __future__ import annotations

import numpy as np

from .algebra import PROFILES, AlgebraInstance, AxiomReport, AxiomResult, check_grid, grid
from .dli import implication_report
from .kleene import check_CK, check_kleene_ki_profile
from .tense import TENSE_SYMBOLS, tense_report

_DLI_LEVEL = {"dli": "dli", "dli+": "dli_plus", "dli1+": "dli1_plus", "heyting": "heyting"}


def _tense(alg, with_T0):
    return tense_report(alg.lattice, alg.op("imp"), *(alg.op(s) for s in TENSE_SYMBOLS), with_T0=with_T0)


def check_profile(alg: AlgebraInstance, profile: str | None = None, include_i6=True) -> AxiomReport:
    """Cumulative axiom report for ``profile`` (defaults to the declared one)."""
    profile = profile or alg.profile
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}")
    lat = alg.lattice
    if profile == "dl":
        return AxiomReport([AxiomResult("bounded-distributive-lattice", True)])
    if profile in _DLI_LEVEL:
        return implication_report(lat, alg.op("imp"), _DLI_LEVEL[profile])
    if profile in ("tdli", "tdli0", "tdli01"):
        level = "dli1_plus" if profile == "tdli01" else "dli_plus"
        rep = implication_report(lat, alg.op("imp"), level)
        return rep.extend(_tense(alg, with_T0=profile != "tdli"))
    if profile == "theyting":
        from .nelson import check_tense_heyting

        rep = implication_report(lat, alg.op("imp"), "heyting")
        if not rep.holds:
            return rep
        return rep.extend(check_tense_heyting(alg))
    if profile in ("kleene", "ckleene", "ki", "tki", "tkic", "itkic1"):
        return check_kleene_ki_profile(alg, profile)
    if profile == "nelson-itkic1":
        rep = check_kleene_ki_profile(alg, "ki")
        ok, w = check_CK(alg)
        rep.add(AxiomResult("CK", ok, w))
        rep.add(check_grid("x=>x=1", np.diag(alg.op("imp")) == lat.top))
    else:  # tnelson
        rep = check_kleene_ki_profile(alg, "itkic1")
    if include_i6:
        T = alg.op("imp")
        x, y = grid(alg.size, 2)
        rep.add(check_grid("I6", lat.leq[x, T[y, x]]))
        if rep.holds:
            from .nelson import check_nelson_itkic1

            rep.extend([r for r in check_nelson_itkic1(alg) if r.id == "center-heyting"])
    return rep
