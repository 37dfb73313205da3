import numpy as np
import pytest

from tenseki.algebra import AlgebraInstance
from tenseki.corpus import build_corpus
from tenseki.errors import MissingOperation, PreconditionUnverified
from tenseki.kalman import beta_map, kalman_K
from tenseki.kleene import (center_elements, check_CK, check_kleene_ki_profile,
                            derived_F, derived_P, verify_ki_derived)
from tenseki.lattice import chain
from tenseki.tense import TenseQuadruple, with_tense

LEVELS = ["kleene", "ckleene", "ki", "tki", "tkic", "itkic1"]


@pytest.fixture(scope="module")
def kb2(fx):
    return kalman_K(fx["B2"])


@pytest.fixture(scope="module")
def fx():
    from tenseki.corpus import fixtures
    return dict(zip(("B2", "C3", "B2xB2"), fixtures()))


@pytest.mark.parametrize("level", LEVELS)
def test_kb2_passes_every_level(kb2, level):
    assert check_kleene_ki_profile(kb2, level).holds


def test_levels_grow(kb2):
    sizes = [len(check_kleene_ki_profile(kb2, lvl).results) for lvl in LEVELS]
    assert sizes == sorted(sizes) and len(set(sizes)) == len(sizes)


def test_three_chain_kleene(kb2):
    u = AlgebraInstance(chain(3), {"neg": [2, 1, 0]}, "kleene")
    assert check_kleene_ki_profile(u, "kleene").holds


def test_identity_negation_breaks_de_morgan():
    u = AlgebraInstance(chain(3), {"neg": [0, 1, 2], "c": 1}, "ckleene")
    rep = check_kleene_ki_profile(u, "ckleene")
    assert rep["DM1"].holds
    # first failing pair in index order; the pair (0, 1) fails as well
    assert not rep["DM2"].holds and rep["DM2"].witness == (0, 1)
    lat = u.lattice
    assert lat.join[0, 2] == 2 and lat.meet[0, 2] == 0


def test_missing_center_constant():
    u = AlgebraInstance(chain(3), {"neg": [2, 1, 0]}, "kleene")
    with pytest.raises(MissingOperation):
        check_kleene_ki_profile(u, "ckleene")


def test_unknown_level(kb2):
    with pytest.raises(ValueError):
        check_kleene_ki_profile(kb2, "boolean")


def test_derived_f_p(kb2):
    N = kb2.op("neg")
    assert np.array_equal(derived_F(kb2), N[kb2.op("G")[N]])
    assert np.array_equal(derived_P(kb2), N[kb2.op("H")[N]])


@pytest.mark.parametrize("name", ["B2", "C3", "B2xB2"])
def test_derived_ki_properties_on_k_images(fx, name):
    rep = verify_ki_derived(kalman_K(fx[name]))
    assert rep.holds
    assert {"t7", "t16", "c1", "c2", "c3"} <= set(rep.ids)


def test_uncentered_tense_ki_skips_c_items(b2_classical):
    lifted = with_tense(b2_classical, TenseQuadruple((1, 1), (1, 1), (0, 0), (0, 0)))
    u = kalman_K(lifted)
    assert u.profile == "tki"
    rep = verify_ki_derived(u)
    assert rep.holds and "c1" not in rep.ids
    assert rep.notes == ["not centered: c1-c3 skipped"]


def test_derived_needs_tki(kb2):
    broken = kb2.replace(ops={"G": np.full(kb2.size, kb2.lattice.bot)})
    with pytest.raises(PreconditionUnverified):
        verify_ki_derived(broken)


@pytest.mark.parametrize("name", ["B2", "C3"])
def test_ck_holds_on_k_images(fx, name):
    assert check_CK(kalman_K(fx[name])) == (True, None)


def test_ck_on_single_element():
    u = AlgebraInstance(chain(1), {"neg": [0], "c": 0}, "ckleene")
    assert check_CK(u) == (True, None)


def test_center_is_unique(kb2):
    N = kb2.op("neg")
    assert np.flatnonzero(N == np.arange(kb2.size)).tolist() == [kb2.const("c")]
    assert center_elements(kb2) == [1, 2]


def test_ck_failure_matches_beta():
    corpus = build_corpus()
    failing = [u for u in corpus.ki if not check_CK(u)[0]]
    assert failing, "corpus should contain algebras without (CK)"
    for u in failing:
        ok, (x, y) = check_CK(u)
        c = u.const("c")
        assert u.lattice.leq[c, x] and u.lattice.leq[c, y]
        assert not beta_map(u).surjective
