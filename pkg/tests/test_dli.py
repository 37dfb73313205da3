import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tenseki.algebra import AlgebraInstance
from tenseki.corpus import distributive_lattices, dli_plus_implications
from tenseki.dli import (check_heyting_characterization, check_implication_profile,
                         check_monotonicity_laws, heyting_residual, implication_report)
from tenseki.errors import MissingOperation
from tenseki.lattice import chain
from tenseki.oracles import max_scan_residual

from conftest import table

SMALL = distributive_lattices(4)


def with_imp(lat, imp, profile="dl"):
    return AlgebraInstance(lat, {"imp": imp}, profile)


def test_b2_classical_is_heyting(b2_classical):
    assert check_implication_profile(b2_classical, "heyting").holds
    assert b2_classical.op("imp").tolist() == [[1, 1], [0, 1]]


def test_b2_with_one_to_zero_true_fails_i5():
    alg = with_imp(chain(2), table([[1, 1], [1, 1]]))
    rep = check_implication_profile(alg, "dli_plus")
    assert rep.failed[0].id == "I5"
    assert rep["I5"].witness == (1, 0)


def test_three_chain_godel_implication(c3):
    imp = np.where(c3.leq, c3.top, np.arange(3)[None, :])
    assert check_implication_profile(with_imp(c3, imp), "heyting").holds
    assert np.array_equal(imp, heyting_residual(c3))


def test_three_chain_residual_values(c3):
    r = heyting_residual(c3)
    m = c3.index("m")
    assert r[m, 0] == 0
    assert r[2, m] == m
    assert all(r[x, y] == 2 for x in range(3) for y in range(3) if x <= y)


@pytest.mark.parametrize("lat", distributive_lattices(6), ids=lambda l: f"n{l.size}")
def test_residual_matches_max_scan_and_is_heyting(lat):
    r = heyting_residual(lat)
    assert np.array_equal(r, max_scan_residual(lat))
    assert implication_report(lat, r, "heyting").holds


def test_square_residual(square):
    r = heyting_residual(square)
    a, b = square.join_irreducibles()
    assert r[a, b] == b and r[b, a] == a
    assert r[a, square.bot] == b


def test_levels_are_cumulative(b2_classical):
    ids = {lvl: check_implication_profile(b2_classical, lvl).ids for lvl in
           ("dli", "dli_plus", "dli1_plus", "i6", "heyting")}
    assert ids["dli"] == ["I1", "I2", "I3", "I4"]
    assert ids["heyting"][:-1] == ids["i6"]
    assert set(ids["dli_plus"]) < set(ids["dli1_plus"])


def test_aliases_accepted(b2_classical):
    assert check_implication_profile(b2_classical, "dli+").holds


def test_unknown_level(b2_classical):
    with pytest.raises(ValueError):
        check_implication_profile(b2_classical, "boolean")


def test_missing_implication():
    with pytest.raises(MissingOperation):
        check_implication_profile(AlgebraInstance(chain(2), {}, "dl"), "dli")


@pytest.mark.parametrize("name,imp", [
    ("classical", [[1, 1], [0, 1]]),
])
def test_monotonicity_on_b2(name, imp):
    rep = check_monotonicity_laws(with_imp(chain(2), table(imp)))
    assert rep.holds and not rep.notes


def test_monotonicity_on_three_chain(fx):
    assert check_monotonicity_laws(fx["C3"]).holds


def test_monotonicity_flags_non_dli_input():
    alg = with_imp(chain(2), table([[0, 1], [0, 1]]))  # 0→0 = 0 breaks I3
    assert not check_implication_profile(alg, "dli").holds
    rep = check_monotonicity_laws(alg)
    assert rep.notes and "not a DLI" in rep.notes[0]


@pytest.mark.parametrize("lat", SMALL, ids=lambda l: f"n{l.size}")
def test_every_dli_algebra_is_monotone(lat):
    for imp in dli_plus_implications(lat):
        assert check_monotonicity_laws(with_imp(lat, imp)).holds


@pytest.mark.parametrize("imp,expected", [
    ([[1, 1], [0, 1]], (True, True, True)),
    ([[1, 1], [1, 1]], (False, True, False)),
])
def test_heyting_characterization_b2(imp, expected):
    assert check_heyting_characterization(with_imp(chain(2), table(imp))) == expected


def test_heyting_characterization_three_chain(fx):
    assert check_heyting_characterization(fx["C3"]) == (True, True, True)


@pytest.mark.parametrize("lat", SMALL, ids=lambda l: f"n{l.size}")
def test_characterization_over_all_dli_plus_tables(lat):
    for imp in dli_plus_implications(lat):
        dli1, i6, heyting = check_heyting_characterization(with_imp(lat, imp))
        assert heyting == (dli1 and i6)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL).flatmap(
    lambda lat: st.tuples(st.just(lat), st.lists(st.integers(0, lat.size - 1),
                                                 min_size=lat.size ** 2, max_size=lat.size ** 2))))
def test_characterization_on_random_tables(case):
    lat, flat = case
    imp = np.array(flat).reshape(lat.size, lat.size)
    dli1, i6, heyting = check_heyting_characterization(with_imp(lat, imp))
    assert heyting == (dli1 and i6)
