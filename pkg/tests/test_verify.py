import random

from hypothesis import given, settings
from hypothesis import strategies as st

from liecert import linalg
from liecert.algebra import _phi_matrix, sample_point
from liecert.catalog import abelian, euclidean, gl, heisenberg
from liecert.families import family_affn, family_en, gelfand_zetlin, shift_family
from liecert.families.base import CommutingFamily, make_family
from liecert.poly import poisson_bracket, variables
from liecert.verify import (
    COMMUTATIVITY_FAILED,
    COMPLETE,
    INCOMPLETE,
    check_commutes,
    completeness_report,
    isotropy_check,
    jacobian_rank,
    relative_isotropy,
)


def _coords(A):
    return make_family(A, variables(A.dim), "coords")


def test_single_member_passes():
    A = gl(2)
    F = make_family(A, [variables(4)[1] ** 3], "one")
    assert check_commutes(F) == []
    assert completeness_report(F).verdict == INCOMPLETE


def test_affn3_brackets_vanish():
    assert all(p.zero for p in check_commutes(family_affn(3)))


def test_noncommuting_coordinates_flagged_with_witness():
    A = gl(2)
    x = variables(4)
    F = make_family(A, [x[1], x[2]], "pair")
    (p,) = check_commutes(F)
    assert not p.zero and p.witness == x[0] - x[3]
    report = completeness_report(F)
    assert report.verdict == COMMUTATIVITY_FAILED
    assert report.to_dict()["commutativity"]["failures"] == [{"i": 1, "j": 2, "bracket": "x1 - x4"}]


def test_rank_examples():
    assert jacobian_rank(_coords(gl(3))) == 9
    A = gl(2)
    f = variables(4)[0] + 2 * variables(4)[3]
    assert jacobian_rank(make_family(A, [f, f * f], "pow")) == 1
    assert jacobian_rank(gelfand_zetlin(gl(3))) == 6


def test_isotropy_examples():
    F = family_affn(2)
    assert isotropy_check(F, [3, -1, 4, 1, -5, 9]).passed
    assert isotropy_check(_coords(abelian(3)), [1, 2, 3]).passed
    A = heisenberg(1)
    x = variables(3)
    res = isotropy_check(make_family(A, [x[0], x[1]], "pair"), [2, 7, 5])
    assert not res.passed
    assert res.defect == ((0, 5), (-5, 0))


def test_report_verdicts():
    en = completeness_report(family_en(3, seed=0))
    assert en.verdict == COMPLETE and en.rank == 4
    n = 3
    lin = make_family(gl(n), [variables(n * n)[0], variables(n * n)[4], variables(n * n)[8]], "diag")
    assert completeness_report(lin).verdict == INCOMPLETE
    sh = completeness_report(shift_family(gl(3), seed=5))
    assert sh.verdict == COMPLETE and sh.rank == 6


def test_report_is_deterministic():
    F = family_en(3, seed=0)
    assert completeness_report(F, seed=9).to_json() == completeness_report(F, seed=9).to_json()


def test_report_respects_avoid_locus():
    A = heisenberg(1)
    x = variables(3)
    F = CommutingFamily(A, (x[2],), avoid=(x[0],))
    r = completeness_report(F, seed=4, trials=6, bound=2)
    assert all(p.point[0] != 0 for p in r.isotropy)


FAMILIES = [family_affn(2), family_affn(3), family_en(3, seed=0), gelfand_zetlin(gl(3)), shift_family(gl(2), seed=1)]


@given(st.sampled_from(range(len(FAMILIES))), st.integers(0, 2**32))
@settings(max_examples=25, deadline=None)
def test_certified_families_are_isotropic_everywhere(which, seed):
    F = FAMILIES[which]
    x = sample_point(random.Random(seed), F.algebra.dim, 50)
    assert isotropy_check(F, x).passed


@given(st.sampled_from(range(len(FAMILIES))), st.integers(0, 2**32), st.data())
@settings(max_examples=25, deadline=None)
def test_rank_bounds(which, seed, data):
    F = FAMILIES[which]
    keep = data.draw(st.lists(st.sampled_from(range(len(F.members))), min_size=1, unique=True))
    G = F.replace_members([F.members[i] for i in sorted(keep)])
    r = completeness_report(G, seed=seed % 1000, trials=3, bound=100)
    assert r.rank <= min(len(G.members), G.algebra.dim)
    assert all(r.bound_ok)
    assert r.verdict != COMMUTATIVITY_FAILED


def test_bound_check_against_poisson_corank():
    F = family_en(3, seed=0)
    A = F.algebra
    r = completeness_report(F, trials=4)
    for res in r.isotropy:
        corank = A.dim - linalg.rank(_phi_matrix(A, res.point))
        assert 2 * r.rank - corank <= A.dim


def test_relative_isotropy():
    F = family_en(3, seed=0)
    x = [3, 1, -2, 5, 7, 11]
    whole = relative_isotropy(F, range(len(F.members)), x)
    assert whole.isotropic and whole.dim_dA == 4
    coords = relative_isotropy(F, [0, 1, 2], x)
    assert coords.isotropic and not coords.maximal


def test_brackets_match_direct_computation():
    A = euclidean(3)
    F = family_en(3, seed=0)
    for p in check_commutes(F):
        assert poisson_bracket(F.members[p.i], F.members[p.j], A).is_zero() == p.zero


def test_empty_family():
    F = CommutingFamily(gl(1), ())
    r = completeness_report(F)
    assert r.rank == 0 and r.verdict == INCOMPLETE
