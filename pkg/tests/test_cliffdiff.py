from itertools import combinations

import pytest

from quadalg.cliffdiff import CliffDiffContext
from quadalg.engine import AlgebraError, anticommutator, commutator
from quadalg.fields import Gauss


@pytest.fixture(scope="module")
def ctx():
    return CliffDiffContext(6)


def test_context_validation():
    with pytest.raises(AlgebraError):
        CliffDiffContext(5)


def test_sigma(ctx):
    s12 = ctx.sigma(1, 2)
    assert s12 * s12 == ctx.one() * Gauss("1/4")
    assert anticommutator(ctx.g(1), ctx.g(1)) == -2 * ctx.one()
    assert commutator(ctx.sigma(1, 2), ctx.sigma(3, 4)).is_zero()
    with pytest.raises(AlgebraError):
        ctx.sigma(2, 2)


def test_rotation_invariance(ctx):
    o_all = ctx.osp(tuple(range(1, 7)))
    for (mu, nu) in ((1, 2), (2, 5), (3, 6)):
        J = ctx.J_rot(mu, nu)
        assert commutator(J, o_all.jminus).is_zero()
        assert commutator(J, o_all.jplus).is_zero()
        assert commutator(J, o_all.j0).is_zero()
    assert commutator(ctx.J_rot(1, 2), ctx.J_rot(3, 4)).is_zero()


def test_osp_realizations_all_even_subsets(ctx):
    for size in (2, 4, 6):
        for A in combinations(range(1, 7), size):
            o = ctx.osp(A)   # constructor verifies the relations
            assert (o.s * o.s - 1).is_zero()
            # in this realization the anticommutator closes on +2 J0
            assert (anticommutator(o.jplus, o.jminus) - 2 * o.j0).is_zero()
    with pytest.raises(AlgebraError):
        ctx.osp((1, 2, 3))
    with pytest.raises(AlgebraError):
        ctx.osp(())


def test_osp_casimir_centrality(ctx):
    A = (1, 2, 3, 4)
    o = ctx.osp(A)
    C = o.casimir()
    for g in (o.j0, o.jplus, o.jminus, o.s):
        assert commutator(C, g).is_zero()


def test_validated_bi_generators(ctx):
    K = {i: ctx.K_BI_validated(i) for i in (1, 2, 3)}
    g123 = ctx.Gamma123_validated()
    # pairings with the intermediate Casimirs
    for i, A in ((1, (1, 2, 3, 4)), (2, (3, 4, 5, 6)), (3, (1, 2, 5, 6))):
        assert (ctx.osp(A).casimir() - K[i]).is_zero()
    assert (g123 - ctx.osp(tuple(range(1, 7))).casimir()).is_zero()
    # cyclic relations
    for (i, j, k) in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        r = anticommutator(K[i], K[j]) - K[k] - ctx.omega_validated(k, g123)
        assert r.is_zero(), (i, j, k)
    with pytest.raises(AlgebraError):
        ctx.K_BI_validated(4)
    with pytest.raises(AlgebraError):
        CliffDiffContext(4).K_BI_validated(1)


def test_displayed_reading_recorded_residuals(ctx):
    """The written sources' orbital reading does not satisfy the pairing; the
    determination is recorded (nonzero residual expected)."""
    K1_orb = ctx.K_BI(1, convention="orbital")
    r = ctx.osp((1, 2, 3, 4)).casimir() - K1_orb
    assert not r.is_zero()
    K1_tot = ctx.K_BI(1, convention="total")
    assert not (ctx.osp((1, 2, 3, 4)).casimir() - K1_tot).is_zero()
    with pytest.raises(AlgebraError):
        ctx.K_BI(1, convention="banana")


def test_plane_involutions(ctx):
    for p in (1, 2, 3):
        S = ctx.plane_involution(p)
        assert (S * S - 1).is_zero()
    assert (ctx.plane_involution(1)
            - ctx.sigma(1, 2) * 2).is_zero()
