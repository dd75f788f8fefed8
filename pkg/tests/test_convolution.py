from __future__ import annotations

import pytest

from cayleymc.cayley import CayleyParams, cayley_solution
from cayleymc.convolution import (ConvolutionScalar, CoverCharacter, DegenerateConvolution,
                                  characters_of_exact_order, convolution_blocks, convolution_dimensions,
                                  homology_class, induced_pushforward, middle_convolve, rewrite)
from cayleymc.exactalg import CycNum, zeta
from cayleymc.linalg import ExactMatrix, jordan_type, matrix, rank
from cayleymc.monodromy import (finite_image, is_irreducible, make_tuple, star_check,
                                trace_coordinates)

I2 = [[1, 0], [0, 1]]


def _local_rank_sum(T, c) -> int:
    """Sum of rk(A_i - 1) at finite points plus rk(c A_inf - 1), minus the rank."""
    n = T.rank
    I = ExactMatrix.identity(n)
    s = sum(rank(A - I) for A in T.mats)
    return s + rank(T.Minf.scale(c) - I) - n


def test_scalar_validation():
    with pytest.raises(ValueError):
        ConvolutionScalar(CycNum.rational(1))
    with pytest.raises(ValueError):
        ConvolutionScalar(CycNum.rational(2))
    assert ConvolutionScalar(zeta(5)).c == zeta(5)


def test_blocks_shape_and_identity_rows():
    T = cayley_solution(CayleyParams("1/3", "1/3"))
    blocks = convolution_blocks(list(T.mats), -1)
    assert [B.shape for B in blocks] == [(6, 6)] * 3
    for k, B in enumerate(blocks):
        for i in range(6):
            if i // 2 != k:
                assert all(B.entries[i][j] == (1 if i == j else 0) for j in range(6))


def test_degenerate_input():
    with pytest.raises(DegenerateConvolution):
        middle_convolve(make_tuple(I2, I2, I2), -1)


def test_order_two_dimensions():
    chi = CoverCharacter(2, 1, 0)
    dims = convolution_dimensions(induced_pushforward(chi), -1)
    assert dims == {"total": 6, "K": 3, "L": 1, "quotient": 2}


def test_order_two_output_is_trivial_at_one_point():
    # f_* L splits into two rank-one systems; the summand that survives has a
    # trivial local monodromy, so exactly one finite point carries the identity.
    for chi in characters_of_exact_order(2):
        V = middle_convolve(induced_pushforward(chi))
        assert V.rank == 2 and is_irreducible(V)
        assert sum(M.is_identity() for M in V.mats) == 1
        assert not star_check(V)


def test_cayley_involutivity_example():
    T = cayley_solution(CayleyParams("1/3", "1/3"))
    W = middle_convolve(middle_convolve(T, -1), -1)
    assert trace_coordinates(W) == trace_coordinates(T)


@pytest.mark.parametrize("chi", [CoverCharacter(3, 1, 0), CoverCharacter(5, 2, 3), CoverCharacter(7, 1, 1),
                                 CoverCharacter(12, 5, 2)])
def test_rank_matches_local_formula(chi):
    T = induced_pushforward(chi)
    V = middle_convolve(T, -1)
    assert V.rank == _local_rank_sum(T, -1) == 2


def test_rank_formula_on_generic_scalar():
    T = cayley_solution(CayleyParams("1/5", "2/5"))
    c = zeta(3)
    V = middle_convolve(T, c)
    assert V.rank == _local_rank_sum(T, c)
    assert convolution_dimensions(T, c)["quotient"] == V.rank


def test_pushforward_structure():
    T = induced_pushforward(CoverCharacter(1, 0, 0))
    assert all(M.trace() == 0 for M in T.local())
    assert finite_image(T, 10).order == 2
    for chi in characters_of_exact_order(2):
        img = finite_image(induced_pushforward(chi), 100)
        assert 8 % img.order == 0
    for chi in characters_of_exact_order(9)[:12]:
        assert all(M.trace() == 0 for M in induced_pushforward(chi).local())


def test_schreier_rewriting():
    assert rewrite(((0, 1), (0, 1))) == [(0, 1)]
    with pytest.raises(ValueError):
        rewrite(((1, 1),))
    assert homology_class(((0, 1), (1, 1))) == (1, 0)
    assert homology_class(((0, 1), (2, 1))) == (0, 1)
    # each puncture loop lifted twice is null-homologous
    for g in range(3):
        assert homology_class(((g, 1), (g, 1))) == (0, 0)


def test_character_counts():
    # Jordan's totient J_2(m) = m^2 prod (1 - p^-2)
    assert [len(characters_of_exact_order(m)) for m in (2, 3, 4, 5, 6)] == [3, 8, 12, 24, 24]


def test_local_types_of_output():
    V = middle_convolve(induced_pushforward(CoverCharacter(5, 1, 2)))
    one = [1]
    for M in V.mats:
        assert jordan_type(M, one).blocks == ((CycNum.rational(1), 2),)
    assert jordan_type(V.Minf, [-1]).blocks == ((CycNum.rational(-1), 2),)
    assert V.Minf != matrix([[-1, 0], [0, -1]])
