import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from opschmidt.core import BipartiteOperator, block_span_dim, is_unitary, schmidt_rank, weyl
from opschmidt.synth import (
    Rank3Impossible,
    RankOutOfRange,
    SynthesisRequest,
    achievable_ranks,
    diag_block_unitary,
    embed_unbalanced,
    find_independent_unitary,
    synth,
)


def test_diag_block_examples():
    assert np.allclose(diag_block_unitary(4, 1).matrix, np.eye(16))
    assert schmidt_rank(diag_block_unitary(3, 3)) == 3
    u = diag_block_unitary(5, 4)
    assert schmidt_rank(u) == 4
    expected = [weyl(5, 0, 0), weyl(5, 0, 1), weyl(5, 0, 2), weyl(5, 0, 3), weyl(5, 0, 3)]
    for i, w in enumerate(expected):
        assert np.allclose(u.block(i, i), w)
    with pytest.raises(RankOutOfRange):
        diag_block_unitary(3, 4)


def test_independent_unitary_examples():
    idx, w = find_independent_unitary([np.eye(3)])
    assert idx == (0, 1) and np.allclose(w, weyl(3, 0, 1))
    diag_units = [np.diag(np.eye(3)[k]) for k in range(3)]
    idx, _ = find_independent_unitary(diag_units)
    assert idx[0] != 0  # clock powers are diagonal, so a shift is needed
    others = [weyl(3, a, b) for a in range(3) for b in range(3) if (a, b) != (1, 1)]
    idx, _ = find_independent_unitary(others)
    assert idx == (1, 1)
    with pytest.raises(ValueError):
        find_independent_unitary(others + [weyl(3, 1, 1)])


@pytest.mark.parametrize("n,m,r", [(2, 3, 3), (2, 5, 4), (3, 4, 9), (2, 4, 2), (5, 3, 7)])
def test_embed_examples(n, m, r):
    u, _, _ = embed_unbalanced(n, m, r)
    assert u.dims == (n, m)
    assert is_unitary(u.matrix, 1e-10)[0]
    assert schmidt_rank(u) == r == block_span_dim(u)


def test_embed_n2_rank4_routes_via_product():
    _, tag, params = embed_unbalanced(2, 5, 4)
    assert tag == "product" and params == {"k": 2, "l": 2}


def test_embed_both_orientations():
    for r in range(2, 10):
        a, _, _ = embed_unbalanced(3, 5, r)
        b, _, _ = embed_unbalanced(5, 3, r)
        assert np.array_equal(a.swap_factors().matrix, b.matrix)
        assert schmidt_rank(a) == schmidt_rank(b) == r


def test_rank3_impossible():
    with pytest.raises(Rank3Impossible, match=r"\{1, 2, 4\}"):
        synth(2, 2, 3)
    for r in (1, 2, 4):
        _, cert = synth(2, 2, r)
        assert cert.passed and cert.numeric_rank == r


def test_out_of_range():
    with pytest.raises(RankOutOfRange):
        synth(3, 4, 10)
    with pytest.raises(RankOutOfRange):
        synth(3, 3, 0)
    with pytest.raises(RankOutOfRange):
        synth(1, 3, 1)


def test_theorem_n3():
    for r in range(1, 10):
        _, cert = synth(3, 3, r)
        assert cert.passed, cert


def test_dispatch_tags():
    tags = {r: synth(4, 4, r)[1].construction for r in range(1, 17)}
    assert tags[1] == tags[4] == "diag_blocks"
    assert tags[5] == "product_even"
    assert tags[15] == "fourier"
    assert all(tags[r] == "permutation" for r in (6, 7, 12, 14, 16))
    assert synth(5, 5, 6)[1].construction == "product_odd"
    assert synth(4, 7, 1)[1].construction == "tensor_shifts"
    assert synth(4, 7, 16)[1].construction == "embedding"


def test_large_unbalanced():
    u, cert = synth(4, 7, 16)
    assert cert.passed and u.dims == (4, 7)


def test_achievable_ranks():
    assert achievable_ranks(2, 2) == {1, 2, 4}
    assert achievable_ranks(3, 3) == set(range(1, 10))
    assert achievable_ranks(4, 6) == set(range(1, 17))


def test_certificate_exact_rank_on_perm_path():
    for r in (3, 5, 7, 9):
        _, cert = synth(3, 3, r)
        if cert.construction == "permutation":
            assert cert.exact_rank == cert.numeric_rank == r


def test_certificate_failure_detected():
    from opschmidt.synth import certify
    bad = BipartiteOperator(2, 2, np.diag([1, 0.5, 1, 1]))
    cert = certify(bad, 2)
    assert not cert.unitary and not cert.passed


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.integers(2, 6), st.data())
def test_synthesis_property(n, m, data):
    r = data.draw(st.sampled_from(sorted(achievable_ranks(n, m))))
    u, cert = synth(n, m, r)
    assert cert.passed
    assert cert.unitarity_residual < 1e-10
    assert schmidt_rank(u.swap_factors()) == r


def test_determinism():
    for args in [(4, 4, 15), (3, 6, 9), (5, 5, 24)]:
        a, _ = synth(*args, seed=3)
        b, _ = synth(*args, seed=3)
        assert a.matrix.tobytes() == b.matrix.tobytes()


def test_request_validation():
    req = SynthesisRequest(3, 5, 9, seed=2)
    assert req.tol == 1e-8
