import random

import pytest

from qcactus.groups import (
    BraidWord,
    CactusWord,
    Permutation,
    cactus_relation_instances,
    project_to_symmetric,
    s_hat,
    shat_images,
    verify_action,
)


def test_s_hat_examples():
    assert s_hat(1, 3, 3).images == (3, 2, 1)
    assert s_hat(2, 3, 3).images == (1, 3, 2)
    assert s_hat(2, 4, 5).images == (1, 4, 3, 2, 5)


def test_s_hat_is_involution():
    for n in range(2, 7):
        for p in range(1, n + 1):
            for q in range(p + 1, n + 1):
                assert (s_hat(p, q, n) * s_hat(p, q, n)).is_identity()


def test_s_hat_range_checks():
    with pytest.raises(ValueError):
        s_hat(2, 2, 3)
    with pytest.raises(ValueError):
        s_hat(1, 4, 3)


def test_relation_instances_small():
    rels2 = cactus_relation_instances(2)
    assert rels2 == [(CactusWord(((1, 2), (1, 2)), 2), CactusWord((), 2))]

    rels3 = cactus_relation_instances(3)
    contained = (CactusWord(((1, 3), (1, 2)), 3), CactusWord(((2, 3), (1, 3)), 3))
    assert contained in rels3

    rels4 = cactus_relation_instances(4)
    disjoint = (CactusWord(((1, 2), (3, 4)), 4), CactusWord(((3, 4), (1, 2)), 4))
    assert disjoint in rels4


def test_project_to_symmetric():
    w = CactusWord(((1, 3), (1, 3)), 3)
    assert project_to_symmetric(w).is_identity()
    assert project_to_symmetric(CactusWord(((1, 3),), 3)).images == (3, 2, 1)
    b = BraidWord(((1, 1), (2, 1), (1, 1)), 3)
    assert project_to_symmetric(b).images == (3, 2, 1)


def test_project_is_a_homomorphism():
    rng = random.Random(5)
    n = 5
    intervals = [(p, q) for p in range(1, n + 1) for q in range(p + 1, n + 1)]
    for _ in range(30):
        u = CactusWord(tuple(rng.choice(intervals) for _ in range(rng.randint(0, 4))), n)
        v = CactusWord(tuple(rng.choice(intervals) for _ in range(rng.randint(0, 4))), n)
        uv = CactusWord(u.letters + v.letters, n)
        assert project_to_symmetric(uv) == project_to_symmetric(u) * project_to_symmetric(v)


def test_yang_baxter_in_symmetric_group():
    n = 5
    for i in range(1, n - 1):
        lhs = BraidWord(((i, 1), (i + 1, 1), (i, 1)), n)
        rhs = BraidWord(((i + 1, 1), (i, 1), (i + 1, 1)), n)
        assert project_to_symmetric(lhs) == project_to_symmetric(rhs)


def test_shat_satisfies_cactus_presentation():
    for n in range(2, 7):
        failures = verify_action(shat_images(n), cactus_relation_instances(n))
        assert failures == []


def test_identity_images_satisfy_squares():
    n = 4
    ident = {x: x for x in range(1, n + 1)}
    images = {(p, q): dict(ident) for p in range(1, 5) for q in range(p + 1, 5)}
    squares = [r for r in cactus_relation_instances(n) if len(r[1].letters) == 0]
    assert verify_action(images, squares) == []


def test_non_involution_is_reported_with_witness():
    n = 2
    cyc = {1: 2, 2: 1}
    bad = {1: 2, 2: 3, 3: 1}
    images = {(1, 2): bad}
    squares = [(CactusWord(((1, 2), (1, 2)), 2), CactusWord((), 2))]
    failures = verify_action(images, squares)
    assert len(failures) == 1
    assert failures[0].witness in (1, 2, 3)
    report = failures[0].as_dict()
    assert set(report) == {"relation", "witness", "left", "right"}

    assert verify_action({(1, 2): cyc}, squares) == []


def test_mismatched_domains_is_an_error():
    images = {(1, 2): {1: 1}, (1, 3): {1: 1, 2: 2}, (2, 3): {1: 1, 2: 2}}
    with pytest.raises(ValueError):
        verify_action(images, cactus_relation_instances(3))


def test_missing_generator_image_is_an_error():
    with pytest.raises(ValueError):
        verify_action({(1, 2): {1: 1}}, cactus_relation_instances(3))


def test_word_parsing_round_trip():
    w = CactusWord.parse("s(1,3).s(1,2)", 3)
    assert w.letters == ((1, 3), (1, 2))
    assert CactusWord.parse(str(w), 3) == w
    assert CactusWord.parse("", 4).letters == ()

    b = BraidWord.parse("g1G2g1", 3)
    assert b.letters == ((1, 1), (2, -1), (1, 1))
    assert BraidWord.parse(str(b), 3) == b
    with pytest.raises(ValueError):
        BraidWord.parse("x1", 3)
    with pytest.raises(ValueError):
        CactusWord.parse("s(3,1)", 3)


def test_permutation_basics():
    p = Permutation((2, 3, 1))
    assert p.inverse() * p == Permutation.identity(3)
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
