"""Path combinatorics: bijection, degrees, classes, distinguished paths."""

import pytest

from klrpaths.boxes import multipartitions, restricted_multipartitions
from klrpaths.geometry import Geometry
from klrpaths.params import AlgebraParams
from klrpaths.paths import (
    Path,
    block_path,
    concat_contextual,
    concat_naive,
    distinguished_path,
    dominant_paths,
    equivalence_class,
    flat_path,
    is_reduced,
    min_of_class,
    path_degree,
    reduced_paths_of_shape,
    standard_sigma_paths,
    std_n_sigma,
    tableau_path,
)
from klrpaths.tableaux import canonical_tableau, standard_tableaux, tableau_degree
from klrpaths.boxes import young_diagram


def geo(e, sigma, h, n):
    return Geometry(AlgebraParams(e=e, sigma=sigma, h=h, n=n))


def test_canonical_path_printed_example():
    # three-component printed example: t_lambda as a path
    g = geo(9, (0, 3, 6), (2, 2, 1), 12)
    lam = ((2, 1, 1), (2, 2, 1), (1, 1, 1))
    t = canonical_tableau(young_diagram(lam))
    p = tableau_path(t, g)
    assert p.steps == (1, 2, 3, 4, 5, 1, 3, 4, 5, 1, 3, 5)
    assert p.tableau() == t
    assert p.shape() == lam


def test_single_step():
    g = geo(5, (0,), (3,), 1)
    p = Path((1,), g)
    assert p.tableau().box_of(1) == (1, 1, 0)


def test_roundtrip_all_standard():
    g = geo(5, (0,), (3,), 6)
    for lam in multipartitions(6, 1):
        if lam[0] and lam[0][0] > 3:
            continue
        for t in standard_tableaux(lam):
            p = tableau_path(t, g)
            assert p.is_dominant()
            assert p.tableau() == t


def test_residue_sequences_of_blocks():
    g = geo(5, (0,), (3,), 9)
    clock = Path((1, 2, 3) * 3, g)
    assert clock.residue_sequence() == (0, 1, 2, 4, 0, 1, 3, 4, 0)
    alpha = (3, 1)
    flat = flat_path(alpha, g)
    assert flat.steps == (1, 2, 1, 2, 1, 2, 3, 3, 3)
    assert flat.residue_sequence() == (0, 1, 4, 0, 3, 4, 2, 1, 0)
    # both end at the same point
    assert flat.shape_weight == clock.shape_weight == (3, 3, 3)


def test_degree_matches_tableau_degree():
    for (e, sigma, h, n) in [(5, (0,), (3,), 6), (4, (0,), (2,), 8), (7, (0, 3), (2, 2), 5)]:
        g = geo(e, sigma, h, n)
        p = AlgebraParams(e=e, sigma=sigma, h=h, n=n)
        for lam in restricted_multipartitions(n, p):
            for t in standard_tableaux(lam):
                path = tableau_path(t, g)
                assert path_degree(path) == tableau_degree(t, p), (lam, t)


def test_degree_local_configurations():
    # the four one-block walks: degrees 1, 0, 0, -1
    g = geo(5, (0,), (3,), 9)
    alpha = (3, 1)
    u0 = flat_path(alpha, g)           # bounce off an upper wall
    u1 = block_path(g, alpha)          # cross an upper wall
    assert path_degree(u0) == 1
    assert path_degree(u1) == 0
    # lower-wall variants: transport the blocks beyond the wall first
    pa = block_path(g, alpha)
    d0 = concat_contextual(pa, block_path(g, alpha), word=(alpha,))
    d1 = concat_contextual(pa, flat_path(alpha, g), word=(alpha,))
    assert path_degree(d0) == 0
    assert path_degree(d1) - path_degree(pa) == -1


def test_reduced_paths():
    g = geo(5, (0,), (3,), 9)
    clock = Path((1, 2, 3) * 3, g)
    assert is_reduced(clock)
    assert not is_reduced(flat_path((3, 1), g))
    # canonical tableaux give reduced paths
    p = AlgebraParams(e=5, sigma=(0,), h=(3,), n=6)
    for lam in restricted_multipartitions(6, p):
        t = canonical_tableau(young_diagram(lam))
        assert is_reduced(tableau_path(t, g)), lam


def test_distinguished_path_reduced():
    g = geo(5, (0,), (3,), 30)
    letters = g.pi_roots()
    import itertools

    for word in itertools.product(letters, repeat=2):
        if word[0] == word[1]:
            continue  # non-reduced word
        p = distinguished_path(word, g)
        assert is_reduced(p), word


def test_distinguished_path_figure():
    # the six-letter word of the thirty-step figure
    g = geo(5, (0,), (3,), 30)
    a, gam, b = (3, 1), (2, 3), (1, 2)
    word = (a, gam, b, a, gam, b)
    p = distinguished_path(word, g)
    assert len(p) == 30
    assert p.is_dominant()
    assert p.shape() == ((3, 3, 3, 3, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),)
    assert is_reduced(p)


def test_identity_word_block():
    g = geo(5, (0,), (3,), 3)
    p = distinguished_path((None,), g)
    assert p.steps == (1, 2, 3)


def test_equivalence_classes():
    g = geo(5, (0,), (3,), 4)
    p = AlgebraParams(e=5, sigma=(0,), h=(3,), n=4)
    # residue fibres match the reflection classes on dominant paths
    pool = []
    for lam in restricted_multipartitions(4, p):
        pool.extend(dominant_paths(lam, g))
    for q in pool:
        cls = equivalence_class(q)
        fibre = {r for r in pool if r.residue_sequence() == q.residue_sequence()}
        assert cls == fibre, q
        reduced = [r for r in cls if is_reduced(r)]
        assert len(reduced) == 1


def test_min_of_class():
    g = geo(5, (0,), (3,), 4)
    t = canonical_tableau(young_diagram(((2, 1, 1),)))
    p = tableau_path(t, g)
    m = min_of_class(p)
    assert m in equivalence_class(p)


def test_concat():
    g = geo(5, (0,), (3,), 18)
    p = Path((1, 2, 3), g)
    q = Path((1, 1), g)
    assert concat_naive(p, q).steps == (1, 2, 3, 1, 1)
    assert concat_contextual(p, q, word=()).steps == (1, 2, 3, 1, 1)
    alpha = (3, 1)
    pa = block_path(g, alpha)
    pb = concat_contextual(pa, flat_path(alpha, g), word=(alpha,))
    assert len(pb) == 18
    # shape additivity through the context
    perm = g.finite_permutation((alpha,))
    expect = list(pa.shape_weight)
    for s in flat_path(alpha, g).steps:
        expect[perm[s] - 1] += 1
    assert pb.shape_weight == tuple(expect)


def test_std_n_sigma_one_block():
    g = geo(5, (0,), (3,), 3)
    paths = standard_sigma_paths(g, 3)
    # single straight block only: the crossing blocks are longer than 3
    assert set(paths) == {Path((1, 2, 3), g)}
    assert std_n_sigma(((3,),), g) == {Path((1, 2, 3), g)}


def test_std_n_sigma_figure_membership():
    g = geo(5, (0,), (3,), 30)
    a, gam, b = (3, 1), (2, 3), (1, 2)
    word = (a, gam, b, a, gam, b)
    p = distinguished_path(word, g)
    lam = p.shape()
    members = std_n_sigma(lam, g, cap=10**6)
    assert p in members
    for q in members:
        assert q.is_dominant()
