"""Canonical tableaux, degrees, the idempotent classifier."""

from klrpaths.boxes import (
    removable_boxes,
    restricted_multipartitions,
    multipartitions,
    young_diagram,
)
from klrpaths.params import AlgebraParams
from klrpaths.tableaux import (
    Tableau,
    canonical_tableau,
    canonical_tableaux,
    classify_idempotent,
    count_standard,
    j_tableau,
    permutation_between,
    standard_tableaux,
    tableau_degree,
    y_exponents,
    y_ideal_generator_data,
)


def perm_from_cycles(n, *cycles):
    w = {k: k for k in range(1, n + 1)}
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            w[a] = b
    return w


def test_canonical_tableau_printed_example():
    lam = ((2, 1, 1), (2, 2, 1), (1, 1, 1))
    t = canonical_tableau(young_diagram(lam))
    expected = Tableau({
        (1, 1, 0): 1, (1, 2, 0): 2, (2, 1, 0): 6, (3, 1, 0): 10,
        (1, 1, 1): 3, (1, 2, 1): 4, (2, 1, 1): 7, (2, 2, 1): 8, (3, 1, 1): 11,
        (1, 1, 2): 5, (2, 1, 2): 9, (3, 1, 2): 12,
    })
    assert t == expected


def test_permutation_between_printed_example():
    lam = ((2, 1, 1), (2, 2, 1), (1, 1, 1))
    t = canonical_tableau(young_diagram(lam))
    s = Tableau({
        (1, 1, 0): 1, (1, 2, 0): 6, (2, 1, 0): 2, (3, 1, 0): 10,
        (1, 1, 1): 3, (1, 2, 1): 5, (2, 1, 1): 7, (2, 2, 1): 8, (3, 1, 1): 11,
        (1, 1, 2): 4, (2, 1, 2): 9, (3, 1, 2): 12,
    })
    w = permutation_between(s, t)
    assert w == perm_from_cycles(12, (4, 5), (2, 6))
    assert s.apply_permutation(permutation_between(t, s)) == t
    assert permutation_between(t, t) == {k: k for k in range(1, 13)}


def test_canonical_column():
    t = canonical_tableau(young_diagram(((1, 1, 1, 1),)))
    assert [t.box_of(k) for k in range(1, 5)] == [(i, 1, 0) for i in range(1, 5)]


def test_canonical_standard_on_restricted():
    p = AlgebraParams(e=4, sigma=(0,), h=(2,), n=6)
    for lam in restricted_multipartitions(6, p):
        t, s = canonical_tableaux(young_diagram(lam))
        assert t.is_standard()
        assert s.is_standard()
        assert t.shape(1) == lam


def test_degree_base_cases():
    p = AlgebraParams(e=5, sigma=(0,), h=(3,), n=1)
    t = canonical_tableau(young_diagram(((1,),)))
    assert tableau_degree(t, p) == 0
    assert tableau_degree(t, p, "dom") == 0


def brute_degree(t, p, order="cyl"):
    from klrpaths.boxes import addable_boxes, removable_boxes, cyl_key, dom_key

    key = cyl_key if order == "cyl" else dom_key
    total = 0
    for k in range(1, len(t) + 1):
        box = t.box_of(k)
        r = p.residue_of(box)
        shape = frozenset(t.restrict(k).boxes())
        for b in addable_boxes(shape, p.ell):
            if p.residue_of(b) == r and key(b) > key(box):
                total += 1
        for b in removable_boxes(shape):
            if p.residue_of(b) == r and key(b) > key(box):
                total -= 1
    return total


def test_degree_matches_direct_definition():
    p = AlgebraParams(e=5, sigma=(0,), h=(3,), n=9)
    for t in standard_tableaux(((3, 3, 3),)):
        assert tableau_degree(t, p) == brute_degree(t, p)
        assert tableau_degree(t, p, "dom") == brute_degree(t, p, "dom")


def test_y_exponents():
    # restricted shapes carry no dots
    p = AlgebraParams(e=4, sigma=(0,), h=(2,), n=4)
    for lam in restricted_multipartitions(4, p):
        assert y_exponents(lam, p) == (0,) * 4
    # one row beyond the bound: a dot appears exactly at the cyclic wrap
    p2 = AlgebraParams(e=4, sigma=(0,), h=(3,), n=4)
    assert y_exponents(((4,),), p2) == (0, 0, 0, 1)
    p3 = AlgebraParams(e=4, sigma=(0,), h=(2,), n=3)
    assert y_exponents(((3,),), p3) == (0, 0, 0)
    assert y_exponents(((),), AlgebraParams(4, (0,), (2,), 0)) == ()


def test_y_ideal_generator_data():
    # level one, strict case: plain idempotent of the single-row shape
    p = AlgebraParams(e=5, sigma=(0,), h=(2,), n=4)
    data = y_ideal_generator_data(p)
    assert data == [(0, (0, 1, 2), (0, 0, 0))]
    # equality case h0 = sigma1 - sigma0: the generator acquires a dot
    p2 = AlgebraParams(e=7, sigma=(0, 2), h=(2, 2), n=5)
    data2 = y_ideal_generator_data(p2)
    assert data2[0][0] == 0
    assert data2[0][2] == (0, 0, 1)  # dotted
    assert data2[1][2] == (0, 0, 0)  # strict affine case, plain
    # no generators when the rank is too small
    p3 = AlgebraParams(e=5, sigma=(0,), h=(2,), n=2)
    assert y_ideal_generator_data(p3) == []


def test_j_tableau_figure():
    p = AlgebraParams(e=5, sigma=(0,), h=(3,), n=13)
    j = (0, 1, 4, 0, 3, 4, 2, 1, 0, 4, 3, 2, 2)
    t = j_tableau(j, p)
    assert t is not None
    assert t.shape(1) == ((3, 2, 2, 1, 1, 1, 1, 1, 1),)
    assert t.box_of(13) == (1, 3, 0)
    assert t.residue_sequence(p) == j
    assert j_tableau((), p) is not None
    assert len(j_tableau((), p)) == 0
    assert j_tableau((0, 0), p) is None


def test_j_tableau_matches_standard_tableaux():
    p = AlgebraParams(e=4, sigma=(0,), h=(2,), n=6)
    for lam in multipartitions(6, 1):
        for t in standard_tableaux(lam):
            res = t.residue_sequence(p)
            jt = j_tableau(res, p)
            assert jt is not None
            assert jt.residue_sequence(p) == res


def test_classify_idempotent():
    p = AlgebraParams(e=4, sigma=(0,), h=(2,), n=3)
    # residue sequence of the three-column row: dies in the quotient
    assert classify_idempotent((0, 1, 2), p) is None
    # the column reaches the restricted poset
    t = canonical_tableau(young_diagram(((1, 1, 1),)))
    assert classify_idempotent(t.residue_sequence(p), p) == ((1, 1, 1),)


def test_restriction_counting():
    p = AlgebraParams(e=7, sigma=(0, 3), h=(2, 2), n=6)
    for n in range(1, 7):
        for lam in multipartitions(n, 2):
            cfg = young_diagram(lam)
            total = 0
            from klrpaths.boxes import shape_of_config

            for box in removable_boxes(cfg):
                total += count_standard(shape_of_config(cfg - {box}, 2))
            assert count_standard(lam) == total
