"""Cells, straightening, Specht modules, Gram forms, restriction."""

from fractions import Fraction

import pytest

from klrpaths.boxes import restricted_multipartitions
from klrpaths.cellular import CellStructure, SpechtModule, restriction_filtration
from klrpaths.klr import crossing, dot, idempotent, psi_word
from klrpaths.linalg import rank_of_rows
from klrpaths.params import AlgebraParams
from klrpaths.tableaux import count_standard


def cell_of(e, sigma, h, n):
    return CellStructure(AlgebraParams(e=e, sigma=sigma, h=h, n=n))


def test_basis_count_and_rank_small():
    for n in range(1, 5):
        cell = cell_of(4, (0,), (2,), n)
        labels = cell.basis_labels()
        want = sum(count_standard(lam) ** 2 for lam in restricted_multipartitions(n, cell.params))
        assert len(labels) == want
        rows = [cell._as_vec(cell.basis_element(*lbl)) for lbl in labels]
        assert rank_of_rows(rows) == want


def test_basis_degrees():
    cell = cell_of(4, (0,), (2,), 4)
    for (lam, s, t), elem, deg in cell.cellular_basis():
        assert not elem.is_zero()
        assert elem.degree() == deg


def test_basis_star_symmetry():
    cell = cell_of(4, (0,), (2,), 4)
    for lam in cell.cells:
        stds = cell.std(lam)
        for s in stds:
            for t in stds:
                assert cell.basis_element(lam, s, t).star() == cell.basis_element(
                    lam, t, s
                )


def test_straighten_basis_elements_fixed():
    cell = cell_of(4, (0,), (2,), 4)
    for (lam, s, t) in cell.basis_labels():
        coords, cert = cell.straighten(cell.basis_element(lam, s, t))
        assert coords == {(lam, s, t): 1}


def test_straighten_dead_idempotent():
    cell = cell_of(4, (0,), (2,), 3)
    # three-column row: dies in the quotient
    e = idempotent(cell.ctx, (0, 1, 2))
    coords, _ = cell.straighten(e)
    assert coords == {}


def test_straighten_e_t_lambda():
    cell = cell_of(4, (0,), (2,), 3)
    lam = ((2, 1),)
    t = cell.t_lambda(lam)
    e = idempotent(cell.ctx, t.residue_sequence(cell.params))
    coords, _ = cell.straighten(e)
    assert coords.get((lam, t, t)) == 1


def test_straighten_triangularity_dots():
    # a dot on a basis element lands in strictly greater cells or dies
    cell = cell_of(4, (0,), (2,), 4)
    for (lam, s, t) in cell.basis_labels():
        if s is not t:
            continue
        b = cell.basis_element(lam, s, t)
        for k in range(1, cell.n + 1):
            coords, _ = cell.straighten(dot(cell.ctx, k) * b)
            for (mu, _s2, _t2), c in coords.items():
                if c:
                    assert cell.cell_rank[mu] < cell.cell_rank[lam], (lam, mu, k)


def test_product_straightens_in_cell_order():
    cell = cell_of(4, (0,), (2,), 4)
    labels = cell.basis_labels()
    for (lam, s, t) in labels[:6]:
        b = cell.basis_element(lam, s, t)
        for r in range(1, cell.n):
            coords, _ = cell.straighten(crossing(cell.ctx, r) * b)
            for (mu, _s2, t2), c in coords.items():
                if c:
                    assert cell.cell_rank[mu] <= cell.cell_rank[lam]
                    assert t2 == t  # right label preserved under left mult


def test_specht_dimensions():
    for (e, sigma, h, n) in [(4, (0,), (2,), 4), (4, (0,), (2,), 5), (5, (0,), (3,), 4)]:
        cell = cell_of(e, sigma, h, n)
        for lam in cell.cells:
            mod = SpechtModule(cell, lam)
            assert mod.dim == count_standard(lam)


def test_specht_presentation_relations():
    from klrpaths.cellular import _perm_dict_from_tuple, _transposition_tuple
    from klrpaths.klr import idempotent

    cell = cell_of(4, (0,), (2,), 4)
    for lam in cell.cells:
        mod = SpechtModule(cell, lam)
        mats = mod.generator_matrices()
        t = cell.t_lambda(lam)
        # the cyclic generator is killed by every dot
        for k in range(1, cell.n + 1):
            col = {kk: c for kk, c in mats[("y", k)].items() if kk[1] == t and c}
            assert not col, (lam, k)
        # idempotents act as residue projections
        for s in mod.stds:
            e = idempotent(cell.ctx, s.residue_sequence(cell.params))
            col = mod.act_on_basis(e, s)
            assert col == {s: 1}
        # crossings into non-row-standard fillings kill the generator
        for k in range(1, cell.n):
            moved = t.apply_permutation(
                _perm_dict_from_tuple(_transposition_tuple(cell.n, k))
            )
            if not moved.is_row_standard():
                col = {kk: c for kk, c in mats[("psi", k)].items() if kk[1] == t and c}
                assert not col, (lam, k)


def test_specht_matrices_satisfy_relations():
    cell = cell_of(4, (0,), (2,), 4)
    n = cell.n
    for lam in cell.cells:
        mod = SpechtModule(cell, lam)
        stds = mod.stds

        def matmul(a, b):
            out = {}
            for (i, k1), va in a.items():
                for (k2, j), vb in b.items():
                    if k1 == k2:
                        out[(i, j)] = out.get((i, j), 0) + va * vb
            return {k: v for k, v in out.items() if v}

        for r in range(1, n - 1):
            pr = mod.act_element(crossing(cell.ctx, r))
            pr1 = mod.act_element(crossing(cell.ctx, r + 1))
            lhs = matmul(pr, matmul(pr1, pr))
            rhs = matmul(pr1, matmul(pr, pr1))
            # braid relations hold up to the residue-dependent correction;
            # verify via the kernel instead of re-deriving cases
            a = crossing(cell.ctx, r) * crossing(cell.ctx, r + 1) * crossing(cell.ctx, r)
            b = crossing(cell.ctx, r + 1) * crossing(cell.ctx, r) * crossing(cell.ctx, r + 1)
            diff = mod.act_element(a - b)
            want = {
                k: v for k, v in ((kk, lhs.get(kk, 0) - rhs.get(kk, 0)) for kk in set(lhs) | set(rhs)) if v
            }
            assert diff == want


def test_gram_symmetric_and_normalised():
    cell = cell_of(4, (0,), (2,), 4)
    for lam in cell.cells:
        mod = SpechtModule(cell, lam)
        g = mod.gram_matrix()
        t = cell.t_lambda(lam)
        assert g[(t, t)] == 1
        for s in mod.stds:
            for u in mod.stds:
                assert g[(s, u)] == g[(u, s)], (lam, s, u)


def test_gram_degree_pairing():
    # entries vanish unless the degrees cancel
    cell = cell_of(4, (0,), (2,), 4)
    for lam in cell.cells:
        mod = SpechtModule(cell, lam)
        g = mod.gram_matrix()
        for (s, u), val in g.items():
            if val:
                assert cell.degree_of(s) + cell.degree_of(u) == 0


def test_restriction_layers():
    cell = cell_of(4, (0,), (2,), 5)
    from klrpaths.boxes import removable_boxes, shape_of_config
    from klrpaths.boxes import young_diagram as yd

    for lam in cell.cells:
        layers = restriction_filtration(cell, lam)
        assert len(layers) == len(removable_boxes(yd(lam)))
        total = sum(len(members) for _box, _shift, members in layers)
        assert total == count_standard(lam)
        for box, _shift, members in layers:
            sub = shape_of_config(yd(lam) - {box}, cell.params.ell)
            assert len(members) == count_standard(sub)
