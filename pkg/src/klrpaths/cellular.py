"""The quasi-hereditary quotient: cells, straightening, Specht modules,
Gram forms and restriction.

The quotient of the cyclotomic algebra by the column-bound ideal has a
basis indexed by triples (shape, S, T) of standard tableaux.  Working
representatives live in the rewriting kernel; reduction modulo the ideal
combines two certified moves:

* a monomial whose strand word passes through a residue sequence with no
  standard completion inside the column bounds factors through a vanishing
  idempotent and is dropped;
* bridge elements that visibly factor through such idempotents are exact
  ideal members and serve as elimination rows.
"""

import itertools
from fractions import Fraction

from .boxes import restricted_multipartitions, y_order_refinement, young_diagram
from .klr import KLRContext, KLRElement, boxtimes, crossing, dot, idempotent, psi_word
from .linalg import RowReducer, rank_of_rows
from .params import AlgebraParams
from .permutations import apply_to_sequence, canonical_word, perm_of_word
from .tableaux import (
    Tableau,
    canonical_tableau,
    classify_idempotent,
    permutation_between,
    standard_tableaux,
    tableau_degree,
    y_ideal_generator_data,
)


class StraighteningError(RuntimeError):
    pass


class CellStructure:
    """Cell data and certified mod-ideal reduction for one (params, n)."""

    def __init__(self, params: AlgebraParams, n=None):
        self.params = params
        self.n = params.n if n is None else n
        self.ctx = KLRContext(params, n=self.n, cyclotomic=True)
        self.cells = y_order_refinement(self.n, params)  # greatest first
        self.cell_rank = {lam: k for k, lam in enumerate(self.cells)}
        self._alive = {}
        self._std = {}
        self._t_lambda = {}
        self._basis = None
        self._basis_elements = {}
        self._up_cache = {}
        self._bridge_cache = {}
        self._key_ids = {}

    # -- tableaux data ---------------------------------------------------------

    def std(self, lam):
        if lam not in self._std:
            self._std[lam] = standard_tableaux(lam)
        return self._std[lam]

    def t_lambda(self, lam):
        if lam not in self._t_lambda:
            self._t_lambda[lam] = canonical_tableau(young_diagram(lam), "cyl")
        return self._t_lambda[lam]

    def alive(self, iseq):
        hit = self._alive.get(iseq)
        if hit is None:
            hit = classify_idempotent(iseq, self.params)
            self._alive[iseq] = hit
        return hit

    def degree_of(self, t: Tableau):
        return tableau_degree(t, self.params, "cyl")

    # -- the quotient projection -------------------------------------------------

    def chain_alive(self, word, iseq):
        """All intermediate residue sequences of the strand word survive."""
        seq = tuple(iseq)
        if self.alive(seq) is None:
            return False
        for a in reversed(word):
            seq = seq[: a - 1] + (seq[a], seq[a - 1]) + seq[a + 1:]
            if self.alive(seq) is None:
                return False
        return True

    def project(self, x: KLRElement):
        """Drop monomials factoring through dead idempotents (certified
        members of the quotient ideal)."""
        out = {}
        for (word, dots, iseq), coeff in x.terms.items():
            if self.chain_alive(word, iseq):
                out[(word, dots, iseq)] = coeff
        return KLRElement(self.ctx, out)

    # -- cellular basis -----------------------------------------------------------

    def psi_up(self, lam, s: Tableau):
        """The one-sided element with frames (res s | res t_lambda)."""
        key = (lam, s)
        hit = self._up_cache.get(key)
        if hit is None:
            t = self.t_lambda(lam)
            w = _perm_tuple(permutation_between(t, s), self.n)
            hit = psi_word(
                self.ctx, canonical_word(w), iseq=t.residue_sequence(self.params)
            )
            self._up_cache[key] = hit
        return hit

    def basis_labels(self):
        if self._basis is None:
            out = []
            for lam in self.cells:
                for s in self.std(lam):
                    for t in self.std(lam):
                        out.append((lam, s, t))
            self._basis = out
        return self._basis

    def basis_element(self, lam, s, t):
        key = (lam, s, t)
        hit = self._basis_elements.get(key)
        if hit is None:
            hit = self.psi_up(lam, s) * self.psi_up(lam, t).star()
            self._basis_elements[key] = hit
        return hit

    def cellular_basis(self):
        """All (label, element, degree) triples."""
        out = []
        for (lam, s, t) in self.basis_labels():
            elem = self.basis_element(lam, s, t)
            out.append(((lam, s, t), elem, self.degree_of(s) + self.degree_of(t)))
        return out

    def y_ideal_generators(self):
        """The column-bound ideal generators embedded at this rank."""
        out = []
        for m, iseq, expo in y_ideal_generator_data(self.params):
            k = len(iseq)
            sub = KLRContext(self.params, n=k, cyclotomic=True)
            elem = KLRElement(sub, {((), tuple(expo), tuple(iseq)): 1})
            if k == self.n:
                out.append((m, elem))
                continue
            from .klr import all_idempotents

            rest = KLRContext(self.params, n=self.n - k, cyclotomic=True)
            out.append((m, boxtimes(elem, all_idempotents(rest), ctx=self.ctx)))
        return out

    # -- straightening ---------------------------------------------------------------

    def _intern(self, key):
        hit = self._key_ids.get(key)
        if hit is None:
            hit = len(self._key_ids)
            self._key_ids[key] = hit
        return hit

    def _as_vec(self, elem: KLRElement):
        return {self._intern(k): Fraction(v) for k, v in elem.terms.items()}

    def straighten(self, x: KLRElement, max_rows=4000, seed_len=4):
        """Express x in the cellular basis modulo the quotient ideal.

        Returns (coords, certificate).  Elimination rows are certified ideal
        members: normal forms of words passing through vanishing idempotents,
        grown by left multiplication with the algebra generators.  Raises
        StraighteningError when the row budget is exhausted.
        """
        x = self.project(x)
        if x.is_zero():
            return {}, {"bridges": 0}
        frames = x.frames()
        lefts = {f[0] for f in frames}
        rights = {f[1] for f in frames}
        cands = []
        for (lam, s, t) in self.basis_labels():
            rs = s.residue_sequence(self.params)
            rt = t.residue_sequence(self.params)
            if rs in lefts and rt in rights:
                cands.append((lam, s, t))
        reducer = RowReducer()
        for label in cands:
            vec = self._as_vec(self.project(self.basis_element(*label)))
            reducer.add(vec, ("basis", label))
        target = self._as_vec(x)
        used = 0
        coords = reducer.coordinates(target)
        if coords is None:
            used = self._grow_ideal_rows(
                reducer, rights, target, max_rows=max_rows, seed_len=seed_len
            )
            coords = reducer.coordinates(target)
        if coords is None:
            raise StraighteningError(
                "could not reduce element within %d ideal rows" % max_rows
            )
        out = {lbl[1]: c for lbl, c in coords.items() if lbl[0] == "basis" and c}
        return out, {"bridges": used}

    def _grow_ideal_rows(self, reducer, rights, target, max_rows, seed_len):
        """Feed certified ideal rows into the reducer until the target is
        covered or the budget runs out.  Seed rows come from short words
        through dead frames; the worklist closes them under left
        multiplication by crossings and dots (and right dots), which stays
        inside the two-sided ideal."""
        from collections import deque

        used = 0
        for j in rights:
            seeds = self._ideal_seeds(j, seed_len)
            queue = deque(seeds)
            seen = 0
            while queue and used < max_rows:
                elem = queue.popleft()
                pro = self.project(elem)
                if pro.is_zero():
                    continue
                vec = self._as_vec(pro)
                if not reducer.add(vec, ("bridge", (j, used))):
                    continue
                used += 1
                if reducer.coordinates(dict(target)) is not None:
                    return used
                for r in range(1, self.n):
                    queue.append(crossing(self.ctx, r) * pro)
                for k in range(1, self.n + 1):
                    queue.append(dot(self.ctx, k) * pro)
                    queue.append(pro * dot(self.ctx, k))
        return used

    def _ideal_seeds(self, j, seed_len):
        """Normal forms of crossing words from the frame j that pass through
        at least one dead residue sequence."""
        key = (j, seed_len)
        hit = self._bridge_cache.get(key)
        if hit is not None:
            return list(hit)
        n = self.n
        out = []
        frontier = [((), tuple(j), False)]
        for _ in range(seed_len):
            nxt = []
            for word, seq, died in frontier:
                for r in range(1, n):
                    seq2 = seq[: r - 1] + (seq[r], seq[r - 1]) + seq[r + 1:]
                    died2 = died or self.alive(seq2) is None
                    w2 = (r,) + word
                    if died2 and self.alive(seq2) is not None:
                        elem = self.project(psi_word(self.ctx, w2, iseq=j))
                        if not elem.is_zero():
                            out.append(elem)
                    nxt.append((w2, seq2, died2))
            frontier = nxt
        self._bridge_cache[key] = out
        return list(out)

    # -- triangularity helpers ---------------------------------------------------

    def cell_of_coords(self, coords):
        """The greatest cell supporting a coordinate vector."""
        best = None
        for (lam, _s, _t), c in coords.items():
            if not c:
                continue
            r = self.cell_rank[lam]
            if best is None or r < best:
                best = r
        return None if best is None else self.cells[best]


# ---------------------------------------------------------------------------
# Specht modules via the cyclic presentation
# ---------------------------------------------------------------------------

class SpechtModule:
    """The cell module of one shape.

    Basis vectors are indexed by standard tableaux; the action of an algebra
    element on the basis vector of S is read off from the straightened
    product against the one-sided basis element of (S, canonical tableau),
    whose same-cell coordinates with preserved right label give the matrix
    column.  The presentation relations of the module are verified in the
    test-suite rather than assumed.
    """

    def __init__(self, cell: CellStructure, lam):
        self.cell = cell
        self.lam = lam
        self.params = cell.params
        self.n = cell.n
        self.t = cell.t_lambda(lam)
        self.t_res = self.t.residue_sequence(self.params)
        self.stds = cell.std(lam)
        self.dim = len(self.stds)
        self._columns = {}

    def act_on_basis(self, elem: KLRElement, s: Tableau):
        """Coordinates of elem . v_S in the standard basis."""
        b = self.cell.basis_element(self.lam, s, self.t)
        coords, _ = self.cell.straighten(elem * b)
        out = {}
        for (mu, s2, t2), c in coords.items():
            if mu == self.lam and c:
                if t2 != self.t:
                    raise StraighteningError("right label not preserved")
                if self.cell.cell_rank[mu] > self.cell.cell_rank[self.lam]:
                    raise StraighteningError("cell order violated")
                out[s2] = c
        return out

    def act_element(self, elem: KLRElement):
        """Matrix of a kernel element, as a dict {(S_out, S_in): coeff}."""
        out = {}
        for s in self.stds:
            for s2, c in self.act_on_basis(elem, s).items():
                if c:
                    out[(s2, s)] = c
        return out

    def generator_matrices(self):
        ctx = self.cell.ctx
        mats = {}
        for r in range(1, self.n):
            mats[("psi", r)] = self.act_element(crossing(ctx, r))
        for k in range(1, self.n + 1):
            mats[("y", k)] = self.act_element(dot(ctx, k))
        return mats

    def gram_matrix(self):
        """The cell form: scalars of straightened two-sided products."""
        cell = self.cell
        gram = {}
        for s in self.stds:
            down_s = cell.psi_up(self.lam, s).star()
            for t2 in self.stds:
                if (t2, s) in gram:
                    gram[(s, t2)] = gram[(t2, s)]
                    continue
                prod = down_s * cell.psi_up(self.lam, t2)
                coords, _ = cell.straighten(prod)
                val = 0
                for (mu, a, b), c in coords.items():
                    if mu == self.lam:
                        if (a, b) != (self.t, self.t) and c:
                            raise StraighteningError("form has off-label terms")
                        val = c
                    elif cell.cell_rank[mu] > cell.cell_rank[self.lam] and c:
                        raise StraighteningError("cell order violated in form")
                gram[(s, t2)] = val
        return gram


def _transposition_tuple(n, k):
    w = list(range(1, n + 1))
    w[k - 1], w[k] = w[k], w[k - 1]
    return tuple(w)


def _perm_dict_from_tuple(w):
    return {i + 1: w[i] for i in range(len(w))}


def _perm_tuple(perm_dict, n):
    return tuple(perm_dict[i] for i in range(1, n + 1))


def _row_standard_not_standard(lam):
    """Row-standard non-standard tableaux of a multipartition."""
    cfg = young_diagram(lam)
    boxes = sorted(cfg)
    out = []
    n = len(boxes)

    def rec(remaining, mapping, k):
        if k > n:
            t = Tableau(dict(mapping))
            if t.is_row_standard() and not t.is_standard():
                out.append(t)
            return
        for b in list(remaining):
            mapping[b] = k
            remaining.remove(b)
            rec(remaining, mapping, k + 1)
            remaining.add(b)
            del mapping[b]

    # full enumeration is factorial; restrict to row-standard growth
    def rec2(rows, mapping, k):
        if k > n:
            t = Tableau(dict(mapping))
            if not t.is_standard():
                out.append(t)
            return
        for b in sorted(rows):
            mapping[b] = k
            nxt = set(rows)
            nxt.remove(b)
            i, j, m = b
            if (i, j + 1, m) in cfg:
                nxt.add((i, j + 1, m))
            rec2(nxt, mapping, k + 1)
            del mapping[b]

    starts = {(i, 1, m) for (i, j, m) in cfg if j == 1}
    rec2(starts, {}, 1)
    return out


# ---------------------------------------------------------------------------
# restriction
# ---------------------------------------------------------------------------

def restriction_filtration(cell: CellStructure, lam):
    """Removable boxes in descending cylindric order with layer data.

    Returns a list of (box, degree shift, [standard tableaux of the layer]).
    """
    from .boxes import cyl_key, removable_boxes, shape_of_config

    cfg = young_diagram(lam)
    rem = sorted(removable_boxes(cfg), key=cyl_key)  # greatest first
    layers = []
    for box in rem:
        members = [s for s in cell.std(lam) if s.box_of(cell.n) == box]
        shifts = {
            cell.degree_of(s) - tableau_degree(
                s.restrict(cell.n - 1), cell.params, "cyl"
            )
            for s in members
        }
        if len(shifts) != 1:
            raise StraighteningError("inconsistent degree shifts in a layer")
        layers.append((box, shifts.pop(), members))
    return layers
