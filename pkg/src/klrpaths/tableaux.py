"""Tableaux on box-configurations: canonical fillings, degrees, residues.

A tableau is a bijection from a box-configuration of size n to {1, ..., n}.
"""

from functools import lru_cache

from .boxes import (
    addable_boxes,
    addable_removable,
    cyl_key,
    dom_key,
    removable_boxes,
    shape_of_config,
    young_diagram,
)
from .params import AlgebraParams


class Tableau:
    """Immutable filling of a box-configuration with 1..n."""

    __slots__ = ("_entries", "_boxes", "_hash")

    def __init__(self, mapping):
        items = tuple(sorted(mapping.items(), key=lambda kv: kv[1]))
        entries = [kv[1] for kv in items]
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError("entries must be exactly 1..n")
        self._entries = items          # ((box, k) sorted by k)
        self._boxes = {b: k for b, k in items}
        self._hash = hash(self._entries)

    # -- basic access -------------------------------------------------------

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        return isinstance(other, Tableau) and self._entries == other._entries

    def __hash__(self):
        return self._hash

    def __call__(self, box):
        return self._boxes[box]

    def box_of(self, k):
        return self._entries[k - 1][0]

    def boxes(self):
        return frozenset(self._boxes)

    def items(self):
        return iter(self._entries)

    def __repr__(self):
        cells = ", ".join("%r:%d" % (b, k) for b, k in self._entries)
        return "Tableau({%s})" % cells

    # -- shape and standardness --------------------------------------------

    def shape_config(self):
        return frozenset(self._boxes)

    def shape(self, ell):
        return shape_of_config(self.shape_config(), ell)

    def restrict(self, k):
        """Subtableau of the entries 1..k."""
        return Tableau({b: v for b, v in self._entries if v <= k})

    def is_row_standard(self):
        return all(
            self._boxes.get((i, j + 1, m), None) is None
            or self._boxes[(i, j + 1, m)] > k
            for (i, j, m), k in self._entries
        )

    def is_column_standard(self):
        return all(
            self._boxes.get((i + 1, j, m), None) is None
            or self._boxes[(i + 1, j, m)] > k
            for (i, j, m), k in self._entries
        )

    def is_standard(self):
        return self.is_row_standard() and self.is_column_standard()

    # -- residues ------------------------------------------------------------

    def residue_sequence(self, params: AlgebraParams):
        return tuple(params.residue_of(b) for b, _ in self._entries)

    def apply_permutation(self, w):
        """The tableau w(self), relabelling entry k as w[k]."""
        return Tableau({b: w[k] for b, k in self._entries})


# ---------------------------------------------------------------------------
# canonical tableaux
# ---------------------------------------------------------------------------

def canonical_tableau(cfg, order="cyl"):
    """Greedy filling: place n in the minimal box of the chosen order,
    then recurse.  order='cyl' gives the cylindric canonical tableau,
    order='dom' the dominance one."""
    key = cyl_key if order == "cyl" else dom_key
    rest = set(cfg)
    mapping = {}
    for k in range(len(rest), 0, -1):
        box = max(rest, key=key)  # minimal in the order = largest key
        mapping[box] = k
        rest.remove(box)
    return Tableau(mapping)


def canonical_tableaux(cfg):
    """The pair (cylindric, dominance) canonical tableaux."""
    return canonical_tableau(cfg, "cyl"), canonical_tableau(cfg, "dom")


def permutation_between(s: Tableau, t: Tableau):
    """The permutation w with w(t) = s, as a dict {1..n} -> {1..n}."""
    if s.shape_config() != t.shape_config():
        raise ValueError("tableaux must have the same shape")
    return {t(b): s(b) for b in t.boxes()}


# ---------------------------------------------------------------------------
# standard tableaux enumeration
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _std_fillings(cfg):
    """All standard fillings of a Young-diagram configuration, as sorted
    tuples of (box, entry)."""
    n = len(cfg)
    if n == 0:
        return ((),)
    out = []
    for box in removable_boxes(cfg):
        for filling in _std_fillings(cfg - {box}):
            out.append(filling + ((box, n),))
    return tuple(out)


def standard_tableaux(lam):
    """All standard tableaux of a multipartition."""
    cfg = young_diagram(lam)
    return [Tableau(dict(f)) for f in _std_fillings(cfg)]


def count_standard(lam):
    return len(_std_fillings(young_diagram(lam)))


# ---------------------------------------------------------------------------
# degrees
# ---------------------------------------------------------------------------

def tableau_degree(t: Tableau, params: AlgebraParams, order="cyl"):
    """Sum over k of (addable - removable) same-residue boxes below the box
    of k in the chosen order, computed on the shape of the first k entries."""
    if not t.is_standard():
        raise ValueError("degree is defined for standard tableaux")
    greater = cyl_key if order == "cyl" else dom_key
    total = 0
    shape = set()
    for box, k in t.items():
        shape.add(box)
        r = params.residue_of(box)
        add, rem = addable_removable(frozenset(shape), params, res=r)
        bkey = greater(box)
        total += sum(1 for b in add if greater(b) > bkey)
        total -= sum(1 for b in rem if greater(b) > bkey)
    return total


def y_exponents(lam, params: AlgebraParams, order="cyl"):
    """Exponent vector of the dotted idempotent attached to a multipartition:
    entry k counts the addable same-residue boxes below the box of k in the
    canonical tableau of the chosen order."""
    cfg = young_diagram(lam)
    t = canonical_tableau(cfg, order)
    greater = cyl_key if order == "cyl" else dom_key
    out = []
    shape = set()
    for box, _k in t.items():
        shape.add(box)
        r = params.residue_of(box)
        add, _ = addable_removable(frozenset(shape), params, res=r)
        bkey = greater(box)
        out.append(sum(1 for b in add if greater(b) > bkey))
    return tuple(out)


# ---------------------------------------------------------------------------
# the idempotent classifier
# ---------------------------------------------------------------------------

def _fibre_walk(iseq, params, collect_all):
    """Standard tableaux with the given residue sequence.

    Depth-first over placements, trying the lowest (cylindric-minimal)
    addable box first; placement positions can force backtracking, so dead
    (shape, position) states are memoised.
    """
    n = len(iseq)
    res = [r % params.e for r in iseq]
    dead = set()
    found = []

    def rec(shape, mapping, k):
        if k > n:
            found.append(Tableau(dict(mapping)))
            return not collect_all
        state = (shape, k)
        if state in dead:
            return False
        cands = [
            b for b in addable_boxes(shape, params.ell)
            if params.residue_of(b) == res[k - 1]
        ]
        cands.sort(key=cyl_key, reverse=True)  # minimal in the order first
        for box in cands:
            mapping[box] = k
            if rec(shape | {box}, mapping, k + 1):
                return True
            del mapping[box]
        dead.add(state)
        return False

    rec(frozenset(), {}, 1)
    return found


def j_tableau(iseq, params: AlgebraParams):
    """The classifier tableau of a residue sequence, or None.

    Entry k goes in the lowest (cylindric-minimal) addable box of residue
    iseq[k-1] that admits a standard completion; None when no standard
    tableau has this residue sequence.
    """
    found = _fibre_walk(iseq, params, collect_all=False)
    return found[0] if found else None


def residue_fibre(iseq, params: AlgebraParams):
    """All standard tableaux with the given residue sequence."""
    return _fibre_walk(iseq, params, collect_all=True)


def classify_idempotent(iseq, params: AlgebraParams):
    """Return the cell of the residue sequence: the minimal column-bounded
    shape in its fibre, or None when the idempotent dies in the quotient."""
    from .boxes import config_cyl_greater, young_diagram

    best = None
    for t in residue_fibre(iseq, params):
        lam = t.shape(params.ell)
        if not all(
            not comp or comp[0] <= params.h[m] for m, comp in enumerate(lam)
        ):
            continue
        if best is None or config_cyl_greater(young_diagram(best), young_diagram(lam)):
            best = lam
    return best


# ---------------------------------------------------------------------------
# ideal generator data
# ---------------------------------------------------------------------------

def y_ideal_generator_data(params: AlgebraParams):
    """Per-component data for the quotient ideal generators.

    For each component m with h[m] + 1 <= n, the single-row shape with
    h[m] + 1 boxes in component m yields a dotted idempotent of rank
    h[m] + 1; the triple returned is (m, residue sequence, exponent vector).
    The empty list means the ideal vanishes at this rank.
    """
    out = []
    for m in range(params.ell):
        k = params.h[m] + 1
        if k > params.n:
            continue
        lam = tuple(() if mm != m else (k,) for mm in range(params.ell))
        cfg = young_diagram(lam)
        t = canonical_tableau(cfg, "cyl")
        out.append((m, t.residue_sequence(params), y_exponents(lam, params)))
    return out
