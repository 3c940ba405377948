"""Boxes, box-configurations, multipartitions, the two orders and Y-moves.

Boxes are triples (i, j, m): row i >= 1, column j >= 1, component
0 <= m < ell.  Box-configurations are frozensets of boxes.  Multipartitions
are tuples of weakly decreasing tuples of positive integers.
"""

from functools import lru_cache

from .params import AlgebraParams


# ---------------------------------------------------------------------------
# box orders
#
# Reverse cylindric order:  [i,j,m] > [i',j',m']  iff  i<i', or i=i' and
# m<m', or i=i', m=m' and j<j'.  Sorting by cyl_key ascending therefore lists
# boxes from greatest to least; the minimal box has the largest key.
# ---------------------------------------------------------------------------

def cyl_key(box):
    i, j, m = box
    return (i, m, j)


def dom_key(box):
    i, j, m = box
    return (m, i, j)


def cyl_greater(a, b):
    """a > b in the reverse cylindric ordering (strict)."""
    return a != b and cyl_key(a) < cyl_key(b)


def dom_greater(a, b):
    """a > b in the dominance ordering on boxes (strict)."""
    return a != b and dom_key(a) < dom_key(b)


def compare_cyl(a, b):
    """-1, 0, +1 according to the reverse cylindric ordering (+1: a > b)."""
    if a == b:
        return 0
    return 1 if cyl_key(a) < cyl_key(b) else -1


def compare_dom(a, b):
    if a == b:
        return 0
    return 1 if dom_key(a) < dom_key(b) else -1


def config_cyl_greater(lam, mu):
    """lam > mu for equal-size configurations: the cylindric-minimal box of
    the symmetric difference belongs to mu."""
    lam, mu = frozenset(lam), frozenset(mu)
    diff = lam ^ mu
    if not diff:
        return False
    least = max(diff, key=cyl_key)
    return least in mu


def config_dom_greater(lam, mu):
    """lam dominates mu: the dominance-maximal box of the symmetric
    difference belongs to lam."""
    lam, mu = frozenset(lam), frozenset(mu)
    diff = lam ^ mu
    if not diff:
        return False
    greatest = min(diff, key=dom_key)
    return greatest in lam


# ---------------------------------------------------------------------------
# multipartitions
# ---------------------------------------------------------------------------

def normalize_multipartition(lam):
    """Strip trailing zeros and return a tuple-of-tuples."""
    out = []
    for comp in lam:
        comp = list(comp)
        while comp and comp[-1] == 0:
            comp.pop()
        if any(a < b for a, b in zip(comp, comp[1:])) or any(a <= 0 for a in comp):
            raise ValueError("components must be weakly decreasing and positive")
        out.append(tuple(comp))
    return tuple(out)


def multipartition_size(lam):
    return sum(sum(comp) for comp in lam)


def young_diagram(lam):
    """The box-configuration of a multipartition."""
    boxes = set()
    for m, comp in enumerate(lam):
        for i, row in enumerate(comp, start=1):
            for j in range(1, row + 1):
                boxes.add((i, j, m))
    return frozenset(boxes)


def shape_of_config(cfg, ell):
    """Recover a multipartition from a Young-diagram configuration.

    Raises ValueError if cfg is not a union of Young diagrams.
    """
    rows = {}
    for (i, j, m) in cfg:
        rows.setdefault((m, i), []).append(j)
    comps = []
    for m in range(ell):
        lengths = {}
        for (mm, i), cols in rows.items():
            if mm == m:
                cols = sorted(cols)
                if cols != list(range(1, len(cols) + 1)):
                    raise ValueError("configuration is not a Young diagram")
                lengths[i] = len(cols)
        if lengths:
            if sorted(lengths) != list(range(1, max(lengths) + 1)):
                raise ValueError("configuration is not a Young diagram")
            comp = tuple(lengths[i] for i in range(1, max(lengths) + 1))
            if any(a < b for a, b in zip(comp, comp[1:])):
                raise ValueError("rows not weakly decreasing")
            comps.append(comp)
        else:
            comps.append(())
    return tuple(comps)


def _partitions(n, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def multipartitions(n, ell):
    """All ell-multipartitions of n."""
    if ell == 1:
        return tuple((p,) for p in _partitions(n))
    out = []
    for k in range(n + 1):
        for head in _partitions(k):
            for tail in multipartitions(n - k, ell - 1):
                out.append(((head,) + tail))
    return tuple(out)


def column_bounded(lam, h):
    """Membership of P_h(n): at most h[m] columns in component m."""
    return all(not comp or comp[0] <= h[m] for m, comp in enumerate(lam))


def restricted_multipartitions(n, params: AlgebraParams):
    """The multipartitions of n indexing cells of the quotient algebra."""
    return tuple(
        lam for lam in multipartitions(n, params.ell) if column_bounded(lam, params.h)
    )


# ---------------------------------------------------------------------------
# addable and removable boxes
# ---------------------------------------------------------------------------

def removable_boxes(cfg):
    cfg = frozenset(cfg)
    return {
        (i, j, m)
        for (i, j, m) in cfg
        if (i + 1, j, m) not in cfg and (i, j + 1, m) not in cfg
    }


def addable_boxes(cfg, ell):
    cfg = frozenset(cfg)
    cands = {(1, 1, m) for m in range(ell)}
    for (i, j, m) in cfg:
        cands.add((i + 1, j, m))
        cands.add((i, j + 1, m))
    out = set()
    for (i, j, m) in cands:
        if (i, j, m) in cfg:
            continue
        if i > 1 and (i - 1, j, m) not in cfg:
            continue
        if j > 1 and (i, j - 1, m) not in cfg:
            continue
        out.add((i, j, m))
    return out


def addable_removable(cfg, params: AlgebraParams, res=None):
    """The pair (Add, Rem), optionally filtered by residue."""
    add = addable_boxes(cfg, params.ell)
    rem = removable_boxes(cfg)
    if res is not None:
        res %= params.e
        add = {b for b in add if params.residue_of(b) == res}
        rem = {b for b in rem if params.residue_of(b) == res}
    return add, rem


# ---------------------------------------------------------------------------
# Garnir belts
# ---------------------------------------------------------------------------

class GarnirBelt:
    """The four-piece belt attached to a box, as an unbounded template.

    Row-zero boxes are ignored.  The dominance flavour keeps only the part
    inside the box's own component.
    """

    def __init__(self, box, ell, flavor="cyl"):
        if flavor not in ("cyl", "dom"):
            raise ValueError("flavor must be 'cyl' or 'dom'")
        self.box = box
        self.ell = ell
        self.flavor = flavor

    def __contains__(self, other):
        i, j, m = other
        if i < 1 or j < 1 or not 0 <= m < self.ell:
            return False
        r, c, bm = self.box
        if self.flavor == "dom" and m != bm:
            return False
        if m < bm:
            return i == r
        if m == bm:
            return (i == r and j <= c) or (i == r - 1 and j >= c)
        return i == r - 1

    def intersect(self, cfg):
        return frozenset(b for b in cfg if b in self)


def garnir_belt(box, params: AlgebraParams, flavor="cyl"):
    return GarnirBelt(box, params.ell, flavor)


def garnir_adjacency(box, cfg, params: AlgebraParams):
    """Boxes of cfg in the cylindric belt whose residue is within 1 of the
    target box's residue (distance measured in Z/eZ)."""
    belt = GarnirBelt(box, params.ell, "cyl")
    r = params.residue_of(box)
    near = {(r - 1) % params.e, r, (r + 1) % params.e}
    return frozenset(
        b for b in cfg if b != box and b in belt and params.residue_of(b) in near
    )


# ---------------------------------------------------------------------------
# Y-moves
# ---------------------------------------------------------------------------

def is_left_justified(box, cfg, e):
    i, j, m = box
    if j <= e:
        return True
    return any((i, j - p, m) in cfg for p in range(1, e + 1))


def y_move_single(cfg, a, params: AlgebraParams):
    """One application of the box-replacement move; None when no target
    box exists."""
    cfg = frozenset(cfg)
    if a not in cfg:
        raise ValueError("box %r not in configuration" % (a,))
    r = params.residue_of(a)
    base = cfg - {a}
    akey = cyl_key(a)
    best = None
    # Candidate columns in row i with the right residue repeat with period e,
    # so it suffices to scan rows 1..i and, within each row, the admissible
    # columns up to the maximal left-justified position.
    for i in range(1, a[0] + 1):
        for m in range(params.ell):
            # columns j >= 1 with residue r in this row/component
            j0 = (r - params.sigma[m] + i) % params.e
            if j0 == 0:
                j0 = params.e
            row_cols = [jj for (ii, jj, mm) in base if ii == i and mm == m]
            jmax = (max(row_cols) + params.e) if row_cols else params.e
            j = j0
            while j <= jmax:
                b = (i, j, m)
                if (
                    b != a
                    and b not in cfg
                    and cyl_key(b) < akey
                    and is_left_justified(b, cfg, params.e)
                ):
                    if best is None or cyl_key(b) > cyl_key(best):
                        best = b
                j += params.e
    if best is None:
        return None
    return base | {best}


def y_move(cfg, a, params: AlgebraParams, power=1):
    """Iterated move of a single box through the configuration.

    Returns the resulting configuration, or None if some step is undefined.
    """
    cfg = frozenset(cfg)
    if a not in cfg:
        raise ValueError("box %r not in configuration" % (a,))
    cur = cfg
    moving = a
    for _ in range(power):
        nxt = y_move_single(cur, moving, params)
        if nxt is None:
            return None
        (moving,) = nxt - cur
        cur = nxt
    return cur


def y_move_for_claim3(cfg, a, params: AlgebraParams):
    """The move with iteration count ell+1 when the adjacency residues are
    exactly {r-1}, and a single step otherwise."""
    r = params.residue_of(a)
    adj = garnir_adjacency(a, frozenset(cfg) - {a}, params)
    adj_res = {params.residue_of(b) for b in adj}
    k = params.ell + 1 if adj_res == {(r - 1) % params.e} else 1
    return y_move(cfg, a, params, power=k)


def y_order_refinement(n, params: AlgebraParams):
    """A fixed total order on the cells of rank n.

    The transitive closure of single Y-moves is refined to a total order by
    topological sort, breaking ties with the cylindric comparison.  Returned
    greatest-first (the top of the ideal chain first).
    """
    cells = restricted_multipartitions(n, params)
    diagrams = {lam: young_diagram(lam) for lam in cells}
    index = {diagrams[lam]: lam for lam in cells}
    above = {lam: set() for lam in cells}  # lam -> cells strictly greater
    for lam in cells:
        cfg = diagrams[lam]
        for a in cfg:
            nxt = y_move_single(cfg, a, params)
            if nxt is None or nxt not in index:
                continue
            mu = index[nxt]
            if mu != lam:
                above[lam].add(mu)
    # transitive closure
    changed = True
    while changed:
        changed = False
        for lam in cells:
            extra = set()
            for mu in above[lam]:
                extra |= above[mu] - above[lam]
            if extra:
                above[lam] |= extra
                changed = True
    remaining = set(cells)
    out = []
    while remaining:
        maximal = [lam for lam in remaining if not (above[lam] & remaining)]
        top = maximal[0]
        for lam in maximal[1:]:
            if config_cyl_greater(diagrams[lam], diagrams[top]):
                top = lam
        out.append(top)
        remaining.remove(top)
    return tuple(out)
