"""Exact sparse linear algebra over the rationals.

Vectors are dicts mapping hashable keys to nonzero Fractions (or ints).
The reducer keeps a row-echelon family with tracked combinations so that
membership queries also return coordinates.
"""

from fractions import Fraction


def vec_add(a, b, factor=1):
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, 0) + factor * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def vec_scale(a, c):
    if not c:
        return {}
    return {k: c * v for k, v in a.items()}


class RowReducer:
    """Incremental echelon form with combination tracking.

    Rows are added with labels; reduce() expresses a vector as a residual
    plus a combination of previously added rows.
    """

    def __init__(self):
        self.pivots = {}  # pivot key -> (row, combo)

    def __len__(self):
        return len(self.pivots)

    def reduce(self, vec, combo=None):
        vec = dict(vec)
        combo = dict(combo or {})
        while vec:
            key = min(vec, key=_keyorder)
            hit = self.pivots.get(key)
            if hit is None:
                return vec, combo
            row, rcombo = hit
            factor = Fraction(vec[key], row[key])
            vec = vec_add(vec, row, -factor)
            for lbl, c in rcombo.items():
                nc = combo.get(lbl, 0) - factor * c
                if nc:
                    combo[lbl] = nc
                else:
                    combo.pop(lbl, None)
        return vec, combo

    def add(self, vec, label):
        """Insert a row; returns False if it was already in the span."""
        residual, combo = self.reduce(vec, {label: 1})
        if not residual:
            return False
        key = min(residual, key=_keyorder)
        self.pivots[key] = (residual, combo)
        return True

    def contains(self, vec):
        residual, _ = self.reduce(vec)
        return not residual

    def coordinates(self, vec):
        """Coordinates of vec in terms of the added row labels, or None."""
        residual, combo = self.reduce(vec)
        if residual:
            return None
        return {lbl: -c for lbl, c in combo.items()}


def _keyorder(k):
    return (repr(type(k)), repr(k))


def rank_of_rows(rows):
    red = RowReducer()
    r = 0
    for i, row in enumerate(rows):
        if red.add(row, i):
            r += 1
    return r


def rank_mod_p(rows, p):
    """Rank of integer rows over the field with p elements."""
    reduced = []
    pivots = {}
    for row in rows:
        vec = {k: v % p for k, v in row.items() if v % p}
        while vec:
            key = min(vec, key=_keyorder)
            if key not in pivots:
                pivots[key] = vec
                break
            other = pivots[key]
            factor = (vec[key] * pow(other[key], -1, p)) % p
            vec = {
                k: (vec.get(k, 0) - factor * other.get(k, 0)) % p
                for k in set(vec) | set(other)
            }
            vec = {k: v for k, v in vec.items() if v}
    return len(pivots)


def solve_in_span(rows, target):
    """Express target as a combination of labelled rows, or None.

    rows is an iterable of (label, vector).
    """
    red = RowReducer()
    for label, vec in rows:
        red.add(vec, label)
    return red.coordinates(target)
