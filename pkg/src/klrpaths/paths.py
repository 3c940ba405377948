"""Lattice paths in the alcove geometry.

A path is a finite sequence of unit steps; step values are 1-based epsilon
coordinates of the geometry.  Prefix sums give the points visited, and the
final point is the shape.
"""

from collections import deque
from functools import lru_cache

from .boxes import config_cyl_greater, young_diagram
from .geometry import Geometry
from .params import AlgebraParams
from .tableaux import Tableau


class Path:
    """Immutable step sequence with cached prefix points."""

    __slots__ = ("steps", "geometry", "_points")

    def __init__(self, steps, geometry: Geometry):
        steps = tuple(steps)
        if any(not 1 <= s <= geometry.h for s in steps):
            raise ValueError("step index out of range")
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "geometry", geometry)
        pts = [geometry.zero()]
        for s in steps:
            prev = pts[-1]
            pts.append(
                tuple(v + (1 if k == s - 1 else 0) for k, v in enumerate(prev))
            )
        object.__setattr__(self, "_points", tuple(pts))

    def __setattr__(self, *a):
        raise AttributeError("paths are immutable")

    def __len__(self):
        return len(self.steps)

    def __eq__(self, other):
        return isinstance(other, Path) and self.steps == other.steps

    def __hash__(self):
        return hash(self.steps)

    def __repr__(self):
        return "Path%r" % (self.steps,)

    def point(self, k):
        return self._points[k]

    @property
    def shape_weight(self):
        return self._points[-1]

    def prefix(self, k):
        return Path(self.steps[:k], self.geometry)

    def is_dominant(self):
        g = self.geometry
        return all(g.is_dominant_weight(pt) for pt in self._points)

    # -- the tableau correspondence ------------------------------------------

    def tableau(self):
        """Fill column c of component m with each step; entries increase
        down columns, and the result is standard exactly when the path is
        dominant."""
        g = self.geometry
        heights = [0] * g.h
        mapping = {}
        for k, s in enumerate(self.steps, start=1):
            c, m = g.component_of(s)
            heights[s - 1] += 1
            mapping[(heights[s - 1], c, m)] = k
        return Tableau(mapping)

    def residue_sequence(self):
        g = self.geometry
        heights = [0] * g.h
        out = []
        for s in self.steps:
            c, m = g.component_of(s)
            heights[s - 1] += 1
            out.append((g.params.sigma[m] + c - heights[s - 1]) % g.params.e)
        return tuple(out)

    def shape(self):
        """The multipartition whose column lengths are the final point;
        raises when the final point is not dominant."""
        g = self.geometry
        x = self.shape_weight
        comps = []
        for m in range(g.params.ell):
            cols = [x[g.offsets[m] + i] for i in range(g.params.h[m])]
            if any(a < b for a, b in zip(cols, cols[1:])) or any(c < 0 for c in cols):
                raise ValueError("endpoint is not a partition")
            rows = []
            for r in range(1, (cols[0] or 0) + 1):
                rows.append(sum(1 for c in cols if c >= r))
            comps.append(tuple(rows))
        return tuple(comps)


def tableau_path(t: Tableau, geometry: Geometry):
    """Inverse of Path.tableau: entry k at box (i, j, m) becomes a step in
    the j-th epsilon coordinate of component m."""
    steps = [0] * len(t)
    for (i, j, m), k in t.items():
        steps[k - 1] = geometry.eps_index(j, m)
    return Path(steps, geometry)


# ---------------------------------------------------------------------------
# degrees
# ---------------------------------------------------------------------------

def step_degree(geometry: Geometry, prev, nxt, roots=None):
    """Total degree contribution of one unit step, summed over positive
    roots and all hyperplane levels."""
    g = geometry
    if roots is None:
        roots = g.positive_roots()
    e = g.e
    total = 0
    for root in roots:
        f0 = g.shifted_pairing(prev, root)
        f1 = g.shifted_pairing(nxt, root)
        if f0 == f1:
            continue
        o = g.pairing(g.rho, root)
        if f0 % e == 0:
            # stepping off a wall: +1 toward the origin side
            total += 1 if (f1 - f0) * _side_sign(o, f0) < 0 else 0
        if f1 % e == 0:
            # stepping onto a wall: -1 from the far side
            total -= 1 if (f0 - f1) * _side_sign(o, f1) > 0 else 0
    return total


def _side_sign(origin_pairing, wall_value):
    """+1 when the origin is below the wall через this pairing value."""
    return 1 if origin_pairing - wall_value < 0 else -1


def path_degree(p: Path):
    g = p.geometry
    return sum(
        step_degree(g, p.point(k - 1), p.point(k)) for k in range(1, len(p) + 1)
    )


def is_reduced(p: Path):
    """No step earns a degree contribution against a coloured wall family:
    the simple roots together with the highest-root family."""
    g = p.geometry
    fams = g.simple_roots()
    if g.h > 1:
        fams = fams + [(1, g.h)]
    for k in range(1, len(p) + 1):
        for root in fams:
            if step_degree(g, p.point(k - 1), p.point(k), roots=[root]) != 0:
                return False
    return True


# ---------------------------------------------------------------------------
# the reflection equivalence
# ---------------------------------------------------------------------------

def reflection_neighbours(p: Path):
    """Paths differing from p by one wall reflection of a tail."""
    g = p.geometry
    n = len(p)
    out = []
    for s in range(1, n):
        pt = p.point(s)
        for root in g.positive_roots():
            if g.shifted_pairing(pt, root) % g.e == 0:
                a, b = root
                swapped = [
                    (b if v == a else a if v == b else v) for v in p.steps[s:]
                ]
                q = Path(p.steps[:s] + tuple(swapped), g)
                if q != p:
                    out.append(q)
    return out


def equivalence_class(p: Path, cap=10**5, dominant_only=True):
    """The closure of {p} under single tail reflections.

    Classes are finite but can be large; raises RuntimeError beyond cap.
    """
    seen = {p}
    queue = deque([p])
    while queue:
        cur = queue.popleft()
        for q in reflection_neighbours(cur):
            if q not in seen:
                seen.add(q)
                queue.append(q)
                if len(seen) > cap:
                    raise RuntimeError("equivalence class exceeded cap %d" % cap)
    if dominant_only:
        return {q for q in seen if q.is_dominant()}
    return seen


def min_of_class(p: Path, cap=10**5):
    """The minimal dominant member: smallest shape in the cylindric order,
    ties broken lexicographically on step sequences."""
    cls = equivalence_class(p, cap=cap)
    best = None
    for q in sorted(cls, key=lambda q: q.steps):
        if best is None:
            best = q
            continue
        bs, qs = best.shape(), q.shape()
        if bs != qs and config_cyl_greater(young_diagram(bs), young_diagram(qs)):
            best = q
    return best


def reduced_paths_of_shape(lam, geometry: Geometry):
    """All reduced dominant paths with a given multipartition shape."""
    return [
        p for p in dominant_paths(lam, geometry) if is_reduced(p)
    ]


def dominant_paths(lam, geometry: Geometry):
    """All dominant paths of shape lam (the path avatars of the standard
    tableaux)."""
    from .tableaux import standard_tableaux

    return [tableau_path(t, geometry) for t in standard_tableaux(lam)]


# ---------------------------------------------------------------------------
# concatenation
# ---------------------------------------------------------------------------

def concat_naive(p: Path, q: Path):
    return Path(p.steps + q.steps, p.geometry)


def concat_contextual(p: Path, q: Path, word=None):
    """Append q transported to the alcove at p's endpoint.

    word is an alcove word (sequence over the colour alphabet, None letters
    for the identity); when omitted it is resolved from the endpoint if the
    endpoint lies in a unique alcove's interior.
    """
    g = p.geometry
    if word is None:
        x = p.shape_weight
        if not g.is_regular_weight(x):
            raise ValueError("ambiguous context: endpoint lies on a wall")
        word = g.alcove_of(x)
    perm = g.finite_permutation(word)
    steps = tuple(perm[s] for s in q.steps)
    return Path(p.steps + steps, g)


# ---------------------------------------------------------------------------
# distinguished paths
# ---------------------------------------------------------------------------

def _root_index(geometry: Geometry, colour):
    """The coordinate i for a wall colour eps_i - eps_{i+1} (cyclically for
    the affine colour)."""
    s, t = colour
    if t == s + 1:
        return s
    if (s, t) == (geometry.h, 1):
        return geometry.h
    raise ValueError("not a wall colour: %r" % (colour,))


def block_path(geometry: Geometry, letter, flat=False):
    """The building-block path of one alphabet letter.

    letter None gives the straight block; otherwise the wall-crossing block
    for that colour, or its reflected (flat) variant.
    """
    g = geometry
    h = g.h
    if letter is None:
        if flat:
            raise ValueError("no flat block for the identity letter")
        return Path(range(1, h + 1), g)
    i = _root_index(g, letter)
    b = g.b_distance(letter)
    remove = [s for s in range(1, h + 1) if s != i]
    add = i if flat else (i % h) + 1
    return Path(tuple(remove) * b + (add,) * b, g)


def straight_block_power(geometry: Geometry, letter):
    """The straight path matching a crossing block's length."""
    b = geometry.b_distance(letter)
    return Path(tuple(range(1, geometry.h + 1)) * b, geometry)


def _swap(v, i, j):
    if v == i:
        return j
    if v == j:
        return i
    return v


def extend_context(perm, letter, geometry: Geometry):
    """Compose the running finite permutation with one crossing letter
    (on the source side, matching right-bracketed concatenation)."""
    if letter is None:
        return dict(perm)
    i = _root_index(geometry, letter)
    j = (i % geometry.h) + 1
    return {v: perm[_swap(v, i, j)] for v in perm}


def distinguished_path(word, geometry: Geometry):
    """The distinguished path of a word over the colour alphabet.

    Right-bracketed contextualised concatenation: each crossing letter maps
    all later blocks through its finite reflection.
    """
    g = geometry
    steps = []
    perm = {i: i for i in range(1, g.h + 1)}
    for letter in word:
        block = block_path(g, letter)
        steps.extend(perm[s] for s in block.steps)
        perm = extend_context(perm, letter, g)
    return Path(steps, g)


def flat_path(colour, geometry: Geometry):
    """The reflected variant of a crossing block: bounces off the wall and
    returns, ending at the straight block's endpoint."""
    return block_path(geometry, colour, flat=True)


# ---------------------------------------------------------------------------
# block paths for the truncated algebra
# ---------------------------------------------------------------------------

def _block_menu(geometry: Geometry):
    menu = [(None, block_path(geometry, None))]
    for colour in geometry.pi_roots():
        menu.append(((colour, "cross"), block_path(geometry, colour)))
        menu.append(((colour, "flat"), block_path(geometry, colour, flat=True)))
    return menu


def standard_sigma_paths(geometry: Geometry, n, cap=10**6):
    """All dominant paths of length n built from contextualised blocks.

    Returns a dict mapping each path to the list of its block factorisations;
    a factorisation is a tuple of block tags (None for the straight block,
    (colour, 'cross') or (colour, 'flat') otherwise).
    """
    g = geometry
    if n % g.h:
        raise ValueError("block paths need the rank divisible by h")
    menu = _block_menu(g)
    out = {}
    count = 0

    def rec(steps, perm, tags):
        nonlocal count
        if len(steps) == n:
            p = Path(steps, g)
            out.setdefault(p, []).append(tuple(tags))
            return
        for tag, block in menu:
            ext = [perm[s] for s in block.steps]
            if len(steps) + len(ext) > n:
                continue
            cand = steps + tuple(ext)
            if not _dominant_prefix(g, cand, start=len(steps)):
                continue
            count += 1
            if count > cap:
                raise RuntimeError("block-path enumeration exceeded cap")
            letter = tag[0] if tag and tag[1] == "cross" else None
            rec(cand, extend_context(perm, letter, g), tags + [tag])

    ident = {i: i for i in range(1, g.h + 1)}
    rec((), ident, [])
    return out


def _dominant_prefix(g, steps, start=0):
    x = [0] * g.h
    for s in steps[:start]:
        x[s - 1] += 1
    for s in steps[start:]:
        x[s - 1] += 1
        for m in range(g.params.ell):
            lo, hi = g.offsets[m], g.offsets[m + 1]
            cols = x[lo:hi]
            if any(a < b for a, b in zip(cols, cols[1:])):
                return False
    return True


def std_n_sigma(lam, geometry: Geometry, cap=10**6):
    """The block-built dominant paths with a given shape."""
    n = sum(sum(c) for c in lam)
    all_paths = standard_sigma_paths(geometry, n, cap=cap)
    return {p for p in all_paths if p.shape() == lam}


def restricted_sigma_shapes(geometry: Geometry, n, cap=10**6):
    """Shapes reachable by block paths: the principal-block cell poset."""
    shapes = set()
    for p in standard_sigma_paths(geometry, n, cap=cap):
        shapes.add(p.shape())
    return shapes
