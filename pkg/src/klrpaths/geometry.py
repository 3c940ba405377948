"""Euclidean data for the alcove geometry: roots, hyperplanes, the shifted
affine Weyl action, alcoves and wall colours.

Weights are integer tuples of length h = sum of the column bounds, indexed
by the epsilon coordinates grouped per component.  Roots are ordered pairs
(s, t) of distinct 1-based coordinate indices, meaning eps_s - eps_t.
"""

from .params import AlgebraParams


class Geometry:
    """Root data and the shifted action for one parameter set."""

    def __init__(self, params: AlgebraParams):
        params.require_geometry()
        self.params = params
        self.h = params.h_total
        self.e = params.e
        # component offsets: coordinate (i, m) is eps_{offset[m] + i}
        offs = [0]
        for hm in params.h:
            offs.append(offs[-1] + hm)
        self.offsets = tuple(offs)
        self.rho = self._rho()

    def _rho(self):
        # Strictly decreasing across the whole coordinate line, chosen so a
        # box in column c of component m at height g has shifted coordinate
        # g - sigma_m - c, i.e. minus its content: equal residues correspond
        # exactly to congruent shifted coordinates.
        out = []
        for m, hm in enumerate(self.params.h):
            s = self.params.sigma[m]
            out.extend(-(s + c) for c in range(1, hm + 1))
        return tuple(out)

    # -- coordinates ---------------------------------------------------------

    def eps_index(self, i, m):
        """1-based coordinate of eps_{i,m}."""
        if not (0 <= m < self.params.ell and 1 <= i <= self.params.h[m]):
            raise ValueError("no such coordinate")
        return self.offsets[m] + i

    def component_of(self, t):
        """(column index, component) of the 1-based coordinate t."""
        for m in range(self.params.ell):
            if self.offsets[m] < t <= self.offsets[m + 1]:
                return t - self.offsets[m], m
        raise ValueError("coordinate out of range")

    def zero(self):
        return (0,) * self.h

    def embed(self, lam):
        """Integer-lattice image of a multicomposition: coordinate (i, m)
        carries the length of the i-th column of component m."""
        x = [0] * self.h
        for m, comp in enumerate(lam):
            for row in comp:
                if row > self.params.h[m]:
                    raise ValueError("too many columns for the geometry")
                for i in range(1, row + 1):
                    x[self.offsets[m] + i - 1] += 1
        return tuple(x)

    # -- roots ----------------------------------------------------------------

    def roots(self):
        """All roots eps_s - eps_t, s != t."""
        return [
            (s, t)
            for s in range(1, self.h + 1)
            for t in range(1, self.h + 1)
            if s != t
        ]

    def positive_roots(self):
        return [(s, t) for s in range(1, self.h + 1) for t in range(s + 1, self.h + 1)]

    def finite_roots(self):
        """The roots of the Levi: both coordinates in one component."""
        out = []
        for m in range(self.params.ell):
            lo, hi = self.offsets[m] + 1, self.offsets[m + 1]
            out.extend(
                (s, t) for s in range(lo, hi + 1) for t in range(lo, hi + 1) if s != t
            )
        return out

    def simple_roots(self):
        return [(t, t + 1) for t in range(1, self.h)]

    def affine_root(self):
        return (self.h, 1)

    def pi_roots(self):
        """Delta together with the affine root; the wall colours."""
        return self.simple_roots() + ([self.affine_root()] if self.h > 1 else [])

    @staticmethod
    def pairing(x, root):
        s, t = root
        return x[s - 1] - x[t - 1]

    def shifted_pairing(self, x, root):
        return self.pairing(x, root) + self.pairing(self.rho, root)

    # -- reflections and the dot action --------------------------------------

    def reflect(self, x, root, level):
        """Linear reflection through <., root> = level * e."""
        s, t = root
        c = self.pairing(x, root) - level * self.e
        y = list(x)
        y[s - 1] -= c
        y[t - 1] += c
        return tuple(y)

    def dot_reflect(self, x, root, level):
        """The rho-shifted reflection."""
        xr = tuple(a + b for a, b in zip(x, self.rho))
        y = self.reflect(xr, root, level)
        return tuple(a - b for a, b in zip(y, self.rho))

    def dot_action_letter(self, letter, x):
        """One alphabet letter acting: a root in Pi, or None for the
        identity letter.  The affine root acts through level -1."""
        if letter is None:
            return x
        level = -1 if letter == self.affine_root() else 0
        return self.dot_reflect(x, letter, level)

    def dot_action(self, word, x):
        """A word in the alphabet acting letter by letter (leftmost last,
        matching composition of functions)."""
        for letter in reversed(word):
            x = self.dot_action_letter(letter, x)
        return x

    def finite_permutation(self, word):
        """The underlying coordinate permutation of a word: a dict mapping
        1..h to 1..h, obtained by replacing each letter with the plain
        transposition of its two coordinates."""
        perm = {i: i for i in range(1, self.h + 1)}
        for letter in reversed(word):
            if letter is None:
                continue
            s, t = letter
            ps = {v: k for k, v in perm.items()}
            a, b = ps[s], ps[t]
            perm[a], perm[b] = perm[b], perm[a]
        return perm

    # -- hyperplane sides -----------------------------------------------------

    def hyperplane_side(self, x, root, level):
        """'below' / 'on' / 'above', where the origin side is 'below'."""
        v = self.shifted_pairing(x, root) - level * self.e
        if v == 0:
            return "on"
        origin = self.pairing(self.rho, root) - level * self.e
        if origin == 0:
            raise ValueError("hyperplane passes through the origin")
        return "below" if (v > 0) == (origin > 0) else "above"

    def is_regular_weight(self, x):
        for root in self.positive_roots():
            if self.shifted_pairing(x, root) % self.e == 0:
                return False
        return True

    def is_regular(self, lam):
        return self.is_regular_weight(self.embed(lam))

    def is_dominant_weight(self, x):
        """Inside the closure of the dominant chamber: weakly decreasing
        within each component."""
        for m in range(self.params.ell):
            lo, hi = self.offsets[m] + 1, self.offsets[m + 1]
            for t in range(lo, hi):
                if x[t - 1] < x[t]:
                    return False
        return True

    # -- b distances ----------------------------------------------------------

    def b_distance(self, root):
        """Lattice distance from the origin to the wall of a colour.

        root is a member of Pi, or None for the identity letter.
        """
        p = self.params
        if root is None:
            return 1
        if root == self.affine_root() and self.h > 1:
            return self.e + p.sigma[0] - p.sigma[-1] - p.h[-1] + 1
        s, t = root
        if t != s + 1:
            raise ValueError("not a wall colour: %r" % (root,))
        ci, m = self.component_of(s)
        cj, m2 = self.component_of(t)
        if m == m2:
            return 1
        # boundary between consecutive components
        return p.sigma[m + 1] - p.sigma[m] - p.h[m] + 1

    # -- alcoves --------------------------------------------------------------

    def violated_wall(self, x):
        """A fundamental-alcove wall that x + rho lies beyond (or None).

        The fundamental alcove is cut out by the simple walls at level zero
        and the affine wall; points on a wall violate nothing.
        """
        for root in self.simple_roots():
            if self.shifted_pairing(x, root) < 0:
                return root
        if self.h > 1:
            # the affine wall: pairing with the highest root eps_1 - eps_h
            if self.shifted_pairing(x, (1, self.h)) > self.e:
                return self.affine_root()
        return None

    def in_fundamental_closure(self, x):
        for root in self.simple_roots():
            if self.shifted_pairing(x, root) < 0:
                return False
        return self.h == 1 or self.shifted_pairing(x, (1, self.h)) <= self.e

    def alcove_of(self, x, max_steps=10**4):
        """A reduced alcove word w with x in the closure of w . A0.

        For regular x the word is unique up to the reduced-word class; the
        point is walked to the fundamental alcove by wall crossings, and the
        crossing colours are collected.  Raises on non-dominant input and
        when the crossing budget is exhausted.
        """
        if not self.is_dominant_weight(x):
            raise ValueError("alcove words are issued for dominant weights")
        word = []
        cur = x
        for _ in range(max_steps):
            wall = self.violated_wall(cur)
            if wall is None:
                return tuple(word)
            level = -1 if wall == self.affine_root() else 0
            cur = self.dot_reflect(cur, wall, level)
            word.append(wall)
        raise RuntimeError("alcove search exceeded %d crossings" % max_steps)

    def wall_colours(self, word):
        """Colours of the walls of (word . A0), keyed by the colour of the
        fundamental wall in whose orbit each wall lies.

        Returns a dict colour -> hyperplane (root, level) containing that
        wall of the alcove.
        """
        out = {}
        for colour in self.pi_roots():
            level = -1 if colour == self.affine_root() else 0
            # transport the fundamental wall by the word
            root, lev = colour, level
            for letter in word:
                root, lev = self._transport(letter, root, lev)
            out[colour] = self._normalise_hyperplane(root, lev)
        return out

    def _transport(self, letter, root, lev):
        """Image of the hyperplane E(root, lev*e) under the dot action of a
        single letter."""
        if letter is None:
            return root, lev
        llev = -1 if letter == self.affine_root() else 0
        s, t = letter
        a, b = root
        # conjugation: s_{letter} E(root, lev) = E(letter-perm of root, lev')
        def img(c):
            if c == s:
                return t
            if c == t:
                return s
            return c

        na, nb = img(a), img(b)
        # pairing shift: <s x, root'> = <x, root> with level transported by
        # the affine part: s_{beta, re} E(alpha, ue) = E(s_beta alpha, ue - r<beta, alpha-ish>)
        # compute via two sample points instead of a formula
        p0 = self._point_on(root, lev)
        p1 = self.dot_reflect(p0, letter, llev)
        c = self.shifted_pairing(p1, (na, nb))
        if c % self.e:
            raise RuntimeError("hyperplane transport failed")
        return (na, nb), c // self.e

    def _point_on(self, root, lev):
        """Some rational-free integer point x with <x + rho, root> = lev*e."""
        s, t = root
        x = [0] * self.h
        x[s - 1] = lev * self.e - self.pairing(self.rho, root)
        return tuple(x)

    @staticmethod
    def _normalise_hyperplane(root, lev):
        s, t = root
        if s > t:
            return (t, s), -lev
        return (s, t), lev
