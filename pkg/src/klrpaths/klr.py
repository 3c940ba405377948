"""Exact arithmetic in the quiver Hecke algebra and its cyclotomic quotient.

Elements are integer (or rational) combinations of normal monomials

    psi_W . y^a . e_i

where W is the fixed canonical reduced word of its permutation, the dot
vector a sits against the right idempotent, and i is a residue sequence.
Multiplication rewrites products back to normal form by exact relation
moves; the cyclotomic relation prunes monomials whose dot block meets the
vanishing power of y_1.
"""

from functools import lru_cache

from .params import AlgebraParams
from .permutations import (
    apply_to_sequence,
    canonical_word,
    compose,
    identity,
    length,
    perm_of_word,
    transposition,
)


class RewriteBudgetExceeded(RuntimeError):
    """The step budget ran out; signals a pathological rule ordering."""


class KLRContext:
    """Shared rewriting caches for one (params, rank) pair."""

    def __init__(self, params: AlgebraParams, n=None, cyclotomic=True):
        self.params = params
        self.n = params.n if n is None else n
        self.e = params.e
        self.cyclotomic = cyclotomic
        self._sigma_res = {s % self.e for s in params.sigma}
        self._sigma_count = {}
        for s in params.sigma:
            r = s % self.e
            self._sigma_count[r] = self._sigma_count.get(r, 0) + 1
        self._word_cache = {}
        self.steps = 0
        self.budget = 10**7

    def _tick(self):
        self.steps += 1
        if self.steps > self.budget:
            raise RewriteBudgetExceeded("rewriting exceeded %d steps" % self.budget)

    def cyclotomic_power(self, residue):
        return self._sigma_count.get(residue % self.e, 0)

    # -- monomial helpers ------------------------------------------------------

    def monomial_dies(self, word, dots, iseq):
        """Cyclotomic vanishing: the dot block or either frame meets the
        y_1-relation."""
        if not self.cyclotomic:
            return False
        if not iseq:
            return False
        if dots and dots[0] >= self.cyclotomic_power(iseq[0]):
            return True
        if self.cyclotomic_power(iseq[0]) == 0:
            return True
        left = apply_to_sequence(word, iseq)
        if self.cyclotomic_power(left[0]) == 0:
            return True
        return False

    # -- the word engine -------------------------------------------------------

    def normalize_word(self, word, iseq):
        """psi_word e_iseq as a dict {(canonical word, dots): coeff}."""
        word = tuple(word)
        iseq = tuple(iseq)
        key = (word, iseq)
        hit = self._word_cache.get(key)
        if hit is not None:
            return hit
        self._tick()
        out = self._normalize_word(word, iseq)
        self._word_cache[key] = out
        return out

    def _normalize_word(self, word, iseq):
        n = self.n
        u = perm_of_word(word, n)
        if len(word) == length(u):
            target = canonical_word(u)
            if word == target:
                return {(word, (0,) * n): 1}
            return self._march(word, target, iseq)
        return self._resolve_nonreduced(word, iseq)

    # .. reduced words: march to the canonical one ............................

    def _march(self, word, target, iseq):
        out = {}
        if not target:
            _accumulate(out, {((), (0,) * self.n): 1}, 1)
            return out
        c = target[0]
        main, errors = self._front_pull(c, word, iseq)
        assert main[0] == c
        # recurse on the tail against the target tail
        tail_nf = self._march_tail(main[1:], target[1:], iseq)
        _accumulate(out, self._prepend_letter(c, tail_nf, iseq), 1)
        for coeff, err in errors:
            _accumulate(out, self.normalize_word(err, iseq), coeff)
        return out

    def _march_tail(self, word, target, iseq):
        if word == target:
            return {(word, (0,) * self.n): 1}
        return self._march(word, target, iseq)

    def _prepend_letter(self, c, nf, iseq):
        """psi_c times a normal form, all over the same right frame."""
        out = {}
        for (w, dots), coeff in nf.items():
            for (w2, dots2), c2 in self.normalize_word((c,) + w, iseq).items():
                key = (w2, _addvec(dots2, dots))
                out[key] = out.get(key, 0) + coeff * c2
        return {k: v for k, v in out.items() if v}

    def _front_pull(self, c, word, iseq):
        """Rewrite a reduced word to start with the letter c.

        Returns (new word, [(coeff, shorter raw word), ...]); every move is
        an exact relation, commutations silently and braids with their
        correction terms.
        """
        self._tick()
        a = word[0]
        if a == c:
            return word, []
        rest = word[1:]
        if abs(a - c) > 1:
            main, errs = self._front_pull(c, rest, iseq)
            lifted = [(k, (a,) + e) for k, e in errs]
            # commute the leading pair
            return (c, a) + main[1:], lifted
        # adjacent letters: build the braid pattern a c a at the front
        main1, errs1 = self._front_pull(c, rest, iseq)
        errors = [(k, (a,) + e) for k, e in errs1]
        v2 = main1[1:]
        main2, errs2 = self._front_pull(a, v2, iseq)
        errors.extend((k, (a, c) + e) for k, e in errs2)
        v3 = main2[1:]
        # braid (a, c, a) -> (c, a, c) with the R5 correction
        local = apply_to_sequence(v3, iseq)
        r = min(a, c)
        ira, irb, irc = local[r - 1], local[r], local[r + 1]
        corr = 0
        if ira == irc:
            if ira == (irb + 1) % self.e:
                corr = -1
            elif ira == (irb - 1) % self.e:
                corr = 1
        if corr:
            # psi_r psi_{r+1} psi_r = psi_{r+1} psi_r psi_{r+1} + corr
            # oriented so the main word starts with c
            sign = corr if word[0] == r else -corr
            errors.append((sign, v3))
        return (c, a, c) + v3, errors

    # .. non-reduced words .....................................................

    def _resolve_nonreduced(self, word, iseq):
        n = self.n
        # find the first prefix that drops length
        u = identity(n)
        t = 0
        for k, a in enumerate(word):
            nu = compose(transposition(n, a), u)
            if length(nu) < length(u):
                t = k
                break
            u = nu
        else:
            raise AssertionError("word was reduced after all")
        c = word[t]
        prefix = word[:t]
        suffix = word[t + 1:]
        main, errors = self._back_pull(c, prefix, (c,) + suffix, iseq)
        out = {}
        # main ends with c: resolve the double letter against the suffix
        body = main[:-1]
        local = apply_to_sequence(suffix, iseq)
        ra, rb = local[c - 1], local[c]
        if ra == rb:
            pass  # the double crossing vanishes
        elif rb == (ra + 1) % self.e or rb == (ra - 1) % self.e:
            sign = 1 if rb == (ra + 1) % self.e else -1
            # psi_c^2 = sign * (y_{c+1} - y_c): slide each dot to the right
            for pos, s2 in (((c + 1), sign), (c, -sign)):
                for k2, sub, dvec in self._slide_dot(pos, suffix, iseq):
                    nf = self.normalize_word(body + sub, iseq)
                    for (w2, d2), c3 in nf.items():
                        key = (w2, _addvec(d2, dvec))
                        out[key] = out.get(key, 0) + s2 * k2 * c3
        else:
            _accumulate(out, self.normalize_word(body + suffix, iseq), 1)
        for coeff, err in errors:
            _accumulate(out, self.normalize_word(err + (c,) + suffix, iseq), coeff)
        return {k: v for k, v in out.items() if v}

    def _back_pull(self, c, word, context, iseq):
        """Rewrite a reduced word to end with the letter c.

        context is the word standing between this fragment and the right
        frame (needed for residue tests).  Returns (new word, errors) with
        error words full fragments.
        """
        self._tick()
        a = word[-1]
        if a == c:
            return word, []
        rest = word[:-1]
        if abs(a - c) > 1:
            main, errs = self._back_pull(c, rest, (a,) + context, iseq)
            return main[:-1] + (a, c), [(k, e + (a,)) for k, e in errs]
        main1, errs1 = self._back_pull(c, rest, (a,) + context, iseq)
        errors = [(k, e + (a,)) for k, e in errs1]
        v2 = main1[:-1]
        main2, errs2 = self._back_pull(a, v2, (c, a) + context, iseq)
        errors.extend((k, e + (c, a)) for k, e in errs2)
        v3 = main2[:-1]
        local = apply_to_sequence(context, iseq)
        r = min(a, c)
        ira, irb, irc = local[r - 1], local[r], local[r + 1]
        corr = 0
        if ira == irc:
            if ira == (irb + 1) % self.e:
                corr = -1
            elif ira == (irb - 1) % self.e:
                corr = 1
        if corr:
            sign = corr if a == r else -corr
            errors.append((sign, v3))
        return v3 + (c, a, c), errors

    def _slide_dot(self, pos, word, iseq):
        """y_pos psi_word e_iseq as [(coeff, subword, dotvec)] with the dots
        standing to the right of the subword."""
        n = self.n
        if not word:
            vec = [0] * n
            vec[pos - 1] = 1
            return [(1, (), tuple(vec))]
        a = word[0]
        rest = word[1:]
        if pos not in (a, a + 1):
            return [
                (k, (a,) + sub, dvec)
                for k, sub, dvec in self._slide_dot(pos, rest, iseq)
            ]
        local = apply_to_sequence(rest, iseq)
        delta = 1 if local[a - 1] == local[a] else 0
        out = []
        newpos = a + 1 if pos == a else a
        for k, sub, dvec in self._slide_dot(newpos, rest, iseq):
            out.append((k, (a,) + sub, dvec))
        if delta:
            sign = -1 if pos == a else 1
            out.append((sign, rest, (0,) * n))
        return out

    def _slide_dots(self, dots, word, iseq):
        """y^dots psi_word e_iseq as [(coeff, subword, dotvec)].

        States carry the dots still to the left and those already slid to
        the right; each step slides one left dot fully through the word.
        """
        n = self.n
        zero = (0,) * n
        items = [(1, tuple(dots), tuple(word), zero)]
        finished = []
        while items:
            coeff, left, w, right = items.pop()
            p = next((k + 1 for k in range(n) if left[k]), None)
            if p is None:
                finished.append((coeff, w, right))
                continue
            dec = list(left)
            dec[p - 1] -= 1
            dec = tuple(dec)
            for k, sub, dvec in self._slide_dot(p, w, iseq):
                items.append((coeff * k, dec, sub, _addvec(right, dvec)))
        return finished


def _addvec(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _accumulate(target, src, factor):
    for key, val in src.items():
        target[key] = target.get(key, 0) + factor * val
    for key in [k for k, v in target.items() if not v]:
        del target[key]


class KLRElement:
    """A formal combination of normal monomials of one rank."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: KLRContext, terms=None):
        self.ctx = ctx
        self.terms = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    self.terms[key] = coeff

    # -- ring structure --------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        _accumulate(out, other.terms, 1)
        return KLRElement(self.ctx, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        _accumulate(out, other.terms, -1)
        return KLRElement(self.ctx, out)

    def __neg__(self):
        return KLRElement(self.ctx, {k: -v for k, v in self.terms.items()})

    def scale(self, scalar):
        return KLRElement(self.ctx, {k: scalar * v for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, KLRElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "KLR(0)"
        bits = []
        for (word, dots, iseq), coeff in sorted(self.terms.items()):
            dot = "".join(
                "y%d^%d" % (k + 1, v) if v > 1 else "y%d" % (k + 1)
                for k, v in enumerate(dots)
                if v
            )
            psi = "".join("s%d" % a for a in word)
            bits.append("%+d %s%s e%s" % (coeff, psi, dot, list(iseq)))
        return "KLR(" + " ".join(bits) + ")"

    def _check(self, other):
        a, b = self.ctx, other.ctx
        if a is b:
            return
        if (a.params, a.n, a.cyclotomic) != (b.params, b.n, b.cyclotomic):
            raise ValueError("elements from incompatible contexts")

    # -- multiplication ---------------------------------------------------------

    def __mul__(self, other):
        self._check(other)
        ctx = self.ctx
        out = {}
        for (w1, a1, i1), c1 in self.terms.items():
            for (w2, a2, i2), c2 in other.terms.items():
                if i1 != apply_to_sequence(w2, i2):
                    continue
                coeff = c1 * c2
                for k, sub, dvec in ctx._slide_dots(a1, w2, i2):
                    nf = ctx.normalize_word(w1 + sub, i2)
                    for (w3, a3), c3 in nf.items():
                        dots = _addvec(_addvec(a3, dvec), a2)
                        if ctx.monomial_dies(w3, dots, i2):
                            continue
                        key = (w3, dots, i2)
                        out[key] = out.get(key, 0) + coeff * k * c3
        return KLRElement(self.ctx, out)

    def star(self):
        """The anti-involution fixing the generators: reverses every
        monomial's generator word."""
        ctx = self.ctx
        out = KLRElement(ctx)
        for (word, dots, iseq), coeff in self.terms.items():
            left = apply_to_sequence(word, iseq)
            # (psi_W y^a e_i)^* = e_i y^a psi_{reversed W} with right frame left
            dotted = idempotent(ctx, iseq)
            for k, v in enumerate(dots):
                for _ in range(v):
                    dotted = dotted * dot(ctx, k + 1, iseq)
            piece = dotted * psi_word(ctx, tuple(reversed(word)), iseq=left)
            out = out + piece.scale(coeff)
        return out

    def degree(self):
        """The common degree of all monomials, or None when inhomogeneous
        (zero reports degree 0)."""
        degs = {monomial_degree(self.ctx, key) for key in self.terms}
        if not degs:
            return 0
        if len(degs) > 1:
            return None
        return degs.pop()

    def frames(self):
        """The set of (left sequence, right sequence) pairs."""
        return {
            (apply_to_sequence(w, i), i) for (w, _a, i) in self.terms
        }

    def records(self):
        """Serialisable list of (coeff, iseq, word, dots)."""
        return sorted(
            (coeff, list(iseq), list(word), list(dots))
            for (word, dots, iseq), coeff in self.terms.items()
        )


def from_records(ctx, records):
    terms = {}
    for coeff, iseq, word, dots in records:
        terms[(tuple(word), tuple(dots), tuple(iseq))] = coeff
    return KLRElement(ctx, terms)


def monomial_degree(ctx, key):
    word, dots, iseq = key
    deg = 2 * sum(dots)
    seq = tuple(iseq)
    for a in reversed(word):
        ra, rb = seq[a - 1], seq[a]
        if ra == rb:
            deg -= 2
        elif rb == (ra + 1) % ctx.e or rb == (ra - 1) % ctx.e:
            deg += 1
        seq = seq[: a - 1] + (seq[a], seq[a - 1]) + seq[a + 1:]
    return deg


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def zero(ctx):
    return KLRElement(ctx)


def idempotent(ctx, iseq):
    iseq = tuple(r % ctx.e for r in iseq)
    if len(iseq) != ctx.n:
        raise ValueError("sequence length must equal the rank")
    if ctx.monomial_dies((), (0,) * ctx.n, iseq):
        return KLRElement(ctx)
    return KLRElement(ctx, {((), (0,) * ctx.n, iseq): 1})


def all_idempotents(ctx):
    """Sum of surviving idempotents (the image of the identity)."""
    import itertools

    out = {}
    for iseq in itertools.product(range(ctx.e), repeat=ctx.n):
        if not ctx.monomial_dies((), (0,) * ctx.n, iseq):
            out[((), (0,) * ctx.n, iseq)] = 1
    return KLRElement(ctx, out)


def dot(ctx, k, iseq=None):
    """y_k, optionally truncated to one idempotent."""
    if not 1 <= k <= ctx.n:
        raise ValueError("dot index out of range")
    import itertools

    out = {}
    vec = tuple(1 if j == k - 1 else 0 for j in range(ctx.n))
    seqs = [tuple(iseq)] if iseq is not None else itertools.product(
        range(ctx.e), repeat=ctx.n
    )
    for seq in seqs:
        seq = tuple(r % ctx.e for r in seq)
        if not ctx.monomial_dies((), vec, seq):
            out[((), vec, seq)] = 1
    return KLRElement(ctx, out)


def crossing_raw(ctx, r, iseq=None):
    """psi_r, optionally truncated to one idempotent."""
    if not 1 <= r < ctx.n:
        raise ValueError("crossing index out of range")
    import itertools

    out = {}
    seqs = [tuple(iseq)] if iseq is not None else itertools.product(
        range(ctx.e), repeat=ctx.n
    )
    for seq in seqs:
        seq = tuple(v % ctx.e for v in seq)
        for (w, a), c in ctx.normalize_word((r,), seq).items():
            if ctx.monomial_dies(w, a, seq):
                continue
            key = (w, a, seq)
            out[key] = out.get(key, 0) + c
    return KLRElement(ctx, out)


def crossing(ctx, r, iseq=None):
    return crossing_raw(ctx, r, iseq)


def psi_word(ctx, word, iseq=None):
    """The product of crossings along a word, optionally right-framed."""
    if iseq is not None:
        out = {}
        iseq = tuple(v % ctx.e for v in iseq)
        for (w, a), c in ctx.normalize_word(tuple(word), iseq).items():
            if ctx.monomial_dies(w, a, iseq):
                continue
            key = (w, a, iseq)
            out[key] = out.get(key, 0) + c
        return KLRElement(ctx, out)
    elem = all_idempotents(ctx)
    for a in reversed(tuple(word)):
        elem = crossing_raw(ctx, a) * elem
    return elem


def boxtimes(x: KLRElement, y: KLRElement, ctx=None):
    """Horizontal concatenation: shift the right factor's strands."""
    nx, ny = x.ctx.n, y.ctx.n
    if ctx is None:
        ctx = KLRContext(x.ctx.params, n=nx + ny, cyclotomic=x.ctx.cyclotomic)
    out = {}
    for (w1, a1, i1), c1 in x.terms.items():
        for (w2, a2, i2), c2 in y.terms.items():
            word = w1 + tuple(a + nx for a in w2)
            dots = a1 + a2
            iseq = i1 + i2
            if ctx.monomial_dies(word, dots, iseq):
                continue
            key = (word, dots, iseq)
            out[key] = out.get(key, 0) + c1 * c2
    return KLRElement(ctx, out)
