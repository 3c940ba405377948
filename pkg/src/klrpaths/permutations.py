"""Permutation utilities and the fixed reduced-word convention.

Permutations are one-line tuples: w[i-1] is the image of i.  A psi-word is
a tuple of 1-based letter positions; the word (a_1, ..., a_t) denotes the
operator product psi_{a_1} psi_{a_2} ... psi_{a_t}, and composes to the
permutation obtained by applying the transposition s_{a_1} first:

    perm_of_word(W)(k) = s_{a_t}( ... s_{a_1}(k) ... ).

The canonical reduced word of a permutation is its branching factorisation:
the concatenation over p of the descending runs (p-1, p-2, ..., q_p) with
q_p = #{i <= p : w(i) <= w(p)}.
"""

from functools import lru_cache


def identity(n):
    return tuple(range(1, n + 1))


def compose(u, v):
    """(u after v): apply v first."""
    return tuple(u[v[i] - 1] for i in range(len(u)))


def invert(w):
    out = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        out[wi - 1] = i
    return tuple(out)


def length(w):
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def transposition(n, r):
    w = list(range(1, n + 1))
    w[r - 1], w[r] = w[r], w[r - 1]
    return tuple(w)


def perm_of_word(word, n):
    """word letters applied leftmost-first."""
    w = identity(n)
    for a in word:
        w = compose(transposition(n, a), w)
    return w


def apply_to_sequence(word, seq):
    """Left idempotent sequence of psi_word e_seq: the entry swaps are
    applied from the rightmost letter inward."""
    u = perm_of_word(word, len(seq))
    return tuple(seq[u[k] - 1] for k in range(len(seq)))


@lru_cache(maxsize=None)
def canonical_word(w):
    """The branching-factorisation reduced word of a permutation."""
    n = len(w)
    word = []
    for p in range(1, n + 1):
        q = sum(1 for i in range(1, p + 1) if w[i - 1] <= w[p - 1])
        word.extend(range(p - 1, q - 1, -1))
    word = tuple(word)
    assert perm_of_word(word, n) == w, "branching word composes wrongly"
    assert len(word) == length(w), "branching word is not reduced"
    return word


def is_canonical(word, n):
    return word == canonical_word(perm_of_word(word, n))


def right_descent(w, c):
    """l(w s_c) < l(w)."""
    return w[c - 1] > w[c]


def bruhat_leq(x, w):
    """x <= w in the Bruhat order (subword criterion via rank matrices)."""
    n = len(w)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            rx = sum(1 for a in range(i) if x[a] <= j)
            rw = sum(1 for a in range(i) if w[a] <= j)
            if rx < rw:
                return False
    return True
