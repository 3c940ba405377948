"""Ambient parameters fixing one cyclotomic quiver Hecke quotient."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class AlgebraParams:
    """The tuple (e, sigma, h, n) defining the algebra and its geometry.

    e      -- quantum characteristic (modulus for residues), e >= 3
    sigma  -- weakly increasing multicharge, one integer per component
    h      -- column bounds, one positive integer per component
    n      -- rank (number of strands / boxes)
    """

    e: int
    sigma: tuple
    h: tuple
    n: int
    _validated: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "h", tuple(self.h))
        if self.e < 3:
            raise ValueError("need e >= 3")
        if len(self.sigma) != len(self.h) or not self.sigma:
            raise ValueError("sigma and h must be nonempty tuples of equal length")
        if any(s > t for s, t in zip(self.sigma, self.sigma[1:])):
            raise ValueError("sigma must be weakly increasing")
        if any(hm < 1 for hm in self.h):
            raise ValueError("column bounds must be positive")
        if self.n < 0:
            raise ValueError("rank must be nonnegative")
        ell = len(self.sigma)
        for m in range(ell - 1):
            if self.h[m] > self.sigma[m + 1] - self.sigma[m]:
                raise ValueError(
                    "need h[m] <= sigma[m+1] - sigma[m] for m < ell-1 (got m=%d)" % m
                )
        if self.h[ell - 1] >= self.e + self.sigma[0] - self.sigma[ell - 1]:
            raise ValueError("need h[ell-1] < e + sigma[0] - sigma[ell-1]")

    @property
    def ell(self):
        return len(self.sigma)

    @property
    def h_total(self):
        """Total number of columns h = sum of the per-component bounds."""
        return sum(self.h)

    def require_geometry(self):
        """The alcove geometry additionally needs e > h_total."""
        if self.e <= self.h_total:
            raise ValueError("alcove geometry needs e > sum(h)")

    def residue_of(self, box):
        i, j, m = box
        if not 0 <= m < self.ell:
            raise ValueError("component index out of range: %r" % (box,))
        return (self.sigma[m] + j - i) % self.e

    def content_of(self, box):
        i, j, m = box
        if not 0 <= m < self.ell:
            raise ValueError("component index out of range: %r" % (box,))
        return self.sigma[m] + j - i
