"""Exact scalars, graded spaces, permutations and the Koszul sign rule.

Everything downstream computes over `fractions.Fraction`; no floats enter
the package anywhere.  All signs are produced by the functions in this
module (or by the exponent evaluators in `signs`), never recomputed ad hoc
by callers.

Conventions, fixed once:

* a permutation `s` is a bijection of positions `0..n-1`, stored as the
  tuple of images, so `s(i)` is the slot that the element in position `i`
  moves to;
* the left action on tensors is
  ``s . (x_0 ox ... ox x_{n-1}) = koszul_sign(s, degs) *
  (x_{s^-1(0)} ox ... ox x_{s^-1(n-1)})``;
* `koszul_sign(s, degs)` is the product of `(-1)^(d_i d_j)` over the
  inversions `i < j`, `s(i) > s(j)` (swapping two odd neighbours costs a
  sign, everything else follows by composing transpositions).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import StructureError

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_scalar(text):
    """Parse an exact rational written as "p" or "p/q" (no decimals)."""
    s = str(text).strip()
    if "." in s or "e" in s.lower():
        raise ValueError(f"not a decimal-free rational: {text!r}")
    if "/" in s:
        num, den = s.split("/")
        d = int(den)
        if d == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return Fraction(int(num), d)
    return Fraction(int(s))


def format_scalar(x):
    return str(Fraction(x))


class Perm:
    """A permutation of `0..n-1`, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def cycle(cls, n):
        """The n-cycle sending position i to i+1 (mod n)."""
        return cls(tuple((i + 1) % n for i in range(n)))

    @classmethod
    def transposition(cls, n, i, j):
        images = list(range(n))
        images[i], images[j] = images[j], images[i]
        return cls(images)

    @property
    def size(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i]

    def __mul__(self, other):
        # (self * other)(i) = self(other(i))
        return Perm(tuple(self.images[j] for j in other.images))

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def __pow__(self, k):
        n = len(self.images)
        result = Perm.identity(n)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = base * result
        return result

    def sign(self):
        inv = 0
        im = self.images
        for i in range(len(im)):
            for j in range(i + 1, len(im)):
                if im[i] > im[j]:
                    inv += 1
        return -1 if inv % 2 else 1

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm{self.images}"


def koszul_sign(sigma, degrees):
    """Koszul sign of the left action of `sigma` on elements of the given
    degrees: +1 or -1, exact.  Depends on the degrees mod 2 only."""
    degrees = tuple(degrees)
    if sigma.size != len(degrees):
        raise ValueError(
            f"permutation size {sigma.size} != number of degrees {len(degrees)}")
    im = sigma.images
    exp = 0
    for i in range(len(im)):
        if degrees[i] % 2 == 0:
            continue
        for j in range(i + 1, len(im)):
            if im[i] > im[j] and degrees[j] % 2:
                exp += 1
    return -1 if exp % 2 else 1


def chi_sign(sigma, degrees):
    """koszul_sign times the signature of the permutation."""
    return koszul_sign(sigma, degrees) * sigma.sign()


def permute_tuple(sigma, items):
    """Rearrange a tuple by the left action: element in slot i moves to
    slot sigma(i) (no sign; combine with koszul_sign for graded use)."""
    items = tuple(items)
    out = [None] * len(items)
    for i, x in enumerate(items):
        out[sigma(i)] = x
    return tuple(out)


def enumerate_shuffles(*parts):
    """All (i_1, ..., i_r)-shuffles: permutations increasing on each of the
    consecutive blocks of sizes i_1, ..., i_r.  Deterministic order."""
    if any(p < 0 for p in parts):
        raise ValueError(f"negative block size in {parts}")
    n = sum(parts)
    shuffles = []

    def place(block, free):
        # free: ascending tuple of still-unassigned image slots
        if block == len(parts):
            yield {}
            return
        size = parts[block]
        for chosen in itertools.combinations(free, size):
            rest = tuple(s for s in free if s not in chosen)
            for tail in place(block + 1, rest):
                assign = dict(tail)
                offset = sum(parts[:block])
                for k, slot in enumerate(chosen):
                    assign[offset + k] = slot
                yield assign

    for assign in place(0, tuple(range(n))):
        shuffles.append(Perm(tuple(assign[i] for i in range(n))))
    return shuffles


def cyclic_group(n):
    """The n powers of the cycle (0 1 ... n-1)."""
    if n < 1:
        raise ValueError(f"cyclic_group needs n >= 1, got {n}")
    c = Perm.cycle(n)
    out = [Perm.identity(n)]
    for _ in range(n - 1):
        out.append(c * out[-1])
    return out


@dataclass(frozen=True)
class GradedSpace:
    """A finite homogeneous basis with integer degrees."""

    name: str
    basis: tuple

    def __post_init__(self):
        basis = tuple((str(l), int(d)) for l, d in self.basis)
        object.__setattr__(self, "basis", basis)
        labels = [l for l, _ in basis]
        if len(set(labels)) != len(labels):
            raise StructureError(f"duplicate labels in space {self.name!r}")
        if not labels:
            raise StructureError(f"space {self.name!r} has empty basis")

    @cached_property
    def _degrees(self):
        return {l: d for l, d in self.basis}

    @property
    def labels(self):
        return tuple(l for l, _ in self.basis)

    @property
    def dim(self):
        return len(self.basis)

    def degree(self, label):
        try:
            return self._degrees[label]
        except KeyError:
            raise StructureError(f"label {label!r} not in space {self.name!r}")

    def __contains__(self, label):
        return label in self._degrees

    def degrees_by_grade(self):
        out = {}
        for l, d in self.basis:
            out.setdefault(d, []).append(l)
        return out


#: the one-dimensional degree-0 space scalar-valued operations land in
SCALARS = GradedSpace("k", (("1", 0),))


def dual_label(label):
    return label + "^"


def dual_space(V, name=None):
    """The linear dual, with degrees negated and labels suffixed by ^.
    Double duals are re-identified with the original space."""
    prior = getattr(V, "_dual_of", None)
    if prior is not None:
        return prior
    W = GradedSpace(name or (V.name + "^"),
                    tuple((dual_label(l), -d) for l, d in V.basis))
    object.__setattr__(W, "_dual_of", V)
    return W


def shift_space(V, d, name=None):
    """Suspension: the same labels with all degrees shifted by d."""
    if d == 0:
        return V
    return GradedSpace(name or f"s^{d}{V.name}",
                       tuple((l, deg + d) for l, deg in V.basis))


def direct_sum_space(name, *spaces):
    basis = []
    for V in spaces:
        basis.extend(V.basis)
    return GradedSpace(name, tuple(basis))
