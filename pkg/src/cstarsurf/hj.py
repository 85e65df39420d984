"""Hirzebruch-Jung continued fractions.

The minus-sign continued fraction is defined inductively by

    [k0] = k0,      [k0, ..., kn] = k0 - 1/[k1, ..., kn].

For coprime 0 < e < m the fraction m/e has a unique expansion
[k1, ..., kn] with every k_i >= 2; the chain of rational curves with
self-intersections -k_1, ..., -k_n is the minimal resolution of a cyclic
quotient singularity of type (m, e).  Reversing the chain corresponds to
the dual residue e' with e*e' = 1 (mod m).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import NotCoprime, OutOfRange, ZeroTail
from .rationals import as_rational


def cf_eval(ks) -> Fraction:
    """Evaluate the minus-sign continued fraction [k0, ..., kn].

    Entries may be arbitrary rationals; ``ZeroTail`` is raised when a proper
    tail evaluates to zero (so the recursion would divide by zero).
    """
    ks = [as_rational(k) for k in ks]
    if not ks:
        raise ZeroTail("empty continued fraction")
    value = ks[-1]
    for k in reversed(ks[:-1]):
        if value == 0:
            raise ZeroTail(f"tail of {ks} evaluates to 0")
        value = k - 1 / value
    return value


def hj_expand(m: int, e: int) -> list[int]:
    """Expand m/e as [k1, ..., kn] with all k_i >= 2.

    Requires gcd(m, e) = 1 and 0 < e < m; the pair (1, 0) is allowed and
    yields the empty chain (the weighted box for the empty chain).
    """
    if m == 1 and e == 0:
        return []
    if m < 1 or not 0 < e < m:
        raise OutOfRange(f"need 0 < e < m, got (m, e) = ({m}, {e})")
    if gcd(m, e) != 1:
        raise NotCoprime(f"gcd({m}, {e}) != 1")
    ks = []
    while e > 0:
        k = -(-m // e)  # ceil(m / e)
        ks.append(k)
        m, e = e, k * e - m
    return ks


def dual_residue(m: int, e: int) -> int:
    """The residue e' with 0 < e' < m and e*e' = 1 (mod m).

    Expanding m/e' gives the reversal of the expansion of m/e.  For m = 1
    (the empty chain) returns 0, its own dual.
    """
    if m == 1:
        return 0
    if not 0 < e < m:
        raise OutOfRange(f"need 0 < e < m, got (m, e) = ({m}, {e})")
    if gcd(m, e) != 1:
        raise NotCoprime(f"gcd({m}, {e}) != 1")
    return pow(e, -1, m)


@dataclass(frozen=True)
class HjPair:
    """A coprime pair (m, e) with m >= 1, the type of a cyclic quotient point.

    The residue is normalized into 0 <= e < m at construction, so (m, e) and
    (m, e + km) denote the same singularity.  (1, 0) is the smooth point /
    empty chain.
    """

    m: int
    e: int

    def __post_init__(self):
        if self.m < 1:
            raise OutOfRange(f"need m >= 1, got {self.m}")
        e = self.e % self.m
        if self.m > 1 and gcd(self.m, e) != 1:
            raise NotCoprime(f"gcd({self.m}, {self.e}) != 1")
        object.__setattr__(self, "e", e if self.m > 1 else 0)

    @property
    def is_trivial(self) -> bool:
        return self.m == 1

    def chain(self) -> list[int]:
        """Resolution chain [k1, ..., kn]; empty for the smooth point."""
        if self.m == 1:
            return []
        return hj_expand(self.m, self.e)

    def dual(self) -> "HjPair":
        """The pair of the reversed chain."""
        if self.m == 1:
            return self
        return HjPair(self.m, dual_residue(self.m, self.e))

    def weights(self) -> list[Fraction]:
        """Chain as curve weights -k1, ..., -kn."""
        return [Fraction(-k) for k in self.chain()]

    def __str__(self) -> str:
        return f"({self.e}/{self.m})"


def fraction_box(q) -> HjPair:
    """The box of a fractional part q = e/m with 0 <= q < 1."""
    q = as_rational(q)
    if not 0 <= q < 1:
        raise OutOfRange(f"fractional part out of range: {q}")
    if q == 0:
        return HjPair(1, 0)
    return HjPair(q.denominator, q.numerator)
