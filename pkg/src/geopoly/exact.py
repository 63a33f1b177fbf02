"""Exact rational arithmetic and the factorial-type primitives.

``Rational`` is :class:`fractions.Fraction`: values are always stored in
lowest terms with a positive denominator, arithmetic is exact, and division
by zero raises.  Everything else in the package is built on the four
product primitives below, which are computed by iterated exact products so
they are total for arbitrary rational arguments (including non-positive
ones where gamma-ratio shortcuts would break down).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

Rational = Fraction

RationalLike = Fraction | int | str


def as_rational(x: RationalLike) -> Fraction:
    """Coerce ints / "p/q" strings / Fractions to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def gen_factorial(z: RationalLike, alpha: RationalLike, n: int) -> Fraction:
    """Generalized factorial (z|alpha)_n = z(z-alpha)...(z-(n-1)alpha).

    (z|alpha)_0 = 1 (empty product); (z|1)_n is the falling factorial and
    (z|0)_n = z**n.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    z = as_rational(z)
    alpha = as_rational(alpha)
    out = Fraction(1)
    for j in range(n):
        out *= z - j * alpha
    return out


def rising_factorial(x: RationalLike, n: int) -> Fraction:
    """Rising factorial <x>_n = x(x+1)...(x+n-1), with <x>_0 = 1."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    x = as_rational(x)
    out = Fraction(1)
    for j in range(n):
        out *= x + j
    return out


def falling_factorial(x: RationalLike, n: int) -> Fraction:
    """Falling factorial (x)_n = x(x-1)...(x-n+1), with (x)_0 = 1."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    x = as_rational(x)
    out = Fraction(1)
    for j in range(n):
        out *= x - j
    return out


def binomial_general(s: RationalLike, k: int) -> Fraction:
    """Generalized binomial C(s,k) = s(s-1)...(s-k+1)/k! for rational s."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return falling_factorial(s, k) / factorial(k)
