"""Exact arithmetic in the cyclotomic field Q(zeta_p) for an odd prime p.

Values are stored on the power basis 1, z, ..., z^(p-2) with the relation
1 + z + ... + z^(p-1) = 0 folded in, so equality is coefficient equality.
Positivity questions (the paper-style "equal up to a positive scalar") are
decided at the fixed embedding z = exp(2*pi*i/p) by certified interval
arithmetic, refining precision until the interval excludes zero.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv

from .errors import (
    ConductorMismatch,
    FourthRootError,
    NotRational,
    PrecisionError,
    ZeroInput,
)

_INTERVAL_LOCK = threading.Lock()  # iv.prec is process-global state
_PREC_LADDER = (64, 128, 256, 512, 1024, 2048, 4096)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class CycNum:
    """An element of Q(zeta_p), canonically reduced."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs):
        if p < 3 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"conductor must be an odd prime, got {p}")
        coeffs = [_as_fraction(c) for c in coeffs]
        if len(coeffs) == p:
            last = coeffs[p - 1]
            coeffs = [c - last for c in coeffs[: p - 1]]
        elif len(coeffs) < p - 1:
            coeffs = coeffs + [Fraction(0)] * (p - 1 - len(coeffs))
        elif len(coeffs) != p - 1:
            raise ValueError("coefficient vector longer than the conductor")
        self.p = p
        self.coeffs = tuple(coeffs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def rational(cls, p: int, r) -> "CycNum":
        return cls(p, [_as_fraction(r)])

    @classmethod
    def zeta_pow(cls, p: int, k: int) -> "CycNum":
        """z^k, any integer k."""
        e = [Fraction(0)] * p
        e[k % p] = Fraction(1)
        return cls(p, e)

    @classmethod
    def from_counts(cls, p: int, counts) -> "CycNum":
        """sum counts[k] * z^k for k = 0..p-1; counts may be ints or Fractions."""
        if len(counts) != p:
            raise ValueError("counts must have length p")
        return cls(p, list(counts))

    # -- ring structure ----------------------------------------------------

    def _check(self, other: "CycNum") -> None:
        if not isinstance(other, CycNum):
            raise TypeError("CycNum operand required")
        if self.p != other.p:
            raise ConductorMismatch(f"conductors {self.p} and {other.p} differ")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNum.rational(self.p, other)
        self._check(other)
        return CycNum(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.p, [-a for a in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNum.rational(self.p, other)
        self._check(other)
        return CycNum(self.p, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            return CycNum(self.p, [q * a for a in self.coeffs])
        self._check(other)
        p = self.p
        acc = [Fraction(0)] * p
        oc = other.coeffs
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(oc):
                if b:
                    acc[(i + j) % p] += a * b
        return CycNum(p, acc)

    __rmul__ = __mul__

    def conj(self) -> "CycNum":
        """Complex conjugation, the ring map z -> z^(p-1)."""
        p = self.p
        acc = [Fraction(0)] * p
        for k, c in enumerate(self.coeffs):
            acc[(-k) % p] = c
        return CycNum(p, acc)

    def galois(self, s: int) -> "CycNum":
        """The automorphism z -> z^s for s prime to p."""
        p = self.p
        if s % p == 0:
            raise ValueError("exponent must be prime to p")
        acc = [Fraction(0)] * p
        for k, c in enumerate(self.coeffs):
            acc[(k * s) % p] += c
        return CycNum(p, acc)

    def inv(self) -> "CycNum":
        """Exact field inverse via the product of all nontrivial conjugates."""
        if self.is_zero():
            raise ZeroInput("cannot invert zero")
        t = CycNum.rational(self.p, 1)
        for s in range(2, self.p):
            t = t * self.galois(s)
        n = self * t  # the field norm, a nonzero rational
        return t * (1 / n.rational_value())

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            if q == 0:
                raise ZeroInput("division by zero")
            return self * (1 / q)
        self._check(other)
        return self * other.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = CycNum.rational(self.p, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- predicates and views ----------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise NotRational(f"{self} has nonzero cyclotomic part")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*z")
            else:
                terms.append(f"{c}*z^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"CycNum(p={self.p}: {body})"

    # -- embedded value ----------------------------------------------------

    def _interval_combination(self, fn):
        """Certified interval of sum coeffs[k] * fn(2*pi*k/p)."""
        p = self.p
        acc = iv.mpf(0)
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            w = fn(2 * iv.pi * k / p)
            acc += (iv.mpf(c.numerator) / iv.mpf(c.denominator)) * w
        return acc

    def _embedding_sign(self, fn) -> int:
        """Sign of sum coeffs[k]*fn(2 pi k/p); 0 means undecided at this prec."""
        acc = self._interval_combination(fn)
        if acc.a > 0:
            return 1
        if acc.b < 0:
            return -1
        return 0


def _certified_sign(a: CycNum, fn) -> int:
    """Refine precision until the embedded combination has a definite sign.

    Terminates for nonzero values: a nonzero algebraic number is bounded away
    from zero, so some rung of the precision ladder decides.
    """
    with _INTERVAL_LOCK:
        saved = iv.prec
        try:
            for prec in _PREC_LADDER:
                iv.prec = prec
                s = a._embedding_sign(fn)
                if s:
                    return s
        finally:
            iv.prec = saved
    raise PrecisionError("sign undecided at maximal precision; value may be zero")


def abs_squared(a: CycNum) -> Fraction:
    """|a|^2 = a * conj(a), required to be rational.

    Raises NotRational when the product keeps a cyclotomic part (it never
    does for the single character sums in this package, but the guard is
    the point of the operation).
    """
    prod = a * a.conj()
    if not prod.is_rational():
        raise NotRational("a * conj(a) is not rational")
    return prod.rational_value()


def is_positive_real(a: CycNum) -> bool:
    """True iff a is conjugation-fixed and positive at the fixed embedding."""
    if a.is_zero():
        raise ZeroInput("positivity of zero is undefined")
    if a != a.conj():
        return False
    if a.is_rational():
        return a.rational_value() > 0
    return _certified_sign(a, iv.cos) > 0


def ray_equiv(a: CycNum, b: CycNum) -> bool:
    """Equality up to multiplication by a positive real scalar."""
    if a.is_zero() or b.is_zero():
        raise ZeroInput("ray classes are defined for nonzero values")
    if a.p != b.p:
        raise ConductorMismatch(f"conductors {a.p} and {b.p} differ")
    return is_positive_real(a / b)


@dataclass(frozen=True)
class FourthRoot:
    """i^exponent with exponent mod 4; the value group of normalized Gauss sums."""

    exponent: int

    def __post_init__(self):
        object.__setattr__(self, "exponent", self.exponent % 4)

    @classmethod
    def one(cls) -> "FourthRoot":
        return cls(0)

    @classmethod
    def i(cls) -> "FourthRoot":
        return cls(1)

    @classmethod
    def from_sign(cls, s: int) -> "FourthRoot":
        if s == 1:
            return cls(0)
        if s == -1:
            return cls(2)
        raise ValueError(f"sign must be +1 or -1, got {s}")

    def __mul__(self, other: "FourthRoot") -> "FourthRoot":
        return FourthRoot(self.exponent + other.exponent)

    def inv(self) -> "FourthRoot":
        return FourthRoot(-self.exponent)

    def __pow__(self, n: int) -> "FourthRoot":
        return FourthRoot(self.exponent * n)

    def square_sign(self) -> int:
        """The square as an honest sign; lies in {1, -1}."""
        return 1 if self.exponent % 2 == 0 else -1

    def sign(self) -> int:
        """The value as a sign, defined only for real fourth roots."""
        if self.exponent == 0:
            return 1
        if self.exponent == 2:
            return -1
        raise FourthRootError(f"{self} is not real")

    def __str__(self):
        return ("1", "i", "-1", "-i")[self.exponent]

    def __repr__(self):
        return f"FourthRoot({self})"


def as_fourth_root(a: CycNum, expected_modulus_sq) -> FourthRoot:
    """Certified normalization a / sqrt(expected_modulus_sq) in {1, i, -1, -i}.

    Preconditions checked exactly: |a|^2 equals the expected modulus squared
    and a^2 / modulus^2 is +1 or -1.  The branch among the two remaining
    candidates is decided by certified interval evaluation (real sign when
    a is real, imaginary sign when purely imaginary).
    """
    m2 = _as_fraction(expected_modulus_sq)
    if m2 <= 0:
        raise FourthRootError("expected modulus squared must be positive")
    if abs_squared(a) != m2:
        raise FourthRootError(f"|a|^2 = {abs_squared(a)} differs from {m2}")
    sq = a * a
    if not sq.is_rational():
        raise FourthRootError("a^2 is not rational")
    ratio = sq.rational_value() / m2
    if ratio == 1:
        return FourthRoot(0 if is_positive_real(a) else 2)
    if ratio == -1:
        # a is purely imaginary in every embedding; take the imaginary sign
        return FourthRoot(1 if _certified_sign(a, iv.sin) > 0 else 3)
    raise FourthRootError(f"a^2 / modulus^2 = {ratio} is not +1 or -1")


class RayClass:
    """A nonzero cyclotomic value considered up to positive real scalars."""

    __slots__ = ("rep",)

    def __init__(self, rep: CycNum):
        if rep.is_zero():
            raise ZeroInput("a ray class needs a nonzero representative")
        self.rep = rep

    def __eq__(self, other):
        if not isinstance(other, RayClass):
            return NotImplemented
        return ray_equiv(self.rep, other.rep)

    def __mul__(self, other: "RayClass") -> "RayClass":
        return RayClass(self.rep * other.rep)

    def inv(self) -> "RayClass":
        return RayClass(self.rep.inv())

    def __neg__(self) -> "RayClass":
        return RayClass(-self.rep)

    def fourth_root(self) -> FourthRoot:
        """The class as a fourth root of unity, when |rep|^2 is rational."""
        return as_fourth_root(self.rep, abs_squared(self.rep))

    def __repr__(self):
        return f"RayClass({self.rep!r})"
