"""The local field F as truncated Laurent series F_q((t)) with precision
tracking.  t is the fixed uniformizer; an element is known modulo t^prec.

All residue-level computations in the package are characteristic-independent,
which is what makes this equal-characteristic model exact where it matters.
"""

from __future__ import annotations

from .errors import BaseFieldMismatch, PrecisionError, ZeroInput
from .residue import Fq

DEFAULT_PREC = 32


class LSeries:
    """A truncated Laurent series: sum of coeffs[i] * t^(v+i), known mod t^prec.

    Invariants: the leading stored coefficient is nonzero (or coeffs is empty,
    meaning zero to the stated precision), and v + len(coeffs) <= prec.
    """

    __slots__ = ("field", "v", "coeffs", "prec")

    def __init__(self, field: Fq, v: int, coeffs, prec: int):
        i = 0
        n = len(coeffs)
        while i < n and not coeffs[i]:
            i += 1
        j = n
        while j > i and not coeffs[j - 1]:
            j -= 1
        coeffs = tuple(coeffs[i:j])
        v = v + i
        if coeffs and v + len(coeffs) > prec:
            coeffs = coeffs[: max(prec - v, 0)]
            # re-trim a trailing run of zeros exposed by the cut
            k = len(coeffs)
            while k and not coeffs[k - 1]:
                k -= 1
            coeffs = coeffs[:k]
        if not coeffs:
            v = prec
        self.field = field
        self.v = v
        self.coeffs = coeffs
        self.prec = prec

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field: Fq, prec: int = DEFAULT_PREC) -> "LSeries":
        return cls(field, prec, (), prec)

    @classmethod
    def constant(cls, field: Fq, c: int, prec: int = DEFAULT_PREC) -> "LSeries":
        return cls(field, 0, (c % field.q if field.f == 1 else c,), prec)

    @classmethod
    def one(cls, field: Fq, prec: int = DEFAULT_PREC) -> "LSeries":
        return cls.constant(field, 1, prec)

    @classmethod
    def t_power(cls, field: Fq, k: int, prec: int = DEFAULT_PREC) -> "LSeries":
        return cls(field, k, (1,), prec)

    @classmethod
    def from_pairs(cls, field: Fq, pairs, prec: int = DEFAULT_PREC) -> "LSeries":
        """Build from (exponent, coefficient) pairs."""
        if not pairs:
            return cls.zero(field, prec)
        lo = min(k for k, _ in pairs)
        hi = max(k for k, _ in pairs)
        buf = [0] * (hi - lo + 1)
        for k, c in pairs:
            buf[k - lo] = field.add(buf[k - lo], c % field.q if field.f == 1 else c)
        return cls(field, lo, buf, prec)

    # -- views ---------------------------------------------------------------

    def is_zero(self) -> bool:
        """Zero to the stated precision."""
        return not self.coeffs

    def val(self) -> int:
        if not self.coeffs:
            raise ZeroInput(f"valuation of zero (to precision O(t^{self.prec}))")
        return self.v

    def val_or_none(self) -> int | None:
        return self.v if self.coeffs else None

    def is_unit(self) -> bool:
        return bool(self.coeffs) and self.v == 0

    def leading_coeff(self) -> int:
        if not self.coeffs:
            raise ZeroInput("zero series has no leading coefficient")
        return self.coeffs[0]

    def residue_at(self, k: int) -> int:
        """Coefficient of t^k; 0 below the stored window, error at/past prec."""
        if k >= self.prec:
            raise PrecisionError(f"coefficient of t^{k} beyond precision O(t^{self.prec})")
        if not self.coeffs or k < self.v:
            return 0
        i = k - self.v
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def truncate(self, prec: int) -> "LSeries":
        if prec > self.prec:
            raise PrecisionError("cannot raise precision by truncation")
        return LSeries(self.field, self.v, self.coeffs, prec)

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other: "LSeries") -> None:
        if self.field is not other.field and self.field != other.field:
            raise BaseFieldMismatch("series over different residue fields")

    def __add__(self, other: "LSeries") -> "LSeries":
        self._check(other)
        prec = min(self.prec, other.prec)
        if not self.coeffs:
            return other if other.prec == prec else other.truncate(prec)
        if not other.coeffs:
            return self if self.prec == prec else self.truncate(prec)
        f = self.field
        lo = min(self.v, other.v)
        hi = min(max(self.v + len(self.coeffs), other.v + len(other.coeffs)), prec)
        buf = [0] * (hi - lo)
        if f.f == 1:
            p = f.p
            for src in (self, other):
                base = src.v - lo
                for i, c in enumerate(src.coeffs):
                    if base + i < len(buf):
                        buf[base + i] += c
            buf = [c % p for c in buf]
        else:
            for src in (self, other):
                base = src.v - lo
                for i, c in enumerate(src.coeffs):
                    if base + i < len(buf):
                        buf[base + i] = f.add(buf[base + i], c)
        return LSeries(f, lo, buf, prec)

    def __neg__(self) -> "LSeries":
        f = self.field
        if f.f == 1:
            p = f.p
            return LSeries(f, self.v, [(-c) % p for c in self.coeffs], self.prec)
        return LSeries(f, self.v, [f.neg(c) for c in self.coeffs], self.prec)

    def __sub__(self, other: "LSeries") -> "LSeries":
        return self + (-other)

    def __mul__(self, other: "LSeries") -> "LSeries":
        self._check(other)
        # precision: a = known mod t^Pa, so a*b = known mod t^min(Pa+vb, Pb+va)
        va = self.v if self.coeffs else self.prec
        vb = other.v if other.coeffs else other.prec
        prec = min(self.prec + vb, other.prec + va)
        if not self.coeffs or not other.coeffs:
            return LSeries(self.field, prec, (), prec)
        f = self.field
        n = min(len(self.coeffs) + len(other.coeffs) - 1, prec - va - vb)
        buf = [0] * n
        a, b = self.coeffs, other.coeffs
        if f.f == 1:
            p = f.p
            for i, ai in enumerate(a):
                if not ai or i >= n:
                    continue
                jmax = min(len(b), n - i)
                for j in range(jmax):
                    bj = b[j]
                    if bj:
                        buf[i + j] += ai * bj
            buf = [c % p for c in buf]
        else:
            for i, ai in enumerate(a):
                if not ai or i >= n:
                    continue
                jmax = min(len(b), n - i)
                for j in range(jmax):
                    bj = b[j]
                    if bj:
                        buf[i + j] = f.add(buf[i + j], f.mul(ai, bj))
        return LSeries(f, va + vb, buf, prec)

    def scale(self, c: int) -> "LSeries":
        """Multiply by a residue-field constant."""
        f = self.field
        if f.f == 1:
            c %= f.p
            if not c:
                return LSeries(f, self.prec, (), self.prec)
            p = f.p
            return LSeries(f, self.v, [(c * x) % p for x in self.coeffs], self.prec)
        if not c:
            return LSeries(f, self.prec, (), self.prec)
        return LSeries(f, self.v, [f.mul(c, x) for x in self.coeffs], self.prec)

    def inv(self) -> "LSeries":
        """Multiplicative inverse; result precision is prec - 2*val."""
        if not self.coeffs:
            raise ZeroInput(f"inverting zero (to precision O(t^{self.prec}))")
        f = self.field
        v = self.v
        n = self.prec - v  # coefficients of the unit part available
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        out = [0] * n
        c0inv = f.inv(a[0])
        out[0] = c0inv
        if f.f == 1:
            p = f.p
            for k in range(1, n):
                s = 0
                for j in range(1, k + 1):
                    if a[j]:
                        s += a[j] * out[k - j]
                out[k] = (-c0inv * s) % p
        else:
            for k in range(1, n):
                s = 0
                for j in range(1, k + 1):
                    if a[j]:
                        s = f.add(s, f.mul(a[j], out[k - j]))
                out[k] = f.mul(f.neg(c0inv), s)
        return LSeries(f, -v, out, self.prec - 2 * v)

    def __pow__(self, n: int) -> "LSeries":
        if n < 0:
            return self.inv() ** (-n)
        out = LSeries.one(self.field, self.prec)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, LSeries):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        if not self.coeffs:
            return f"O(t^{self.prec})"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            k = self.v + i
            if k == 0:
                parts.append(f"{c}")
            elif k == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{k}")
        return " + ".join(parts) + f" + O(t^{self.prec})"
