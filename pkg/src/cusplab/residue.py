"""Residue-field arithmetic: F_q, the quadratic character, additive characters
at residue level, Gauss sums and Zolotarev signatures.

Elements of F_q are plain ints.  For prime q they are residues 0..q-1; for
q = p^f (f > 1, caller-supplied irreducible modulus) an int encodes the
coefficient vector of a polynomial in base p, little-endian.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import ZeroInput
from .exactnum import CycNum, FourthRoot, as_fourth_root


class Fq:
    """A finite field of odd order q = p^f.

    For f > 1 the caller supplies the monic irreducible modulus as a tuple of
    f+1 coefficients over F_p, constant term first.  There is no built-in
    polynomial table.
    """

    def __init__(self, p: int, modulus: tuple[int, ...] | None = None):
        if p < 3 or p % 2 == 0 or any(p % d == 0 for d in range(3, int(p**0.5) + 1, 2)):
            raise ValueError(f"residual characteristic must be an odd prime, got {p}")
        self.p = p
        if modulus is None:
            self.f = 1
            self.q = p
            self.modulus = None
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) < 3 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree >= 2")
            self.f = len(modulus) - 1
            self.q = p**self.f
            self.modulus = modulus
            if not self._is_irreducible():
                raise ValueError("modulus is reducible over F_p")

    def _is_irreducible(self) -> bool:
        # x^(p^f) == x mod modulus, and x^(p^(f/l)) != x for prime divisors l
        x = self.encode([0, 1])
        y = x
        for _ in range(self.f):
            y = self.frobenius(y)
        if y != x:
            return False
        for ell in range(2, self.f + 1):
            if self.f % ell == 0 and all(ell % d for d in range(2, ell)):
                y = x
                for _ in range(self.f // ell):
                    y = self.frobenius(y)
                if y == x:
                    return False
        return True

    # -- encoding ------------------------------------------------------------

    def encode(self, digits) -> int:
        """Pack base-p digits (constant term first) into an element."""
        x = 0
        for d in reversed(list(digits)):
            x = x * self.p + (d % self.p)
        return x

    def digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.f):
            out.append(x % self.p)
            x //= self.p
        return out

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    # -- arithmetic ------------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.f == 1:
            return (a + b) % self.p
        p = self.p
        x, y, out, mult = a, b, 0, 1
        for _ in range(self.f):
            out += ((x + y) % p) * mult
            x //= p
            y //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.f == 1:
            return (-a) % self.p
        p = self.p
        out, mult = 0, 1
        for _ in range(self.f):
            out += ((-a) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.f == 1:
            return (a * b) % self.p
        p, f = self.p, self.f
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * f - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] += ai * bj
        # reduce mod the monic modulus
        m = self.modulus
        for k in range(2 * f - 2, f - 1, -1):
            c = prod[k] % p
            if c:
                for j in range(f):
                    prod[k - f + j] -= c * m[j]
            prod[k] = 0
        return self.encode(prod[:f])

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            return 1 if n == 0 else 0
        n %= self.q - 1
        out, base = 1, a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInput("inverting zero in F_q")
        return self.pow(a, self.q - 2)

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def trace(self, a: int) -> int:
        """Absolute trace F_q -> F_p, returned as a residue mod p."""
        if self.f == 1:
            return a % self.p
        acc, y = 0, a
        for _ in range(self.f):
            acc = self.add(acc, y)
            y = self.frobenius(y)
        return acc % self.p

    def minus_one(self) -> int:
        return self.neg(1)

    def from_int(self, n: int) -> int:
        """The image of an ordinary integer in the prime subfield."""
        return n % self.p

    def smallest_nonsquare(self) -> int:
        for x in self.units():
            if delta(self, x) == -1:
                return x
        raise ZeroInput("no nonsquare found; q must be odd")

    def __repr__(self):
        if self.f == 1:
            return f"Fq({self.p})"
        return f"Fq({self.p}^{self.f}, modulus={self.modulus})"

    def __eq__(self, other):
        return (
            isinstance(other, Fq)
            and self.p == other.p
            and self.f == other.f
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.f, self.modulus))


def delta(field: Fq, x: int) -> int:
    """The quadratic character: +1 on squares, -1 on nonsquares of F_q^x."""
    if x == 0:
        raise ZeroInput("delta is defined on units only")
    s = field.pow(x, (field.q - 1) // 2)
    return 1 if s == 1 else -1


@lru_cache(maxsize=None)
def _delta_table(field: Fq) -> tuple[int, ...]:
    return (0,) + tuple(delta(field, x) for x in field.units())


def zolotarev(field: Fq, x: int) -> int:
    """Signature of the multiplication permutation y -> x*y of F_q."""
    if x == 0:
        raise ZeroInput("zolotarev is defined on units only")
    seen = [False] * field.q
    sign = 1
    for start in range(field.q):
        if seen[start]:
            continue
        length = 0
        y = start
        while not seen[y]:
            seen[y] = True
            y = field.mul(x, y)
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def psi_exponent(field: Fq, x: int, a: int = 1) -> int:
    """Exponent e with psi^a(x) = zeta_p^e, namely the trace of a*x."""
    return field.trace(field.mul(a, x))


def psi(field: Fq, x: int, a: int = 1) -> CycNum:
    """The additive character psi^a at residue level: zeta_p^Tr(a*x)."""
    return CycNum.zeta_pow(field.p, field.trace(field.mul(a, x)))


def gauss_sum(field: Fq, a: int = 1) -> CycNum:
    """G(delta, psi^a) = sum over units u of delta(u) * psi^a(u), exact."""
    p = field.p
    counts = [0] * p
    dt = _delta_table(field)
    for u in field.units():
        counts[field.trace(field.mul(a, u))] += dt[u]
    return CycNum.from_counts(p, counts)


def xi(field: Fq, a: int = 1) -> FourthRoot:
    """The normalized Gauss sum G/|G| as a certified fourth root of unity."""
    return as_fourth_root(gauss_sum(field, a), field.q)
