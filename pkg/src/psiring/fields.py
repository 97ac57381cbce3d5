"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

A field context object provides the arithmetic; element payloads are plain
`fractions.Fraction` values (rationals) or ints in [0, p) (prime fields).
Keeping payloads primitive avoids per-element wrapper overhead in the
elimination and Groebner loops.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import UsageError

# Default modulus for rank and Groebner runs: the largest prime below 2^31,
# so a single product of residues stays under 2^63 in signed 64-bit arithmetic.
DEFAULT_PRIME = 2147483647
# Fallbacks for bad-prime detection retries.
RETRY_PRIMES = (2147483629, 2147483587)
# Modulus family for the tensor/BLAS kernels: below 2^20 so thousands of
# products can accumulate exactly in a float64 mantissa (see exactla).
TENSOR_PRIME = 1048573
TENSOR_RETRY_PRIMES = (1048571, 1048559)


class Rationals:
    """Field context for exact rational arithmetic."""

    name = "QQ"
    characteristic = 0

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return Fraction(a) / b

    def is_zero(self, a) -> bool:
        return a == 0

    def to_str(self, a) -> str:
        return str(Fraction(a))

    def to_int(self, a) -> int | None:
        """The element as a plain integer, or None if it is not one."""
        f = Fraction(a)
        return int(f) if f.denominator == 1 else None

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """Field context for Z/p with p prime; elements are ints in [0, p)."""

    characteristic_nonzero = True

    def __init__(self, p: int):
        if p < 2:
            raise UsageError(f"modulus must be a prime >= 2, got {p}")
        self.p = p
        self.name = f"GF({p})"
        self.characteristic = p

    def from_int(self, n: int) -> int:
        return n % self.p

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in GF({self.p})")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def to_str(self, a) -> str:
        return str(a % self.p)

    def to_int(self, a) -> int:
        """Signed lift to (-p/2, p/2]; exact for small integer coefficients."""
        v = a % self.p
        return v if v <= self.p // 2 else v - self.p

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


Field = Rationals | PrimeField

QQ = Rationals()


def parse_field(text: str) -> Field:
    """Parse a field spec: 'rational' or 'prime:65537' (or 'prime' for the default)."""
    if text in ("rational", "QQ", "qq"):
        return QQ
    if text == "prime":
        return PrimeField(DEFAULT_PRIME)
    if text.startswith("prime:"):
        try:
            p = int(text.split(":", 1)[1])
        except ValueError as exc:
            raise UsageError(f"bad field spec {text!r}") from exc
        return PrimeField(p)
    raise UsageError(f"bad field spec {text!r}; expected 'rational' or 'prime:p'")


def same_field(a: Field, b: Field) -> None:
    """Raise UsageError unless the two contexts agree (no silent cross-field arithmetic)."""
    if a != b:
        raise UsageError(f"field context mismatch: {a!r} vs {b!r}")
