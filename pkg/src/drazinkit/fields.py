"""Exact scalar arithmetic over the rationals and over prime fields.

Two scalar domains are supported:

* ``QQ`` - arbitrary-precision rationals, always kept in canonical reduced
  form with a positive denominator.
* ``PrimeField(p)`` - integers mod a prime ``p``, represented by the
  canonical residue in ``[0, p)``.

A :class:`Field` instance plays two roles: it is the value-like descriptor
attached to every scalar and matrix (structural equality, JSON encoding),
and it exposes the raw arithmetic closures the matrix kernels run on.  Raw
values are ``gmpy2.mpq`` (or ``fractions.Fraction`` when gmpy2 is absent)
for the rationals and plain ``int`` residues for prime fields; user-facing
code sees only :class:`FieldScalar`.

Text encoding, used verbatim by all JSON I/O: rationals as ``"n"`` or
``"n/d"`` with ``d > 0`` and ``gcd(n, d) = 1``; prime-field residues as the
decimal digits of the canonical representative.
"""

from __future__ import annotations

import re
from fractions import Fraction as _Fraction
from typing import Any, Union

from .errors import DivisionByZero, FieldMismatch, ParseError

try:
    from gmpy2 import mpq as _Rat
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _Rat

__all__ = [
    "Field",
    "RationalField",
    "PrimeField",
    "FieldScalar",
    "QQ",
    "is_prime",
    "field_from_json_obj",
]

# Deterministic Miller-Rabin witness set: correct for all n < 3.3 * 10**24,
# comfortably past the 2**64 moduli this library accepts.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MAX_MODULUS = 2**64

_RATIONAL_RE = re.compile(r"-?(?:0|[1-9][0-9]*)(?:/[1-9][0-9]*)?\Z")
_RESIDUE_RE = re.compile(r"(?:0|[1-9][0-9]*)\Z")


def is_prime(n: int) -> bool:
    """Deterministic primality test for n < 3.3e24 (Miller-Rabin, fixed witnesses)."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = (x * x) % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """A scalar domain.  Instances are immutable and compare structurally."""

    __slots__ = ()

    characteristic: int

    # -- raw-value protocol used by the matrix kernels -------------------
    def add(self, x, y):
        raise NotImplementedError

    def sub(self, x, y):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def pow(self, x, e: int):
        raise NotImplementedError

    def dot(self, xs, ys):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def encode(self, x) -> str:
        raise NotImplementedError

    def parse_raw(self, text: str):
        raise NotImplementedError

    # -- user-facing helpers ---------------------------------------------
    def scalar(self, value, den=None) -> "FieldScalar":
        """Coerce ``value`` (int, str, FieldScalar, raw) into this field.

        For the rationals a second argument gives a numerator/denominator
        pair, e.g. ``QQ.scalar(1, 2)``.
        """
        if den is not None:
            raise FieldMismatch("numerator/denominator form is only valid over the rationals")
        if isinstance(value, FieldScalar):
            if value.field != self:
                raise FieldMismatch(f"scalar belongs to {value.field}, not {self}")
            return value
        if isinstance(value, int):
            return FieldScalar(self, self.from_int(value))
        if isinstance(value, str):
            return FieldScalar(self, self.parse_raw(value))
        raise ParseError(f"cannot coerce {type(value).__name__!r} into {self}")

    def parse(self, text: str) -> "FieldScalar":
        """Strict wire-format parse (the exact inverse of ``str(scalar)``)."""
        if not isinstance(text, str):
            raise ParseError(f"scalar must be a string, got {type(text).__name__}")
        return FieldScalar(self, self.parse_raw(text))

    def zero_scalar(self) -> "FieldScalar":
        return FieldScalar(self, self.zero)

    def one_scalar(self) -> "FieldScalar":
        return FieldScalar(self, self.one)

    def to_json_obj(self):
        raise NotImplementedError


class RationalField(Field):
    """The field of rationals; a stateless singleton exported as ``QQ``."""

    __slots__ = ()

    characteristic = 0
    zero = _Rat(0)
    one = _Rat(1)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        if not x:
            raise DivisionByZero("division by zero in QQ")
        return self.one / x

    def pow(self, x, e: int):
        if e < 0 and not x:
            raise DivisionByZero("negative power of zero in QQ")
        return x**e

    def dot(self, xs, ys):
        # Hot path of matrix multiplication; mpq addition is exact.
        total = self.zero
        for x, y in zip(xs, ys):
            total = total + x * y
        return total

    def from_int(self, n: int):
        return _Rat(n)

    def encode(self, x) -> str:
        return str(x)

    def parse_raw(self, text: str):
        if not _RATIONAL_RE.fullmatch(text):
            raise ParseError(
                f"invalid rational {text!r}: expected 'n' or 'n/d' with d > 0",
                {"text": text},
            )
        return _Rat(text)

    def scalar(self, value, den=None) -> "FieldScalar":
        if den is not None:
            if not isinstance(value, int) or not isinstance(den, int):
                raise ParseError("numerator and denominator must be ints")
            if den == 0:
                raise DivisionByZero("zero denominator")
            return FieldScalar(self, _Rat(value) / _Rat(den))
        if isinstance(value, (_Rat, _Fraction)):
            return FieldScalar(self, _Rat(value))
        return super().scalar(value)

    def to_json_obj(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("drazinkit.QQ")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    """Integers modulo a prime ``p``, canonical residues in ``[0, p)``."""

    __slots__ = ("p",)

    characteristic: int
    zero = 0
    one = 1

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2:
            raise ParseError(f"modulus must be an integer >= 2, got {p!r}")
        if p >= _MAX_MODULUS:
            raise ParseError(f"modulus {p} too large (must be < 2**64)")
        if not is_prime(p):
            raise ParseError(f"modulus {p} is not prime")
        self.p = p

    @property
    def characteristic(self) -> int:  # type: ignore[override]
        return self.p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def neg(self, x):
        return (-x) % self.p

    def inv(self, x):
        if x == 0:
            raise DivisionByZero(f"division by zero in F_{self.p}")
        return pow(x, self.p - 2, self.p)

    def pow(self, x, e: int):
        if e >= 0:
            return pow(x, e, self.p)
        return pow(self.inv(x), -e, self.p)

    def dot(self, xs, ys):
        # Accumulate in ZZ, reduce once; cheaper than per-term reduction.
        total = 0
        for x, y in zip(xs, ys):
            total += x * y
        return total % self.p

    def from_int(self, n: int):
        return n % self.p

    def encode(self, x) -> str:
        return str(x)

    def parse_raw(self, text: str):
        if not _RESIDUE_RE.fullmatch(text):
            raise ParseError(
                f"invalid residue {text!r}: expected decimal digits",
                {"text": text},
            )
        value = int(text)
        if value >= self.p:
            raise ParseError(
                f"residue {value} out of range for F_{self.p}",
                {"text": text, "modulus": self.p},
            )
        return value

    def to_json_obj(self):
        return {"Fp": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("drazinkit.Fp", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


QQ = RationalField()


def field_from_json_obj(obj: Any, where: str = "field") -> Field:
    """Decode ``"Q"`` or ``{"Fp": p}`` into a Field, with located errors."""
    if obj == "Q":
        return QQ
    if isinstance(obj, dict) and set(obj.keys()) == {"Fp"}:
        p = obj["Fp"]
        if not isinstance(p, int) or isinstance(p, bool):
            raise ParseError(f"{where}: modulus must be an integer", {"at": where})
        try:
            return PrimeField(p)
        except ParseError as exc:
            raise ParseError(f"{where}: {exc}", {"at": where}) from exc
    raise ParseError(
        f"{where}: expected \"Q\" or {{\"Fp\": p}}, got {obj!r}", {"at": where}
    )


class FieldScalar:
    """An exact scalar bound to its field.

    Supports ``+ - * / **`` against scalars of the same field and plain
    ``int`` (lifted into the field).  Mixing fields raises
    :class:`FieldMismatch`; operator results are always canonical.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    def _coerce(self, other) -> Union[Any, None]:
        if isinstance(other, FieldScalar):
            if other.field != self.field:
                raise FieldMismatch(
                    f"cannot combine scalars over {self.field} and {other.field}"
                )
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.field.from_int(other)
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldScalar(self.field, self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldScalar(self.field, self.field.sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldScalar(self.field, self.field.sub(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldScalar(self.field, self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldScalar(self.field, self.field.mul(self.value, self.field.inv(v)))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldScalar(self.field, self.field.mul(v, self.field.inv(self.value)))

    def __pow__(self, e):
        if not isinstance(e, int) or isinstance(e, bool):
            return NotImplemented
        return FieldScalar(self.field, self.field.pow(self.value, e))

    def __neg__(self):
        return FieldScalar(self.field, self.field.neg(self.value))

    def inverse(self) -> "FieldScalar":
        return FieldScalar(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return not self.value

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return other.field == self.field and other.value == self.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field.encode(self.value)

    def __repr__(self):
        return f"FieldScalar({self.field!r}, {str(self)!r})"
