"""Exact non-Archimedean scalars.

Four kinds of field are supported:

* ``trivial-fq``  the finite field F_q with the trivial absolute value,
* ``trivial-q``   the rationals with the trivial absolute value,
* ``trivial-qi``  the Gaussian rationals Q(i) with the trivial absolute value,
* ``p-adic``      the rationals with the p-adic absolute value.

Magnitudes are kept symbolic as ``base ** exponent`` (or zero) so that every
norm identity can be decided by exact comparison.  Rationals with a p-adic
absolute value stand in for Q_p: functions on a finite space take finitely
many values, so completeness never enters.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Optional, Union


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def valuation(n: int, p: int) -> int:
    """Exponent of ``p`` in the nonzero integer ``n``."""
    if n == 0:
        raise FieldError("valuation of zero is infinite")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, n)`` with ``q == p ** n``, or raise."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = 2
    while q % p:
        p += 1
    n = valuation(q, p)
    if p ** n != q:
        raise FieldError(f"{q} is not a prime power")
    return p, n


@dataclass(frozen=True)
class AbsValue:
    """A magnitude ``base ** exponent``; ``exponent is None`` encodes zero.

    The value one is stored with ``base == 1`` regardless of the field so that
    ``One`` compares equal across fields.
    """

    exponent: Optional[int]
    base: int = 1

    def __post_init__(self):
        if self.exponent == 0 or self.exponent is None:
            object.__setattr__(self, "base", 1)
        elif self.base < 2:
            raise FieldError("nontrivial magnitude needs a base >= 2")
        object.__setattr__(self, "_rank", (-1, 0) if self.exponent is None else (0, self.exponent))

    @classmethod
    def power(cls, base: int, exponent: int) -> "AbsValue":
        return cls(exponent, base)

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def to_fraction(self) -> Fraction:
        if self.exponent is None:
            return Fraction(0)
        return Fraction(self.base) ** self.exponent

    def _key(self, other: "AbsValue"):
        if (
            self.exponent not in (None, 0)
            and other.exponent not in (None, 0)
            and self.base != other.base
        ):
            raise FieldError(f"magnitudes {self} and {other} live in different fields")

    def _order(self, other) -> tuple:
        if self.base != other.base and self.base > 1 and other.base > 1:
            self._key(other)
        return self._rank, other._rank

    def __lt__(self, other):
        if not isinstance(other, AbsValue):
            return NotImplemented
        a, b = self._order(other)
        return a < b

    def __le__(self, other):
        if not isinstance(other, AbsValue):
            return NotImplemented
        a, b = self._order(other)
        return a <= b

    def __gt__(self, other):
        if not isinstance(other, AbsValue):
            return NotImplemented
        a, b = self._order(other)
        return a > b

    def __ge__(self, other):
        if not isinstance(other, AbsValue):
            return NotImplemented
        a, b = self._order(other)
        return a >= b

    def __mul__(self, other):
        if not isinstance(other, AbsValue):
            return NotImplemented
        if self.exponent is None or other.exponent is None:
            return ZERO
        self._key(other)
        base = self.base if self.exponent else other.base
        return AbsValue(self.exponent + other.exponent, base)

    def inverse(self) -> "AbsValue":
        if self.exponent is None:
            raise ZeroDivisionError("zero magnitude has no inverse")
        return AbsValue(-self.exponent, self.base)

    def __str__(self):
        if self.exponent is None:
            return "0"
        if self.exponent == 0:
            return "1"
        return f"{self.base}^{self.exponent}"

    @classmethod
    def parse(cls, text: str) -> "AbsValue":
        text = text.strip()
        if text == "0":
            return ZERO
        if text == "1":
            return ONE
        m = re.fullmatch(r"(\d+)\s*\^\s*([+-]?\d+)", text)
        if not m:
            raise FieldError(f"cannot parse magnitude {text!r}")
        base, exp = int(m.group(1)), int(m.group(2))
        if exp == 0 or base == 1:
            return ONE
        return cls(exp, base)


ZERO = AbsValue(None)
ONE = AbsValue(0)


class ValuedField:
    """Common interface; concrete fields below hold canonical element values."""

    kind: str

    def zero(self) -> "Scalar":
        return Scalar(self, self._zero())

    def one(self) -> "Scalar":
        return Scalar(self, self._one())

    def __call__(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldError(f"{value} is not an element of {self}")
            return value
        if isinstance(value, str):
            return Scalar(self, self._parse(value))
        return Scalar(self, self._coerce(value))

    @property
    def prime_subfield(self) -> "ValuedField":
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError


@lru_cache(maxsize=1 << 16)
def _padic_abs(num: int, den: int, p: int) -> AbsValue:
    v = valuation(num, p) - valuation(den, p)
    return AbsValue(-v, p) if v else ONE


@dataclass(frozen=True)
class RationalField(ValuedField):
    """Q with the trivial absolute value (``p is None``) or the p-adic one."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise FieldError(f"p-adic field needs a prime, got {self.p}")

    @property
    def kind(self):
        return "trivial-q" if self.p is None else "p-adic"

    @property
    def prime_subfield(self):
        return self

    def _zero(self):
        return Fraction(0)

    def _one(self):
        return Fraction(1)

    def _coerce(self, value):
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise FieldError(f"cannot coerce {value!r} into {self}")

    def _parse(self, text):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"cannot parse rational {text!r}") from exc

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        return 1 / a

    def _abs(self, a):
        if a == 0:
            return ZERO
        if self.p is None:
            return ONE
        return _padic_abs(a.numerator, a.denominator, self.p)

    def _format(self, a):
        return str(a)

    def to_json(self):
        return {"kind": "p-adic", "p": self.p} if self.p else {"kind": "trivial-q"}

    def __str__(self):
        return "Q" if self.p is None else f"Q({self.p}-adic)"


@dataclass(frozen=True)
class GaussianField(ValuedField):
    """Q(i) with the trivial absolute value; elements are pairs (re, im)."""

    @property
    def kind(self):
        return "trivial-qi"

    @property
    def prime_subfield(self):
        return RationalField()

    def _zero(self):
        return (Fraction(0), Fraction(0))

    def _one(self):
        return (Fraction(1), Fraction(0))

    def _coerce(self, value):
        if isinstance(value, (int, Fraction)):
            return (Fraction(value), Fraction(0))
        if isinstance(value, tuple) and len(value) == 2:
            return (Fraction(value[0]), Fraction(value[1]))
        raise FieldError(f"cannot coerce {value!r} into {self}")

    _GAUSS = re.compile(r"([+-]?[\d/]+)?(?:([+-])?([\d/]*)i)?")

    def _parse(self, text):
        s = text.replace(" ", "")
        m = self._GAUSS.fullmatch(s)
        if not s or not m:
            raise FieldError(f"cannot parse Gaussian rational {text!r}")
        re_part, sign, im_part = m.groups()
        has_i = s.endswith("i")
        try:
            re_val = Fraction(re_part) if re_part else Fraction(0)
            im_val = Fraction(im_part) if im_part else Fraction(int(has_i))
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"cannot parse Gaussian rational {text!r}") from exc
        if sign == "-":
            im_val = -im_val
        return (re_val, im_val)

    def _add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def _neg(self, a):
        return (-a[0], -a[1])

    def _mul(self, a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def _inv(self, a):
        d = a[0] * a[0] + a[1] * a[1]
        if d == 0:
            raise ZeroDivisionError("inverse of zero")
        return (a[0] / d, -a[1] / d)

    def _abs(self, a):
        return ZERO if a == (0, 0) else ONE

    def _format(self, a):
        re_val, im_val = a
        if im_val == 0:
            return str(re_val)
        im_txt = "" if abs(im_val) == 1 else str(abs(im_val))
        sign = "-" if im_val < 0 else "+"
        if re_val == 0:
            return f"{'-' if im_val < 0 else ''}{im_txt}i"
        return f"{re_val}{sign}{im_txt}i"

    def to_json(self):
        return {"kind": "trivial-qi"}

    def __str__(self):
        return "Q(i)"


def _poly_str(coeffs) -> str:
    terms = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if not c:
            continue
        mono = "" if deg == 0 else ("x" if deg == 1 else f"x^{deg}")
        if deg == 0:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"


def _parse_poly(text: str, p: int) -> list[int]:
    s = text.replace(" ", "").replace("-", "+-")
    coeffs: dict[int, int] = {}
    for term in filter(None, s.split("+")):
        m = re.fullmatch(r"(-?\d*)(?:(\*?)x(?:\^(\d+))?)?", term)
        if not m or term in ("-",):
            raise FieldError(f"cannot parse polynomial term {term!r}")
        c_txt, _, deg_txt = m.groups()
        has_x = "x" in term
        if c_txt in ("", "-"):
            if not has_x:
                raise FieldError(f"cannot parse polynomial term {term!r}")
            c = -1 if c_txt == "-" else 1
        else:
            c = int(c_txt)
        deg = (int(deg_txt) if deg_txt else 1) if has_x else 0
        coeffs[deg] = (coeffs.get(deg, 0) + c) % p
    top = max(coeffs, default=0)
    return [coeffs.get(d, 0) for d in range(top + 1)]


def _poly_mod(a: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    a = list(a)
    n = len(mod) - 1
    for deg in range(len(a) - 1, n - 1, -1):
        c = a[deg]
        if c:
            for i, m in enumerate(mod):
                a[deg - n + i] = (a[deg - n + i] - c * m) % p
    return (a + [0] * n)[:n]


def _is_irreducible(mod: tuple[int, ...], p: int) -> bool:
    n = len(mod) - 1
    # a reducible polynomial of degree n has a monic factor of degree <= n // 2
    for d in range(1, n // 2 + 1):
        for low in product(range(p), repeat=d):
            if any(_poly_mod(list(mod), low + (1,), p)):
                continue
            return False
    return True


def conway_free_modulus(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically first monic irreducible polynomial of degree ``n``."""
    for low in product(range(p), repeat=n):
        mod = tuple(reversed(low)) + (1,)
        if _is_irreducible(mod, p):
            return mod
    raise FieldError(f"no irreducible polynomial of degree {n} over F_{p}")


@dataclass(frozen=True)
class FiniteField(ValuedField):
    """F_q, q = p^n, with the trivial absolute value.

    Elements are coefficient tuples (low degree first) modulo a fixed monic
    irreducible polynomial; for n == 1 they are tuples of length one.
    """

    q: int
    modulus: tuple[int, ...] = ()

    def __post_init__(self):
        p, n = prime_power(self.q)
        if not self.modulus:
            mod = conway_free_modulus(p, n) if n > 1 else (0, 1)
            object.__setattr__(self, "modulus", mod)
        elif len(self.modulus) != n + 1 or not _is_irreducible(self.modulus, p):
            raise FieldError(f"modulus {self.modulus} does not define F_{self.q}")

    @property
    def p(self) -> int:
        return prime_power(self.q)[0]

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def kind(self):
        return "trivial-fq"

    @property
    def prime_subfield(self):
        return FiniteField(self.p)

    def generator(self) -> "Scalar":
        """The class of x (called omega for F_4)."""
        if self.degree == 1:
            raise FieldError("a prime field has no polynomial generator")
        return Scalar(self, tuple(1 if i == 1 else 0 for i in range(self.degree)))

    def elements(self):
        for coeffs in product(range(self.p), repeat=self.degree):
            yield Scalar(self, coeffs)

    def _zero(self):
        return (0,) * self.degree

    def _one(self):
        return (1,) + (0,) * (self.degree - 1)

    def _coerce(self, value):
        if isinstance(value, int):
            return ((value % self.p),) + (0,) * (self.degree - 1)
        if isinstance(value, (tuple, list)):
            return tuple(_poly_mod([int(c) % self.p for c in value], self.modulus, self.p))
        raise FieldError(f"cannot coerce {value!r} into {self}")

    def _parse(self, text):
        body, _, mod_txt = text.partition("mod")
        if mod_txt:
            mod = _parse_poly(mod_txt, self.p)
            if tuple(mod) != self.modulus:
                raise FieldError(
                    f"element {text!r} uses modulus {_poly_str(mod)}, "
                    f"field uses {_poly_str(self.modulus)}"
                )
        return tuple(_poly_mod(_parse_poly(body, self.p), self.modulus, self.p))

    def _add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(-x % self.p for x in a)

    def _mul(self, a, b):
        prod = [0] * (2 * self.degree - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return tuple(_poly_mod([c % self.p for c in prod], self.modulus, self.p))

    def _inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero")
        # a^(q-2) in the multiplicative group
        result, base, e = self._one(), a, self.q - 2
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result

    def _abs(self, a):
        return ONE if any(a) else ZERO

    def _format(self, a):
        if self.degree == 1:
            return str(a[0])
        return f"{_poly_str(a)} mod {_poly_str(self.modulus)}"

    def to_json(self):
        return {"kind": "trivial-fq", "q": self.q}

    def __str__(self):
        return f"F_{self.q}"


@dataclass(frozen=True)
class Scalar:
    field: ValuedField
    value: object

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldError(f"cannot combine elements of {self.field} and {other.field}")
            return other.value
        return self.field(other).value

    def __add__(self, other):
        return Scalar(self.field, self.field._add(self.value, self._other(other)))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, self.field._neg(self.value))

    def __sub__(self, other):
        return self + (-Scalar(self.field, self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self._other(other)) - self

    def __mul__(self, other):
        return Scalar(self.field, self.field._mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field._inv(self.value))

    def __truediv__(self, other):
        return self * Scalar(self.field, self._other(other)).inverse()

    def is_zero(self) -> bool:
        return self.value == self.field._zero()

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        return self.field._format(self.value)

    def __repr__(self):
        return f"Scalar({self.field}, {self})"


def abs_value(x: Scalar) -> AbsValue:
    return x.field._abs(x.value)


def is_integral(x: Scalar) -> bool:
    return abs_value(x) <= ONE


def uniformizer_power(field: ValuedField, target: AbsValue) -> Scalar:
    """An invertible scalar ``a`` with ``|a| >= target`` (``|a| == target`` when possible)."""
    if target.is_zero or target.exponent == 0 or not isinstance(field, RationalField) or field.p is None:
        return field.one()
    return field(Fraction(field.p) ** (-target.exponent))


def field_from_json(data: Union[dict, str]) -> ValuedField:
    if isinstance(data, str):
        data = {"kind": data}
    kind = data.get("kind")
    if kind == "p-adic":
        return RationalField(int(data["p"]))
    if kind == "trivial-q":
        return RationalField()
    if kind == "trivial-qi":
        return GaussianField()
    if kind == "trivial-fq":
        return FiniteField(int(data["q"]))
    raise FieldError(f"unknown field kind {kind!r}")
