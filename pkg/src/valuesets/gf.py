"""Arithmetic in the finite field F_q, q = p^r, p an odd prime.

Elements are stored as integer indices in ``range(q)``.  For ``r == 1`` the
index is the residue itself; for ``r > 1`` the index of
``c_0 + c_1 x + ... + c_{r-1} x^{r-1}`` is ``sum(c_j * p**j)``, so index order
is lexicographic on the coefficient tuple read from the top coefficient
down.  Index 0 is always zero and index 1 is always one.

Scalar arithmetic runs on plain Python ints.  Vectorised work (spectrum
enumeration) uses the ``q x q`` numpy tables from :attr:`FieldCtx.tables`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    EvenCharacteristic,
    FieldError,
    FieldTooSmall,
    MixedFields,
    NonPrimeCharacteristic,
    ReducibleModulus,
    ZeroHasNoOrder,
)

__all__ = [
    "FieldCtx",
    "FieldElement",
    "field_new",
    "pow_qm2",
    "inv",
    "div",
    "order",
    "elements",
    "is_prime",
    "factorize",
    "smallest_irreducible",
    "is_irreducible",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation of ``n >= 1`` by trial division."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# -- polynomials over F_p as little-endian coefficient lists ---------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``m``."""
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        lead = a[-1]
        shift = len(a) - 1 - dm
        for j, mc in enumerate(m):
            a[shift + j] = (a[shift + j] - lead * mc) % p
        _trim(a)
    return a


def _monic_polys(degree: int, p: int) -> Iterable[list[int]]:
    # lower coefficients enumerated in index order (top coefficient first)
    for k in range(p ** degree):
        low = [(k // p ** j) % p for j in range(degree)]
        yield low + [1]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    r = len(modulus) - 1
    if r < 1:
        return False
    for d in range(1, r // 2 + 1):
        for div_ in _monic_polys(d, p):
            if not _poly_rem(modulus, div_, p):
                return False
    return True


def smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``r`` over F_p."""
    for m in _monic_polys(r, p):
        if is_irreducible(m, p):
            return tuple(m)
    raise FieldError(f"no irreducible polynomial of degree {r} over F_{p}")  # pragma: no cover


@dataclass(frozen=True)
class _Tables:
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    qm2: np.ndarray
    digits: np.ndarray  # shape (q, r)


class FieldCtx:
    """The field F_q.  Immutable; safe to share between processes."""

    def __init__(self, p: int, r: int = 1, modulus: Sequence[int] | None = None):
        p, r = int(p), int(r)
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"p={p} is not prime")
        if p == 2:
            raise EvenCharacteristic("characteristic 2 is not supported")
        if r < 1:
            raise FieldError(f"extension degree must be >= 1, got r={r}")
        if p ** r < 5:
            raise FieldTooSmall(f"q={p ** r} < 5")
        self.p = p
        self.r = r
        self.q = p ** r
        if r == 1:
            if modulus is not None:
                raise FieldError("a modulus is only meaningful for r > 1")
            self.modulus: tuple[int, ...] | None = None
        else:
            if modulus is None:
                modulus = smallest_irreducible(p, r)
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != r + 1 or modulus[-1] != 1:
                raise FieldError(f"modulus must be monic of degree {r}: {list(modulus)}")
            if not is_irreducible(modulus, p):
                raise ReducibleModulus(f"{list(modulus)} is reducible over F_{p}")
            self.modulus = modulus
            self._build_ext_arith()

    # -- identity -----------------------------------------------------------

    def _key(self):
        return (self.p, self.r, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.r == 1:
            return f"FieldCtx(p={self.p})"
        return f"FieldCtx(p={self.p}, r={self.r}, modulus={list(self.modulus)})"

    def __getstate__(self):
        state = dict(self.__dict__)
        state.pop("tables", None)
        return state

    # -- extension field internals -----------------------------------------

    def _digits(self, x: int) -> list[int]:
        p = self.p
        return [(x // p ** j) % p for j in range(self.r)]

    def _from_digits(self, ds: Sequence[int]) -> int:
        p = self.p
        return sum((int(c) % p) * p ** j for j, c in enumerate(ds))

    def _polymul_index(self, x: int, y: int) -> int:
        a, b = self._digits(x), self._digits(y)
        prod = [0] * (2 * self.r - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        return self._from_digits(_poly_rem(prod, self.modulus, self.p))

    def _build_ext_arith(self):
        q, p, r = self.q, self.p, self.r
        digits = np.array([self._digits(x) for x in range(q)], dtype=np.int64)
        weights = p ** np.arange(r, dtype=np.int64)
        summed = (digits[:, None, :] + digits[None, :, :]) % p
        self._add = (summed @ weights).tolist()
        self._neg = ((-digits % p) @ weights).tolist()
        # discrete log tables from the first primitive element in index order
        for g in range(2, q):
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                x = self._polymul_index(x, g)
            if len(exp) == q - 1:
                break
        log = [0] * q
        for k, v in enumerate(exp):
            log[v] = k
        self._exp, self._log = exp, log

    # -- scalar arithmetic on indices --------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.r == 1:
            return (x + y) % self.p
        return self._add[x][y]

    def neg(self, x: int) -> int:
        if self.r == 1:
            return -x % self.p
        return self._neg[x]

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self.r == 1:
            return x * y % self.p
        if x == 0 or y == 0:
            return 0
        return self._exp[(self._log[x] + self._log[y]) % (self.q - 1)]

    def power(self, x: int, e: int) -> int:
        """Square-and-multiply, ``e >= 0``."""
        result, base = 1, x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def qm2(self, x: int) -> int:
        return self.power(x, self.q - 2)

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("zero has no inverse")
        return self.qm2(x)

    def order_of(self, x: int) -> int:
        if x == 0:
            raise ZeroHasNoOrder("zero has no multiplicative order")
        t = self.q - 1
        for ell in factorize(self.q - 1):
            while t % ell == 0 and self.power(x, t // ell) == 1:
                t //= ell
        return t

    def scalar(self, n: int) -> int:
        """Index of the integer ``n`` mapped into the prime subfield."""
        return int(n) % self.p

    # -- elements -----------------------------------------------------------

    def __call__(self, value) -> "FieldElement":
        return self.element(value)

    def element(self, value) -> "FieldElement":
        """Coerce an int (reduced mod p), coefficient list, or element."""
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise MixedFields(f"{value!r} is not in {self!r}")
            return value
        if isinstance(value, (list, tuple)):
            if self.r == 1 and len(value) == 1:
                return FieldElement(self, int(value[0]) % self.p)
            if len(value) > self.r:
                raise FieldError(f"too many coefficients for F_{self.q}: {list(value)}")
            return FieldElement(self, self._from_digits(value))
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, self.scalar(int(value)))
        raise TypeError(f"cannot coerce {value!r} into {self!r}")

    def from_index(self, x: int) -> "FieldElement":
        return FieldElement(self, int(x))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, x) for x in range(self.q)]

    def nonzero(self) -> list["FieldElement"]:
        return [FieldElement(self, x) for x in range(1, self.q)]

    # -- vectorised tables --------------------------------------------------

    @cached_property
    def tables(self) -> _Tables:
        q = self.q
        idx = np.arange(q, dtype=np.int64)
        if self.r == 1:
            add = (idx[:, None] + idx[None, :]) % q
            mul = (idx[:, None] * idx[None, :]) % q
            neg = -idx % q
            digits = idx[:, None].copy()
        else:
            add = np.array(self._add, dtype=np.int64)
            neg = np.array(self._neg, dtype=np.int64)
            exp = np.array(self._exp, dtype=np.int64)
            log = np.array(self._log, dtype=np.int64)
            mul = exp[(log[:, None] + log[None, :]) % (q - 1)]
            mul[0, :] = 0
            mul[:, 0] = 0
            digits = np.array([self._digits(x) for x in range(q)], dtype=np.int64)
        qm2 = np.array([self.qm2(x) for x in range(q)], dtype=np.int64)
        return _Tables(add=add, mul=mul, neg=neg, qm2=qm2, digits=digits)

    # -- serialisation ------------------------------------------------------

    def to_json(self) -> dict:
        return {"p": self.p, "r": self.r,
                "modulus": list(self.modulus) if self.modulus else None}

    @classmethod
    def from_json(cls, obj: dict) -> "FieldCtx":
        return cls(obj["p"], obj.get("r", 1), obj.get("modulus"))

    def describe(self) -> str:
        if self.r == 1:
            return f"F_{self.q}"
        return f"F_{self.q} = F_{self.p}[x]/({_poly_str(self.modulus)})"


def _poly_str(coeffs: Sequence[int]) -> str:
    terms = []
    for j in range(len(coeffs) - 1, -1, -1):
        c = coeffs[j]
        if not c:
            continue
        mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) or "0"


class FieldElement:
    """An element of a :class:`FieldCtx`.  Ints on either side are coerced."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldCtx, value: int):
        self.ctx = ctx
        self.value = value

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise MixedFields(f"{self.ctx!r} vs {other.ctx!r}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.ctx.scalar(int(other))
        return NotImplemented

    def _wrap(self, v: int) -> "FieldElement":
        return FieldElement(self.ctx, v)

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.ctx.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.ctx.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.ctx.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.ctx.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.ctx.mul(self.value, self.ctx.inv(o)))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.ctx.mul(o, self.ctx.inv(self.value)))

    def __neg__(self):
        return self._wrap(self.ctx.neg(self.value))

    def __pow__(self, e: int):
        if e < 0:
            return self._wrap(self.ctx.power(self.ctx.inv(self.value), -e))
        return self._wrap(self.ctx.power(self.value, e))

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.value == other.value and self.ctx == other.ctx
        if isinstance(other, (int, np.integer)):
            return self.value == self.ctx.scalar(int(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.q, self.value))

    def __lt__(self, other: "FieldElement"):
        return self.value < other.value

    def __index__(self):
        return self.value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.ctx._digits(self.value)) if self.ctx.r > 1 else (self.value,)

    def inv(self) -> "FieldElement":
        return self._wrap(self.ctx.inv(self.value))

    def to_json(self):
        if self.ctx.r == 1:
            return self.value
        return list(self.coeffs)

    def __str__(self):
        if self.ctx.r == 1:
            return str(self.value)
        return "[" + ",".join(map(str, self.coeffs)) + "]"

    def __repr__(self):
        return f"F{self.ctx.q}({self})"


def field_new(p: int, r: int = 1, modulus: Sequence[int] | None = None) -> FieldCtx:
    return FieldCtx(p, r, modulus)


def pow_qm2(x: FieldElement) -> FieldElement:
    """``x**(q-2)``: the inverse of ``x`` when ``x != 0``, and 0 at 0."""
    return FieldElement(x.ctx, x.ctx.qm2(x.value))


def inv(x: FieldElement) -> FieldElement:
    return x.inv()


def div(x: FieldElement, y: FieldElement) -> FieldElement:
    return x / y


def order(x: FieldElement) -> int:
    """Multiplicative order of a nonzero element."""
    return x.ctx.order_of(x.value)


def elements(ctx: FieldCtx) -> list[FieldElement]:
    return ctx.elements()
