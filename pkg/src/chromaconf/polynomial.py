"""Exact univariate polynomials over the integers."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import InputError, VerificationError


class IntPolynomial:
    """Immutable integer polynomial; ``coefficients[i]`` multiplies ``var**i``.

    Trailing zeros are trimmed, so the zero polynomial has no coefficients.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[int] = ()):
        c = []
        for a in coefficients:
            if isinstance(a, bool) or not isinstance(a, int):
                raise InputError(f"integer coefficients only, got {a!r}")
            c.append(a)
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, value: int) -> "IntPolynomial":
        return cls([value])

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    def coeff(self, i: int) -> int:
        return self._c[i] if 0 <= i < len(self._c) else 0

    @property
    def leading(self) -> int:
        return self._c[-1] if self._c else 0

    def is_zero(self) -> bool:
        return not self._c

    # ---- arithmetic
    def _coerce(self, other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return IntPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self._c), len(other._c))
        return IntPolynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-a for a in self._c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._c or not other._c:
            return IntPolynomial()
        out = [0] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise InputError("negative polynomial power")
        result, base = IntPolynomial([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by ``var**k`` (k >= 0)."""
        return IntPolynomial([0] * k + list(self._c)) if self._c else self

    def divmod_exact(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Long division that stays in the integers.

        Raises VerificationError if a step would need a non-integer quotient
        coefficient; otherwise returns ``(quotient, remainder)``.
        """
        if divisor.is_zero():
            raise InputError("division by the zero polynomial")
        rem = list(self._c)
        dq = divisor.degree
        lead = divisor.leading
        quot = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise VerificationError(f"coefficient {c} of degree {k} not divisible by leading coefficient {lead}")
            quot[k - dq] = q
            for j, d in enumerate(divisor._c):
                rem[k - dq + j] -= q * d
        return IntPolynomial(quot), IntPolynomial(rem)

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        q, r = self.divmod_exact(divisor)
        if not r.is_zero():
            raise VerificationError(f"{self} is not divisible by {divisor} (remainder {r})")
        return q

    def __call__(self, value):
        """Horner evaluation; works for ints, Fractions, or other polynomials."""
        acc = 0
        for a in reversed(self._c):
            acc = acc * value + a
        return acc

    def compose(self, inner: "IntPolynomial") -> "IntPolynomial":
        acc = IntPolynomial()
        for a in reversed(self._c):
            acc = acc * inner + a
        return acc

    def reversed_coefficients(self, degree: int) -> "IntPolynomial":
        """``var**degree * p(1/var)``; ``degree`` must be >= deg p."""
        if degree < self.degree:
            raise InputError("reversal degree below polynomial degree")
        padded = list(self._c) + [0] * (degree + 1 - len(self._c))
        return IntPolynomial(reversed(padded))

    # ---- comparison / display
    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._c == other._c

    def __hash__(self):
        return hash(("IntPolynomial", self._c))

    def __repr__(self):
        return f"IntPolynomial({list(self._c)})"

    def format(self, var: str = "x", ascending: bool = False, power=None) -> str:
        """Human readable form.  ``power(i)`` renders ``var**i`` if given."""
        if not self._c:
            return "0"
        order = range(len(self._c)) if ascending else range(len(self._c) - 1, -1, -1)
        out = []
        for i in order:
            a = self._c[i]
            if a == 0:
                continue
            if power is not None:
                mono = power(i)
            else:
                mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
            mag = abs(a)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            if not out:
                out.append(("-" if a < 0 else "") + body)
            else:
                out.append(("- " if a < 0 else "+ ") + body)
        return " ".join(out)

    def __str__(self):
        return self.format()

    def to_json(self, variable: str = "x") -> dict:
        return {"variable": variable, "coefficients": [str(a) for a in self._c]}

    @classmethod
    def from_json(cls, data: dict) -> "IntPolynomial":
        return cls(int(a) for a in data["coefficients"])


def falling_factorial(m: int) -> IntPolynomial:
    """lambda (lambda - 1) ... (lambda - m + 1)."""
    p = IntPolynomial([1])
    for j in range(m):
        p = p * IntPolynomial([-j, 1])
    return p


def product(polys: Sequence[IntPolynomial]) -> IntPolynomial:
    out = IntPolynomial([1])
    for p in polys:
        out = out * p
    return out
