"""Exact integer polynomial arithmetic: cyclotomic polynomials, cyclotomic
multiplicities and remainders, and the order and degree polynomials of the
finite general linear groups.

All coefficients are Python integers; any inexact division raises instead of
approximating, since an inexact division here always means a transcription
bug somewhere upstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import Partition, hook_lengths


class InexactDivisionError(ArithmeticError):
    """A polynomial division that should have been exact was not."""


@dataclass(frozen=True, init=False)
class IntPolynomial:
    """A polynomial over the integers, as a dense coefficient tuple with the
    constant term first.  Trailing zeros are trimmed, so the zero polynomial
    has an empty tuple.

    >>> IntPolynomial(-1, 0, 1)
    IntPolynomial('x^2 - 1')
    >>> IntPolynomial(-1, 0, 1) % IntPolynomial(-1, 1)
    IntPolynomial('0')
    """

    coeffs: tuple[int, ...]

    def __init__(self, *coeffs: int):
        end = len(coeffs)
        while end > 0 and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", tuple(coeffs[:end]))

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.coeffs[0] if self.coeffs else 0

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            *(
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            )
        )

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(*(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(*out)

    def __divmod__(self, d: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Long division over the integers.

        Each elimination step must divide exactly in Z (automatic for monic
        divisors); otherwise InexactDivisionError is raised.
        """
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [0] * max(len(self.coeffs) - len(d.coeffs) + 1, 0)
        r = list(self.coeffs)
        dl = len(d.coeffs)
        lead = d.coeffs[-1]
        while len(r) >= dl:
            while r and r[-1] == 0:
                r.pop()
            if len(r) < dl:
                break
            t, rem = divmod(r[-1], lead)
            if rem:
                raise InexactDivisionError(
                    f"leading coefficient {r[-1]} not divisible by {lead}"
                )
            shift = len(r) - dl
            q[shift] = t
            for i, c in enumerate(d.coeffs):
                r[shift + i] -= t * c
        return IntPolynomial(*q), IntPolynomial(*r)

    def __mod__(self, d: "IntPolynomial") -> "IntPolynomial":
        return divmod(self, d)[1]

    def exact_div(self, d: "IntPolynomial") -> "IntPolynomial":
        q, r = divmod(self, d)
        if not r.is_zero():
            raise InexactDivisionError(f"{self} is not divisible by {d}")
        return q

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            terms.append((sign, body))
        head_sign, head = terms[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"IntPolynomial('{self}')"


ONE = IntPolynomial(1)
X = IntPolynomial(0, 1)


def x_power_minus_one(k: int) -> IntPolynomial:
    return IntPolynomial(-1, *([0] * (k - 1)), 1)


@lru_cache(maxsize=None)
def cyclotomic(e: int) -> IntPolynomial:
    """The e-th cyclotomic polynomial, by exact division of x^e - 1.

    >>> cyclotomic(6)
    IntPolynomial('x^2 - x + 1')
    """
    if e < 1:
        raise ValueError("e must be >= 1")
    poly = x_power_minus_one(e)
    for d in range(1, e):
        if e % d == 0:
            poly = poly.exact_div(cyclotomic(d))
    return poly


def phi_multiplicity(f: IntPolynomial, e: int) -> int:
    """The largest power of the e-th cyclotomic polynomial dividing f."""
    if f.is_zero():
        raise ValueError("multiplicity undefined for the zero polynomial")
    phi = cyclotomic(e)
    count = 0
    while True:
        q, r = divmod(f, phi)
        if not r.is_zero():
            return count
        f = q
        count += 1


def mod_cyclotomic(f: IntPolynomial, e: int) -> IntPolynomial:
    """Remainder of f modulo the e-th cyclotomic polynomial."""
    return f % cyclotomic(e)


@lru_cache(maxsize=None)
def gl_order(n: int) -> IntPolynomial:
    """Order polynomial of GL_n: x^(n(n-1)/2) * prod_{i<=n} (x^i - 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    poly = IntPolynomial(*([0] * (n * (n - 1) // 2)), 1)
    for i in range(1, n + 1):
        poly = poly * x_power_minus_one(i)
    return poly


@lru_cache(maxsize=None)
def generic_degree(p: Partition) -> IntPolynomial:
    """The unipotent character degree polynomial indexed by p.

    Computed by the q-analogue of the hook length formula:
    x^(sum (i-1) p_i) * prod_{i<=n} (x^i - 1) / prod_boxes (x^h - 1).
    The full-row partition indexes the trivial character (degree 1) and the
    full-column partition the Steinberg character.

    >>> generic_degree(Partition((2, 1)))
    IntPolynomial('x^2 + x')
    """
    n = p.size
    shift = sum(i * part for i, part in enumerate(p.parts))
    poly = IntPolynomial(*([0] * shift), 1)
    for i in range(1, n + 1):
        poly = poly * x_power_minus_one(i)
    for h in hook_lengths(p):
        poly = poly.exact_div(x_power_minus_one(h))
    return poly


def singular_check(p: Partition, e: int) -> bool:
    """True iff the degree polynomial of p carries the full cyclotomic
    multiplicity of the group order at e (the cuspidality criterion)."""
    if e < 1:
        raise ValueError("e must be >= 1")
    n = p.size
    if n == 0:
        return True
    return phi_multiplicity(generic_degree(p), e) == phi_multiplicity(gl_order(n), e)


def ennola_substitute(f: IntPolynomial) -> IntPolynomial:
    """f(-x): alternate the signs of the coefficients."""
    return IntPolynomial(*(c if k % 2 == 0 else -c for k, c in enumerate(f.coeffs)))


def ennola_e(e: int) -> int:
    """The index pairing of cyclotomic polynomials under x -> -x.

    >>> [ennola_e(e) for e in (3, 4, 6)]
    [6, 4, 3]
    """
    if e < 1:
        raise ValueError("e must be >= 1")
    if e % 2 == 1:
        return 2 * e
    if e % 4 == 0:
        return e
    return e // 2
