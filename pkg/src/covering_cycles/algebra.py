"""Exact integer matrices, integer polynomials and truncated rational power series."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import PreconditionError

Number = Union[int, Fraction]


class IntMatrix:
    """Dense square matrix of Python ints."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise PreconditionError("IntMatrix must be square")
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.rows[i]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]})"

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(_matmul(self.rows, other.rows))

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def submatrix(self, keep: Sequence[int]) -> "IntMatrix":
        return IntMatrix([[self.rows[i][j] for j in keep] for i in keep])


def _matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * n
        for k, x in enumerate(row):
            if x:
                for j, y in enumerate(b[k]):
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def trace_powers(m: IntMatrix, up_to: int) -> list[int]:
    """``[Tr m^1, ..., Tr m^up_to]`` by iterated exact multiplication."""
    if up_to < 0:
        raise PreconditionError("power must be nonnegative")
    out: list[int] = []
    if m.n == 0:
        return [0] * up_to
    p = [list(r) for r in m.rows]
    for k in range(1, up_to + 1):
        if k > 1:
            p = _matmul(p, m.rows)
        out.append(sum(p[i][i] for i in range(m.n)))
    return out


def trace_power(m: IntMatrix, N: int) -> int:
    if N < 1:
        raise PreconditionError("N must be >= 1")
    return trace_powers(m, N)[-1]


def determinant(m: IntMatrix) -> int:
    """Bareiss fraction-free elimination."""
    n = m.n
    if n == 0:
        return 1
    a = [list(r) for r in m.rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def charpoly(m: IntMatrix) -> list[int]:
    """Berkowitz: ``[1, c1, ..., cn]`` with ``det(xI - m) = x^n + c1 x^(n-1) + ... + cn``.

    Division-free, so every intermediate is an integer.
    """
    a = [list(r) for r in m.rows]
    if not a:
        return [1]
    toeplitz_columns = []
    while len(a) > 1:
        k = len(a)
        top, left = a[0][1:], [a[i][0] for i in range(1, k)]
        sub = [r[1:] for r in a[1:]]
        col = [1, -a[0][0]]
        vec = left
        for _ in range(k - 1):
            col.append(-sum(x * y for x, y in zip(top, vec)))
            vec = [sum(x * y for x, y in zip(r, vec)) for r in sub]
        toeplitz_columns.append(col)
        a = sub
    poly = [1, -a[0][0]]
    for col in reversed(toeplitz_columns):
        # (len(col)) x (len(poly)) lower-triangular Toeplitz product
        poly = [
            sum(col[i - j] * poly[j] for j in range(min(i, len(poly) - 1) + 1) if i - j < len(col))
            for i in range(len(col))
        ]
    return poly


def det_one_minus_z(m: IntMatrix) -> "Polynomial":
    """``det(I - z m)`` as an integer polynomial in ``z``.

    Reversing the characteristic polynomial gives exactly these coefficients.
    """
    return Polynomial(charpoly(m))


def traces_from_det(p: "Polynomial", up_to: int) -> list[int]:
    """Newton's identities: power sums ``Tr m^k`` from ``det(I - z m)``, k = 1..up_to."""
    c = list(p.coeffs) or [0]
    if c[0] != 1:
        raise PreconditionError("det(I - z m) must have constant term 1")
    out: list[int] = []
    for k in range(1, up_to + 1):
        ck = c[k] if k < len(c) else 0
        s = -k * ck
        for i in range(1, min(k, len(c))):
            s -= c[i] * out[k - i - 1]
        out.append(s)
    return out


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial; ``coeffs[d]`` is the coefficient of ``z^d``, trailing zeros trimmed."""

    coeffs: tuple[int, ...] = ()

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def one(cls) -> "Polynomial":
        return cls([1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial.one()
        for _ in range(k):
            out = out * self
        return out

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial(x - y for x, y in zip(a, b))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                power = "z" if d == 1 else f"z^{d}"
                body = power if mag == 1 else f"{mag}*{power}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def _divmod_fraction(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        q[shift] = f
        for i, y in enumerate(b):
            a[i + shift] -= f * y
        while a and a[-1] == 0:
            a.pop()
    return q, a


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Greatest common divisor with constant term normalized to 1.

    Both inputs must have constant term 1 (true for every ``det(I - z m)``),
    which makes the normalized gcd an integer polynomial.
    """
    a = [Fraction(x) for x in p.coeffs]
    b = [Fraction(x) for x in q.coeffs]
    while b:
        _, r = _divmod_fraction(a, b)
        a, b = b, r
    if not a or a[0] == 0:
        raise PreconditionError("poly_gcd expects polynomials with nonzero constant term")
    g = [x / a[0] for x in a]
    if any(x.denominator != 1 for x in g):
        raise PreconditionError("gcd is not integral; inputs must have constant term 1")
    return Polynomial(int(x) for x in g)


def poly_exact_div(p: Polynomial, q: Polynomial) -> Polynomial:
    quot, rem = _divmod_fraction([Fraction(x) for x in p.coeffs], [Fraction(x) for x in q.coeffs])
    if rem or any(x.denominator != 1 for x in quot):
        raise PreconditionError(f"{q} does not divide {p} over the integers")
    return Polynomial(int(x) for x in quot)


class PowerSeries:
    """Truncated power series ``c_0 + c_1 z + ... + c_M z^M`` with Fraction coefficients.

    Binary operations truncate to the smaller order of the two operands.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number], order: int | None = None):
        c = [Fraction(x) for x in coeffs]
        if order is not None:
            if order < 0:
                raise PreconditionError("truncation order must be nonnegative")
            c = (c + [Fraction(0)] * (order + 1 - len(c)))[: order + 1]
        if not c:
            raise PreconditionError("a power series needs at least the constant term")
        self.coeffs = tuple(c)

    @classmethod
    def from_polynomial(cls, p: Polynomial, order: int) -> "PowerSeries":
        return cls(p.coeffs, order)

    @classmethod
    def constant(cls, c: Number, order: int) -> "PowerSeries":
        return cls([c], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PowerSeries) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"PowerSeries({[str(c) for c in self.coeffs]})"

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries(self.coeffs[: order + 1], order)

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(-c for c in self.coeffs)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        m = min(self.order, other.order)
        return PowerSeries(a + b for a, b in zip(self.coeffs[: m + 1], other.coeffs))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        return self + (-other)

    def scale(self, k: Number) -> "PowerSeries":
        return PowerSeries(k * c for c in self.coeffs)

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        return series_mul(self, other)

    def __truediv__(self, other: "PowerSeries") -> "PowerSeries":
        return series_div(self, other)


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    m = min(a.order, b.order)
    out = [Fraction(0)] * (m + 1)
    for i in range(m + 1):
        x = a.coeffs[i]
        if x:
            for j in range(m + 1 - i):
                out[i + j] += x * b.coeffs[j]
    return PowerSeries(out)


def series_div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    if b.coeffs[0] == 0:
        raise PreconditionError("division by a series with zero constant term")
    m = min(a.order, b.order)
    inv0 = 1 / b.coeffs[0]
    out: list[Fraction] = []
    for n in range(m + 1):
        s = a.coeffs[n] - sum(b.coeffs[k] * out[n - k] for k in range(1, n + 1))
        out.append(s * inv0)
    return PowerSeries(out)


def series_exp(a: PowerSeries) -> PowerSeries:
    """``exp(a)`` for ``a_0 = 0`` via ``n b_n = sum_k k a_k b_(n-k)``."""
    if a.coeffs[0] != 0:
        raise PreconditionError("series_exp needs a zero constant term")
    b = [Fraction(1)]
    for n in range(1, a.order + 1):
        s = sum(k * a.coeffs[k] * b[n - k] for k in range(1, n + 1))
        b.append(s / n)
    return PowerSeries(b)


def series_log(b: PowerSeries) -> PowerSeries:
    """``log(b)`` for ``b_0 = 1``."""
    if b.coeffs[0] != 1:
        raise PreconditionError("series_log needs constant term 1")
    a = [Fraction(0)]
    for n in range(1, b.order + 1):
        s = n * b.coeffs[n] - sum(k * a[k] * b.coeffs[n - k] for k in range(1, n))
        a.append(s / n)
    return PowerSeries(a)
