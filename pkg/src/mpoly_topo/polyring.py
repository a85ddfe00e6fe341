"""Exact sparse bivariate polynomials over a square-root extension of Q.

A RadScalar is a finite sum

    q_1*sqrt(r_1) + q_2*sqrt(r_2) + ...

with rational coefficients q_k and squarefree integer radicands r_k >= 1;
radicand 1 carries the purely rational part.  Square roots of distinct
squarefree integers are linearly independent over Q, so this canonical form
is unique and ``==`` is an exact algebraic equality test.  All arithmetic
(including products, which may create non-squarefree radicands) re-canonicalizes
by extracting square factors.

A BiPoly is a sparse polynomial in two variables: a map from exponent pairs
(a, b) to RadScalar coefficients, with zero coefficients never stored and
exponents restricted to non-negative integers.

The operator set acts termwise on BiPoly:

    s_x       c*x^a*y^b  ->  (c/a)*x^a*y^b      (integrate f(t,y)/t; needs a >= 1)
    p_x       c*x^a*y^b  ->  c*x^(a*a)*y^b
    p_y       c*x^a*y^b  ->  c*x^a*y^(b*b)
    j_diag    c*x^a*y^b  ->  c*x^(a+b)          (substitute y = x)
    d_half_x  c*x^a*y^b  ->  c*sqrt(a)*x^a*y^b  (a = 0 terms vanish)
    eval_x1   sum of all coefficients           (evaluate at x = y = 1)

Applied in the order s_x, p_x, p_y, j_diag, d_half_x to a degree-pair
counting polynomial, they send each term m_ij*x^i*y^j to
(m_ij/i)*sqrt(i^2+j^2)*x^(i^2+j^2), so evaluation at 1 yields the edge sum
of sqrt(i^2+j^2)/i weighted by the pair counts.  Distinct degree pairs can
collide at the same exponent i^2+j^2 after j_diag; the merge is harmless
because the sqrt factor applied afterwards depends only on that exponent.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from decimal import Decimal, localcontext
from typing import Iterable, Iterator, Mapping, Union

from .errors import DivergentIntegralError, InvalidRadicandError, InvalidRangeError

Rational = Union[int, Fraction]


def squarefree_decompose(k: int) -> tuple[int, int]:
    """Split k >= 1 into (s, f) with k == s*s*f and f squarefree."""
    if k < 1:
        raise InvalidRadicandError(f"radicand must be a positive integer, got {k}")
    s, f = 1, 1
    d = 2
    while d * d <= k:
        if k % d == 0:
            e = 0
            while k % d == 0:
                k //= d
                e += 1
            s *= d ** (e // 2)
            if e % 2:
                f *= d
        d += 1 if d == 2 else 2
    return s, f * k  # leftover k is 1 or a single prime


class RadScalar:
    """An exact number sum(q_k * sqrt(r_k)) in canonical form.

    Construction accepts any iterable of (radicand, coefficient) pairs or a
    mapping radicand -> coefficient; radicands need not be squarefree and
    repeated radicands are merged.  Instances are immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[int, Rational]] | Mapping[int, Rational] = ()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        acc: dict[int, Fraction] = {}
        for radicand, q in terms:
            q = Fraction(q)
            if q == 0:
                continue
            if not isinstance(radicand, int):
                raise InvalidRadicandError(f"radicand must be an integer, got {radicand!r}")
            s, f = squarefree_decompose(radicand)
            new = acc.get(f, Fraction(0)) + q * s
            if new == 0:
                acc.pop(f, None)
            else:
                acc[f] = new
        self._terms = acc

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "RadScalar":
        return cls()

    @classmethod
    def rational(cls, q: Rational) -> "RadScalar":
        return cls([(1, q)])

    @classmethod
    def sqrt(cls, k: int) -> "RadScalar":
        """The canonical form of sqrt(k), k >= 1."""
        return cls([(k, 1)])

    # -- views -------------------------------------------------------------

    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        """Canonical terms as (radicand, coefficient), radicand ascending."""
        return tuple(sorted(self._terms.items()))

    @property
    def is_rational(self) -> bool:
        return all(r == 1 for r in self._terms)

    def rational_value(self) -> Fraction:
        """The value as a Fraction; raises if any irrational term remains."""
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self._terms.get(1, Fraction(0))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "RadScalar" | Rational) -> "RadScalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self._terms)
        for r, q in other._terms.items():
            new = merged.get(r, Fraction(0)) + q
            if new == 0:
                merged.pop(r, None)
            else:
                merged[r] = new
        return _wrap(merged)

    __radd__ = __add__

    def __neg__(self) -> "RadScalar":
        return _wrap({r: -q for r, q in self._terms.items()})

    def __sub__(self, other: "RadScalar" | Rational) -> "RadScalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Rational) -> "RadScalar":
        return (-self) + other

    def __mul__(self, other: "RadScalar" | Rational) -> "RadScalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for r1, q1 in self._terms.items():
            for r2, q2 in other._terms.items():
                # r1, r2 squarefree: sqrt(r1)*sqrt(r2) = g*sqrt((r1//g)*(r2//g))
                g = math.gcd(r1, r2)
                rad = (r1 // g) * (r2 // g)
                q = q1 * q2 * g
                new = acc.get(rad, Fraction(0)) + q
                if new == 0:
                    acc.pop(rad, None)
                else:
                    acc[rad] = new
        return _wrap(acc)

    __rmul__ = __mul__

    def __truediv__(self, other: Rational) -> "RadScalar":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self * (Fraction(1) / Fraction(other))

    def mul_sqrt(self, k: int) -> "RadScalar":
        """self * sqrt(k) in canonical form; k must be a positive integer."""
        s, f = squarefree_decompose(k)
        acc: dict[int, Fraction] = {}
        for r, q in self._terms.items():
            g = math.gcd(r, f)
            rad = (r // g) * (f // g)
            new = acc.get(rad, Fraction(0)) + q * s * g
            if new == 0:
                acc.pop(rad, None)
            else:
                acc[rad] = new
        return _wrap(acc)

    # -- numeric evaluation --------------------------------------------------

    def to_float(self) -> float:
        """Double-precision value via an exactly rounded float sum."""
        return math.fsum(
            float(q) if r == 1 else float(q) * math.sqrt(r) for r, q in self._terms.items()
        )

    def to_decimal(self, precision: int = 50) -> Decimal:
        """Decimal value computed at the given working precision."""
        with localcontext() as ctx:
            ctx.prec = precision
            total = Decimal(0)
            for r, q in sorted(self._terms.items()):
                term = Decimal(q.numerator) / Decimal(q.denominator)
                if r != 1:
                    term *= Decimal(r).sqrt()
                total += term
            return +total

    # -- protocol ------------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RadScalar.rational(other)
        if not isinstance(other, RadScalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for r, q in sorted(self._terms.items()):
            mag = str(abs(q)) if r == 1 else (f"{abs(q)}*sqrt({r})" if abs(q) != 1 else f"sqrt({r})")
            if not parts:
                parts.append(f"-{mag}" if q < 0 else mag)
            else:
                parts.append(f"- {mag}" if q < 0 else f"+ {mag}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"RadScalar({self})"

    # -- serialization --------------------------------------------------------

    def to_json_terms(self) -> list[dict]:
        """Canonical terms as [{"q": "p/q", "r": radicand}, ...]."""
        return [{"q": str(q), "r": r} for r, q in sorted(self._terms.items())]

    @classmethod
    def from_json_terms(cls, data: Iterable[Mapping]) -> "RadScalar":
        return cls([(int(item["r"]), Fraction(item["q"])) for item in data])


def _coerce(value) -> "RadScalar":
    if isinstance(value, RadScalar):
        return value
    if isinstance(value, (int, Fraction)):
        return RadScalar.rational(value)
    return NotImplemented


def _wrap(canonical: dict[int, Fraction]) -> RadScalar:
    """Wrap an already-canonical term dict without re-normalizing."""
    out = RadScalar.__new__(RadScalar)
    out._terms = canonical
    return out


_ZERO = RadScalar()


def rad_mul_sqrt(s: RadScalar, k: int) -> RadScalar:
    """Return s*sqrt(k) canonically (square part of k pulled into the coefficient)."""
    return s.mul_sqrt(k)


def rad_to_float(s: RadScalar) -> float:
    """Double-precision value of s."""
    return s.to_float()


Coefficient = Union[RadScalar, int, Fraction]


class BiPoly:
    """Sparse bivariate polynomial with RadScalar coefficients.

    Terms are keyed by exponent pairs (a, b); both exponents are non-negative
    integers and zero coefficients are dropped.  Instances are immutable.
    """

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Iterable[tuple[tuple[int, int], Coefficient]] | Mapping[tuple[int, int], Coefficient] = (),
    ):
        if isinstance(terms, Mapping):
            terms = terms.items()
        acc: dict[tuple[int, int], RadScalar] = {}
        for (a, b), coeff in terms:
            if not (isinstance(a, int) and isinstance(b, int)) or a < 0 or b < 0:
                raise ValueError(f"exponents must be non-negative integers, got ({a!r}, {b!r})")
            c = _coerce(coeff)
            if c is NotImplemented:
                raise TypeError(f"bad coefficient {coeff!r}")
            if not c:
                continue
            new = acc.get((a, b), _ZERO) + c
            if new:
                acc[(a, b)] = new
            else:
                acc.pop((a, b), None)
        self._terms = acc

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def monomial(cls, a: int, b: int, coeff: Coefficient = 1) -> "BiPoly":
        return cls([((a, b), coeff)])

    def terms(self) -> tuple[tuple[tuple[int, int], RadScalar], ...]:
        """Terms sorted by exponent pair."""
        return tuple(sorted(self._terms.items()))

    def coeff(self, a: int, b: int) -> RadScalar:
        return self._terms.get((a, b), _ZERO)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[tuple[int, int], RadScalar]]:
        return iter(self.terms())

    def __add__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        return BiPoly(list(self._terms.items()) + list(other._terms.items()))

    def __mul__(self, scalar: Coefficient) -> "BiPoly":
        c = _coerce(scalar)
        if c is NotImplemented:
            return NotImplemented
        return BiPoly([(e, q * c) for e, q in self._terms.items()])

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def coefficient_sum(self) -> RadScalar:
        total = _ZERO
        for c in self._terms.values():
            total = total + c
        return total

    def eval_at(self, x: float, y: float) -> float:
        """Numeric value at a point, in double precision."""
        return math.fsum(
            c.to_float() * (x ** a) * (y ** b) for (a, b), c in self._terms.items()
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"

        def mono(a: int, b: int) -> str:
            pieces = []
            if a:
                pieces.append("x" if a == 1 else f"x^{a}")
            if b:
                pieces.append("y" if b == 1 else f"y^{b}")
            return "*".join(pieces)

        parts = []
        for (a, b), c in self.terms():
            cs = str(c)
            if " " in cs:
                cs = f"({cs})"
            m = mono(a, b)
            if not m:
                parts.append(cs)
            elif cs == "1":
                parts.append(m)
            elif cs == "-1":
                parts.append(f"-{m}")
            else:
                parts.append(f"{cs}*{m}")
        rendered = parts[0]
        for part in parts[1:]:
            rendered += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return rendered

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    # JSON schema: [{"i": a, "j": b, "coeff": [{"q": "p/q", "r": int}, ...]}, ...]

    def to_json_obj(self) -> list[dict]:
        return [
            {"i": a, "j": b, "coeff": c.to_json_terms()} for (a, b), c in self.terms()
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, data: Iterable[Mapping]) -> "BiPoly":
        return cls(
            [((int(t["i"]), int(t["j"])), RadScalar.from_json_terms(t["coeff"])) for t in data]
        )

    @classmethod
    def from_json(cls, text: str) -> "BiPoly":
        return cls.from_json_obj(json.loads(text))


# -- termwise operators -------------------------------------------------------


def s_x(p: BiPoly) -> BiPoly:
    """Integrate f(t, y)/t from 0 to x, termwise: divides each coefficient by
    its x-exponent.  A term with x-exponent 0 makes the integral diverge."""
    out = []
    for (a, b), c in p.terms():
        if a == 0:
            raise DivergentIntegralError(
                f"s_x diverges on term with x-exponent 0 (exponent pair ({a}, {b}))"
            )
        out.append(((a, b), c * Fraction(1, a)))
    return BiPoly(out)


def p_x(p: BiPoly) -> BiPoly:
    """Square every x-exponent; colliding exponent pairs merge by addition."""
    return BiPoly([((a * a, b), c) for (a, b), c in p.terms()])


def p_y(p: BiPoly) -> BiPoly:
    """Square every y-exponent; colliding exponent pairs merge by addition."""
    return BiPoly([((a, b * b), c) for (a, b), c in p.terms()])


def j_diag(p: BiPoly) -> BiPoly:
    """Substitute y = x: each term c*x^a*y^b becomes c*x^(a+b); equal sums merge."""
    return BiPoly([((a + b, 0), c) for (a, b), c in p.terms()])


def d_half_x(p: BiPoly) -> BiPoly:
    """Multiply each term by the square root of its x-exponent, termwise.

    Terms with x-exponent 0 are annihilated (the x-derivative factor kills
    them).  This is the termwise reading of sqrt(x * df/dx) * sqrt(f); on a
    single monomial the two readings coincide, and termwise application is
    what makes the operator pipeline linear.
    """
    out = []
    for (a, b), c in p.terms():
        if a == 0:
            continue
        out.append(((a, b), c.mul_sqrt(a)))
    return BiPoly(out)


def eval_x1(p: BiPoly) -> RadScalar:
    """Sum of all coefficients, i.e. the value at x = 1 (and y = 1 if any
    y-exponents remain)."""
    return p.coefficient_sum()


def eval_grid(
    p: BiPoly,
    x_range: tuple[float, float],
    y_range: tuple[float, float],
    steps: int,
) -> list[tuple[float, float, float]]:
    """Evaluate p on a steps-by-steps lattice over x_range x y_range.

    Returns (x, y, value) triples in row-major order: outer loop over x,
    inner loop over y, both endpoints included.
    """
    if steps < 2:
        raise InvalidRangeError(f"grid needs steps >= 2, got {steps}")
    bounds = (*x_range, *y_range)
    if not all(math.isfinite(v) for v in bounds):
        raise InvalidRangeError(f"grid range bounds must be finite, got {bounds}")

    def axis(lo: float, hi: float) -> list[float]:
        return [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]

    return [(x, y, p.eval_at(x, y)) for x in axis(*x_range) for y in axis(*y_range)]
