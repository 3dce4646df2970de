"""Exact Laurent polynomials and rational functions in one indeterminate q.

Coefficients are exact: `fractions.Fraction` by default, but any commutative
field-like type with +, -, *, /, == and a falsy zero test works (the
cyclotomic numbers from :mod:`glgreen.cyclo` are used this way).

A :class:`RatQ` is always stored reduced, with the denominator monic and with
nonnegative lowest exponent, so equality is plain structural comparison.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import ValidationError

ONE = Fraction(1)
ZERO = Fraction(0)


def _is_zero(c) -> bool:
    return not c


class LaurentPoly:
    """Immutable Laurent polynomial: a map exponent -> nonzero coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                if not _is_zero(c):
                    clean[int(e)] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, *a):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(c) -> "LaurentPoly":
        return LaurentPoly({0: c})

    @staticmethod
    def q(e: int = 1, c=ONE) -> "LaurentPoly":
        return LaurentPoly({e: c})

    @staticmethod
    def from_int_coeffs(coeffs: Iterable[int]) -> "LaurentPoly":
        """Dense list [c0, c1, ...] of integer coefficients, c_e * q^e."""
        return LaurentPoly({e: Fraction(c) for e, c in enumerate(coeffs)})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        if not self.coeffs:
            raise ValidationError("degree of zero polynomial is undefined")
        return max(self.coeffs)

    def low_degree(self) -> int:
        if not self.coeffs:
            raise ValidationError("low degree of zero polynomial is undefined")
        return min(self.coeffs)

    def leading(self):
        return self.coeffs[self.degree()]

    def __getitem__(self, e: int):
        return self.coeffs.get(e, ZERO)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, ZERO) + c
            if _is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, object] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, ZERO) + c1 * c2
                if _is_zero(s):
                    out.pop(e, None)
                else:
                    out[e] = s
        return LaurentPoly(out)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValidationError("negative power of a LaurentPoly")
        result = LaurentPoly.const(ONE)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "LaurentPoly":
        if _is_zero(c):
            return LaurentPoly()
        return LaurentPoly({e: c0 * c for e, c0 in self.coeffs.items()})

    def shift(self, e: int) -> "LaurentPoly":
        """Multiply by q^e."""
        return LaurentPoly({e0 + e: c for e0, c in self.coeffs.items()})

    def subs_neg_q(self) -> "LaurentPoly":
        """Substitute -q for q."""
        return LaurentPoly(
            {e: (c if e % 2 == 0 else -c) for e, c in self.coeffs.items()}
        )

    def evaluate(self, x):
        """Exact value at q = x; x must be invertible if negative exponents occur."""
        total = None
        for e, c in self.coeffs.items():
            if e >= 0:
                term = c * x**e
            else:
                term = c / x ** (-e)
            total = term if total is None else total + term
        return ZERO if total is None else total

    def map_coeffs(self, fn) -> "LaurentPoly":
        return LaurentPoly({e: fn(c) for e, c in self.coeffs.items()})

    # -- polynomial (nonnegative exponent) division -------------------------

    def divmod_poly(self, other: "LaurentPoly"):
        """Euclidean division, both operands treated as ordinary polynomials."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return LaurentPoly(), LaurentPoly()
        if self.low_degree() < 0 or other.low_degree() < 0:
            raise ValidationError("divmod_poly requires nonnegative exponents")
        rem = dict(self.coeffs)
        quo: dict[int, object] = {}
        dlead = other.degree()
        clead = other.leading()
        while rem and max(rem) >= dlead:
            e = max(rem)
            f = rem[e] / clead
            quo[e - dlead] = f
            for e2, c2 in other.coeffs.items():
                ee = e - dlead + e2
                s = rem.get(ee, ZERO) - f * c2
                if _is_zero(s):
                    rem.pop(ee, None)
                else:
                    rem[ee] = s
        return LaurentPoly(quo), LaurentPoly(rem)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)})"


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd of two ordinary polynomials over the coefficient field."""
    while not b.is_zero():
        a, b = b, a.divmod_poly(b)[1]
    if a.is_zero():
        return a
    return a.scale(ONE / a.leading())


class RatQ:
    """Rational function in q, stored in canonical reduced form.

    Canonical form: numerator and denominator are ordinary polynomials with
    no common factor, the denominator is monic with nonzero constant term,
    and any overall power of q sits in the numerator (possibly leaving it
    with zero constant term).
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = LaurentPoly.const(ONE)
        if den.is_zero():
            raise ZeroDivisionError("RatQ with zero denominator")
        if num.is_zero():
            object.__setattr__(self, "num", LaurentPoly())
            object.__setattr__(self, "den", LaurentPoly.const(ONE))
            return
        # Clear Laurent offsets.  The net q-valuation of the fraction goes to
        # whichever side keeps both exponents nonnegative.
        offset = num.low_degree() - den.low_degree()
        num = num.shift(-num.low_degree())
        den = den.shift(-den.low_degree())
        if offset >= 0:
            num = num.shift(offset)
        else:
            den = den.shift(-offset)
        g = poly_gcd(num, den)
        if not g.is_zero() and g != LaurentPoly.const(ONE):
            num = num.divmod_poly(g)[0]
            den = den.divmod_poly(g)[0]
        lead = den.leading()
        if lead != ONE:
            num = num.scale(ONE / lead)
            den = den.scale(ONE / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatQ is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_poly(p: LaurentPoly) -> "RatQ":
        return RatQ(p)

    @staticmethod
    def const(c) -> "RatQ":
        return RatQ(LaurentPoly.const(Fraction(c) if isinstance(c, int) else c))

    @staticmethod
    def q(e: int = 1) -> "RatQ":
        return RatQ(LaurentPoly.q(e))

    @staticmethod
    def zero() -> "RatQ":
        return RatQ(LaurentPoly())

    @staticmethod
    def one() -> "RatQ":
        return RatQ(LaurentPoly.const(ONE))

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == LaurentPoly.const(ONE)

    def as_poly(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise ValidationError(f"not a polynomial: {self}")
        return self.num

    def has_integer_coeffs(self) -> bool:
        return self.is_polynomial() and all(
            isinstance(c, Fraction) and c.denominator == 1
            for c in self.num.coeffs.values()
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = RatQ.const(other)
        return isinstance(other, RatQ) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "RatQ":
        if isinstance(x, RatQ):
            return x
        if isinstance(x, LaurentPoly):
            return RatQ(x)
        if isinstance(x, (int, Fraction)):
            return RatQ.const(x)
        raise TypeError(f"cannot coerce {x!r} to RatQ")

    def __add__(self, other):
        other = self._coerce(other)
        return RatQ(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatQ(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return RatQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("RatQ division by zero")
        return RatQ(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return RatQ.one() / self ** (-k)
        return RatQ(self.num**k, self.den**k)

    def subs_neg_q(self) -> "RatQ":
        """Return f(-q) in canonical form; an involution."""
        return RatQ(self.num.subs_neg_q(), self.den.subs_neg_q())

    def evaluate(self, x) -> Fraction:
        """Exact value at q = x (Fraction or int); raises on a pole."""
        if isinstance(x, int):
            x = Fraction(x)
        d = self.den.evaluate(x)
        if _is_zero(d):
            raise ZeroDivisionError(f"pole of {self} at q={x}")
        return self.num.evaluate(x) / d

    def __str__(self) -> str:
        return format_ratq(self)

    def __repr__(self) -> str:
        return f"RatQ({format_ratq(self)})"


def arith(a: RatQ, b: RatQ, op: str) -> RatQ:
    """Field arithmetic dispatch: op in {add, sub, mul, div}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValidationError(f"unknown op {op!r}")


def substitute_neg_q(f: RatQ) -> RatQ:
    return f.subs_neg_q()


def evaluate(f: RatQ, x) -> Fraction:
    return f.evaluate(x)


# ---------------------------------------------------------------------------
# String form.  Terms are written "c*q^e" in decreasing exponent order, with
# the cosmetic shortcuts q^1 -> q, 1*q^e -> q^e, -1*q^e -> -q^e.  A rational
# function is "num/den", the denominator parenthesised (and the numerator too
# when it has more than one term).
# ---------------------------------------------------------------------------


def _format_coeff(c) -> str:
    return str(c)


def format_poly(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.coeffs, reverse=True):
        c = p.coeffs[e]
        if e == 0:
            term = _format_coeff(c)
        else:
            qpart = "q" if e == 1 else f"q^{e}"
            if c == ONE:
                term = qpart
            elif c == -ONE:
                term = f"-{qpart}"
            else:
                term = f"{_format_coeff(c)}*{qpart}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        if term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out


def format_ratq(f: RatQ) -> str:
    num = format_poly(f.num)
    if f.is_polynomial():
        return num
    den = format_poly(f.den)
    if len(f.num.coeffs) > 1:
        num = f"({num})"
    if len(f.den.coeffs) > 1:
        den = f"({den})"
    return f"{num}/{den}"


# -- parsing ----------------------------------------------------------------


def _parse_poly(text: str) -> LaurentPoly:
    s = text.replace(" ", "")
    if not s:
        raise ValidationError("empty polynomial string")
    if s == "0":
        return LaurentPoly()
    # split into signed terms at top level (no parentheses inside a poly)
    terms = []
    cur = ""
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] not in "+-*^/":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    coeffs: dict[int, Fraction] = {}
    for t in terms:
        sign = Fraction(1)
        while t and t[0] in "+-":
            if t[0] == "-":
                sign = -sign
            t = t[1:]
        if not t:
            raise ValidationError(f"malformed term in {text!r}")
        if "q" in t:
            cpart, _, qpart = t.partition("q")
            cpart = cpart.rstrip("*")
            coeff = Fraction(cpart) if cpart else Fraction(1)
            if qpart.startswith("^"):
                e = int(qpart[1:])
            elif qpart == "":
                e = 1
            else:
                raise ValidationError(f"malformed term {t!r}")
        else:
            coeff = Fraction(t)
            e = 0
        coeffs[e] = coeffs.get(e, Fraction(0)) + sign * coeff
    return LaurentPoly(coeffs)


def parse_ratq(text: str) -> RatQ:
    """Parse the string form produced by :func:`format_ratq`."""
    s = text.strip()
    if not s:
        raise ValidationError("empty RatQ string")
    depth = 0
    split_at = None
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            # a coefficient slash is always digit/digit; a num/den slash has
            # ')' before it or a full polynomial around it.  Disambiguate by
            # requiring the halves to parse as polynomials.
            left, right = s[:i], s[i + 1 :]
            l2 = left[1:-1] if left.startswith("(") and left.endswith(")") else left
            r2 = right[1:-1] if right.startswith("(") and right.endswith(")") else right
            try:
                lp, rp = _parse_poly(l2), _parse_poly(r2)
            except (ValidationError, ValueError):
                continue
            split_at = (lp, rp)
            break
    if split_at is not None:
        return RatQ(split_at[0], split_at[1])
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    return RatQ(_parse_poly(s))
