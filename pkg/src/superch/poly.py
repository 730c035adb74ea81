"""Sparse multivariate polynomials in the supertrace symbols S1..Sn.

The symbol Sj carries weight j, so the weighted degree of a monomial
S1^e1 * ... * Sn^en is sum(j * ej).  Coefficients are exact rationals.
Also provides rational pairs and order-truncated power series in a formal
variable t, which is all the generating-function machinery needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class NotDivisibleError(ValueError):
    """Exact polynomial division left a nonzero remainder."""


class NotPerfectSquareError(ValueError):
    """Polynomial square-root extraction failed."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected rational coefficient, got {type(value).__name__}")


def grlex_key(exps):
    """Graded lexicographic sort key (larger key = leading)."""
    return (sum(exps), exps)


class SPoly:
    """Polynomial over Q in symbols S1..Sn, stored as exponent-tuple -> coeff."""

    __slots__ = ("nsym", "terms")

    def __init__(self, nsym: int, terms=None):
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != nsym:
                    raise ValueError("exponent vector length mismatch")
                coeff = _as_fraction(coeff)
                if coeff:
                    clean[tuple(exps)] = coeff
        self.nsym = nsym
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nsym: int) -> "SPoly":
        return cls(nsym, {})

    @classmethod
    def const(cls, nsym: int, value) -> "SPoly":
        return cls(nsym, {(0,) * nsym: _as_fraction(value)})

    @classmethod
    def one(cls, nsym: int) -> "SPoly":
        return cls.const(nsym, 1)

    @classmethod
    def symbol(cls, nsym: int, j: int) -> "SPoly":
        if not 1 <= j <= nsym:
            raise ValueError("symbol index out of range")
        exps = [0] * nsym
        exps[j - 1] = 1
        return cls(nsym, {tuple(exps): Fraction(1)})

    @classmethod
    def symbols(cls, nsym: int):
        """All of S1..Sn, handy for building fixture expressions."""
        return [cls.symbol(nsym, j) for j in range(1, nsym + 1)]

    # -- ring operations ---------------------------------------------------

    def _check_same(self, other: "SPoly"):
        if self.nsym != other.nsym:
            raise ValueError("symbol count mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SPoly.const(self.nsym, other)
        if not isinstance(other, SPoly):
            return NotImplemented
        self._check_same(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = terms.get(exps, Fraction(0)) + coeff
            if acc:
                terms[exps] = acc
            else:
                terms.pop(exps, None)
        out = SPoly.__new__(SPoly)
        out.nsym = self.nsym
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = SPoly.__new__(SPoly)
        out.nsym = self.nsym
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SPoly.const(self.nsym, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            out = SPoly.__new__(SPoly)
            out.nsym = self.nsym
            out.terms = {e: k * c for e, k in self.terms.items()} if c else {}
            return out
        if not isinstance(other, SPoly):
            return NotImplemented
        self._check_same(other)
        acc = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                prev = acc.get(e)
                if prev is None:
                    acc[e] = c
                else:
                    s = prev + c
                    if s:
                        acc[e] = s
                    else:
                        del acc[e]
        out = SPoly.__new__(SPoly)
        out.nsym = self.nsym
        out.terms = acc
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = SPoly.one(self.nsym)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SPoly.const(self.nsym, other)
        if not isinstance(other, SPoly):
            return NotImplemented
        return self.nsym == other.nsym and self.terms == other.terms

    def __hash__(self):
        return hash((self.nsym, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- structure ---------------------------------------------------------

    def weighted_degree(self):
        """(min, max) of sum(j * ej) over the terms; errors on the zero poly."""
        if not self.terms:
            raise ValueError("weighted degree of the zero polynomial is undefined")
        degs = [sum((j + 1) * e for j, e in enumerate(exps)) for exps in self.terms]
        return min(degs), max(degs)

    def is_weighted_homogeneous(self, degree=None) -> bool:
        lo, hi = self.weighted_degree()
        if lo != hi:
            return False
        return degree is None or lo == degree

    def lead(self):
        """Leading (exponents, coeff) under graded lex."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=grlex_key)
        return exps, self.terms[exps]

    def coeff_of(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def flip_signs(self) -> "SPoly":
        """Substitute Sj -> -Sj for every j."""
        out = SPoly.__new__(SPoly)
        out.nsym = self.nsym
        out.terms = {
            e: (-c if sum(e) & 1 else c) for e, c in self.terms.items()
        }
        return out

    def zero_odd_symbols(self) -> "SPoly":
        """Set S1, S3, S5, ... to zero (OSp specialization)."""
        out = SPoly.__new__(SPoly)
        out.nsym = self.nsym
        out.terms = {
            e: c
            for e, c in self.terms.items()
            if not any(e[j] for j in range(0, self.nsym, 2))
        }
        return out

    def divide_exact(self, divisor: "SPoly") -> "SPoly":
        """Return q with self = q * divisor, else raise NotDivisibleError."""
        self._check_same(divisor)
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        lexp, lcoeff = divisor.lead()
        rem = self
        quot = {}
        while rem:
            rexp, rcoeff = rem.lead()
            qexp = tuple(a - b for a, b in zip(rexp, lexp))
            if any(x < 0 for x in qexp):
                raise NotDivisibleError("not divisible")
            qc = rcoeff / lcoeff
            quot[qexp] = quot.get(qexp, Fraction(0)) + qc
            mono = SPoly(self.nsym, {qexp: qc})
            rem = rem - mono * divisor
        return SPoly(self.nsym, quot)

    def sqrt_exact(self) -> "SPoly":
        """Exact polynomial square root, or NotPerfectSquareError."""
        if not self:
            return self
        lexp, lcoeff = self.lead()
        if any(e & 1 for e in lexp) or lcoeff < 0:
            raise NotPerfectSquareError("not a perfect square")
        num, den = lcoeff.numerator, lcoeff.denominator
        rn, rd = _isqrt_exact(num), _isqrt_exact(den)
        if rn is None or rd is None:
            raise NotPerfectSquareError("not a perfect square")
        half = tuple(e // 2 for e in lexp)
        root = SPoly(self.nsym, {half: Fraction(rn, rd)})
        lead2 = root * 2
        budget = len(self.terms) * (len(self.terms) + 2)
        while True:
            rem = self - root * root
            if not rem:
                return root
            rexp, rcoeff = rem.lead()
            lexp2, lcoeff2 = lead2.lead()
            qexp = tuple(a - b for a, b in zip(rexp, lexp2))
            if any(x < 0 for x in qexp):
                raise NotPerfectSquareError("not a perfect square")
            root = root + SPoly(self.nsym, {qexp: rcoeff / lcoeff2})
            budget -= 1
            if budget < 0:
                raise NotPerfectSquareError("not a perfect square")

    def monomial_content(self):
        """Componentwise minimum exponent vector over all terms."""
        if not self.terms:
            raise ValueError("zero polynomial has no content")
        it = iter(self.terms)
        acc = list(next(it))
        for exps in it:
            for j, e in enumerate(exps):
                if e < acc[j]:
                    acc[j] = e
        return tuple(acc)

    def evaluate(self, values, one):
        """Evaluate with values[j-1] substituted for Sj.

        ``values`` are elements of any commutative ring accepting * between
        themselves and * by Fraction; ``one`` is that ring's unit.
        """
        if len(values) != self.nsym:
            raise ValueError("wrong number of values")
        powers = [[one] for _ in range(self.nsym)]
        total = None
        for exps, coeff in self.terms.items():
            acc = None
            for j, e in enumerate(exps):
                if not e:
                    continue
                cache = powers[j]
                while len(cache) <= e:
                    cache.append(cache[-1] * values[j])
                acc = cache[e] if acc is None else acc * cache[e]
            term = (one if acc is None else acc) * coeff
            total = term if total is None else total + term
        return one * 0 if total is None else total

    # -- rendering / serialization ------------------------------------------

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self._sorted_terms():
            factors = []
            for j, e in enumerate(exps):
                if e == 1:
                    factors.append(f"S{j + 1}")
                elif e > 1:
                    factors.append(f"S{j + 1}^{e}")
            mono = "*".join(factors)
            if not mono:
                text = str(coeff)
            elif coeff == 1:
                text = mono
            elif coeff == -1:
                text = f"-{mono}"
            else:
                text = f"{coeff}*{mono}"
            if parts and not text.startswith("-"):
                parts.append("+ " + text)
            elif parts:
                parts.append("- " + text[1:])
            else:
                parts.append(text)
        return " ".join(parts)

    def __repr__(self):
        return f"SPoly({self.nsym}, {self!s})"

    def to_latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self._sorted_terms():
            factors = []
            for j, e in enumerate(exps):
                if e == 1:
                    factors.append(f"\\str_{{{j + 1}}}")
                elif e > 1:
                    factors.append(f"{{\\str_{{{j + 1}}}}}^{{{e}}}")
            mono = "\\, ".join(factors)
            if coeff.denominator == 1:
                ctext = str(abs(coeff.numerator))
            else:
                ctext = f"\\frac{{{abs(coeff.numerator)}}}{{{coeff.denominator}}}"
            if mono and ctext == "1":
                body = mono
            elif mono:
                body = f"{ctext}\\, {mono}"
            else:
                body = ctext
            sign = "-" if coeff < 0 else ("+" if parts else "")
            parts.append(sign + body)
        return " ".join(parts)

    def to_json(self):
        return [
            {"exponents": list(exps), "coeff": str(coeff)}
            for exps, coeff in self._sorted_terms()
        ]

    @classmethod
    def from_json(cls, nsym: int, data) -> "SPoly":
        return cls(nsym, {tuple(t["exponents"]): Fraction(t["coeff"]) for t in data})


def _isqrt_exact(n: int):
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None


@dataclass(frozen=True)
class SRational:
    """Unreduced quotient of two SPoly values (denominator nonzero)."""

    numerator: SPoly
    denominator: SPoly

    def __post_init__(self):
        if not self.denominator:
            raise ZeroDivisionError("zero denominator")

    def __eq__(self, other):
        if not isinstance(other, SRational):
            return NotImplemented
        # cross-multiplied equality: well defined over an integral domain
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __str__(self):
        return f"({self.numerator}) / ({self.denominator})"


class TruncSeries:
    """Power series in t truncated after t^order; coefficients are SPoly."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) != order + 1:
            raise ValueError("need exactly order+1 coefficients")
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def from_polys(cls, order: int, polys, nsym: int) -> "TruncSeries":
        polys = list(polys)[: order + 1]
        polys += [SPoly.zero(nsym)] * (order + 1 - len(polys))
        return cls(order, polys)

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        if self.order != other.order:
            raise ValueError("order mismatch")
        nsym = self.coeffs[0].nsym
        out = [SPoly.zero(nsym) for _ in range(self.order + 1)]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(self.order, out)

    def square(self) -> "TruncSeries":
        return self * self

    def scale(self, value) -> "TruncSeries":
        return TruncSeries(self.order, [c * value for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __str__(self):
        return " + ".join(f"({c})*t^{k}" for k, c in enumerate(self.coeffs))
