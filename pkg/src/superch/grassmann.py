"""Exact arithmetic in a finitely generated Grassmann (exterior) algebra.

Elements live in the algebra generated by ``n_gen`` anticommuting generators
e1..eN over arbitrary-precision rationals.  Blades are stored internally as
bitmasks (bit i-1 set <-> generator ei present); the public/serialized form
is the strictly increasing index tuple.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class ParityError(ValueError):
    """An operation required homogeneous (usually even) parity."""


class NotInvertibleError(ValueError):
    """Inversion was attempted on an element with zero body."""


def mask_from_indices(indices) -> int:
    mask = 0
    prev = 0
    for i in indices:
        if i <= prev:
            raise ValueError("blade indices must be strictly increasing and >= 1")
        mask |= 1 << (i - 1)
        prev = i
    return mask


def indices_from_mask(mask: int) -> tuple:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@lru_cache(maxsize=None)
def _merge_sign(m1: int, m2: int) -> int:
    """Sign picked up interleaving two disjoint blades (m1 on the left)."""
    swaps = 0
    m = m2
    while m:
        low = m & -m
        # generators of m1 strictly above this generator of m2 must hop over it
        swaps += (m1 >> low.bit_length()).bit_count()
        m ^= low
    return -1 if swaps & 1 else 1


def blade_mul(b1, b2):
    """Multiply two blades given as increasing index tuples.

    Returns ``(sign, blade)``; sign is 0 when the blades share a generator
    (nilpotency), otherwise +-1 with the merged, sorted blade.
    """
    m1 = mask_from_indices(b1)
    m2 = mask_from_indices(b2)
    if m1 & m2:
        return 0, ()
    return _merge_sign(m1, m2), indices_from_mask(m1 | m2)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected rational coefficient, got {type(value).__name__}")


class Multivector:
    """Sparse Grassmann-algebra element: map blade-mask -> rational coefficient."""

    __slots__ = ("n_gen", "terms")

    def __init__(self, n_gen: int, terms=None):
        if n_gen < 0:
            raise ValueError("n_gen must be >= 0")
        clean = {}
        if terms:
            limit = 1 << n_gen
            for mask, coeff in terms.items():
                if not 0 <= mask < limit:
                    raise ValueError("blade uses a generator beyond n_gen")
                coeff = _as_fraction(coeff)
                if coeff:
                    clean[mask] = coeff
        self.n_gen = n_gen
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def scalar(cls, n_gen: int, value) -> "Multivector":
        return cls(n_gen, {0: _as_fraction(value)})

    @classmethod
    def zero(cls, n_gen: int) -> "Multivector":
        return cls(n_gen, {})

    @classmethod
    def one(cls, n_gen: int) -> "Multivector":
        return cls.scalar(n_gen, 1)

    @classmethod
    def generator(cls, n_gen: int, i: int) -> "Multivector":
        if not 1 <= i <= n_gen:
            raise ValueError("generator index out of range")
        return cls(n_gen, {1 << (i - 1): Fraction(1)})

    @classmethod
    def from_blades(cls, n_gen: int, blades) -> "Multivector":
        """Build from an iterable of (index-tuple, coefficient) pairs."""
        terms = {}
        for indices, coeff in blades:
            mask = mask_from_indices(indices)
            terms[mask] = terms.get(mask, Fraction(0)) + _as_fraction(coeff)
        return cls(n_gen, terms)

    # -- ring operations ---------------------------------------------------

    def _check_same(self, other: "Multivector"):
        if self.n_gen != other.n_gen:
            raise ValueError("generator count mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Multivector.scalar(self.n_gen, other)
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_same(other)
        terms = dict(self.terms)
        for mask, coeff in other.terms.items():
            acc = terms.get(mask, Fraction(0)) + coeff
            if acc:
                terms[mask] = acc
            else:
                terms.pop(mask, None)
        out = Multivector.__new__(Multivector)
        out.n_gen = self.n_gen
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Multivector.__new__(Multivector)
        out.n_gen = self.n_gen
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other if isinstance(other, Multivector) else -_as_fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return Multivector.zero(self.n_gen)
            out = Multivector.__new__(Multivector)
            out.n_gen = self.n_gen
            out.terms = {m: k * c for m, k in self.terms.items()}
            return out
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_same(other)
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                if m1 & m2:
                    continue
                m = m1 | m2
                c = c1 * c2
                if _merge_sign(m1, m2) < 0:
                    c = -c
                prev = acc.get(m)
                if prev is None:
                    acc[m] = c
                else:
                    s = prev + c
                    if s:
                        acc[m] = s
                    else:
                        del acc[m]
        out = Multivector.__new__(Multivector)
        out.n_gen = self.n_gen
        out.terms = acc
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other  # scalars are central
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers: use even_inverse")
        out = Multivector.one(self.n_gen)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Multivector.scalar(self.n_gen, other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.n_gen == other.n_gen and self.terms == other.terms

    def __hash__(self):
        return hash((self.n_gen, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- structure ---------------------------------------------------------

    def body(self) -> Fraction:
        return self.terms.get(0, Fraction(0))

    def soul(self) -> "Multivector":
        out = Multivector.__new__(Multivector)
        out.n_gen = self.n_gen
        out.terms = {m: c for m, c in self.terms.items() if m}
        return out

    def grades(self):
        return {m.bit_count() for m in self.terms}

    def parity(self):
        """0 (even), 1 (odd), or None if mixed.  The zero element counts even."""
        pars = {g & 1 for g in self.grades()}
        if not pars:
            return 0
        if len(pars) == 1:
            return pars.pop()
        return None

    def is_even(self) -> bool:
        return all(m.bit_count() % 2 == 0 for m in self.terms)

    def is_odd(self) -> bool:
        return all(m.bit_count() % 2 == 1 for m in self.terms)

    def even_inverse(self) -> "Multivector":
        """Exact inverse of an even element with nonzero body."""
        if not self.is_even():
            raise ParityError("parity error: inverse needs an even element")
        b = self.body()
        if not b:
            raise NotInvertibleError("not invertible: zero body")
        inv_b = 1 / b
        s = self.soul()
        result = Multivector.scalar(self.n_gen, inv_b)
        power = Multivector.one(self.n_gen)
        sign = 1
        scale = inv_b
        while True:
            power = power * s
            if not power:
                break
            sign = -sign
            scale = scale * inv_b
            result = result + power * (scale if sign > 0 else -scale)
        return result

    # -- serialization / rendering -----------------------------------------

    def to_json(self):
        items = sorted(self.terms.items(), key=lambda kv: (kv[0].bit_count(), kv[0]))
        return {
            "N": self.n_gen,
            "terms": [
                {"blade": list(indices_from_mask(m)), "coeff": str(c)}
                for m, c in items
            ],
        }

    @classmethod
    def from_json(cls, data) -> "Multivector":
        n_gen = int(data["N"])
        blades = [
            (tuple(t["blade"]), Fraction(t["coeff"])) for t in data["terms"]
        ]
        return cls.from_blades(n_gen, blades)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mask, coeff in sorted(self.terms.items(), key=lambda kv: (kv[0].bit_count(), kv[0])):
            blade = "*".join(f"e{i}" for i in indices_from_mask(mask))
            if mask == 0:
                text = str(coeff)
            elif coeff == 1:
                text = blade
            elif coeff == -1:
                text = f"-{blade}"
            else:
                text = f"{coeff}*{blade}"
            if parts and not text.startswith("-"):
                parts.append("+ " + text)
            elif parts:
                parts.append("- " + text[1:])
            else:
                parts.append(text)
        return " ".join(parts)

    def __repr__(self):
        return f"Multivector({self.n_gen}, {self!s})"


def mv_add(a: Multivector, b: Multivector) -> Multivector:
    return a + b


def mv_mul(a: Multivector, b: Multivector) -> Multivector:
    return a * b


def body(a: Multivector) -> Fraction:
    return a.body()


def soul(a: Multivector) -> Multivector:
    return a.soul()


def even_inverse(a: Multivector) -> Multivector:
    return a.even_inverse()
