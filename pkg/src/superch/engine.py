"""Derivation of super-Cayley-Hamilton coefficient polynomials.

For a (p,q) supermatrix the identity
    a_0 M^(p+q) + a_1 M^(p+q-1) + ... + a_(p+q) I = 0
holds with a_j a weighted-homogeneous polynomial of degree 2pq+j in the
supertrace symbols S1..Sn (n = p+q).  The coefficients come from the
generating function F(S,t) = (1 - sum mu_k t^k)^2 G(S,t) with
G(S,t) = exp(-sum S_i t^i / i); the mu_k solve a Toeplitz linear system in
the classical Newton coefficients b_j, and scaling by (det B)^2 clears all
denominators.  Everything is exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .matrices import adjugate, det
from .poly import SPoly, SRational, TruncSeries


class DerivationError(RuntimeError):
    """The generating-function pipeline produced an inconsistent result."""


def newton_coeffs(nsym: int, count: int):
    """b_0..b_count of G(S,t) = exp(-sum_i S_i t^i / i).

    These are the classical characteristic-polynomial coefficients in terms
    of power sums: j*b_j = -sum_{i=1..j} S_i b_{j-i}.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    b = [SPoly.one(nsym)]
    syms = SPoly.symbols(nsym)
    for j in range(1, count + 1):
        acc = SPoly.zero(nsym)
        for i in range(1, min(j, nsym) + 1):
            acc = acc + syms[i - 1] * b[j - i]
        b.append(acc * Fraction(-1, j))
    return b


def _b_padded(b, k, nsym):
    """b_k with b_(k<0) = 0."""
    if k < 0:
        return SPoly.zero(nsym)
    return b[k]


def build_b_matrix(p: int, q: int):
    """The q x q Toeplitz matrix with entry(i,j) = b_(p+i-j), 1-indexed."""
    if p < 1 or q < 1:
        raise ValueError("p and q must be >= 1")
    if q > p:
        raise ValueError("use sign-flip dual")
    nsym = p + q
    b = newton_coeffs(nsym, nsym)
    return [
        [_b_padded(b, p + i - j, nsym) for j in range(q)]
        for i in range(q)
    ]


def solve_mu(p: int, q: int):
    """The mu_k correction terms as unreduced quotients over det(B)."""
    nsym = p + q
    bmat = build_b_matrix(p, q)
    b = newton_coeffs(nsym, nsym)
    det_b = det(bmat, one=SPoly.one(nsym))
    if not det_b:
        raise DerivationError("B-matrix determinant vanished identically")
    adj = adjugate(bmat, SPoly.one(nsym))
    rhs = [b[p + k] for k in range(1, q + 1)]
    nus = []
    for i in range(q):
        acc = SPoly.zero(nsym)
        for j in range(q):
            acc = acc + adj[i][j] * rhs[j]
        nus.append(acc)
    return [SRational(nu, det_b) for nu in nus]


@dataclass
class CHIdentity:
    """Coefficients of the super-Cayley-Hamilton identity for (p,q).

    coeffs[j] multiplies M^(n-j), n = p+q; coeffs[0] carries the
    S1^(2pq) monomial with coefficient +1 (generic normalization).
    """

    p: int
    q: int
    coeffs: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def nsym(self) -> int:
        return self.coeffs[0].nsym

    def flip_signs(self) -> "CHIdentity":
        flipped = [c.flip_signs() for c in self.coeffs]
        return CHIdentity(self.q, self.p, _renormalize(flipped, 2 * self.p * self.q))

    def __eq__(self, other):
        if not isinstance(other, CHIdentity):
            return NotImplemented
        return (self.p, self.q) == (other.p, other.q) and self.coeffs == other.coeffs

    def to_text(self) -> str:
        lines = [f"super-Cayley-Hamilton identity for (p,q) = ({self.p},{self.q}):"]
        for j, c in enumerate(self.coeffs):
            power = self.n - j
            mono = "I" if power == 0 else ("M" if power == 1 else f"M^{power}")
            lines.append(f"  [{mono}] {c}")
        lines.append("  (sum of all terms = 0)")
        return "\n".join(lines)

    def to_latex(self) -> str:
        parts = []
        for j, c in enumerate(self.coeffs):
            power = self.n - j
            mono = "I" if power == 0 else ("M" if power == 1 else f"M^{{{power}}}")
            parts.append(f"\\left({c.to_latex()}\\right) {mono}")
        return " + ".join(parts) + " = 0"

    def to_json(self):
        return {
            "p": self.p,
            "q": self.q,
            "coeffs": [c.to_json() for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data) -> "CHIdentity":
        p, q = int(data["p"]), int(data["q"])
        nsym = p + q
        return cls(p, q, [SPoly.from_json(nsym, c) for c in data["coeffs"]])

    def render(self, fmt: str) -> str:
        if fmt == "text":
            return self.to_text()
        if fmt == "latex":
            return self.to_latex()
        if fmt == "json":
            import json

            return json.dumps(self.to_json(), indent=2)
        raise ValueError(f"unknown format {fmt!r}")


def _renormalize(coeffs, lead_degree):
    """Rescale so the S1^lead_degree coefficient of coeffs[0] is +1."""
    nsym = coeffs[0].nsym
    target = tuple([lead_degree] + [0] * (nsym - 1))
    c = coeffs[0].coeff_of(target)
    if not c:
        raise DerivationError("leading S1 monomial vanished; cannot normalize")
    inv = 1 / c
    return [x * inv for x in coeffs]


def identity_coeffs(p: int, q: int) -> CHIdentity:
    """Derive the (p,q) identity from the generating function."""
    if p < 0 or q < 0 or p + q < 1:
        raise ValueError("need p + q >= 1 with p, q >= 0")
    if q > p:
        return identity_coeffs(q, p).flip_signs()

    n = p + q
    nsym = n
    b = newton_coeffs(nsym, nsym)
    if q == 0:
        # classical Cayley-Hamilton: F = G, no B-matrix, b_0 = 1 already
        return CHIdentity(p, 0, list(b))

    bmat = build_b_matrix(p, q)
    det_b = det(bmat, one=SPoly.one(nsym))
    if not det_b:
        raise DerivationError("B-matrix determinant vanished identically")
    adj = adjugate(bmat, SPoly.one(nsym))
    rhs = [b[p + k] for k in range(1, q + 1)]
    nus = []
    for i in range(q):
        acc = SPoly.zero(nsym)
        for j in range(q):
            acc = acc + adj[i][j] * rhs[j]
        nus.append(acc)

    # det(B) * (1 - sum mu_k t^k) = det(B) - sum nu_k t^k stays polynomial,
    # so squaring and multiplying by G gives (det B)^2 * F directly.
    zero = SPoly.zero(nsym)
    scaled = [det_b] + [-nu for nu in nus] + [zero] * (n - q)
    series = TruncSeries(n, scaled[: n + 1])
    g = TruncSeries(n, b[: n + 1])
    f_scaled = series.square() * g

    coeffs = _renormalize(f_scaled.coeffs, 2 * p * q)

    for j, c in enumerate(coeffs):
        if not c.is_weighted_homogeneous(2 * p * q + j):
            raise DerivationError("conjecture violation: coefficient not homogeneous")
    return CHIdentity(p, q, coeffs)


def flip_signs(obj):
    """Sign-flip dual: substitute Sj -> -Sj (SPoly or CHIdentity)."""
    return obj.flip_signs()


def _to_sympy(poly: SPoly, syms):
    import sympy

    acc = sympy.Integer(0)
    for exps, coeff in poly.terms.items():
        term = sympy.Rational(coeff.numerator, coeff.denominator)
        for s, e in zip(syms, exps):
            if e:
                term *= s ** e
        acc += term
    return acc


def _from_sympy(expr, nsym, syms) -> SPoly:
    import sympy

    p = sympy.Poly(expr, *syms)
    terms = {}
    for exps, coeff in p.terms():
        coeff = sympy.Rational(coeff)
        terms[tuple(int(e) for e in exps)] = Fraction(int(coeff.p), int(coeff.q))
    return SPoly(nsym, terms)


def osp_specialize(ident: CHIdentity) -> CHIdentity:
    """Specialize to OSp: kill odd-index supertraces, strip common factor.

    All odd powers of an OSp matrix have vanishing supertrace, so S1, S3,
    ... are set to zero; the surviving coefficients then share a polynomial
    factor which is divided out, and the result is rescaled so the leading
    (graded-lex) monomial of the top coefficient has coefficient +1.
    """
    import sympy

    specialized = [c.zero_odd_symbols() for c in ident.coeffs]
    nonzero = [c for c in specialized if c]
    if not nonzero:
        raise ValueError("vacuous OSp identity")

    nsym = ident.nsym
    syms = [sympy.Symbol(f"S{j}") for j in range(1, nsym + 1)]
    gcd_expr = sympy.Integer(0)
    for c in nonzero:
        gcd_expr = sympy.gcd(gcd_expr, _to_sympy(c, syms))
    common = _from_sympy(sympy.expand(gcd_expr), nsym, syms)

    reduced = [
        c.divide_exact(common) if c else c
        for c in specialized
    ]
    if not reduced[0]:
        raise DerivationError("leading OSp coefficient vanished")
    _, lead_coeff = reduced[0].lead()
    inv = 1 / lead_coeff
    return CHIdentity(ident.p, ident.q, [c * inv for c in reduced])


def osp_common_factor(ident: CHIdentity) -> SPoly:
    """The common factor removed by osp_specialize (for reporting)."""
    import sympy

    specialized = [c.zero_odd_symbols() for c in ident.coeffs]
    nonzero = [c for c in specialized if c]
    if not nonzero:
        raise ValueError("vacuous OSp identity")
    nsym = ident.nsym
    syms = [sympy.Symbol(f"S{j}") for j in range(1, nsym + 1)]
    gcd_expr = sympy.Integer(0)
    for c in nonzero:
        gcd_expr = sympy.gcd(gcd_expr, _to_sympy(c, syms))
    return _from_sympy(sympy.expand(gcd_expr), nsym, syms)


def factorize_small(ident: CHIdentity):
    """Matrix-polynomial factors (degrees p and q) for the small cases.

    Returns (left, right) coefficient lists (descending powers of M, central
    SPoly entries) whose convolution reproduces ident.coeffs, or None when
    the case is not one of (1,1), (2,1), (1,2).
    """
    pq = (ident.p, ident.q)
    if pq == (1, 1):
        s1, s2 = SPoly.symbols(2)
        half = Fraction(1, 2)
        left = [s1, (s2 + s1 ** 2) * (-half)]
        right = [s1, (s2 - s1 ** 2) * (-half)]
        return left, right
    if pq == (2, 1):
        return _factors_21(flip=False)
    if pq == (1, 2):
        left, right = _factors_21(flip=True)
        return left, right
    return None


def _factors_21(flip: bool):
    s1, s2, s3 = SPoly.symbols(3)
    p2 = [
        s1 ** 2 - s2,
        (s1 ** 3 - s3) * Fraction(-2, 3),
        (s1 ** 4 - 4 * s1 * s3 + 3 * s2 ** 2) * Fraction(1, 6),
    ]
    p1 = [
        s1 ** 2 - s2,
        (s1 ** 3 - 3 * s1 * s2 + 2 * s3) * Fraction(1, 3),
    ]
    if flip:
        p2 = [c.flip_signs() for c in p2]
        p1 = [c.flip_signs() for c in p1]
    return p2, p1
