"""Isobaric polynomials: symmetric functions in the ESP basis t_1,...,t_k.

An isobaric polynomial of degree n at grading level k is an integer
combination of monomials t^alpha = t_1^a1 * ... * t_k^ak whose exponent
vectors alpha satisfy sum(j * a_j) = n, i.e. each monomial encodes a
partition of n into parts of size at most k.

The two distinguished sequences are the generalized Fibonacci polynomials
(:func:`gfp`, the image of the complete homogeneous symmetric functions)
and the generalized Lucas polynomials (:func:`glp`, the image of the power
sums).  Both are special weightings of the general :func:`wip` family, and
all of them satisfy the k-term recursion

    P_n = t_1 P_(n-1) + t_2 P_(n-2) + ... + t_k P_(n-k).

Schur polynomials enter through :func:`schur_via_jacobi_trudi`, a
determinantal construction in the complete-homogeneous basis that serves
as the independent oracle for companion-matrix entries.

All coefficients are arbitrary-precision integers; all functions are pure.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence


def enumerate_exponent_vectors(n: int, k: int) -> list[tuple[int, ...]]:
    """All alpha in N^k with sum(j * alpha_j) = n, in descending lex order.

    Equivalently: the partitions of n into parts of size at most k, each
    encoded by its multiplicity vector.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if k < 1:
        raise ValueError("k must be positive")

    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int], j: int, remaining: int) -> None:
        if j > k:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        # a_j ranges downward so the full vectors come out lex-descending
        for a in range(remaining // j, -1, -1):
            prefix.append(a)
            extend(prefix, j + 1, remaining - j * a)
            prefix.pop()

    extend([], 1, n)
    return out


def _multinomial(alpha: Iterable[int]) -> int:
    alpha = list(alpha)
    m = factorial(sum(alpha))
    for a in alpha:
        m //= factorial(a)
    return m


class IsobaricPolynomial:
    """Immutable integer polynomial graded by isobaric degree.

    ``terms`` maps exponent vectors (length k) to nonzero integer
    coefficients.  The zero polynomial has no terms; its recorded degree
    is ignored by equality.
    """

    __slots__ = ("k", "n", "terms")

    def __init__(self, k: int, n: int, terms: dict[tuple[int, ...], int]):
        clean = {}
        for alpha, c in terms.items():
            if c == 0:
                continue
            alpha = tuple(alpha)
            if len(alpha) != k:
                raise ValueError(f"exponent vector {alpha} has length != {k}")
            if weight(alpha) != n:
                raise ValueError(f"exponent vector {alpha} has weight != {n}")
            clean[alpha] = int(c)
        self.k = k
        self.n = n
        self.terms = clean

    # -- ring structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, IsobaricPolynomial):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.k == other.k and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def __neg__(self) -> "IsobaricPolynomial":
        return IsobaricPolynomial(self.k, self.n, {a: -c for a, c in self.terms.items()})

    def __add__(self, other: "IsobaricPolynomial") -> "IsobaricPolynomial":
        if self.k != other.k:
            raise ValueError("grading levels differ")
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.n != other.n:
            raise ValueError("cannot add isobaric polynomials of different degree")
        terms = dict(self.terms)
        for a, c in other.terms.items():
            terms[a] = terms.get(a, 0) + c
        return IsobaricPolynomial(self.k, self.n, terms)

    def __sub__(self, other: "IsobaricPolynomial") -> "IsobaricPolynomial":
        return self + (-other)

    def __mul__(self, other: "IsobaricPolynomial") -> "IsobaricPolynomial":
        if self.k != other.k:
            raise ValueError("grading levels differ")
        terms: dict[tuple[int, ...], int] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                ab = tuple(x + y for x, y in zip(a, b))
                terms[ab] = terms.get(ab, 0) + ca * cb
        return IsobaricPolynomial(self.k, self.n + other.n, terms)

    def scale(self, c: int) -> "IsobaricPolynomial":
        return IsobaricPolynomial(self.k, self.n, {a: c * v for a, v in self.terms.items()})

    # -- presentation --------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in descending lexicographic order of the exponent vector."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def to_text(self) -> str:
        """Canonical rendering, e.g. "t1^3 + 2*t1*t2 + t3"."""
        if self.is_zero():
            return "0"
        pieces = []
        for alpha, c in self.sorted_terms():
            factors = []
            for j, a in enumerate(alpha, start=1):
                if a == 1:
                    factors.append(f"t{j}")
                elif a > 1:
                    factors.append(f"t{j}^{a}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "terms": [
                {"alpha": list(alpha), "coeff": str(c)}
                for alpha, c in self.sorted_terms()
            ],
        }

    def __repr__(self):
        return f"IsobaricPolynomial(k={self.k}, n={self.n}, {self.to_text()})"


def weight(alpha: Sequence[int]) -> int:
    """Isobaric weight sum(j * alpha_j) of an exponent vector."""
    return sum(j * a for j, a in enumerate(alpha, start=1))


def constant(k: int, value: int) -> IsobaricPolynomial:
    """The degree-0 constant polynomial."""
    return IsobaricPolynomial(k, 0, {(0,) * k: value})


@lru_cache(maxsize=None)
def gfp(k: int, n: int) -> IsobaricPolynomial:
    """Generalized Fibonacci polynomial F_{k,n}.

    The coefficient of t^alpha is the multinomial |alpha|! / prod(alpha_j!).
    F_{k,0} = 1 and the sequence obeys the k-term recursion with seed
    window (0,...,0,1).
    """
    if k < 1:
        raise ValueError("k must be positive")
    if n < 0:
        raise ValueError("n must be non-negative")
    terms = {alpha: _multinomial(alpha) for alpha in enumerate_exponent_vectors(n, k)}
    return IsobaricPolynomial(k, n, terms)


@lru_cache(maxsize=None)
def glp(k: int, n: int) -> IsobaricPolynomial:
    """Generalized Lucas polynomial G_{k,n}.

    The coefficient of t^alpha is (n/|alpha|) * multinomial(|alpha|; alpha),
    always an integer.  G_{k,0} is taken to be the constant k (the trace of
    the k-by-k identity), which is the value that keeps the recursion and
    the trace identity tr(A^n) = G_{k,n} valid at n = 0.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return constant(k, k)
    terms = {}
    for alpha in enumerate_exponent_vectors(n, k):
        c = Fraction(n * _multinomial(alpha), sum(alpha))
        assert c.denominator == 1, f"GLP coefficient not integral at {alpha}"
        terms[alpha] = int(c)
    return IsobaricPolynomial(k, n, terms)


def wip(omega: Sequence[int], k: int, n: int) -> IsobaricPolynomial:
    """Weighted isobaric polynomial P_{omega,k,n}.

    The coefficient of t^alpha is (sum_j alpha_j*omega_j / |alpha|) times
    the multinomial coefficient.  omega = (1,...,1) recovers :func:`gfp`
    and omega = (1,2,...,k) recovers :func:`glp` for n >= 1.

    P_{omega,k,0} is taken to be the constant 1 for every omega, matching
    F_{k,0} = 1.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if len(omega) < k:
        raise ValueError(f"weight vector of length {len(omega)} is shorter than k={k}")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return constant(k, 1)
    terms = {}
    for alpha in enumerate_exponent_vectors(n, k):
        m = _multinomial(alpha)
        c = Fraction(m * sum(a * w for a, w in zip(alpha, omega)), sum(alpha))
        assert c.denominator == 1, f"WIP coefficient not integral at {alpha}"
        terms[alpha] = int(c)
    return IsobaricPolynomial(k, n, terms)


def evaluate(poly: IsobaricPolynomial, t: Sequence) -> int | Fraction:
    """Evaluate at t = (t_1,...,t_k) with exact integer/rational arithmetic."""
    if len(t) != poly.k:
        raise ValueError(f"need {poly.k} values, got {len(t)}")
    total = 0
    for alpha, c in poly.terms.items():
        v = c
        for base, a in zip(t, alpha):
            if a:
                v *= base ** a
        total += v
    return total


def formal_partial(poly: IsobaricPolynomial, j: int) -> IsobaricPolynomial:
    """Formal derivative with respect to t_j (1-based); degree drops by j."""
    if not 1 <= j <= poly.k:
        raise ValueError(f"index {j} outside 1..{poly.k}")
    terms: dict[tuple[int, ...], int] = {}
    for alpha, c in poly.terms.items():
        a = alpha[j - 1]
        if a == 0:
            continue
        down = list(alpha)
        down[j - 1] = a - 1
        key = tuple(down)
        terms[key] = terms.get(key, 0) + c * a
    return IsobaricPolynomial(poly.k, max(poly.n - j, 0), terms)


def _h(k: int, m: int) -> IsobaricPolynomial:
    # complete-homogeneous entry for the Jacobi-Trudi determinant
    if m < 0:
        return IsobaricPolynomial(k, 0, {})
    return gfp(k, m)


def _poly_det(mat: list[list[IsobaricPolynomial]]) -> IsobaricPolynomial:
    size = len(mat)
    if size == 1:
        return mat[0][0]
    k = mat[0][0].k
    acc = IsobaricPolynomial(k, 0, {})
    for col in range(size):
        entry = mat[0][col]
        if entry.is_zero():
            continue
        minor = [[row[c] for c in range(size) if c != col] for row in mat[1:]]
        term = entry * _poly_det(minor)
        acc = acc + (term if col % 2 == 0 else -term)
    return acc


@lru_cache(maxsize=None)
def jacobi_trudi(lam: tuple[int, ...], k: int) -> IsobaricPolynomial:
    """det(h_{lam_i - i + j}) for an arbitrary integer vector lam.

    For a genuine partition this is the Schur polynomial S_lam written in
    the ESP basis.  Non-partition vectors are allowed; the determinant then
    straightens to 0 or to a signed Schur polynomial, which is exactly the
    convention under which companion-matrix entries with arm <= 0 come out
    right (identity rows included).
    """
    if len(lam) == 0:
        return constant(k, 1)
    mat = [[_h(k, lam[i] - (i + 1) + (j + 1)) for j in range(len(lam))] for i in range(len(lam))]
    return _poly_det(mat)


def schur_via_jacobi_trudi(shape: Sequence[int], k: int) -> IsobaricPolynomial:
    """Isobaric Schur polynomial of a partition shape, via Jacobi-Trudi.

    ``shape`` must be weakly decreasing with strictly positive parts,
    e.g. a hook (a, 1, 1, ..., 1) or a rectangle (m, m).
    """
    shape = tuple(shape)
    if not shape:
        raise ValueError("shape must be non-empty")
    if any(p <= 0 for p in shape) or any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise ValueError(f"not a partition shape: {shape}")
    return jacobi_trudi(shape, k)


def hook(arm: int, leg: int) -> tuple[int, ...]:
    """The hook shape (arm, 1^leg); arm >= 1, leg >= 0."""
    if arm < 1 or leg < 0:
        raise ValueError("hook needs arm >= 1 and leg >= 0")
    return (arm,) + (1,) * leg
