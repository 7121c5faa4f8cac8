"""Exact univariate polynomial arithmetic over Z and F_p.

Polynomials are dense coefficient tuples, constant term first; the zero
polynomial is the empty tuple.  Integer polynomials use plain Python ints
(arbitrary precision); mod-p polynomials keep coefficients reduced to
0..p-1 and pass p explicitly, in the style of the gf_* toolkits.

Provided here: resultants (Sylvester determinant, fraction-free), the
discriminant of a core polynomial, complete factorization over F_p
(squarefree decomposition, distinct-degree splitting, Cantor-Zassenhaus
equal-degree splitting with an exhaustive fallback for tiny inputs), the
ramification test, and the different of a core.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .core import CorePolynomial

Poly = tuple[int, ...]

# ----------------------------------------------------------------------
# generic integer utilities
# ----------------------------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 64 bits of desk scale."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorint(n: int) -> dict[int, int]:
    """Prime factorization by trial division (desk scale)."""
    if n <= 0:
        raise ValueError("factorint needs a positive integer")
    out: dict[int, int] = {}
    for q in (2, 3):
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
    f = 5
    while f * f <= n:
        for q in (f, f + 2):
            while n % q == 0:
                out[q] = out.get(q, 0) + 1
                n //= q
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """Sorted list of positive divisors."""
    divs = [1]
    for q, e in factorint(n).items():
        divs = [d * q**i for d in divs for i in range(e + 1)]
    return sorted(divs)


# ----------------------------------------------------------------------
# polynomials over Z (constant term first)
# ----------------------------------------------------------------------

def trim(f: Sequence[int]) -> Poly:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def degree(f: Poly) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(f) - 1


def add(f: Poly, g: Poly) -> Poly:
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)])


def neg(f: Poly) -> Poly:
    return tuple(-c for c in f)


def sub(f: Poly, g: Poly) -> Poly:
    return add(f, neg(g))


def mul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out)


def divmod_exact(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder for monic or +-1-leading g over Z."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    lead = g[-1]
    if lead not in (1, -1):
        raise ValueError("divisor must have leading coefficient +-1 over Z")
    rem = list(f)
    q = [0] * max(len(f) - len(g) + 1, 0)
    while len(rem) >= len(g) and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(g):
            break
        shift = len(rem) - len(g)
        c = rem[-1] * lead
        q[shift] = c
        for i, b in enumerate(g):
            rem[shift + i] -= c * b
    return trim(q), trim(rem)


def evaluate(f: Poly, x) -> int:
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def poly_to_text(f: Poly, var: str = "X") -> str:
    """Render e.g. (-1, -2, 0, 1) as "X^3 - 2*X - 1"."""
    if not f:
        return "0"
    pieces = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        elif i == 1:
            body = var if mag == 1 else f"{mag}*{var}"
        else:
            body = f"{var}^{i}" if mag == 1 else f"{mag}*{var}^{i}"
        if not pieces:
            pieces.append(body if c > 0 else "-" + body)
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces)


def core_to_poly(core: CorePolynomial) -> Poly:
    """C(X) = X^k - t_1 X^(k-1) - ... - t_k as a coefficient tuple."""
    return trim([-c for c in reversed(core.t)] + [1])


def derivative(f: Poly) -> Poly:
    return trim([i * f[i] for i in range(1, len(f))])


def resultant(f: Poly, g: Poly) -> int:
    """Res(f, g) as the Sylvester determinant, computed fraction-free."""
    n, m = degree(f), degree(g)
    if n < 0 and m < 0:
        raise ValueError("resultant of two zero polynomials")
    if n < 0 or m < 0:
        return 0
    if n == 0:
        return f[0] ** m
    if m == 0:
        return g[0] ** n
    size = n + m
    rows = []
    fd = list(reversed(f))  # leading coefficient first
    gd = list(reversed(g))
    for i in range(m):
        rows.append([0] * i + fd + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + gd + [0] * (size - m - 1 - i))
    return _det_bareiss(rows)


def _det_bareiss(mat: list[list[int]]) -> int:
    n = len(mat)
    sign = 1
    prev = 1
    for col in range(n - 1):
        if mat[col][col] == 0:
            for r in range(col + 1, n):
                if mat[r][col] != 0:
                    mat[col], mat[r] = mat[r], mat[col]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                mat[r][c] = (mat[r][c] * mat[col][col] - mat[r][col] * mat[col][c]) // prev
            mat[r][col] = 0
        prev = mat[col][col]
    return sign * mat[n - 1][n - 1]


def discriminant(core: CorePolynomial) -> int:
    """Discriminant of the core polynomial: (-1)^(k(k-1)/2) Res(C, C')."""
    c = core_to_poly(core)
    k = core.k
    return (-1) ** (k * (k - 1) // 2) * resultant(c, derivative(c))


def different_element(core: CorePolynomial) -> tuple[int, ...]:
    """C'(lambda) in the basis {1, lambda, ..., lambda^(k-1)}.

    The coordinates are (-t_(k-1), -2 t_(k-2), ..., -(k-1) t_1, k).
    """
    k = core.k
    coords = [-(i + 1) * core.t[k - 2 - i] for i in range(k - 1)]
    coords.append(k)
    return tuple(coords)


# ----------------------------------------------------------------------
# polynomials over F_p
# ----------------------------------------------------------------------

def gf_reduce(f: Sequence[int], p: int) -> Poly:
    return trim([c % p for c in f])


def gf_add(f: Poly, g: Poly, p: int) -> Poly:
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p for i in range(n)])


def gf_sub(f: Poly, g: Poly, p: int) -> Poly:
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p for i in range(n)])


def gf_mul(f: Poly, g: Poly, p: int) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return trim(out)


def gf_divmod(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(g[-1], p - 2, p)
    rem = list(f)
    q = [0] * max(len(f) - len(g) + 1, 0)
    for shift in range(len(f) - len(g), -1, -1):
        c = rem[shift + len(g) - 1] * inv_lead % p
        if c:
            q[shift] = c
            for i, b in enumerate(g):
                rem[shift + i] = (rem[shift + i] - c * b) % p
    return trim(q), trim(rem)


def gf_mod(f: Poly, g: Poly, p: int) -> Poly:
    return gf_divmod(f, g, p)[1]


def gf_monic(f: Poly, p: int) -> Poly:
    if not f:
        return ()
    inv = pow(f[-1], p - 2, p)
    return tuple(c * inv % p for c in f)


def gf_gcd(f: Poly, g: Poly, p: int) -> Poly:
    while g:
        f, g = g, gf_mod(f, g, p)
    return gf_monic(f, p)


def gf_extended_gcd(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly, Poly]:
    """(d, u, v) with u*f + v*g = d = monic gcd(f, g)."""
    r0, r1 = f, g
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, gf_sub(s0, gf_mul(q, s1, p), p)
        t0, t1 = t1, gf_sub(t0, gf_mul(q, t1, p), p)
    if not r0:
        return (), s0, t0
    inv = pow(r0[-1], p - 2, p)
    scale = (inv,)
    return gf_monic(r0, p), gf_mul(s0, scale, p), gf_mul(t0, scale, p)


def gf_pow_mod(f: Poly, e: int, mod: Poly, p: int) -> Poly:
    """f^e mod (mod, p) by binary exponentiation; e >= 0."""
    result: Poly = (1,)
    base = gf_mod(f, mod, p)
    while e:
        if e & 1:
            result = gf_mod(gf_mul(result, base, p), mod, p)
        base = gf_mod(gf_mul(base, base, p), mod, p)
        e >>= 1
    return result


def gf_derivative(f: Poly, p: int) -> Poly:
    return trim([i * f[i] % p for i in range(1, len(f))])


def gf_pth_root(f: Poly, p: int) -> Poly:
    """p-th root of f(x) = g(x^p); coefficientwise identity in F_p."""
    return trim([f[i] for i in range(0, len(f), p)])


def gf_squarefree_decomposition(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """Monic squarefree parts with multiplicities, characteristic-p aware."""
    f = gf_monic(f, p)
    out: dict[int, Poly] = {}

    def accumulate(g: Poly, mult: int) -> None:
        if degree(g) > 0:
            out[mult] = gf_mul(out[mult], g, p) if mult in out else g

    def decompose(g: Poly, scale: int) -> None:
        d = gf_derivative(g, p)
        if not d:
            # g is a p-th power
            decompose(gf_pth_root(g, p), scale * p)
            return
        c = gf_gcd(g, d, p)
        w = gf_divmod(g, c, p)[0]
        i = 1
        while degree(w) > 0:
            y = gf_gcd(w, c, p)
            accumulate(gf_divmod(w, y, p)[0], i * scale)
            w = y
            c = gf_divmod(c, y, p)[0]
            i += 1
        if degree(c) > 0:
            decompose(gf_pth_root(c, p), scale * p)

    decompose(f, 1)
    return [(g, m) for m, g in sorted(out.items())]


def gf_distinct_degree(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """Split a monic squarefree f into products of irreducibles per degree."""
    out = []
    h: Poly = (0, 1)  # x
    rest = f
    d = 0
    while degree(rest) > 2 * (d + 1) - 1 and degree(rest) > 0:
        d += 1
        h = gf_pow_mod(h, p, rest, p)
        g = gf_gcd(gf_sub(h, (0, 1), p), rest, p)
        if degree(g) > 0:
            out.append((g, d))
            rest = gf_divmod(rest, g, p)[0]
            h = gf_mod(h, rest, p)
    if degree(rest) > 0:
        out.append((rest, degree(rest)))
    return out


def _gf_random_poly(max_deg: int, p: int, rng: random.Random) -> Poly:
    return trim([rng.randrange(p) for _ in range(max_deg + 1)])


def gf_equal_degree_split(f: Poly, d: int, p: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus: factor a product of degree-d irreducibles."""
    n = degree(f)
    if n == d:
        return [gf_monic(f, p)]
    while True:
        h = _gf_random_poly(n - 1, p, rng)
        if degree(h) < 1:
            continue
        g = gf_gcd(h, f, p)
        if 0 < degree(g) < n:
            pass  # lucky gcd split
        elif p == 2:
            # trace map over F_{2^d}
            acc = gf_mod(h, f, p)
            t = acc
            for _ in range(d - 1):
                t = gf_pow_mod(t, 2, f, p)
                acc = gf_add(acc, t, p)
            g = gf_gcd(acc, f, p)
            if not 0 < degree(g) < n:
                continue
        else:
            e = (p**d - 1) // 2
            t = gf_pow_mod(h, e, f, p)
            g = gf_gcd(gf_sub(t, (1,), p), f, p)
            if not 0 < degree(g) < n:
                continue
        left = gf_equal_degree_split(g, d, p, rng)
        right = gf_equal_degree_split(gf_divmod(f, g, p)[0], d, p, rng)
        return left + right


def gf_irreducible(f: Poly, p: int) -> bool:
    """Rabin irreducibility test for monic f."""
    n = degree(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    f = gf_monic(f, p)
    x: Poly = (0, 1)
    if gf_pow_mod(x, p**n, f, p) != gf_mod(x, f, p):
        return False
    for q in factorint(n):
        h = gf_pow_mod(x, p ** (n // q), f, p)
        if degree(gf_gcd(gf_sub(h, x, p), f, p)) != 0:
            return False
    return True


def monic_polys(deg: int, p: int):
    """Iterate all monic polynomials of exact degree deg over F_p, lex order."""
    def rec(i: int, prefix: list[int]):
        if i == deg:
            yield tuple(prefix) + (1,)
            return
        for c in range(p):
            yield from rec(i + 1, prefix + [c])
    yield from rec(0, [])


def _factor_exhaustive(f: Poly, p: int) -> list[Poly]:
    """Trial division by monic irreducibles in lex order; tiny inputs only."""
    out = []
    rest = gf_monic(f, p)
    d = 1
    while 2 * d <= degree(rest):
        for cand in monic_polys(d, p):
            if not gf_irreducible(cand, p):
                continue
            while True:
                q, r = gf_divmod(rest, cand, p)
                if r:
                    break
                out.append(cand)
                rest = q
            if 2 * d > degree(rest):
                break
        d += 1
    if degree(rest) > 0:
        out.append(rest)  # no divisor of degree <= deg/2 left: irreducible
    return out


@dataclass(frozen=True)
class FpFactorization:
    """Monic irreducible factors of a polynomial over F_p, with multiplicity."""

    p: int
    lead: int
    factors: tuple[tuple[Poly, int], ...]

    @property
    def s(self) -> int:
        return len(self.factors)

    def degrees(self) -> list[int]:
        return [degree(f) for f, _ in self.factors]

    def multiplicities(self) -> list[int]:
        return [e for _, e in self.factors]

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def reconstruct(self) -> Poly:
        acc: Poly = (self.lead,)
        for f, e in self.factors:
            for _ in range(e):
                acc = gf_mul(acc, f, self.p)
        return acc

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "factors": [{"coeffs": list(f), "e": e} for f, e in self.factors],
        }


_DEFAULT_SEED = 0x1CEB00DA


def factor_mod_p(f: Sequence[int], p: int, rng: random.Random | None = None) -> FpFactorization:
    """Complete factorization of f over F_p into monic irreducibles.

    Output ordering is deterministic (degree, then lex on coefficients)
    regardless of the randomized splitting inside.  For very small inputs
    (p <= 7 and degree <= 3) exhaustive trial division is used instead of
    Cantor-Zassenhaus.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    f = gf_reduce(f, p)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    lead = f[-1]
    if degree(f) == 0:
        return FpFactorization(p, lead, ())
    rng = rng if rng is not None else random.Random(_DEFAULT_SEED)
    monic = gf_monic(f, p)

    found: dict[Poly, int] = {}
    if p <= 7 and degree(monic) <= 3:
        for g in _factor_exhaustive(monic, p):
            found[g] = found.get(g, 0) + 1
    else:
        for part, mult in gf_squarefree_decomposition(monic, p):
            for prod, d in gf_distinct_degree(part, p):
                for g in gf_equal_degree_split(prod, d, p, rng):
                    found[g] = found.get(g, 0) + mult
    factors = tuple(sorted(found.items(), key=lambda kv: (degree(kv[0]), kv[0])))
    return FpFactorization(p, lead, factors)


def ramifies(core: CorePolynomial, p: int) -> bool:
    """True iff p divides the core discriminant.

    Cross-checked against squarefreeness of C mod p; for a monic core the
    two criteria coincide and disagreement would be a genuine bug.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    by_disc = discriminant(core) % p == 0
    by_sqf = not factor_mod_p(core_to_poly(core), p).is_squarefree()
    assert by_disc == by_sqf, f"discriminant and squarefree tests disagree at {core}, p={p}"
    return by_disc
