"""Numerical k-order linear recursions and their periods.

The canonical sequence attached to a core [t_1,...,t_k] is the one with
seed window (f_(1-k),...,f_0) = (0,...,0,1), i.e. the generalized
Fibonacci values; every statement about "the period" below refers to that
seed.  Periodicity over the integers is decided exactly by cyclotomic
trial division; periods modulo a prime are computed by two independent
routes (state-vector cycling and the multiplicative order of the
companion matrix via the factorization of C mod p), which agree whenever
both are defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm

from . import fp_algebra as fp
from .core import CorePolynomial


@dataclass(frozen=True)
class PeriodVerdict:
    """Outcome of a periodicity test.

    kind is one of "pure" (period with no preperiod), "eventually-periodic"
    (cycle entered after ``preperiod`` steps) or "not-periodic".
    """

    kind: str
    period: int | None = None
    preperiod: int = 0
    witness: str = ""

    def __post_init__(self):
        if self.kind not in ("pure", "eventually-periodic", "not-periodic"):
            raise ValueError(f"bad verdict kind {self.kind!r}")
        if self.kind == "pure" and (self.period is None or self.preperiod != 0):
            raise ValueError("pure verdicts carry a period and no preperiod")

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "period": self.period,
            "preperiod": self.preperiod,
            "witness": self.witness,
        }


# ----------------------------------------------------------------------
# sequence generation
# ----------------------------------------------------------------------

def _seed(k: int) -> tuple[int, ...]:
    return (0,) * (k - 1) + (1,)


def generate(core: CorePolynomial, lo: int, hi: int, modulus: int | None = None) -> list[int]:
    """Terms f_lo..f_hi of the recursion with the canonical seed.

    f_n = evaluate(gfp(k, n), t) for n >= 0; indices below 1-k need an
    invertible t_k (t_k = +-1 over Z, p not dividing t_k mod p).
    """
    if lo > hi:
        raise ValueError("lo must not exceed hi")
    if modulus is not None and not fp.is_prime(modulus):
        raise ValueError(f"{modulus} is not prime")
    k, t = core.k, core.t
    reduce = (lambda x: x % modulus) if modulus else (lambda x: x)

    window = list(_seed(k))  # f_(n-k+1) .. f_n at n = 0
    if modulus:
        window = [x % modulus for x in window]
    values = {n: window[n + k - 1] for n in range(1 - k, 1)}

    n = 0
    while n < hi:
        nxt = reduce(sum(tj * fj for tj, fj in zip(t, reversed(window))))
        window.pop(0)
        window.append(nxt)
        n += 1
        values[n] = nxt

    if lo < 1 - k:
        tk = t[-1]
        if modulus is None:
            if tk not in (1, -1):
                raise ValueError(f"backward generation over Z needs t_k = +-1, got {tk}")
            inv_tk = tk  # dividing by +-1 is multiplying by +-1
        else:
            if tk % modulus == 0:
                raise ValueError(f"backward generation mod {modulus} needs p not dividing t_k")
            inv_tk = pow(tk, -1, modulus)
        window = list(_seed(k))
        if modulus:
            window = [x % modulus for x in window]
        n = 0  # window is f_(n-k+1)..f_n
        while n - k + 1 > lo:
            # f_(n-k) = (f_n - sum_{j<k} t_j f_(n-j)) / t_k
            prev = window[-1] - sum(t[j - 1] * window[k - 1 - j] for j in range(1, k))
            prev = reduce(prev * inv_tk)
            window.pop()
            window.insert(0, prev)
            n -= 1
            values[n - k + 1] = prev

    return [values[n] for n in range(lo, hi + 1)]


# ----------------------------------------------------------------------
# periodicity over Z: cyclotomic characterization
# ----------------------------------------------------------------------

def euler_phi(m: int) -> int:
    phi = 1
    for q, e in fp.factorint(m).items():
        phi *= (q - 1) * q ** (e - 1)
    return phi


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> fp.Poly:
    """The m-th cyclotomic polynomial as an integer coefficient tuple."""
    if m < 1:
        raise ValueError("m must be positive")
    f: fp.Poly = tuple([-1] + [0] * (m - 1) + [1])  # X^m - 1
    for d in range(1, m):
        if m % d == 0:
            f, r = fp.divmod_exact(f, cyclotomic_polynomial(d))
            assert not r
    return f


def cyclotomic_core(m: int) -> CorePolynomial:
    """The core whose polynomial is the m-th cyclotomic polynomial."""
    phi = cyclotomic_polynomial(m)
    k = fp.degree(phi)
    return CorePolynomial(tuple(-phi[k - j] for j in range(1, k + 1)))


def is_periodic_over_Z(core: CorePolynomial) -> PeriodVerdict:
    """Pure verdict iff C is a squarefree product of cyclotomic polynomials.

    Candidate orders m satisfy phi(m) <= k (a finite list since
    phi(m) >= sqrt(m/2)); the period is the lcm of the orders found.
    """
    k = core.k
    rest = fp.core_to_poly(core)
    orders = []
    for m in range(1, 2 * k * k + 2):
        if euler_phi(m) > k:
            continue
        q, r = fp.divmod_exact(rest, cyclotomic_polynomial(m))
        if not r:
            orders.append(m)
            rest = q
    if rest == (1,):
        c = lcm(*orders) if orders else 1
        return PeriodVerdict(
            "pure", c, witness=f"C is the squarefree product of Phi_m for m in {orders}"
        )
    return PeriodVerdict(
        "not-periodic",
        witness=f"non-unit factor {fp.poly_to_text(rest)} is no product of distinct cyclotomics",
    )


# ----------------------------------------------------------------------
# periods modulo p
# ----------------------------------------------------------------------

def period_mod_p_bruteforce(core: CorePolynomial, p: int) -> PeriodVerdict:
    """Cycle the state window mod p until the seed returns.

    For p not dividing t_k the state map is invertible, the verdict is
    pure, and at the return index the window is exactly (0,...,0,1).
    Otherwise generic cycle detection reports preperiod and period.
    """
    if not fp.is_prime(p):
        raise ValueError(f"{p} is not prime")
    k, t = core.k, core.t
    seed = tuple(x % p for x in _seed(k))

    def step(state: tuple) -> tuple:
        nxt = sum(tj * fj for tj, fj in zip(t, reversed(state))) % p
        return state[1:] + (nxt,)

    if core.tk % p != 0:
        state = step(seed)
        c = 1
        bound = p**k
        while state != seed:
            state = step(state)
            c += 1
            if c > bound:
                raise AssertionError("state cycle longer than p^k is impossible")
        return PeriodVerdict("pure", c, witness=f"seed window returned after {c} steps")

    seen = {seed: 0}
    state = seed
    i = 0
    while True:
        state = step(state)
        i += 1
        if state in seen:
            rho = seen[state]
            c = i - rho
            if rho == 0:
                return PeriodVerdict("pure", c, witness="seed lies on its cycle")
            return PeriodVerdict(
                "eventually-periodic", c, preperiod=rho,
                witness=f"cycle of length {c} entered after {rho} steps",
            )
        seen[state] = i


def _order_in_quotient(x_order_bound: int, f: fp.Poly, p: int) -> int:
    """Multiplicative order of x modulo irreducible f, dividing the bound."""
    x: fp.Poly = (0, 1)
    o = x_order_bound
    for q in fp.factorint(x_order_bound):
        while o % q == 0 and fp.gf_pow_mod(x, o // q, f, p) == (1,):
            o //= q
    return o


def factor_period(f: fp.Poly, p: int) -> int:
    """Order of x in F_p[x]/(f) for f irreducible with f(0) != 0."""
    r = fp.degree(f)
    return _order_in_quotient(p**r - 1, f, p)


def _factor_power_period(f: fp.Poly, e: int, p: int) -> int:
    """Order of x in F_p[x]/(f^e): factor_period(f) times a power of p."""
    o = factor_period(f, p)
    if e == 1:
        return o
    mod = (1,)
    for _ in range(e):
        mod = fp.gf_mul(mod, f, p)
    x: fp.Poly = (0, 1)
    while fp.gf_pow_mod(x, o, mod, p) != (1,):
        o *= p
    return o


def period_mod_p_matrix_order(core: CorePolynomial, p: int) -> int:
    """Multiplicative order of the companion matrix over F_p.

    Computed from the factorization of C mod p: the order is the lcm of
    the orders of x in F_p[x]/(f_i^(e_i)).  Must (and in the test suite
    does) equal the brute-force period.
    """
    if not fp.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if core.tk % p == 0:
        raise ValueError(f"t_k = {core.tk} vanishes mod {p}: matrix is singular")
    fact = fp.factor_mod_p(fp.core_to_poly(core), p)
    return lcm(*(_factor_power_period(f, e, p) for f, e in fact.factors))


@dataclass(frozen=True)
class ScanRow:
    """One prime's worth of period/ramification evidence."""

    p: int
    c_p: int | None
    preperiod: int
    p_divides_c: bool | None
    ramified: bool
    degenerate: bool

    @property
    def agree(self) -> bool | None:
        """Does p | c_p match ramification?  None for degenerate rows."""
        if self.degenerate:
            return None
        return self.p_divides_c == self.ramified

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "c_p": self.c_p,
            "preperiod": self.preperiod,
            "p_divides_c": self.p_divides_c,
            "ramified": self.ramified,
            "degenerate": self.degenerate,
            "agree": self.agree,
        }


def period_scan(core: CorePolynomial, primes: list[int], cross_check_budget: int = 10**6) -> list[ScanRow]:
    """Per-prime period table with both period algorithms cross-checked.

    Primes dividing t_k yield degenerate rows (cycle detection only); for
    the rest the matrix order is computed and, within the budget, checked
    against the brute-force count.
    """
    rows = []
    for p in sorted(set(primes)):
        if not fp.is_prime(p):
            raise ValueError(f"{p} is not prime")
        ramified = fp.ramifies(core, p)
        if core.tk % p == 0:
            verdict = period_mod_p_bruteforce(core, p)
            rows.append(ScanRow(p, verdict.period, verdict.preperiod, None, ramified, True))
            continue
        c = period_mod_p_matrix_order(core, p)
        if p**core.k <= cross_check_budget:
            brute = period_mod_p_bruteforce(core, p)
            if brute.period != c:
                raise AssertionError(
                    f"period algorithms disagree at {core} mod {p}: {brute.period} vs {c}"
                )
        if not 1 <= c <= p**core.k - 1:
            raise AssertionError(f"period {c} outside 1..p^k-1 at {core} mod {p}")
        rows.append(ScanRow(p, c, 0, c % p == 0, ramified, False))
    return rows
