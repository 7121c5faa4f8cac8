"""Structure of the finite ring R_p = F_p[x]/(C(x)).

Elements are k-vectors of coordinates in the basis {1, lambda, ...,
lambda^(k-1)}; multiplication is polynomial multiplication mod C.  The
standard matrix of an element m has rows m, mA, ..., mA^(k-1) (the
multiplication-by-m matrix), which supplies trace, norm and rank.

The factorization of C mod p drives everything: maximal ideals correspond
to irreducible factors, the radical order is p^(k - sum r_i), the unit
group order is |J| * prod(p^(r_i) - 1), and the class of p (inert, split,
ramified) is read off the multiplicities.  The orbit structure under the
companion matrix partitions the ring; unit orbits are the cosets of the
period subgroup H_p = <A_p> whose order is the recursion period c_p.

Verification helpers at the bottom check the period laws, the unit-count
law, the ramification criterion (p | c_p iff p ramifies) and the orbit
trace-sum identities by direct enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import lcm, prod

from . import fp_algebra as fp
from . import isobaric, recurrence
from .companion import GF, Matrix
from .core import CorePolynomial

DEFAULT_BUDGET = 10**6


class BudgetExceededError(ValueError):
    """Raised when an enumeration would touch more than the budget allows."""


def _check_budget(core: CorePolynomial, p: int, budget: int) -> None:
    if p**core.k > budget:
        raise BudgetExceededError(
            f"|R_p| = {p}^{core.k} exceeds the enumeration budget {budget}"
        )


@lru_cache(maxsize=None)
def _modulus_poly(core: CorePolynomial, p: int) -> fp.Poly:
    return fp.gf_reduce(fp.core_to_poly(core), p)


@lru_cache(maxsize=None)
def _glp_values_mod(core: CorePolynomial, p: int) -> tuple[int, ...]:
    # G_{k,0..k-1} at t, reduced mod p; G_{k,0} = k
    return tuple(
        int(isobaric.evaluate(isobaric.glp(core.k, j), core.t)) % p for j in range(core.k)
    )


@dataclass(frozen=True)
class RingElement:
    """An element of F_p[x]/(C) in lambda-basis coordinates."""

    core: CorePolynomial
    p: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.core.k:
            raise ValueError(f"need {self.core.k} coordinates")
        object.__setattr__(self, "coords", tuple(c % self.p for c in self.coords))

    @classmethod
    def from_poly(cls, core: CorePolynomial, p: int, poly: fp.Poly) -> "RingElement":
        poly = fp.gf_mod(fp.gf_reduce(poly, p), _modulus_poly(core, p), p)
        coords = tuple(poly[i] if i < len(poly) else 0 for i in range(core.k))
        return cls(core, p, coords)

    def to_poly(self) -> fp.Poly:
        return fp.trim(self.coords)

    def _like(self, coords) -> "RingElement":
        return RingElement(self.core, self.p, tuple(coords))

    def __add__(self, other: "RingElement") -> "RingElement":
        return self._like(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self._like(a - b for a, b in zip(self.coords, other.coords))

    def __mul__(self, other: "RingElement") -> "RingElement":
        prod_poly = fp.gf_mul(self.to_poly(), other.to_poly(), self.p)
        return RingElement.from_poly(self.core, self.p, prod_poly)

    def __pow__(self, e: int) -> "RingElement":
        result = one(self.core, self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def times_lambda(self) -> "RingElement":
        """Multiply by the root lambda (one companion-matrix step)."""
        return self._like(_orbit_step(self.core, self.p, self.coords))


def zero(core: CorePolynomial, p: int) -> RingElement:
    return RingElement(core, p, (0,) * core.k)


def one(core: CorePolynomial, p: int) -> RingElement:
    return RingElement(core, p, (1,) + (0,) * (core.k - 1))


def _orbit_step(core: CorePolynomial, p: int, v: tuple) -> tuple:
    # v |-> v * A_p, the LFSR step mod p
    t = core.t
    k = core.k
    last = v[k - 1]
    out = (last * t[k - 1],) + tuple(v[j - 1] + last * t[k - 1 - j] for j in range(1, k))
    return tuple(x % p for x in out)


def standard_matrix(m: RingElement) -> Matrix:
    """Rows m, mA, ..., mA^(k-1); a faithful ring homomorphism."""
    rows = []
    v = m.coords
    for _ in range(m.core.k):
        rows.append(v)
        v = _orbit_step(m.core, m.p, v)
    return Matrix(GF(m.p), rows)


def trace(m: RingElement) -> int:
    """Trace of the standard matrix; two implementations, compared.

    Route (a) sums the diagonal of the standard matrix, route (b) uses
    tr(m) = sum_j m_j G_{k,j}(t) with G_{k,0} = k.
    """
    by_matrix = standard_matrix(m).trace()
    g = _glp_values_mod(m.core, m.p)
    by_formula = sum(c * gj for c, gj in zip(m.coords, g)) % m.p
    assert by_matrix == by_formula, f"trace implementations disagree on {m}"
    return by_matrix


def _trace_fast(core: CorePolynomial, p: int, coords: tuple) -> int:
    g = _glp_values_mod(core, p)
    return sum(c * gj for c, gj in zip(coords, g)) % p


def norm(m: RingElement) -> int:
    """Determinant of the standard matrix; nonzero exactly for units."""
    return standard_matrix(m).det()


def rank(m: RingElement) -> int:
    """Rank of the standard matrix over F_p; k for units, 0 only for zero."""
    return standard_matrix(m).rank()


def is_unit(m: RingElement) -> bool:
    return norm(m) != 0


# ----------------------------------------------------------------------
# decomposition
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class FactorSummary:
    """One irreducible factor f_i^(e_i) of C mod p and its local data."""

    poly: fp.Poly
    r: int
    e: int
    factor_period: int | None  # order of x in F_p[x]/(f_i); None if x | f_i


@dataclass(frozen=True)
class SemilocalStructure:
    """Complete analysis record of R_p."""

    core: CorePolynomial
    p: int
    factors: tuple[FactorSummary, ...]
    idempotents: tuple[RingElement, ...]
    idempotent_ranks: tuple[int, ...]
    radical_order: int
    unit_group_order: int
    period: int | None  # c_p; None when p | t_k (degenerate)
    lcm_factor_periods: int | None
    m_exponent: int
    ramified: bool
    classification: str  # "inert" | "split" | "ramified"
    degenerate: bool

    @property
    def s(self) -> int:
        return len(self.factors)

    @property
    def ring_order(self) -> int:
        return self.p**self.core.k

    @property
    def unit_index(self) -> int | None:
        """[G_p : H_p], defined when the period subgroup exists."""
        if self.period is None:
            return None
        return self.unit_group_order // self.period

    @property
    def thm_6_7_consistent(self) -> bool | None:
        """Does (p | c_p) coincide with ramification?"""
        if self.period is None:
            return None
        return (self.period % self.p == 0) == self.ramified

    @property
    def thm_6_8_2_holds(self) -> bool | None:
        """Reported, not asserted: c_p = lcm(factor periods) * |J|."""
        if self.period is None or self.lcm_factor_periods is None:
            return None
        return self.period == self.lcm_factor_periods * self.radical_order

    def to_json_dict(self) -> dict:
        return {
            "core": list(self.core.t),
            "p": self.p,
            "factors": [
                {
                    "coeffs": list(f.poly),
                    "r": f.r,
                    "e": f.e,
                    "factor_period": f.factor_period,
                }
                for f in self.factors
            ],
            "s": self.s,
            "|R_p|": str(self.ring_order),
            "|J|": str(self.radical_order),
            "|G_p|": str(self.unit_group_order),
            "c_p": self.period,
            "index_G_H": self.unit_index,
            "m_exponent": self.m_exponent,
            "classification": self.classification,
            "degenerate": self.degenerate,
            "idempotents": [list(e.coords) for e in self.idempotents],
            "idempotent_ranks": list(self.idempotent_ranks),
            "thm_6_7_consistent": self.thm_6_7_consistent,
            "thm_6_8_2_holds": self.thm_6_8_2_holds,
        }


def primitive_idempotents(core: CorePolynomial, p: int) -> list[RingElement]:
    """The s orthogonal idempotents cutting R_p into its local factors.

    e_i = 1 mod f_i^(e_i) and 0 mod f_j^(e_j) for j != i, built from
    Bezout cofactors of the coprime factor powers; listed in factor order.
    """
    fact = fp.factor_mod_p(fp.core_to_poly(core), p)
    modulus = _modulus_poly(core, p)
    out = []
    for f, e in fact.factors:
        q = (1,)
        for _ in range(e):
            q = fp.gf_mul(q, f, p)
        cofactor, _ = fp.gf_divmod(modulus, q, p)
        g, u, _v = fp.gf_extended_gcd(cofactor, q, p)
        assert g == (1,), "factor powers are not coprime"
        idem = fp.gf_mod(fp.gf_mul(u, cofactor, p), modulus, p)
        out.append(RingElement.from_poly(core, p, idem))
    return out


def decompose(core: CorePolynomial, p: int) -> SemilocalStructure:
    """Factor C mod p and assemble the full structure record."""
    if not fp.is_prime(p):
        raise ValueError(f"{p} is not prime")
    k = core.k
    fact = fp.factor_mod_p(fp.core_to_poly(core), p)
    degenerate = core.tk % p == 0

    summaries = []
    for f, e in fact.factors:
        r = fp.degree(f)
        per = None if f[0] == 0 else recurrence.factor_period(f, p)
        summaries.append(FactorSummary(f, r, e, per))

    sum_r = sum(s.r for s in summaries)
    radical_order = p ** (k - sum_r)
    unit_group_order = radical_order * prod(p**s.r - 1 for s in summaries)
    m_exponent = max(s.e for s in summaries)
    ramified = m_exponent > 1
    if len(summaries) == 1 and not ramified:
        classification = "inert"
    elif not ramified:
        classification = "split"
    else:
        classification = "ramified"

    period = None if degenerate else recurrence.period_mod_p_matrix_order(core, p)
    lcm_periods = None
    if all(s.factor_period is not None for s in summaries):
        lcm_periods = lcm(*(s.factor_period for s in summaries))

    idems = tuple(primitive_idempotents(core, p))
    ranks = tuple(rank(e) for e in idems)

    return SemilocalStructure(
        core=core,
        p=p,
        factors=tuple(summaries),
        idempotents=idems,
        idempotent_ranks=ranks,
        radical_order=radical_order,
        unit_group_order=unit_group_order,
        period=period,
        lcm_factor_periods=lcm_periods,
        m_exponent=m_exponent,
        ramified=ramified,
        classification=classification,
        degenerate=degenerate,
    )


# ----------------------------------------------------------------------
# orbits
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Orbit:
    """One A_p-orbit: lex-minimal representative, length and class tag."""

    rep: tuple[int, ...]
    length: int
    tag: str  # "zero" | "unit-coset" | "ideal"


@dataclass(frozen=True)
class OrbitPartition:
    core: CorePolynomial
    p: int
    period: int
    orbits: tuple[Orbit, ...]

    def total_size(self) -> int:
        return sum(o.length for o in self.orbits)

    def unit_orbits(self) -> list[Orbit]:
        return [o for o in self.orbits if o.tag == "unit-coset"]

    def to_json_dict(self) -> dict:
        return {
            "core": list(self.core.t),
            "p": self.p,
            "c_p": self.period,
            "orbits": [
                {"rep": list(o.rep), "length": o.length, "tag": o.tag} for o in self.orbits
            ],
        }


def orbit_members(core: CorePolynomial, p: int, rep: tuple[int, ...]):
    """Walk an orbit: rep, rep*A, rep*A^2, ... until it closes."""
    v = tuple(c % p for c in rep)
    while True:
        yield v
        v = _orbit_step(core, p, v)
        if v == tuple(c % p for c in rep):
            return


def orbit_partition(core: CorePolynomial, p: int, budget: int = DEFAULT_BUDGET) -> OrbitPartition:
    """Partition all p^k coordinate vectors into A_p-orbits.

    Scanning representatives in lexicographic order makes each orbit's
    representative its lex-minimal member, so output is deterministic.
    The construction asserts the structural orbit laws as it goes: the
    zero orbit is a singleton, every orbit length divides c_p, and unit
    orbits all have length exactly c_p.
    """
    if not fp.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if core.tk % p == 0:
        raise ValueError("orbit partition needs p not dividing t_k")
    _check_budget(core, p, budget)
    k = core.k
    c_p = recurrence.period_mod_p_matrix_order(core, p)

    seen: set[tuple[int, ...]] = set()
    orbits = []
    for v in itertools.product(range(p), repeat=k):
        if v in seen:
            continue
        members = []
        w = v
        while True:
            members.append(w)
            seen.add(w)
            w = _orbit_step(core, p, w)
            if w == v:
                break
        if all(c == 0 for c in v):
            tag = "zero"
            assert len(members) == 1, "zero orbit must be a singleton"
        else:
            m = RingElement(core, p, v)
            tag = "unit-coset" if is_unit(m) else "ideal"
        length = len(members)
        assert c_p % length == 0, f"orbit length {length} does not divide c_p = {c_p}"
        if tag == "unit-coset":
            assert length == c_p, "unit orbits are cosets of H_p and have length c_p"
        orbits.append(Orbit(v, length, tag))
    part = OrbitPartition(core, p, c_p, tuple(orbits))
    assert part.total_size() == p**k
    return part


def ideal_elements(core: CorePolynomial, p: int, factor_index: int):
    """All elements of the maximal ideal attached to factor ``factor_index``."""
    fact = fp.factor_mod_p(fp.core_to_poly(core), p)
    f, _e = fact.factors[factor_index]
    k = core.k
    r = fp.degree(f)
    for g in itertools.product(range(p), repeat=k - r):
        poly = fp.gf_mul(fp.trim(g), f, p)
        coords = tuple(poly[i] if i < len(poly) else 0 for i in range(k))
        yield coords


# ----------------------------------------------------------------------
# verification reports
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class UnitCountReport:
    core: CorePolynomial
    p: int
    enumerated: int
    closed_form: int

    @property
    def ok(self) -> bool:
        return self.enumerated == self.closed_form


def verify_unit_group_law(core: CorePolynomial, p: int, budget: int = DEFAULT_BUDGET) -> UnitCountReport:
    """Count units by enumeration and compare with |J| * prod(p^r_i - 1)."""
    if core.tk % p == 0:
        raise ValueError("unit-group law needs p not dividing t_k")
    _check_budget(core, p, budget)
    structure = decompose(core, p)
    count = 0
    for v in itertools.product(range(p), repeat=core.k):
        if any(v) and norm(RingElement(core, p, v)) != 0:
            count += 1
    return UnitCountReport(core, p, count, structure.unit_group_order)


@dataclass(frozen=True)
class PeriodLawReport:
    """Division laws relating c_p to per-factor periods and the radical."""

    core: CorePolynomial
    p: int
    c_p: int
    lcm_factor_periods: int
    radical_order: int
    ramified: bool

    @property
    def ratio(self) -> int:
        return self.c_p // self.lcm_factor_periods

    @property
    def thm_6_8_2_holds(self) -> bool:
        return self.c_p == self.lcm_factor_periods * self.radical_order

    def to_json_dict(self) -> dict:
        return {
            "core": list(self.core.t),
            "p": self.p,
            "c_p": self.c_p,
            "lcm_factor_periods": self.lcm_factor_periods,
            "|J|": str(self.radical_order),
            "ramified": self.ramified,
            "ratio": self.ratio,
            "thm_6_8_2_holds": self.thm_6_8_2_holds,
        }


def verify_period_law(core: CorePolynomial, p: int) -> PeriodLawReport:
    """Assert the proven period laws; report the unproven product law.

    Asserted: L = lcm(factor periods) divides c_p; c_p = L when p is
    unramified; c_p / L is a positive power of p when ramified.  The
    stronger claim c_p = L * |J| is only reported, since it fails for
    e.g. C = (X^2+X+1)^2 mod 2.
    """
    if core.tk % p == 0:
        raise ValueError("period law needs p not dividing t_k")
    s = decompose(core, p)
    L = s.lcm_factor_periods
    c = s.period
    assert c % L == 0, f"lcm of factor periods {L} does not divide c_p = {c}"
    ratio = c // L
    if s.ramified:
        assert ratio > 1 and _is_power_of(ratio, p), (
            f"ramified ratio c_p/L = {ratio} is not a positive power of {p}"
        )
    else:
        assert ratio == 1, f"unramified but c_p = {c} != lcm of factor periods {L}"
    return PeriodLawReport(core, p, c, L, s.radical_order, s.ramified)


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


@dataclass(frozen=True)
class RamificationSweepReport:
    pairs_checked: int
    failures: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_ramification_theorem(cores, primes) -> RamificationSweepReport:
    """Check p | c_p iff p ramifies, over all pairs with p not dividing t_k."""
    checked = 0
    failures = []
    for core in cores:
        for p in primes:
            if core.tk % p == 0:
                continue
            s = decompose(core, p)
            checked += 1
            if not s.thm_6_7_consistent:
                failures.append(s.to_json_dict())
    return RamificationSweepReport(checked, tuple(failures))


@dataclass(frozen=True)
class TraceSumReport:
    """Orbit trace-sum identities for one maximal ideal."""

    core: CorePolynomial
    p: int
    factor_index: int
    orbit_rows: tuple[dict, ...]
    ideal_trace_total: int

    @property
    def componentwise_ok(self) -> bool:
        return all(row["component_sum"] == row["trace_sum"] for row in self.orbit_rows)

    @property
    def total_ok(self) -> bool:
        return self.ideal_trace_total == 0


def trace_orbit_sums(core: CorePolynomial, p: int, factor_index: int,
                     budget: int = DEFAULT_BUDGET) -> TraceSumReport:
    """Check the orbit trace-sum identities inside one maximal ideal.

    Per orbit, the sum of all vector components equals the sum of member
    traces; summed over every orbit of the ideal the traces vanish.
    """
    if core.tk % p == 0:
        raise ValueError("trace-sum check needs p not dividing t_k")
    _check_budget(core, p, budget)
    members = set(ideal_elements(core, p, factor_index))
    seen: set[tuple[int, ...]] = set()
    rows = []
    total = 0
    for v in sorted(members):
        if v in seen:
            continue
        comp_sum = 0
        tr_sum = 0
        length = 0
        for w in orbit_members(core, p, v):
            assert w in members, "ideals are unions of orbits"
            seen.add(w)
            comp_sum = (comp_sum + sum(w)) % p
            tr_sum = (tr_sum + _trace_fast(core, p, w)) % p
            length += 1
        rows.append(
            {"rep": list(v), "length": length, "component_sum": comp_sum, "trace_sum": tr_sum}
        )
        total = (total + tr_sum) % p
    return TraceSumReport(core, p, factor_index, tuple(rows), total)
