import itertools
import random

import pytest

from corepoly import fp_algebra as fp
from corepoly import semilocal as sl
from corepoly.core import core


WORKED = core(0, 2, 1)  # cubic with the fully worked-out ring mod 3


class TestRingElement:
    def test_reduction(self):
        m = sl.RingElement(WORKED, 3, (-1, 1, -1))
        assert m.coords == (2, 1, 2)

    def test_ring_axioms_sampled(self):
        rng = random.Random(4)
        for _ in range(25):
            a = sl.RingElement(WORKED, 3, tuple(rng.randrange(3) for _ in range(3)))
            b = sl.RingElement(WORKED, 3, tuple(rng.randrange(3) for _ in range(3)))
            c = sl.RingElement(WORKED, 3, tuple(rng.randrange(3) for _ in range(3)))
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    def test_pow(self):
        lam = sl.RingElement(WORKED, 3, (0, 1, 0))
        assert lam**8 == sl.one(WORKED, 3)
        assert lam**0 == sl.one(WORKED, 3)

    def test_times_lambda_is_step(self):
        m = sl.RingElement(WORKED, 3, (1, 2, 1))
        lam = sl.RingElement(WORKED, 3, (0, 1, 0))
        assert m.times_lambda() == m * lam

    def test_from_poly_reduces_mod_c(self):
        m = sl.RingElement.from_poly(WORKED, 3, (0, 0, 0, 1))  # x^3 = 2x + 1 mod 3
        assert m.coords == (1, 2, 0)


class TestStandardMatrix:
    def test_one_maps_to_identity(self):
        m = sl.standard_matrix(sl.one(WORKED, 3))
        assert m.rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))

    def test_lambda_maps_to_companion(self):
        m = sl.standard_matrix(sl.RingElement(WORKED, 3, (0, 1, 0)))
        assert m.rows == ((0, 1, 0), (0, 0, 1), (1, 2, 0))

    def test_idempotent_square(self):
        e1 = sl.RingElement(WORKED, 3, (-1, 1, -1))
        m = sl.standard_matrix(e1)
        assert m @ m == m

    def test_homomorphism_sampled(self):
        rng = random.Random(8)
        for t, p in [((0, 2, 1), 3), ((1, 1), 5), ((1, 0, -1, 1), 2)]:
            c = core(*t)
            for _ in range(20):
                a = sl.RingElement(c, p, tuple(rng.randrange(p) for _ in range(c.k)))
                b = sl.RingElement(c, p, tuple(rng.randrange(p) for _ in range(c.k)))
                ma, mb = sl.standard_matrix(a), sl.standard_matrix(b)
                assert sl.standard_matrix(a * b) == ma @ mb
                assert sl.standard_matrix(a + b) == ma + mb


class TestTraceNormRank:
    def test_trace_of_one_is_k_mod_p(self):
        assert sl.trace(sl.one(WORKED, 3)) == 0  # k = 3 vanishes mod 3

    def test_trace_of_lambda_is_t1(self):
        assert sl.trace(sl.RingElement(core(1, 1), 7, (0, 1))) == 1

    def test_trace_of_lambda_squared(self):
        assert sl.trace(sl.RingElement(WORKED, 3, (0, 0, 1))) == 1

    def test_trace_agreement_full_rings(self):
        for t, p in [((0, 2, 1), 3), ((1, 1), 5), ((2, -1), 3)]:
            c = core(*t)
            for v in itertools.product(range(p), repeat=c.k):
                sl.trace(sl.RingElement(c, p, v))  # asserts matrix == formula inside

    def test_norm_and_rank_extremes(self):
        z = sl.zero(WORKED, 3)
        assert sl.norm(z) == 0 and sl.rank(z) == 0
        o = sl.one(WORKED, 3)
        assert sl.norm(o) == 1 and sl.rank(o) == 3

    def test_unit_iff_nonzero_norm(self):
        c = core(1, 1)
        units = [v for v in itertools.product(range(5), repeat=2)
                 if sl.norm(sl.RingElement(c, 5, v)) != 0]
        assert len(units) == 20
        for v in units:
            assert sl.rank(sl.RingElement(c, 5, v)) == 2


class TestDecompose:
    def test_worked_example(self):
        s = sl.decompose(WORKED, 3)
        assert s.ring_order == 27
        assert s.unit_group_order == 16
        assert s.period == 8
        assert s.unit_index == 2
        assert s.radical_order == 1
        assert s.s == 2
        assert s.classification == "split"
        assert sorted((f.r, f.e) for f in s.factors) == [(1, 1), (2, 1)]
        assert {e.coords for e in s.idempotents} == {(2, 1, 2), (2, 2, 1)}

    def test_ramified_golden(self):
        s = sl.decompose(core(1, 1), 5)
        assert s.classification == "ramified"
        assert s.s == 1 and s.factors[0].e == 2
        assert s.radical_order == 5
        assert s.unit_group_order == 20
        assert s.period == 20
        assert s.m_exponent == 2

    def test_inert_golden(self):
        s = sl.decompose(core(1, 1), 2)
        assert s.classification == "inert"
        assert s.ring_order == 4
        assert s.period == 3
        assert s.unit_group_order == 3
        assert s.unit_group_order % s.period == 0

    def test_degenerate(self):
        s = sl.decompose(core(1, 2), 2)
        assert s.degenerate
        assert s.period is None and s.thm_6_7_consistent is None
        assert any(f.factor_period is None for f in s.factors)
        assert s.to_json_dict()["c_p"] is None

    def test_json_schema_keys(self):
        d = sl.decompose(WORKED, 3).to_json_dict()
        for key in ("core", "p", "factors", "s", "|J|", "|G_p|", "c_p",
                    "classification", "idempotents", "thm_6_7_consistent", "thm_6_8_2_holds"):
            assert key in d
        assert d["|G_p|"] == "16" and d["|J|"] == "1"
        assert d["factors"][0].keys() == {"coeffs", "r", "e", "factor_period"}


class TestPrimitiveIdempotents:
    def test_single_factor_gives_one(self):
        assert sl.primitive_idempotents(core(1, 1), 2) == [sl.one(core(1, 1), 2)]
        assert sl.primitive_idempotents(core(1, 1), 5) == [sl.one(core(1, 1), 5)]

    def test_worked_example_set(self):
        idems = sl.primitive_idempotents(WORKED, 3)
        assert {e.coords for e in idems} == {(2, 1, 2), (2, 2, 1)}

    def test_split_golden_mod_eleven(self):
        c = core(1, 1)
        e1, e2 = sl.primitive_idempotents(c, 11)
        assert e1 + e2 == sl.one(c, 11)
        assert (e1 * e2).is_zero()

    def test_system_invariants(self):
        for t, p in [((0, 2, 1), 3), ((1, 1), 11), ((1, 1, 1), 7), ((2, -1), 3), ((0, 1, 0, 1), 2)]:
            c = core(*t)
            idems = sl.primitive_idempotents(c, p)
            total = sl.zero(c, p)
            for i, e in enumerate(idems):
                assert e * e == e
                total = total + e
                for j, f in enumerate(idems):
                    if i != j:
                        assert (e * f).is_zero()
            assert total == sl.one(c, p)
            assert len(idems) == fp.factor_mod_p(fp.core_to_poly(c), p).s


class TestOrbitPartition:
    def test_four_element_ring(self):
        part = sl.orbit_partition(core(1, 1), 2)
        assert [(o.rep, o.length, o.tag) for o in part.orbits] == [
            ((0, 0), 1, "zero"),
            ((0, 1), 3, "unit-coset"),
        ]

    def test_worked_example_cosets(self):
        part = sl.orbit_partition(WORKED, 3)
        units = part.unit_orbits()
        assert len(units) == 2
        assert all(o.length == 8 for o in units)
        assert part.total_size() == 27

    def test_lengths_divide_period(self):
        for t, p in [((1, 1), 7), ((1, 1, 1), 3), ((2, -1), 5)]:
            part = sl.orbit_partition(core(*t), p)
            for o in part.orbits:
                assert part.period % o.length == 0

    def test_idempotent_orbit_is_cyclic_group(self):
        e1 = sl.RingElement(WORKED, 3, (-1, 1, -1))
        orbit = set(sl.orbit_members(WORKED, 3, e1.coords))
        lam = sl.RingElement(WORKED, 3, (0, 1, 0))
        elam = e1 * lam
        powers, x = set(), elam
        for _ in range(len(orbit)):
            powers.add(x.coords)
            x = x * elam
        assert powers == orbit
        assert 8 % len(orbit) == 0

    def test_ideals_are_unions_of_orbits(self):
        s = sl.decompose(WORKED, 3)
        for idx in range(s.s):
            members = set(sl.ideal_elements(WORKED, 3, idx))
            for v in list(members):
                assert set(sl.orbit_members(WORKED, 3, v)) <= members

    def test_budget_error(self):
        with pytest.raises(sl.BudgetExceededError):
            sl.orbit_partition(core(1, 1), 101, budget=100)

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError):
            sl.orbit_partition(core(1, 2), 2)

    def test_representatives_are_lex_minimal(self):
        part = sl.orbit_partition(WORKED, 3)
        for o in part.orbits:
            assert o.rep == min(sl.orbit_members(WORKED, 3, o.rep))


class TestUnitGroupLaw:
    @pytest.mark.parametrize(
        "t,p,count",
        [((0, 2, 1), 3, 16), ((1, 1), 5, 20), ((2, -1), 3, 6)],
    )
    def test_known_counts(self, t, p, count):
        rep = sl.verify_unit_group_law(core(*t), p)
        assert rep.ok and rep.enumerated == count == rep.closed_form


class TestPeriodLaw:
    def test_split_case_equality(self):
        rep = sl.verify_period_law(WORKED, 3)
        assert rep.lcm_factor_periods == 8 == rep.c_p
        assert rep.radical_order == 1
        assert rep.thm_6_8_2_holds

    def test_totally_ramified_product_law_holds(self):
        rep = sl.verify_period_law(core(2, -1), 5)
        assert rep.lcm_factor_periods == 1 and rep.c_p == 5 and rep.radical_order == 5
        assert rep.thm_6_8_2_holds

    def test_documented_product_law_failure(self):
        rep = sl.verify_period_law(core(0, 1, 0, 1), 2)
        assert rep.lcm_factor_periods == 3
        assert rep.c_p == 6
        assert rep.radical_order == 4
        assert rep.ratio == 2  # a power of p, as the division laws require
        assert not rep.thm_6_8_2_holds

    def test_laws_over_sweep(self):
        for k in (1, 2):
            for t in itertools.product(range(-2, 3), repeat=k):
                if t[-1] == 0:
                    continue
                for p in (2, 3, 5):
                    if t[-1] % p == 0:
                        continue
                    sl.verify_period_law(core(*t), p)  # asserts internally


class TestRamificationTheorem:
    def test_exhaustive_quadratic_sweep(self):
        cores = [core(a, b) for a in range(-2, 3) for b in range(-2, 3) if b != 0]
        rep = sl.verify_ramification_theorem(cores, [2, 3, 5, 7])
        assert rep.ok
        assert rep.pairs_checked > 50


class TestTraceOrbitSums:
    def test_worked_example_ideals(self):
        for idx in (0, 1):
            rep = sl.trace_orbit_sums(WORKED, 3, idx)
            assert rep.componentwise_ok and rep.total_ok

    def test_zero_orbit_row(self):
        rep = sl.trace_orbit_sums(WORKED, 3, 0)
        zero_row = next(r for r in rep.orbit_rows if r["rep"] == [0, 0, 0])
        assert zero_row["component_sum"] == zero_row["trace_sum"] == 0

    def test_inert_ring_is_vacuous(self):
        rep = sl.trace_orbit_sums(core(1, 1), 2, 0)
        assert len(rep.orbit_rows) == 1  # only the zero orbit
        assert rep.total_ok

    def test_componentwise_identity_on_units_too(self):
        # the identity is orbit-by-orbit, not only inside ideals
        c, p = core(1, 1), 5
        part = sl.orbit_partition(c, p)
        for o in part.orbits:
            comp, tr = 0, 0
            for w in sl.orbit_members(c, p, o.rep):
                comp = (comp + sum(w)) % p
                tr = (tr + sl.trace(sl.RingElement(c, p, w))) % p
            assert comp == tr

    def test_char_two_total_counterexample_is_reported(self):
        # the per-ideal trace total is NOT always zero: in characteristic 2
        # a one-dimensional maximal ideal with an odd-trace generator breaks
        # it, and the report surfaces that instead of raising
        c = core(0, 0, -1)  # C = X^3 + 1 = (X+1)(X^2+X+1) mod 2
        rep = sl.trace_orbit_sums(c, 2, 1)
        assert rep.componentwise_ok  # the per-orbit identity still holds
        assert not rep.total_ok
        assert rep.ideal_trace_total == 1
        members = set(sl.ideal_elements(c, 2, 1))
        assert members == {(0, 0, 0), (1, 1, 1)}
        assert sl.trace(sl.RingElement(c, 2, (1, 1, 1))) == 1
        # the other maximal ideal is two-dimensional and sums to zero
        assert sl.trace_orbit_sums(c, 2, 0).total_ok


class TestRankAdditivity:
    def test_split_cases(self):
        for t, p in [((0, 2, 1), 3), ((1, 1), 11), ((1, 1, 1), 7)]:
            c = core(*t)
            s = sl.decompose(c, p)
            if s.classification != "split":
                continue
            idems = list(s.idempotents)
            ranks = list(s.idempotent_ranks)
            assert sum(ranks) == c.k
            for size in range(1, len(idems) + 1):
                for subset in itertools.combinations(range(len(idems)), size):
                    total = sl.zero(c, p)
                    for i in subset:
                        total = total + idems[i]
                    assert sl.rank(total) == sum(ranks[i] for i in subset)
