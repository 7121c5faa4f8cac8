import itertools
import random

import pytest

from corepoly import fp_algebra as fp
from corepoly import isobaric as iso
from corepoly import recurrence as rec
from corepoly.core import core


class TestGenerate:
    def test_fibonacci(self):
        assert rec.generate(core(1, 1), 0, 6) == [1, 1, 2, 3, 5, 8, 13]

    def test_natural_numbers_core(self):
        assert rec.generate(core(2, -1), 0, 9) == list(range(1, 11))

    def test_fibonacci_mod_two(self):
        assert rec.generate(core(1, 1), 0, 5, modulus=2) == [1, 1, 0, 1, 1, 0]

    def test_seed_window(self):
        assert rec.generate(core(1, 0, -1, 2), -3, 0) == [0, 0, 0, 1]

    def test_matches_symbolic_values(self):
        rng = random.Random(2)
        for _ in range(15):
            k = rng.randint(1, 4)
            t = tuple(rng.randint(-3, 3) for _ in range(k))
            got = rec.generate(core(*t), 0, 8)
            want = [iso.evaluate(iso.gfp(k, n), t) for n in range(9)]
            assert got == want

    def test_backward_unimodular(self):
        assert rec.generate(core(1, 1), -5, 0) == [-3, 2, -1, 1, 0, 1]

    def test_backward_requires_unit_tail(self):
        with pytest.raises(ValueError, match="t_k"):
            rec.generate(core(1, 2), -3, 0)
        got = rec.generate(core(1, 2), -3, 0, modulus=5)
        assert got == [1, 3, 0, 1]
        # forward recursion closes over the backward-extended window
        assert (got[1] + 2 * got[0]) % 5 == got[2]
        assert (got[2] + 2 * got[1]) % 5 == got[3]

    def test_backward_mod_p_consistent(self):
        over_z = rec.generate(core(2, -1), -6, 6)
        mod7 = rec.generate(core(2, -1), -6, 6, modulus=7)
        assert [x % 7 for x in over_z] == mod7

    def test_composite_modulus_rejected(self):
        with pytest.raises(ValueError):
            rec.generate(core(1, 1), 0, 3, modulus=4)


class TestCyclotomic:
    def test_first_few_polynomials(self):
        assert rec.cyclotomic_polynomial(1) == (-1, 1)
        assert rec.cyclotomic_polynomial(2) == (1, 1)
        assert rec.cyclotomic_polynomial(4) == (1, 0, 1)
        assert rec.cyclotomic_polynomial(6) == (1, -1, 1)
        assert rec.cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)

    def test_product_over_divisors(self):
        for m in (6, 8, 10, 12):
            prod = (1,)
            for d in range(1, m + 1):
                if m % d == 0:
                    prod = fp.mul(prod, rec.cyclotomic_polynomial(d))
            want = tuple([-1] + [0] * (m - 1) + [1])
            assert prod == want

    def test_phi(self):
        assert [rec.euler_phi(m) for m in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


class TestPeriodicityOverZ:
    def test_fourth_roots(self):
        verdict = rec.is_periodic_over_Z(core(0, -1))
        assert verdict.kind == "pure" and verdict.period == 4
        assert rec.generate(core(0, -1), 0, 5) == [1, 0, -1, 0, 1, 0]

    def test_golden_core_not_periodic(self):
        assert rec.is_periodic_over_Z(core(1, 1)).kind == "not-periodic"

    def test_fifth_cyclotomic(self):
        verdict = rec.is_periodic_over_Z(core(-1, -1, -1, -1))
        assert verdict.kind == "pure" and verdict.period == 5

    def test_repeated_factor_not_periodic(self):
        assert rec.is_periodic_over_Z(core(2, -1)).kind == "not-periodic"

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6, 8, 10, 12])
    def test_cyclotomic_cores(self, m):
        verdict = rec.is_periodic_over_Z(rec.cyclotomic_core(m))
        assert verdict.kind == "pure" and verdict.period == m

    def test_product_of_cyclotomics(self):
        # C = Phi_3 * Phi_4: pure with period lcm(3, 4)
        poly = fp.mul(rec.cyclotomic_polynomial(3), rec.cyclotomic_polynomial(4))
        k = fp.degree(poly)
        c = core(*[-poly[k - j] for j in range(1, k + 1)])
        verdict = rec.is_periodic_over_Z(c)
        assert verdict.kind == "pure" and verdict.period == 12
        seq = rec.generate(c, 0, 30)
        assert seq[:12] == seq[12:24]

    def test_period_is_minimal(self):
        for m in (4, 5, 6, 8, 10, 12):
            c = rec.cyclotomic_core(m)
            seq = rec.generate(c, 0, 3 * m)
            period = rec.is_periodic_over_Z(c).period
            for d in range(1, period):
                if any(seq[n + d] != seq[n] for n in range(2 * m - d)):
                    continue
                pytest.fail(f"period {period} for m={m} is not minimal (d={d} works)")


class TestBruteForcePeriod:
    @pytest.mark.parametrize("p,want", [(2, 3), (3, 8), (5, 20), (7, 16), (11, 10)])
    def test_pisano(self, p, want):
        verdict = rec.period_mod_p_bruteforce(core(1, 1), p)
        assert verdict.kind == "pure" and verdict.period == want

    def test_linear_growth_core(self):
        verdict = rec.period_mod_p_bruteforce(core(2, -1), 7)
        assert verdict.kind == "pure" and verdict.period == 7

    def test_worked_cubic(self):
        verdict = rec.period_mod_p_bruteforce(core(0, 2, 1), 3)
        assert verdict.kind == "pure" and verdict.period == 8

    def test_return_window(self):
        for t, p in [((1, 1), 5), ((0, 2, 1), 3), ((1, 1, 1), 7)]:
            c = core(*t)
            cp = rec.period_mod_p_bruteforce(c, p).period
            tail = rec.generate(c, cp - c.k + 1, cp + 1, modulus=p)
            assert tail[:-2] == [0] * (c.k - 1)
            assert tail[-2] == 1
            assert tail[-1] == t[0] % p

    def test_degenerate_tail_coefficient(self):
        verdict = rec.period_mod_p_bruteforce(core(1, 2), 2)
        assert verdict.kind == "eventually-periodic"
        assert verdict.preperiod == 1 and verdict.period == 1

    def test_degenerate_on_cycle(self):
        # t_k = 0 mod p but the seed still lies on a cycle
        verdict = rec.period_mod_p_bruteforce(core(1, 0, 2), 2)
        assert verdict.preperiod >= 0 and verdict.period >= 1


class TestMatrixOrderPeriod:
    @pytest.mark.parametrize("p,want", [(2, 3), (3, 8), (5, 20), (7, 16), (11, 10)])
    def test_pisano(self, p, want):
        assert rec.period_mod_p_matrix_order(core(1, 1), p) == want

    def test_worked_cubic(self):
        assert rec.period_mod_p_matrix_order(core(0, 2, 1), 3) == 8

    def test_singular_rejected(self):
        with pytest.raises(ValueError):
            rec.period_mod_p_matrix_order(core(1, 2), 2)

    def test_agreement_sweep(self):
        primes = [2, 3, 5, 7]
        for k in (1, 2, 3):
            for t in itertools.product(range(-2, 3), repeat=k):
                if t[-1] == 0:
                    continue
                c = core(*t)
                for p in primes:
                    if t[-1] % p == 0:
                        continue
                    brute = rec.period_mod_p_bruteforce(c, p)
                    fast = rec.period_mod_p_matrix_order(c, p)
                    assert brute.kind == "pure"
                    assert brute.period == fast, (t, p)
                    assert 1 <= fast <= p**k - 1

    def test_matrix_order_actually_orders(self):
        from corepoly import companion as cpn

        for t, p in [((1, 1), 7), ((0, 2, 1), 3), ((1, 1, 1), 5)]:
            c = core(*t)
            n = rec.period_mod_p_matrix_order(c, p)
            dom = cpn.GF(p)
            assert cpn.power(c, n, dom) == cpn.Matrix.identity(dom, c.k)
            for q in fp.factorint(n):
                assert cpn.power(c, n // q, dom) != cpn.Matrix.identity(dom, c.k)

    def test_root_order_for_irreducible_core(self):
        # when C stays irreducible mod p the period is the order of x
        c = core(1, 1)
        poly = fp.gf_reduce(fp.core_to_poly(c), 3)
        assert fp.gf_irreducible(poly, 3)
        assert rec.factor_period(poly, 3) == rec.period_mod_p_matrix_order(c, 3) == 8


class TestTracePeriodicity:
    def test_trace_period_divides_c(self):
        from corepoly import companion as cpn

        equal, total = 0, 0
        for t, p in [((1, 1), 5), ((1, 1), 7), ((0, 2, 1), 3), ((2, -1), 5), ((1, 1, 1), 2)]:
            c = core(*t)
            c_p = rec.period_mod_p_matrix_order(c, p)
            traces = cpn.trace_sequence(c, 0, 2 * c_p, cpn.GF(p))
            periods = [
                d for d in fp.divisors(c_p)
                if all(traces[n + d] == traces[n] for n in range(c_p))
            ]
            assert periods, (t, p)
            total += 1
            if min(periods) == c_p:
                equal += 1
        assert total == 5 and equal >= 1


class TestScan:
    def test_golden_core_table(self):
        rows = rec.period_scan(core(1, 1), [2, 3, 5, 7, 11])
        assert [(r.p, r.c_p) for r in rows] == [(2, 3), (3, 8), (5, 20), (7, 16), (11, 10)]
        flagged = [r.p for r in rows if r.p_divides_c]
        ramified = [r.p for r in rows if r.ramified]
        assert flagged == ramified == [5]
        assert all(r.agree for r in rows)

    def test_fifth_cyclotomic_scan(self):
        rows = rec.period_scan(core(-1, -1, -1, -1), [2, 3, 5, 7])
        assert [r.p for r in rows if r.ramified] == [5]
        assert all(r.agree for r in rows)

    def test_every_prime_ramifies(self):
        rows = rec.period_scan(core(2, -1), [2, 3, 5, 7])
        for r in rows:
            assert r.c_p == r.p and r.p_divides_c and r.ramified and r.agree

    def test_degenerate_row(self):
        rows = rec.period_scan(core(1, 2), [2, 3])
        assert rows[0].degenerate and rows[0].agree is None
        assert not rows[1].degenerate

    def test_composite_prime_rejected(self):
        with pytest.raises(ValueError):
            rec.period_scan(core(1, 1), [4])

    def test_json_row_shape(self):
        row = rec.period_scan(core(1, 1), [5])[0]
        assert row.to_json_dict() == {
            "p": 5, "c_p": 20, "preperiod": 0, "p_divides_c": True,
            "ramified": True, "degenerate": False, "agree": True,
        }
